//! Graded cotangent cohomology `T¹` and `T²` of a monomial curve.
//!
//! The semigroup ring `A = k[N]` has one-dimensional graded pieces, and a
//! homogeneous polynomial `p` evaluates to `coeff_sum(p) · t^deg(p)` in it.
//! Every graded piece of `Hom(I/I², A)` and of `Hom(R/R₀, A)` is therefore
//! the kernel of an explicit matrix of coefficient sums, computed degree by
//! degree from a Schreyer frame of the ideal: level 1 (the Gröbner basis)
//! generates `I`, level 2 generates its relations `R`, level 3 the
//! relations among those.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::curve::{AperyForm, MonomialCurve};
use crate::field::Field;
use crate::groebner::{GradedDims, SchreyerFrame, Term};
use crate::linalg;
use crate::poly::{Polynomial, WeightedRing};
use crate::semigroup::NumericalSemigroup;

/// Sparse row `(index, coefficient)`.
type SparseRow<F> = Vec<(usize, F)>;

fn coefficient_sums<F: Field>(terms: &[Term<F>]) -> SparseRow<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (_, c, x) in terms {
        let e = acc.entry(*c as usize).or_insert_with(F::zero);
        *e = e.add(x);
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

fn restrict<F: Field>(row: &SparseRow<F>, position: &[Option<usize>], width: usize) -> Vec<F> {
    let mut v = vec![F::zero(); width];
    for (i, x) in row {
        if let Some(p) = position[*i] {
            v[p] = x.clone();
        }
    }
    v
}

/// Generators of the ideal with their relations, evaluated in `A`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub semigroup: NumericalSemigroup,
    pub ring: Arc<WeightedRing>,
    /// The generator row `f` (the reduced Gröbner basis of the ideal).
    pub generators: Vec<Polynomial<F>>,
    pub generator_degrees: Vec<i64>,
    pub relation_degrees: Vec<i64>,
    pub frame: SchreyerFrame<F>,
    relations: Vec<SparseRow<F>>,
    second: Vec<SparseRow<F>>,
    /// `derivations[k][i] = coeff_sum(∂f_i / ∂x_k)`.
    derivations: Vec<Vec<F>>,
    koszul: Option<Vec<SparseRow<F>>>,
}

impl<F: Field> Presentation<F> {
    pub fn new(curve: &MonomialCurve<F>) -> Self {
        let frame = SchreyerFrame::with_depth(&curve.basis, 3);
        let generators = curve.basis.generators.clone();
        let level = |l: usize| frame.levels.get(l).map(|v| v.as_slice()).unwrap_or(&[]);
        let generator_degrees = level(1).iter().map(|e| e.degree as i64).collect();
        let relation_degrees = level(2).iter().map(|e| e.degree as i64).collect();
        let relations = level(2).iter().map(|e| coefficient_sums(&e.terms)).collect();
        let second = level(3).iter().map(|e| coefficient_sums(&e.terms)).collect();
        let derivations = (0..curve.ring.nvars())
            .map(|k| {
                generators
                    .iter()
                    .map(|g| {
                        g.terms().iter().fold(F::zero(), |acc, (m, c)| {
                            acc.add(&c.mul(&F::from_i64(m.exp(k) as i64)))
                        })
                    })
                    .collect()
            })
            .collect();
        Presentation {
            semigroup: curve.semigroup.clone(),
            ring: curve.ring.clone(),
            generators,
            generator_degrees,
            relation_degrees,
            frame,
            relations,
            second,
            derivations,
            koszul: None,
        }
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn nrelations(&self) -> usize {
        self.relation_degrees.len()
    }

    /// Relation `j` as a vector with one entry per generator.
    pub fn relation(&self, j: usize) -> Vec<Polynomial<F>> {
        let mut parts: Vec<Vec<_>> = vec![Vec::new(); self.ngens()];
        for (m, c, x) in &self.frame.levels[2][j].terms {
            parts[*c as usize].push((m.clone(), x.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect()
    }

    /// Koszul relations `f_b e_a - f_a e_b` written in the relation basis,
    /// evaluated in `A`. Computed on first use.
    fn koszul(&mut self) -> &[SparseRow<F>] {
        if self.koszul.is_none() {
            let k = self.ngens();
            let mut rows = Vec::new();
            if self.frame.levels.len() > 2 {
                for a in 0..k {
                    for b in a + 1..k {
                        let mut terms: Vec<Term<F>> = Vec::new();
                        for (m, x) in self.generators[b].terms() {
                            terms.push((m.clone(), a as u32, x.clone()));
                        }
                        for (m, x) in self.generators[a].terms() {
                            terms.push((m.clone(), b as u32, x.neg()));
                        }
                        let v = self.frame.vector(1, terms);
                        rows.push(coefficient_sums(&self.frame.lift(2, v)));
                    }
                }
            }
            self.koszul = Some(rows);
        }
        self.koszul.as_deref().unwrap()
    }

    fn positions(&self, degrees: &[i64], e: i64) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut position = vec![None; degrees.len()];
        let mut present = Vec::new();
        for (i, d) in degrees.iter().enumerate() {
            if self.semigroup.contains_signed(d + e) {
                position[i] = Some(present.len());
                present.push(i);
            }
        }
        (position, present)
    }

    /// Degree-`e` piece of `Hom(I/I², A)`: a basis of coefficient vectors
    /// `c` (one entry per generator) with `f_i ↦ c_i t^{d_i + e}`.
    pub fn hom_piece(&self, e: i64) -> Vec<Vec<F>> {
        let (position, present) = self.positions(&self.generator_degrees, e);
        let width = present.len();
        if width == 0 {
            return Vec::new();
        }
        let rows: Vec<Vec<F>> = self.relations.iter().map(|r| restrict(r, &position, width)).collect();
        linalg::kernel(&rows, width)
            .into_iter()
            .map(|v| self.expand(&present, v))
            .collect()
    }

    fn expand(&self, present: &[usize], v: Vec<F>) -> Vec<F> {
        let mut full = vec![F::zero(); self.ngens()];
        for (p, x) in present.iter().zip(v) {
            full[*p] = x;
        }
        full
    }

    /// Degree-`e` trivial deformations `t^{e + n_k} ∂/∂x_k`.
    pub fn derivation_piece(&self, e: i64) -> Vec<Vec<F>> {
        self.semigroup
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, &n)| self.semigroup.contains_signed(e + n as i64))
            .map(|(k, _)| self.derivations[k].clone())
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect()
    }

    /// Degree-`e` piece of `T¹`: representatives forming a basis of the
    /// quotient, chosen greedily from the kernel basis.
    pub fn t1_piece(&self, e: i64) -> Vec<Vec<F>> {
        let kernel = self.hom_piece(e);
        if kernel.is_empty() {
            return kernel;
        }
        let image = self.derivation_piece(e);
        let mut all = image.clone();
        all.extend(kernel.iter().cloned());
        let chosen = linalg::independent_subset(&all, self.ngens());
        chosen
            .into_iter()
            .filter(|&i| i >= image.len())
            .map(|i| kernel[i - image.len()].clone())
            .collect()
    }

    /// Degree-`e` piece of `T²`. Returns the space `Hom(R/R₀, A)_e` as
    /// vectors over the relations and the functionals giving coordinates
    /// on the quotient by the image of `Hom(S^k, A)_e`.
    pub fn t2_piece(&mut self, e: i64) -> T2Piece<F> {
        let nrel = self.nrelations();
        let (position, present) = self.positions(&self.relation_degrees, e);
        let width = present.len();
        if width == 0 {
            return T2Piece {
                degree: e,
                space: Vec::new(),
                coordinates: Vec::new(),
            };
        }
        self.koszul();
        let mut rows: Vec<Vec<F>> = self.second.iter().map(|r| restrict(r, &position, width)).collect();
        rows.extend(self.koszul.as_ref().unwrap().iter().map(|r| restrict(r, &position, width)));
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        let space = linalg::kernel(&rows, width);
        let (gpos, _) = self.positions(&self.generator_degrees, e);
        let image: Vec<Vec<F>> = (0..self.ngens())
            .filter(|&i| gpos[i].is_some())
            .map(|i| {
                let mut v = vec![F::zero(); width];
                for (j, row) in self.relations.iter().enumerate() {
                    if let Some(p) = position[j] {
                        if let Some((_, x)) = row.iter().find(|(k, _)| *k == i) {
                            v[p] = x.clone();
                        }
                    }
                }
                v
            })
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let coordinates = linalg::quotient_coordinates(&space, &image, width);
        let expand = |v: Vec<F>| {
            let mut full = vec![F::zero(); nrel];
            for (p, x) in present.iter().zip(v) {
                full[*p] = x;
            }
            full
        };
        T2Piece {
            degree: e,
            space: space.into_iter().map(expand).collect(),
            coordinates: coordinates.into_iter().map(expand).collect(),
        }
    }

    fn max_degree(degrees: &[i64]) -> i64 {
        degrees.iter().copied().max().unwrap_or(0)
    }

    /// Degrees to scan: every piece outside `lo..=hi` vanishes. The upper
    /// end is checked by requiring a window of zero pieces above it.
    fn degree_window(&self, degrees: &[i64]) -> (i64, i64, i64) {
        let lo = -Self::max_degree(degrees);
        let nmax = *self.semigroup.generators().last().unwrap() as i64;
        let hi = self.semigroup.frobenius().max(0) + nmax;
        (lo, hi, 2 * nmax)
    }
}

/// One graded piece of `T²`.
#[derive(Clone, Debug)]
pub struct T2Piece<F: Field> {
    pub degree: i64,
    /// Basis of `Hom(R/R₀, A)_e`, one entry per relation.
    pub space: Vec<Vec<F>>,
    /// Coordinate functionals on `T²_e`, one entry per relation.
    pub coordinates: Vec<Vec<F>>,
}

impl<F: Field> T2Piece<F> {
    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    /// Coordinates in `T²_e` of a homomorphism given on the relations.
    pub fn project(&self, psi: &[F]) -> Vec<F> {
        self.coordinates.iter().map(|l| linalg::dot(l, psi)).collect()
    }
}

/// `Hom(I/I², A)` as a graded module: generators of the ideal have
/// shifts `generator_degrees`, and the degree-`e` piece consists of the
/// vectors `f'` with `f'_i = c_i y^{(d_i + e)}` compatible with every relation.
#[derive(Clone, Debug)]
pub struct NormalModule<F: Field> {
    pub presentation: Presentation<F>,
    pub apery: AperyForm<F>,
}

pub fn normal_module<F: Field>(curve: &MonomialCurve<F>) -> NormalModule<F> {
    NormalModule {
        presentation: Presentation::new(curve),
        apery: curve.apery_standard_form(),
    }
}

impl<F: Field> NormalModule<F> {
    pub fn shifts(&self) -> &[i64] {
        &self.presentation.generator_degrees
    }

    /// Degree-`e` elements as polynomial vectors in Apéry normal form.
    pub fn piece(&self, e: i64) -> Vec<Vec<Polynomial<F>>> {
        self.presentation
            .hom_piece(e)
            .into_iter()
            .map(|c| self.element(e, &c))
            .collect()
    }

    /// The vector `f'` of degree `e` with coefficients `c`.
    pub fn element(&self, e: i64, c: &[F]) -> Vec<Polynomial<F>> {
        element(&self.presentation, &self.apery, e, c)
    }

    /// True iff `f'` respects every relation modulo the ideal.
    pub fn satisfies_relations(&self, f: &[Polynomial<F>]) -> bool {
        let p = &self.presentation;
        (0..p.nrelations()).all(|j| {
            let r = p.relation(j);
            let mut acc = Polynomial::zero(&p.ring);
            for (a, b) in f.iter().zip(&r) {
                acc = acc.add(&a.mul(b));
            }
            self.apery.normal_form(&acc).is_zero()
        })
    }
}

pub(crate) fn element<F: Field>(p: &Presentation<F>, apery: &AperyForm<F>, e: i64, c: &[F]) -> Vec<Polynomial<F>> {
    c.iter()
        .zip(&p.generator_degrees)
        .map(|(x, d)| match apery.standard_monomial(d + e) {
            Some(m) if !x.is_zero() => Polynomial::term(&p.ring, m, x.clone()),
            _ => Polynomial::zero(&p.ring),
        })
        .collect()
}

/// A basis element of `T¹`.
#[derive(Clone, Debug)]
pub struct T1Element<F: Field> {
    pub degree: i64,
    /// `f_i ↦ values[i] · y^{(d_i + degree)}`.
    pub values: Vec<F>,
}

#[derive(Clone, Debug)]
pub struct T1<F: Field> {
    pub dims: GradedDims,
    pub basis: Vec<T1Element<F>>,
}

impl<F: Field> T1<F> {
    pub fn plus(&self) -> usize {
        self.dims.positive()
    }

    pub fn minus(&self) -> usize {
        self.dims.negative()
    }

    pub fn degree_zero(&self) -> usize {
        self.dims.get(0)
    }

    pub fn negative_basis(&self) -> Vec<&T1Element<F>> {
        self.basis.iter().filter(|b| b.degree < 0).collect()
    }
}

/// Graded `T¹` with a basis of representatives.
pub fn t1_graded<F: Field>(curve: &MonomialCurve<F>) -> T1<F> {
    t1_of(&Presentation::new(curve))
}

pub fn t1_of<F: Field>(p: &Presentation<F>) -> T1<F> {
    let mut dims = GradedDims::new();
    let mut basis = Vec::new();
    if p.ngens() == 0 {
        return T1 { dims, basis };
    }
    let (lo, hi, window) = p.degree_window(&p.generator_degrees);
    for e in lo..=hi + window {
        let piece = p.t1_piece(e);
        assert!(e <= hi || piece.is_empty(), "T¹ does not vanish in degree {e}");
        dims.add(e, piece.len());
        basis.extend(piece.into_iter().map(|values| T1Element { degree: e, values }));
    }
    T1 { dims, basis }
}

#[derive(Clone, Debug)]
pub struct T2<F: Field> {
    pub dims: GradedDims,
    pub pieces: BTreeMap<i64, T2Piece<F>>,
}

impl<F: Field> T2<F> {
    pub fn total(&self) -> usize {
        self.dims.total()
    }
}

/// Total dimension of `T²` with its graded breakdown.
pub fn t2_dimension<F: Field>(curve: &MonomialCurve<F>) -> T2<F> {
    t2_of(&mut Presentation::new(curve))
}

pub fn t2_of<F: Field>(p: &mut Presentation<F>) -> T2<F> {
    let mut dims = GradedDims::new();
    let mut pieces = BTreeMap::new();
    if p.nrelations() == 0 {
        return T2 { dims, pieces };
    }
    let degrees = p.relation_degrees.clone();
    let (lo, hi, window) = p.degree_window(&degrees);
    for e in lo..=hi + window {
        let piece = p.t2_piece(e);
        assert!(e <= hi || piece.dim() == 0, "T² does not vanish in degree {e}");
        if piece.dim() > 0 {
            dims.add(e, piece.dim());
            pieces.insert(e, piece);
        }
    }
    T2 { dims, pieces }
}

/// Serializable summary of the cotangent cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CotangentJson {
    pub t1: BTreeMap<i64, usize>,
    pub t1_plus: usize,
    pub t1_minus: usize,
    pub t2_total: Option<usize>,
}

impl CotangentJson {
    pub fn new<F: Field>(t1: &T1<F>, t2: Option<&T2<F>>) -> Self {
        CotangentJson {
            t1: t1.dims.entries.clone(),
            t1_plus: t1.plus(),
            t1_minus: t1.minus(),
            t2_total: t2.map(|t| t.total()),
        }
    }
}
