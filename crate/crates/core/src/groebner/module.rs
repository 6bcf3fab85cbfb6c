//! Submodules of graded free modules, encoded as polynomials that are
//! linear in extra component variables `e_0, e_1, ...`.

use std::ops::Range;
use std::sync::Arc;

use crate::field::Field;
use crate::groebner::ideal::{buchberger_with, GbOptions};
use crate::poly::{MonomialOrder, Polynomial, WeightedRing};

/// A vector of polynomials, one entry per component.
pub type Vector<F> = Vec<Polynomial<F>>;

/// Free module `⊕ S(-shift_c)` over `ring`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    pub ring: Arc<WeightedRing>,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: &Arc<WeightedRing>, shifts: Vec<i64>) -> Self {
        FreeModule {
            ring: ring.clone(),
            shifts,
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Weighted degree of a homogeneous vector, `None` for zero.
    pub fn degree<F: Field>(&self, v: &[Polynomial<F>]) -> Option<i64> {
        v.iter()
            .zip(&self.shifts)
            .find(|(p, _)| !p.is_zero())
            .map(|(p, s)| p.weighted_degree().unwrap() as i64 + s)
    }
}

/// Extended ring carrying one component variable per module component.
pub(crate) struct Encoding {
    pub ext: Arc<WeightedRing>,
    pub base_vars: usize,
    pub components: Range<usize>,
}

impl Encoding {
    /// `comp_degrees[c]` is the degree of the basis vector `e_c`; the
    /// variables in `priority` components are compared first.
    pub fn new(base: &Arc<WeightedRing>, comp_degrees: &[i64], priority: Option<Range<usize>>) -> Self {
        let n = base.nvars();
        let low = comp_degrees.iter().copied().min().unwrap_or(0);
        let mut names: Vec<String> = base.names().to_vec();
        let mut weights: Vec<u32> = base.weights().to_vec();
        for (c, d) in comp_degrees.iter().enumerate() {
            names.push(format!("_e{c}"));
            weights.push((d - low + 1) as u32);
        }
        let base_order = base.order();
        // Component variables come first in the permutation, so they are
        // the least significant in the reverse lexicographic tie-break.
        let mut permutation: Vec<usize> = (n..n + comp_degrees.len()).collect();
        permutation.extend(base_order.permutation.iter().copied());
        let order = MonomialOrder {
            kind: base_order.kind,
            permutation,
            priority_block: priority.map(|r| r.map(|c| n + c).collect()),
        };
        let ext = WeightedRing::new(names, weights, order).expect("valid module ring");
        Encoding {
            ext,
            base_vars: n,
            components: n..n + comp_degrees.len(),
        }
    }

    pub fn encode<F: Field>(&self, v: &[Polynomial<F>], offset: usize) -> Polynomial<F> {
        let mut terms = Vec::new();
        let width = self.ext.nvars();
        for (c, p) in v.iter().enumerate() {
            for (m, a) in p.terms() {
                let mut e = vec![0u16; width];
                e[..self.base_vars].copy_from_slice(m.exps());
                e[self.components.start + offset + c] = 1;
                terms.push((self.ext.monomial(&e), a.clone()));
            }
        }
        Polynomial::from_terms(&self.ext, terms)
    }

    /// Splits an encoded polynomial back into components `[from, to)`.
    pub fn decode<F: Field>(
        &self,
        p: &Polynomial<F>,
        base: &Arc<WeightedRing>,
        from: usize,
        to: usize,
    ) -> Vector<F> {
        let mut parts: Vec<Vec<_>> = vec![Vec::new(); to - from];
        for (m, a) in p.terms() {
            let c = self
                .components
                .clone()
                .find(|&v| m.exp(v) > 0)
                .expect("term without component")
                - self.components.start;
            if c >= from && c < to {
                parts[c - from].push((base.monomial(&m.exps()[..self.base_vars]), a.clone()));
            }
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(base, t))
            .collect()
    }

    pub fn component_of<F: Field>(&self, p: &Polynomial<F>) -> Option<usize> {
        let m = p.lead_monomial()?;
        self.components
            .clone()
            .find(|&v| m.exp(v) > 0)
            .map(|v| v - self.components.start)
    }
}

/// Gröbner basis of a submodule of `module` (term-over-position order
/// refined by the module shifts). Returns the encoded basis elements.
pub(crate) fn module_basis<F: Field>(
    module: &FreeModule,
    gens: &[Vector<F>],
) -> (Encoding, Vec<Polynomial<F>>) {
    let enc = Encoding::new(&module.ring, &module.shifts, None);
    let encoded: Vec<Polynomial<F>> = gens
        .iter()
        .map(|v| enc.encode(v, 0))
        .filter(|p| !p.is_zero())
        .collect();
    if encoded.is_empty() {
        return (enc, Vec::new());
    }
    let opts = GbOptions {
        components: Some(enc.components.clone()),
    };
    let gb = buchberger_with(&encoded, &opts);
    (enc, gb.generators)
}

/// Generators of the syzygy module of `gens` (columns), each a vector with
/// one entry per input generator. For homogeneous input the result is a
/// minimal generating set.
pub fn syzygies<F: Field>(gens: &[Vector<F>]) -> Vec<Vector<F>> {
    let k = gens.len();
    if k == 0 {
        return Vec::new();
    }
    let ring = gens[0][0].ring().clone();
    let r = gens[0].len();
    let zero_shifts = FreeModule::new(&ring, vec![0; r]);
    let degrees: Vec<i64> = gens
        .iter()
        .map(|g| zero_shifts.degree(g).unwrap_or(0))
        .collect();
    let mut comp_degrees = vec![0i64; r];
    comp_degrees.extend(degrees.iter().copied());
    let enc = Encoding::new(&ring, &comp_degrees, Some(0..r));
    let mut encoded = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut v: Vector<F> = g.clone();
        v.extend((0..k).map(|j| {
            if j == i {
                Polynomial::one(&ring)
            } else {
                Polynomial::zero(&ring)
            }
        }));
        encoded.push(enc.encode(&v, 0));
    }
    let opts = GbOptions {
        components: Some(enc.components.clone()),
    };
    let gb = buchberger_with(&encoded, &opts);
    let mut syz: Vec<Vector<F>> = gb
        .generators
        .iter()
        .filter(|p| enc.component_of(p).map_or(false, |c| c >= r))
        .map(|p| enc.decode(p, &ring, r, r + k))
        .collect();
    let homogeneous = gens.iter().all(|g| g.iter().all(|p| p.is_homogeneous()));
    if homogeneous {
        syz = minimal_generators(&ring, &degrees, syz);
    }
    syz
}

/// Syzygies of a list of ideal generators.
pub fn ideal_syzygies<F: Field>(gens: &[Polynomial<F>]) -> Vec<Vector<F>> {
    let vecs: Vec<Vector<F>> = gens.iter().map(|g| vec![g.clone()]).collect();
    syzygies(&vecs)
}

/// Drops generators lying in the span of earlier (lower degree) ones.
pub fn minimal_generators<F: Field>(
    ring: &Arc<WeightedRing>,
    shifts: &[i64],
    mut gens: Vec<Vector<F>>,
) -> Vec<Vector<F>> {
    let module = FreeModule::new(ring, shifts.to_vec());
    gens.retain(|v| v.iter().any(|p| !p.is_zero()));
    gens.sort_by_key(|v| module.degree(v).unwrap());
    let mut kept: Vec<Vector<F>> = Vec::new();
    for v in gens {
        if !kept.is_empty() {
            let (enc, basis) = module_basis(&module, &kept);
            let nf = enc.encode(&v, 0).normal_form(&basis);
            if nf.is_zero() {
                continue;
            }
        }
        kept.push(v);
    }
    kept
}

/// Multiplies the row vector `row` by the column `col`.
pub fn dot_vector<F: Field>(row: &[Polynomial<F>], col: &[Polynomial<F>]) -> Polynomial<F> {
    let mut acc = Polynomial::zero(row[0].ring());
    for (a, b) in row.iter().zip(col) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc.add(&a.mul(b));
        }
    }
    acc
}
