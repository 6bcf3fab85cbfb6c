//! The monomial curve of a numerical semigroup: its toric ideal in the
//! weighted polynomial ring and the Apéry normal form over `k[x]`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis, SchreyerFrame};
use crate::poly::{Monomial, MonomialOrder, OrderKind, Polynomial, WeightedRing};
use crate::semigroup::NumericalSemigroup;

/// Variable names: `x` for the multiplicity, `y<n>` for generator `n`.
pub fn variable_names(s: &NumericalSemigroup) -> Vec<String> {
    s.generators()
        .iter()
        .enumerate()
        .map(|(i, n)| if i == 0 { "x".to_string() } else { format!("y{n}") })
        .collect()
}

/// Ring of the curve: weights are the generators, weighted grevlex with
/// `x` as the last variable.
pub fn curve_ring(s: &NumericalSemigroup) -> Arc<WeightedRing> {
    let k = s.embedding_dimension();
    let mut permutation: Vec<usize> = (1..k).collect();
    permutation.push(0);
    WeightedRing::new(
        variable_names(s),
        s.generators().iter().map(|&n| n as u32).collect(),
        MonomialOrder {
            kind: OrderKind::WeightedGrevlex,
            permutation,
            priority_block: None,
        },
    )
    .expect("curve ring")
}

#[derive(Clone, Debug)]
pub struct MonomialCurve<F: Field> {
    pub semigroup: NumericalSemigroup,
    pub ring: Arc<WeightedRing>,
    /// Reduced Gröbner basis of the toric ideal in the ring order.
    pub basis: GroebnerBasis<F>,
    /// Minimal homogeneous generating set, a subset of `basis`.
    pub ideal: Vec<Polynomial<F>>,
    pub generator_degrees: Vec<u32>,
}

/// Toric ideal by eliminating `t` from `(x_i - t^{n_i})`.
pub fn toric_ideal<F: Field>(s: &NumericalSemigroup) -> MonomialCurve<F> {
    let ring = curve_ring(s);
    let k = s.embedding_dimension();
    let mut names = ring.names().to_vec();
    names.push("t".into());
    let mut weights = ring.weights().to_vec();
    weights.push(1);
    let mut permutation = ring.order().permutation.clone();
    permutation.push(k);
    let elim = WeightedRing::new(
        names,
        weights,
        MonomialOrder {
            kind: OrderKind::WeightedGrevlex,
            permutation,
            priority_block: Some(vec![k]),
        },
    )
    .expect("elimination ring");
    let gens: Vec<Polynomial<F>> = s
        .generators()
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let mut e = vec![0u16; k + 1];
            e[k] = n as u16;
            Polynomial::var(&elim, i).sub(&Polynomial::monomial(&elim, &e))
        })
        .collect();
    let gb = buchberger(&gens);
    let restricted: Vec<Polynomial<F>> = gb
        .generators
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exp(k) == 0))
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (ring.monomial(&m.exps()[..k]), c.clone()))
                .collect();
            Polynomial::from_terms(&ring, terms)
        })
        .collect();
    let basis = if restricted.is_empty() {
        GroebnerBasis {
            ring: ring.clone(),
            generators: Vec::new(),
            reduced: true,
        }
    } else {
        buchberger(&restricted)
    };
    MonomialCurve::from_basis(s.clone(), basis)
}

impl<F: Field> MonomialCurve<F> {
    fn from_basis(semigroup: NumericalSemigroup, basis: GroebnerBasis<F>) -> Self {
        let ring = basis.ring.clone();
        let ideal: Vec<Polynomial<F>> = if basis.generators.is_empty() {
            Vec::new()
        } else {
            let frame = SchreyerFrame::with_depth(&basis, 2);
            frame
                .minimal_generator_indices()
                .into_iter()
                .map(|i| basis.generators[i].clone())
                .collect()
        };
        let generator_degrees = ideal.iter().map(|g| g.weighted_degree().unwrap()).collect();
        MonomialCurve {
            semigroup,
            ring,
            basis,
            ideal,
            generator_degrees,
        }
    }

    /// Uses a caller-supplied generating set of the toric ideal (for
    /// instance determinantal equations). The set must generate the same
    /// ideal; this is checked against the reduced Gröbner basis.
    pub fn with_generators(s: &NumericalSemigroup, gens: Vec<Polynomial<F>>) -> Option<Self> {
        let reference = toric_ideal::<F>(s);
        let gb = buchberger(&gens);
        if gb.generators != reference.basis.generators {
            return None;
        }
        let generator_degrees = gens.iter().map(|g| g.weighted_degree().unwrap()).collect();
        Some(MonomialCurve {
            semigroup: s.clone(),
            ring: reference.ring,
            basis: gb,
            ideal: gens,
            generator_degrees,
        })
    }

    pub fn embedding_dimension(&self) -> usize {
        self.ring.nvars()
    }

    /// Substitutes `x_i -> t^{n_i}` and checks every generator vanishes.
    pub fn parametrization_check(&self) -> bool {
        parametrization_vanishes(&self.semigroup, &self.ideal)
    }

    pub fn apery_standard_form(&self) -> AperyForm<F> {
        AperyForm::new(self)
    }

    pub fn record(&self) -> CurveJson {
        CurveJson {
            variables: self.ring.names().to_vec(),
            weights: self.ring.weights().to_vec(),
            generators: self.ideal.iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// True iff every polynomial vanishes under `x_i -> t^{n_i}`.
pub fn parametrization_vanishes<F: Field>(s: &NumericalSemigroup, gens: &[Polynomial<F>]) -> bool {
    let t_ring = WeightedRing::weighted(&["t"], &[1]);
    let images: Vec<Polynomial<F>> = s
        .generators()
        .iter()
        .map(|&n| Polynomial::monomial(&t_ring, &[n as u16]))
        .collect();
    gens.iter().all(|g| g.substitute(&images, &t_ring).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub generators: Vec<String>,
}

/// The additive basis `y^(0) = 1, ..., y^(m-1)` of `k[C]` over `k[x]`.
#[derive(Clone, Debug)]
pub struct AperyForm<F: Field> {
    pub ring: Arc<WeightedRing>,
    pub multiplicity: u64,
    /// `basis[r]` is the monomial `y^(r)`, of weight `apery[r] ≡ r mod m`.
    pub basis: Vec<Monomial>,
    pub apery: Vec<u64>,
    gb: Vec<Polynomial<F>>,
}

impl<F: Field> AperyForm<F> {
    fn new(c: &MonomialCurve<F>) -> Self {
        let m = c.semigroup.multiplicity();
        let apery = c.semigroup.apery_set(m).expect("multiplicity is an element").representatives;
        let leads: Vec<&Monomial> = c.basis.generators.iter().map(|g| g.lead_monomial().unwrap()).collect();
        let basis = apery
            .iter()
            .map(|&w| {
                let found: Vec<Monomial> = monomials_of_weight(&c.ring, w as u32, 1)
                    .into_iter()
                    .filter(|mono| !leads.iter().any(|l| l.divides(mono)))
                    .collect();
                assert_eq!(found.len(), 1, "one standard monomial per Apéry weight");
                found.into_iter().next().unwrap()
            })
            .collect();
        AperyForm {
            ring: c.ring.clone(),
            multiplicity: m,
            basis,
            apery,
            gb: c.basis.generators.clone(),
        }
    }

    /// The standard monomial `y^(r) x^k` of weight `w`, if `w` is in the semigroup.
    pub fn standard_monomial(&self, w: i64) -> Option<Monomial> {
        if w < 0 {
            return None;
        }
        let r = (w as u64 % self.multiplicity) as usize;
        let a = self.apery[r];
        if (w as u64) < a {
            return None;
        }
        let k = (w as u64 - a) / self.multiplicity;
        let mut e = self.basis[r].exps().to_vec();
        e[0] += k as u16;
        Some(self.ring.monomial(&e))
    }

    /// Normal form, a combination of the monomials `y^(i) x^k`.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        p.normal_form(&self.gb)
    }

    /// Apéry index of a standard monomial.
    pub fn residue_of(&self, m: &Monomial) -> usize {
        (self.ring.weighted_degree(m.exps()) as u64 % self.multiplicity) as usize
    }

    /// All standard monomials of weight below `bound`.
    pub fn monomials_below(&self, bound: i64) -> Vec<Monomial> {
        (0..bound.max(0)).filter_map(|w| self.standard_monomial(w)).collect()
    }
}

/// Monomials of exact weighted degree `w` using only variables `first..`.
pub fn monomials_of_weight(ring: &WeightedRing, w: u32, first: usize) -> Vec<Monomial> {
    fn rec(ring: &WeightedRing, v: usize, left: u32, e: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v == e.len() {
            if left == 0 {
                out.push(ring.monomial(e));
            }
            return;
        }
        let w = ring.weight(v);
        let mut k = 0;
        while k * w <= left {
            e[v] = k as u16;
            rec(ring, v + 1, left - k * w, e, out);
            k += 1;
        }
        e[v] = 0;
    }
    let mut out = Vec::new();
    let mut e = vec![0u16; ring.nvars()];
    rec(ring, first, w, &mut e, &mut out);
    out
}
