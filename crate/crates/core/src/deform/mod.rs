//! Negative-weight deformations: first-order families, the quadratic part
//! of the base equations, and the unfolding/flatness pipeline with linear
//! elimination.
//!
//! A family lives in the curve ring extended by deformation variables. The
//! curve variables form a priority block of the order, so the leading term
//! of a perturbed generator `F_i = f_i + (terms of lower curve degree)` is
//! the leading term of `f_i`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::groebner::{buchberger, krull_dimension};
use crate::poly::{Monomial, MonomialOrder, OrderKind, Polynomial, WeightedRing};

mod eliminate;
mod first_order;
mod hauser;
mod quadratic;

pub use eliminate::{
    eliminate_and_dimension, eliminate_linear, eliminate_linear_truncated, lowest_parts, Elimination, LowestDegree,
};
pub use first_order::{first_order_family, DegreeRange};
pub use hauser::{
    hauser_flatness_equations, hauser_flatness_equations_in_x, hauser_unfolding, hauser_unfolding_in_x,
    trivial_parameters, FlatnessSystem,
};
pub use quadratic::{quadratic_base_equations, quadratic_base_for, quadratic_base_of, QuadraticBase};

/// A deformation variable with positive weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Parameter {
    pub name: String,
    pub weight: u32,
}

/// The part of a family linear in one deformation variable.
#[derive(Clone, Debug)]
pub struct Perturbation<F: Field> {
    /// `f'`, one entry per generator, in the curve ring.
    pub generators: Vec<Polynomial<F>>,
    /// `r'`, one vector per relation; empty when relations are not perturbed.
    pub relations: Vec<Vec<Polynomial<F>>>,
    /// Degree of the perturbation as a homomorphism (negative of the weight).
    pub degree: i64,
}

/// `F = f + Σ t_a f'_a`, `R = r + Σ t_a r'_a`.
#[derive(Clone, Debug)]
pub struct DeformationFamily<F: Field> {
    pub curve_ring: Arc<WeightedRing>,
    /// Curve variables followed by the deformation variables.
    pub base_ring: Arc<WeightedRing>,
    pub parameters: Vec<Parameter>,
    /// The unperturbed generator row `f`.
    pub generators: Vec<Polynomial<F>>,
    /// The unperturbed relations `r`, one vector per relation.
    pub relations: Vec<Vec<Polynomial<F>>>,
    /// One perturbation per parameter.
    pub perturbations: Vec<Perturbation<F>>,
}

/// Curve variables as a priority block, then weighted grevlex with the
/// deformation variables compared last.
pub fn family_ring(curve_ring: &WeightedRing, parameters: &[Parameter]) -> Arc<WeightedRing> {
    let k = curve_ring.nvars();
    let mut names = curve_ring.names().to_vec();
    let mut weights = curve_ring.weights().to_vec();
    for p in parameters {
        names.push(p.name.clone());
        weights.push(p.weight);
    }
    let mut permutation: Vec<usize> = (k..k + parameters.len()).collect();
    permutation.extend(curve_ring.order().permutation.iter().copied());
    WeightedRing::new(
        names,
        weights,
        MonomialOrder {
            kind: OrderKind::WeightedGrevlex,
            permutation,
            priority_block: Some((0..k).collect()),
        },
    )
    .expect("family ring")
}

/// Weighted grevlex ring on the deformation variables alone.
pub fn parameter_ring(parameters: &[Parameter]) -> Arc<WeightedRing> {
    let names: Vec<&str> = parameters.iter().map(|p| p.name.as_str()).collect();
    let weights: Vec<u32> = parameters.iter().map(|p| p.weight).collect();
    WeightedRing::weighted(&names, &weights)
}

/// Names `prefix{w}` for each weight, with `_1, _2, …` when a weight repeats.
pub(crate) fn name_by_weight(prefix: &str, weights: &[u32]) -> Vec<String> {
    weights
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let same = weights.iter().filter(|v| *v == w).count();
            if same == 1 {
                format!("{prefix}{w}")
            } else {
                let k = weights[..i].iter().filter(|v| *v == w).count() + 1;
                format!("{prefix}{w}_{k}")
            }
        })
        .collect()
}

impl<F: Field> DeformationFamily<F> {
    pub fn nparameters(&self) -> usize {
        self.parameters.len()
    }

    /// Index of the deformation variable `a` in the base ring.
    pub fn parameter_variable(&self, a: usize) -> usize {
        self.curve_ring.nvars() + a
    }

    pub fn lift(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let map: Vec<usize> = (0..self.curve_ring.nvars()).collect();
        p.embed(&self.base_ring, &map)
    }

    /// The perturbed generators `F`.
    pub fn perturbed_generators(&self) -> Vec<Polynomial<F>> {
        (0..self.generators.len())
            .map(|i| {
                let mut acc = self.lift(&self.generators[i]);
                for (a, p) in self.perturbations.iter().enumerate() {
                    let t = self.base_ring.variable(self.parameter_variable(a));
                    acc = acc.add_scaled(&self.lift(&p.generators[i]), &F::one(), Some(&t));
                }
                acc
            })
            .collect()
    }

    /// The perturbed relations `R`, one vector per relation.
    pub fn perturbed_relations(&self) -> Vec<Vec<Polynomial<F>>> {
        self.relations
            .iter()
            .enumerate()
            .map(|(j, r)| {
                r.iter()
                    .enumerate()
                    .map(|(i, rij)| {
                        let mut acc = self.lift(rij);
                        for (a, p) in self.perturbations.iter().enumerate() {
                            if let Some(v) = p.relations.get(j) {
                                let t = self.base_ring.variable(self.parameter_variable(a));
                                acc = acc.add_scaled(&self.lift(&v[i]), &F::one(), Some(&t));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// Degree of a base-ring monomial in the deformation variables.
    pub fn parameter_order(&self, m: &Monomial) -> u32 {
        (self.curve_ring.nvars()..self.base_ring.nvars())
            .map(|v| m.exp(v) as u32)
            .sum()
    }

    /// Entries of `F·R` with all terms of parameter order at least `order` dropped.
    pub fn products_truncated(&self, order: u32) -> Vec<Polynomial<F>> {
        let f = self.perturbed_generators();
        self.perturbed_relations()
            .iter()
            .map(|r| {
                let mut acc = Polynomial::zero(&self.base_ring);
                for (a, b) in f.iter().zip(r) {
                    acc = acc.add(&a.mul(b));
                }
                let terms = acc
                    .terms()
                    .iter()
                    .filter(|(m, _)| self.parameter_order(m) < order)
                    .cloned()
                    .collect();
                Polynomial::from_terms(&self.base_ring, terms)
            })
            .collect()
    }

    /// `F` with every deformation variable set to zero, back in the curve ring.
    pub fn specialize_to_zero(&self) -> Vec<Polynomial<F>> {
        self.perturbed_generators()
            .iter()
            .map(|p| self.to_curve_ring(p))
            .collect()
    }

    /// `R` with every deformation variable set to zero, back in the curve ring.
    pub fn relations_at_zero(&self) -> Vec<Vec<Polynomial<F>>> {
        self.perturbed_relations()
            .iter()
            .map(|r| r.iter().map(|p| self.to_curve_ring(p)).collect())
            .collect()
    }

    fn to_curve_ring(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let k = self.curve_ring.nvars();
        let terms = p
            .terms()
            .iter()
            .filter(|(m, _)| self.parameter_order(m) == 0)
            .map(|(m, c)| (self.curve_ring.monomial(&m.exps()[..k]), c.clone()))
            .collect();
        Polynomial::from_terms(&self.curve_ring, terms)
    }

    /// The deformation variable perturbing generator `i` by `m`, if any.
    pub fn parameter_for(&self, i: usize, m: &Monomial) -> Option<usize> {
        self.perturbations.iter().position(|p| {
            p.generators
                .iter()
                .enumerate()
                .all(|(j, g)| if j == i { g.terms().len() == 1 && g.terms()[0].0 == *m } else { g.is_zero() })
        })
    }

    pub fn parameter_index(&self, name: &str) -> Option<usize> {
        self.parameters.iter().position(|p| p.name == name)
    }

    /// The family with the given deformation variables set to zero and
    /// removed from the base ring.
    pub fn without_parameters(&self, drop: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.nparameters()).filter(|a| !drop.contains(a)).collect();
        let parameters: Vec<Parameter> = keep.iter().map(|&a| self.parameters[a].clone()).collect();
        DeformationFamily {
            curve_ring: self.curve_ring.clone(),
            base_ring: family_ring(&self.curve_ring, &parameters),
            parameters,
            generators: self.generators.clone(),
            relations: self.relations.clone(),
            perturbations: keep.iter().map(|&a| self.perturbations[a].clone()).collect(),
        }
    }
}

/// Equations on the space of deformation variables.
#[derive(Clone, Debug)]
pub struct BaseIdeal<F: Field> {
    pub ring: Arc<WeightedRing>,
    pub equations: Vec<Polynomial<F>>,
    /// Order in the deformation variables up to which lifting was carried
    /// out; `None` for exact (flatness) equations.
    pub truncation_order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseIdealJson {
    pub variables: Vec<Parameter>,
    pub equations: Vec<String>,
}

impl<F: Field> BaseIdeal<F> {
    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn variables(&self) -> Vec<Parameter> {
        (0..self.ring.nvars())
            .map(|v| Parameter {
                name: self.ring.name(v).to_string(),
                weight: self.ring.weight(v),
            })
            .collect()
    }

    /// Krull dimension of the affine zero scheme.
    pub fn dimension(&self) -> i64 {
        let nonzero: Vec<&Polynomial<F>> = self.equations.iter().filter(|e| !e.is_zero()).collect();
        if nonzero.is_empty() {
            return self.ring.nvars() as i64;
        }
        let order = MonomialOrder {
            kind: OrderKind::UnitGrevlex,
            permutation: (0..self.ring.nvars()).collect(),
            priority_block: None,
        };
        let unit = self.ring.with_order(order).expect("same variables");
        let gens: Vec<Polynomial<F>> = nonzero.iter().map(|e| e.reorder(&unit)).collect();
        krull_dimension(&gens)
    }

    /// Dimension of the projective scheme of a cone: affine dimension minus one.
    pub fn projective_dimension(&self) -> i64 {
        self.dimension() - 1
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.equations.iter().all(|e| e.is_homogeneous())
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.equations.iter().all(|e| {
            let zero = vec![Polynomial::zero(&self.ring); self.ring.nvars()];
            e.substitute(&zero, &self.ring).is_zero()
        })
    }

    /// A minimal generating set of a weighted homogeneous ideal: equations
    /// are taken by increasing degree and kept when not in the ideal of
    /// those kept before.
    pub fn minimal_generators(&self) -> Vec<Polynomial<F>> {
        let mut eqs: Vec<Polynomial<F>> = self.equations.iter().filter(|e| !e.is_zero()).cloned().collect();
        eqs.sort_by_key(|e| (e.weighted_degree().unwrap(), e.len()));
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        for e in eqs {
            if kept.is_empty() || !buchberger(&kept).contains(&e) {
                kept.push(e);
            }
        }
        kept
    }

    pub fn json(&self) -> BaseIdealJson {
        BaseIdealJson {
            variables: self.variables(),
            equations: self.equations.iter().map(|e| e.to_string()).collect(),
        }
    }
}
