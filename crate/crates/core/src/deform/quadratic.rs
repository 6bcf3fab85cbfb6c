use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cotangent::{Presentation, T2Piece};
use crate::curve::MonomialCurve;
use crate::field::Field;
use crate::poly::Polynomial;

use super::first_order::first_order_of;
use super::{parameter_ring, BaseIdeal, DeformationFamily, DegreeRange};

/// The negative-weight first-order family and the quadratic part of its
/// base equations.
#[derive(Clone, Debug)]
pub struct QuadraticBase<F: Field> {
    pub family: DeformationFamily<F>,
    pub base: BaseIdeal<F>,
}

/// Second-order obstructions of the negative-weight first-order family.
///
/// For each pair `a ≤ b` the second-order part of `F·R` is
/// `f'_a r'_b + f'_b r'_a` (just `f'_a r'_a` when `a = b`). Evaluated in
/// the semigroup ring it is a homomorphism on the relations, and its class
/// in `T²` of degree `e_a + e_b` gives the coefficient of `t_a t_b` in
/// one equation per `T²` coordinate. Zero equations are dropped.
pub fn quadratic_base_equations<F: Field>(curve: &MonomialCurve<F>) -> QuadraticBase<F> {
    let mut p = Presentation::new(curve);
    quadratic_base_of(&mut p, curve)
}

pub fn quadratic_base_of<F: Field>(p: &mut Presentation<F>, curve: &MonomialCurve<F>) -> QuadraticBase<F> {
    let family = first_order_of(p, curve, DegreeRange::Negative);
    quadratic_base_for(p, family)
}

/// Quadratic base equations of a given negative-weight first-order family
/// of the presented curve, e.g. one with other `T¹` representatives.
pub fn quadratic_base_for<F: Field>(p: &mut Presentation<F>, family: DeformationFamily<F>) -> QuadraticBase<F> {
    let ring = parameter_ring(&family.parameters);
    let n = family.nparameters();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();

    let mut pieces: BTreeMap<i64, T2Piece<F>> = BTreeMap::new();
    for &(a, b) in &pairs {
        let e = family.perturbations[a].degree + family.perturbations[b].degree;
        if !pieces.contains_key(&e) {
            pieces.insert(e, p.t2_piece(e));
        }
    }

    let obstructions: Vec<Vec<F>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let e = family.perturbations[a].degree + family.perturbations[b].degree;
            let piece = &pieces[&e];
            if piece.dim() == 0 {
                return Vec::new();
            }
            let psi = second_order(&family, a, b);
            debug_assert!(in_span(&piece.space, &psi), "obstruction outside Hom(R/R₀, A)");
            piece.project(&psi)
        })
        .collect();

    let mut equations = Vec::new();
    for (e, piece) in &pieces {
        for k in 0..piece.dim() {
            let mut terms = Vec::new();
            for (&(a, b), coords) in pairs.iter().zip(&obstructions) {
                let ea = family.perturbations[a].degree + family.perturbations[b].degree;
                if ea != *e || coords[k].is_zero() {
                    continue;
                }
                let mut exps = vec![0u16; n];
                exps[a] += 1;
                exps[b] += 1;
                terms.push((ring.monomial(&exps), coords[k].clone()));
            }
            let q = Polynomial::from_terms(&ring, terms);
            if !q.is_zero() {
                equations.push(q);
            }
        }
    }

    QuadraticBase {
        family,
        base: BaseIdeal {
            ring,
            equations,
            truncation_order: Some(2),
        },
    }
}

/// Coefficient sums of the second-order part of `F·R` for the pair `(a, b)`,
/// one entry per relation.
fn second_order<F: Field>(family: &DeformationFamily<F>, a: usize, b: usize) -> Vec<F> {
    let pa = &family.perturbations[a];
    let pb = &family.perturbations[b];
    (0..family.relations.len())
        .map(|j| {
            let mut h = Polynomial::zero(&family.curve_ring);
            for i in 0..family.generators.len() {
                h = h.add(&pa.generators[i].mul(&pb.relations[j][i]));
                if a != b {
                    h = h.add(&pb.generators[i].mul(&pa.relations[j][i]));
                }
            }
            h.coeff_sum()
        })
        .collect()
}

fn in_span<F: Field>(space: &[Vec<F>], v: &[F]) -> bool {
    let width = v.len();
    let r = crate::linalg::rank(space, width);
    let mut ext = space.to_vec();
    ext.push(v.to_vec());
    crate::linalg::rank(&ext, width) == r
}
