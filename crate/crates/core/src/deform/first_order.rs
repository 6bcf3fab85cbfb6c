use crate::cotangent::{element, t1_of, Presentation};
use crate::curve::MonomialCurve;
use crate::field::Field;
use crate::poly::Polynomial;

use super::{family_ring, name_by_weight, DeformationFamily, Parameter, Perturbation};

/// Which graded pieces of `T¹` get a deformation variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeRange {
    /// Only `T^{1,−}`; every variable has weight `−e > 0` and `F` is homogeneous.
    Negative,
    /// All of `T¹`. Variables of degree `e ≥ 0` get weight 1, so `F` is no
    /// longer homogeneous in the combined grading.
    All,
}

/// First-order family over `T¹`: `F = f + Σ t_a f'_a` with `f'_a` the
/// basis representatives in Apéry normal form and `r'_a` obtained by
/// dividing `f'_a · r` by the Gröbner basis, so `F·R ≡ 0` modulo `t²`.
pub fn first_order_family<F: Field>(curve: &MonomialCurve<F>, range: DegreeRange) -> DeformationFamily<F> {
    let p = Presentation::new(curve);
    first_order_of(&p, curve, range)
}

pub(crate) fn first_order_of<F: Field>(
    p: &Presentation<F>,
    curve: &MonomialCurve<F>,
    range: DegreeRange,
) -> DeformationFamily<F> {
    let apery = curve.apery_standard_form();
    let t1 = t1_of(p);
    let chosen: Vec<_> = t1
        .basis
        .iter()
        .filter(|b| range == DegreeRange::All || b.degree < 0)
        .collect();
    let relations: Vec<Vec<Polynomial<F>>> = (0..p.nrelations()).map(|j| p.relation(j)).collect();

    let perturbations: Vec<Perturbation<F>> = chosen
        .iter()
        .map(|b| {
            let f1 = element(p, &apery, b.degree, &b.values);
            let r1 = lift_relations(&p.generators, &relations, &f1);
            Perturbation {
                generators: f1,
                relations: r1,
                degree: b.degree,
            }
        })
        .collect();

    let negative: Vec<u32> = chosen.iter().filter(|b| b.degree < 0).map(|b| (-b.degree) as u32).collect();
    let rest: Vec<u32> = chosen.iter().filter(|b| b.degree >= 0).map(|b| b.degree as u32).collect();
    let mut neg_names = name_by_weight("t", &negative).into_iter();
    let mut rest_names = name_by_weight("s", &rest).into_iter();
    let parameters: Vec<Parameter> = chosen
        .iter()
        .map(|b| {
            if b.degree < 0 {
                Parameter {
                    name: neg_names.next().unwrap(),
                    weight: (-b.degree) as u32,
                }
            } else {
                Parameter {
                    name: rest_names.next().unwrap(),
                    weight: 1,
                }
            }
        })
        .collect();

    DeformationFamily {
        curve_ring: p.ring.clone(),
        base_ring: family_ring(&p.ring, &parameters),
        parameters,
        generators: p.generators.clone(),
        relations,
        perturbations,
    }
}

/// `r'` with `f'·r + f·r' = 0`: minus the quotients of `f'·r` by `f`.
fn lift_relations<F: Field>(
    generators: &[Polynomial<F>],
    relations: &[Vec<Polynomial<F>>],
    f1: &[Polynomial<F>],
) -> Vec<Vec<Polynomial<F>>> {
    relations
        .iter()
        .map(|r| {
            let mut s = Polynomial::zero(generators[0].ring());
            for (a, c) in f1.iter().zip(r) {
                s = s.add(&a.mul(c));
            }
            let (rem, q) = s.reduce_by_set(generators);
            assert!(rem.is_zero(), "perturbation does not respect a relation");
            q.iter().map(|x| x.neg()).collect()
        })
        .collect()
}

impl<F: Field> DeformationFamily<F> {
    /// The family with the perturbations `f'_a` replaced (same degrees) and
    /// the `r'_a` recomputed. Adding a trivial perturbation such as
    /// `m·∂f/∂x_k` gives other representatives of the same `T¹` classes.
    pub fn with_representatives(&self, generators: Vec<Vec<Polynomial<F>>>) -> Self {
        assert_eq!(generators.len(), self.nparameters());
        let mut out = self.clone();
        for (p, f1) in out.perturbations.iter_mut().zip(generators) {
            p.relations = lift_relations(&self.generators, &self.relations, &f1);
            p.generators = f1;
        }
        out
    }
}
