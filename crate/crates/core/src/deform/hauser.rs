use std::collections::{BTreeMap, HashMap};

use crate::curve::MonomialCurve;
use crate::field::Field;
use crate::groebner::ideal_syzygies;
use crate::linalg;
use crate::poly::{Monomial, Polynomial};

use super::{family_ring, parameter_ring, BaseIdeal, DeformationFamily, Parameter, Perturbation};

const LETTERS: &[char] = &['f', 'g', 'h', 'p', 'q', 'r', 's', 'u', 'v', 'w'];

/// Unfolding of the minimal generators: generator `f_i` of degree `d` is
/// perturbed by every Apéry monomial `y^(j) x^k` of weight `w < d`, with a
/// fresh variable of weight `d − w`. Relations are left unperturbed.
///
/// Variables are named `{letter}{d}_{d−w}`; the letter distinguishes
/// generators of the same degree (`f` for the first, `g` for the second, …).
pub fn hauser_unfolding<F: Field>(curve: &MonomialCurve<F>) -> DeformationFamily<F> {
    let apery = curve.apery_standard_form();
    unfolding(curve, |d| apery.monomials_below(d))
}

/// The unfolding written with coefficients that are polynomials in `x`:
/// generator `f_i` of degree `d` is perturbed by `P · y^(j)` for every
/// Apéry basis element `y^(j)` of weight `w < d`, where the variable `P`
/// of weight `d − w` stands for a polynomial in `x` of that degree.
pub fn hauser_unfolding_in_x<F: Field>(curve: &MonomialCurve<F>) -> DeformationFamily<F> {
    let apery = curve.apery_standard_form();
    unfolding(curve, |d| {
        let mut below: Vec<(u64, Monomial)> = apery
            .apery
            .iter()
            .zip(&apery.basis)
            .filter(|(w, _)| (**w as i64) < d)
            .map(|(w, m)| (*w, m.clone()))
            .collect();
        below.sort_by_key(|(w, _)| *w);
        below.into_iter().map(|(_, m)| m).collect()
    })
}

fn unfolding<F: Field>(curve: &MonomialCurve<F>, monomials: impl Fn(i64) -> Vec<Monomial>) -> DeformationFamily<F> {
    let ring = curve.ring.clone();
    let ngens = curve.ideal.len();
    let mut parameters = Vec::new();
    let mut perturbations = Vec::new();
    for (i, &d) in curve.generator_degrees.iter().enumerate() {
        let same = curve.generator_degrees[..i].iter().filter(|&&e| e == d).count();
        let letter = LETTERS.get(same).map(|c| c.to_string()).unwrap_or_else(|| format!("f{same}_"));
        for m in monomials(d as i64) {
            let w = d - ring.weighted_degree(m.exps());
            parameters.push(Parameter {
                name: format!("{letter}{d}_{w}"),
                weight: w,
            });
            let mut generators = vec![Polynomial::zero(&ring); ngens];
            generators[i] = Polynomial::term(&ring, m, F::one());
            perturbations.push(Perturbation {
                generators,
                relations: Vec::new(),
                degree: -(w as i64),
            });
        }
    }
    let relations = if ngens > 1 { ideal_syzygies(&curve.ideal) } else { Vec::new() };
    DeformationFamily {
        curve_ring: ring.clone(),
        base_ring: family_ring(&ring, &parameters),
        parameters,
        generators: curve.ideal.clone(),
        relations,
        perturbations,
    }
}

/// Deformation variables of an unfolding (from [`hauser_unfolding`]) that
/// can be removed by coordinate changes `x_k ↦ x_k + c·m` of negative
/// weight. In each weight the first-order effects `NF(m ∂f/∂x_k)` are
/// written in the unfolding variables and row reduced; the pivot
/// variables are returned. Setting them to zero gives a slice transversal
/// to the trivial deformations, whose base has dimension smaller by the
/// number of removed variables.
pub fn trivial_parameters<F: Field>(family: &DeformationFamily<F>, curve: &MonomialCurve<F>) -> Vec<usize> {
    let apery = curve.apery_standard_form();
    let ring = &family.curve_ring;
    let n = family.nparameters();
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    for (a, p) in family.perturbations.iter().enumerate() {
        for (i, g) in p.generators.iter().enumerate() {
            if let [(m, _)] = g.terms() {
                index.insert((i, m.clone()), a);
            }
        }
    }
    let mut by_weight: BTreeMap<u32, Vec<Vec<F>>> = BTreeMap::new();
    for k in 0..ring.nvars() {
        let nk = ring.weight(k);
        for m in apery.monomials_below(nk as i64) {
            let weight = nk - ring.weighted_degree(m.exps());
            let mut row = vec![F::zero(); n];
            let mut nonzero = false;
            for (i, f) in family.generators.iter().enumerate() {
                let g = apery.normal_form(&derivative(f, k).mul_term(&m, &F::one()));
                for (t, c) in g.terms() {
                    let a = *index
                        .get(&(i, t.clone()))
                        .expect("trivial perturbation outside the unfolding");
                    row[a] = c.clone();
                    nonzero = true;
                }
            }
            if nonzero {
                by_weight.entry(weight).or_default().push(row);
            }
        }
    }
    let mut drop = Vec::new();
    for rows in by_weight.values_mut() {
        drop.extend(linalg::rref(rows, n));
    }
    drop.sort_unstable();
    drop
}

fn derivative<F: Field>(p: &Polynomial<F>, v: usize) -> Polynomial<F> {
    let ring = p.ring();
    let terms = p
        .terms()
        .iter()
        .filter(|(m, _)| m.exp(v) > 0)
        .map(|(m, c)| {
            let mut e = m.exps().to_vec();
            e[v] -= 1;
            (ring.monomial(&e), c.mul(&F::from_i64(m.exp(v) as i64)))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Flatness equations of an unfolding with their provenance.
#[derive(Clone, Debug)]
pub struct FlatnessSystem<F: Field> {
    pub base: BaseIdeal<F>,
    /// For each equation: the relation index and the curve monomial whose
    /// coefficient it is.
    pub labels: Vec<(usize, Monomial)>,
    /// `R = r − q`, with `F·R` equal to the residue vector; on the zero
    /// locus of the equations `F·R = 0`.
    pub lifted_relations: Vec<Vec<Polynomial<F>>>,
    /// The residues of `F·r` modulo the list `F`, in the family ring.
    pub residues: Vec<Polynomial<F>>,
}

/// Computes `F·r`, reduces every entry by the list `F` (no completion to a
/// Gröbner basis), and returns the coefficients of the residues with
/// respect to the curve monomials. They vanish exactly where `F` is flat.
pub fn hauser_flatness_equations<F: Field>(family: &DeformationFamily<F>) -> FlatnessSystem<F> {
    let all: Vec<usize> = (0..family.curve_ring.nvars()).collect();
    flatness(family, &all)
}

/// As [`hauser_flatness_equations`], but the residues are split only with
/// respect to the `y` variables: each equation is a polynomial in `x` and
/// the deformation variables, and the ring of the result has `x` first.
pub fn hauser_flatness_equations_in_x<F: Field>(family: &DeformationFamily<F>) -> FlatnessSystem<F> {
    let ys: Vec<usize> = (1..family.curve_ring.nvars()).collect();
    flatness(family, &ys)
}

fn flatness<F: Field>(family: &DeformationFamily<F>, split: &[usize]) -> FlatnessSystem<F> {
    let k = family.curve_ring.nvars();
    let f = family.perturbed_generators();
    let mut variables: Vec<usize> = (0..k).filter(|v| !split.contains(v)).collect();
    variables.extend(k..family.base_ring.nvars());
    let mut names = Vec::new();
    for &v in &variables {
        names.push(Parameter {
            name: family.base_ring.name(v).to_string(),
            weight: family.base_ring.weight(v),
        });
    }
    let ring = parameter_ring(&names);
    let mut position = vec![0; family.base_ring.nvars()];
    for (p, &v) in variables.iter().enumerate() {
        position[v] = p;
    }

    let mut equations = Vec::new();
    let mut labels = Vec::new();
    let mut lifted = Vec::new();
    let mut residues = Vec::new();
    for (j, r) in family.relations.iter().enumerate() {
        let mut s = Polynomial::zero(&family.base_ring);
        for (a, b) in f.iter().zip(r) {
            s = s.add(&a.mul(&family.lift(b)));
        }
        let (rem, q) = s.reduce_by_set(&f);
        lifted.push(r.iter().zip(&q).map(|(x, y)| family.lift(x).sub(y)).collect());
        for (key, coeff) in rem.collect_by(split) {
            let key = family.curve_ring.monomial(&key.exps()[..k]);
            equations.push(coeff.embed(&ring, &position));
            labels.push((j, key));
        }
        residues.push(rem);
    }
    FlatnessSystem {
        base: BaseIdeal {
            ring,
            equations,
            truncation_order: None,
        },
        labels,
        lifted_relations: lifted,
        residues,
    }
}
