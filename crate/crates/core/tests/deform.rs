use proptest::prelude::*;
use wsatlas::cotangent::{t1_graded, t2_dimension, Presentation};
use wsatlas::curve::{toric_ideal, MonomialCurve};
use wsatlas::deform::{
    eliminate_linear, eliminate_linear_truncated, first_order_family, hauser_flatness_equations, hauser_unfolding,
    lowest_parts, parameter_ring, quadratic_base_equations, quadratic_base_for, quadratic_base_of, BaseIdeal,
    DegreeRange, LowestDegree, Parameter,
};
use wsatlas::groebner::buchberger;
use wsatlas::{enumerate_by_genus, parse_polynomial, Field, Fp, NumericalSemigroup, Polynomial, Rational};

type Q = Rational;

fn ns(s: &str) -> NumericalSemigroup {
    s.parse().unwrap()
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

fn dot<F: Field>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Polynomial<F> {
    a.iter().zip(b).fold(Polynomial::zero(a[0].ring()), |acc, (x, y)| acc.add(&x.mul(y)))
}

#[test]
fn cusp_first_order_family() {
    let c = toric_ideal::<Q>(&ns("2,3"));
    let fam = first_order_family(&c, DegreeRange::Negative);
    assert_eq!(fam.nparameters(), 2);
    assert!(fam.relations.is_empty());
    let mut weights: Vec<u32> = fam.parameters.iter().map(|p| p.weight).collect();
    weights.sort_unstable();
    assert_eq!(weights, [4, 6]);
    // The versal family y² − x³ + t₄x + t₆ up to scaling of the parameters.
    let mut shapes: Vec<String> = fam.perturbations.iter().map(|p| p.generators[0].monic().to_string()).collect();
    shapes.sort();
    assert_eq!(shapes, ["1", "x"]);
    assert_eq!(fam.specialize_to_zero(), c.ideal);
}

#[test]
fn first_order_flatness() {
    for s in ["3,4,5", "4,5,6,7", "4,6,11,13", "5,6,7,8,9"] {
        let c = toric_ideal::<Q>(&ns(s));
        let fam = first_order_family(&c, DegreeRange::Negative);
        assert_eq!(fam.nparameters(), t1_graded(&c).minus(), "{s}");
        assert_eq!(fam.specialize_to_zero(), fam.generators);
        assert_eq!(fam.relations_at_zero(), fam.relations);
        for r in &fam.relations {
            assert!(dot(&fam.generators, r).is_zero());
        }
        // f'·r + f·r' = 0 for every parameter, checked directly.
        for p in &fam.perturbations {
            for (r, r1) in fam.relations.iter().zip(&p.relations) {
                assert!(dot(&p.generators, r).add(&dot(&fam.generators, r1)).is_zero(), "{s}");
            }
        }
        assert!(fam.products_truncated(2).iter().all(|e| e.is_zero()), "{s}");
    }
    let fam = first_order_family(&toric_ideal::<Q>(&ns("3,4,5")), DegreeRange::Negative);
    assert_eq!(fam.nparameters(), 5);
}

#[test]
fn all_degrees_family() {
    let c = toric_ideal::<Q>(&ns("4,6,11,13"));
    let t1 = t1_graded(&c);
    let fam = first_order_family(&c, DegreeRange::All);
    assert_eq!(fam.nparameters(), t1.dims.total());
    let nonnegative = fam.perturbations.iter().filter(|p| p.degree >= 0).count();
    assert_eq!(nonnegative, t1.plus() + t1.degree_zero());
    assert!(fam.products_truncated(2).iter().all(|e| e.is_zero()));
}

#[test]
fn quadratic_base_counts() {
    assert!(quadratic_base_equations(&toric_ideal::<Q>(&ns("2,3"))).base.equations.is_empty());
    assert!(quadratic_base_equations(&toric_ideal::<Q>(&ns("3,4,5"))).base.equations.is_empty());

    let c = toric_ideal::<Q>(&ns("4,7,10,13"));
    let q = quadratic_base_equations(&c);
    assert_eq!(q.base.equations.len(), 6);
    assert!(q.base.equations.len() <= t2_dimension(&c).total());
    assert!(q.base.is_weighted_homogeneous());
    assert!(q.base.vanishes_at_origin());
    assert!(q.base.equations.iter().all(|e| e.terms().iter().all(|(m, _)| m.total_degree() == 2)));
    assert_eq!(q.base.dimension(), 13);
}

#[test]
fn quadratic_base_is_field_independent() {
    let s = ns("4,7,10,13");
    let q = quadratic_base_equations(&toric_ideal::<Q>(&s));
    let p = quadratic_base_equations(&toric_ideal::<Fp>(&s));
    assert_eq!(q.base.equations.len(), p.base.equations.len());
    assert_eq!(q.base.dimension(), p.base.dimension());
    let to_p: Vec<Polynomial<Fp>> = q
        .base
        .equations
        .iter()
        .map(|e| e.map_coeffs(|c| Fp::from_rational(c).unwrap()))
        .collect();
    let reordered: Vec<Polynomial<Fp>> = to_p.iter().map(|e| e.reorder(&p.base.ring)).collect();
    assert_eq!(buchberger(&reordered).generators, buchberger(&p.base.equations).generators);
}

/// Trivial representatives of a degree-`e` class: `m·∂f/∂x_k` with
/// `wt(m) = n_k + e`, plus an element of the ideal in one component.
fn trivial_shift<F: Field>(c: &MonomialCurve<F>, e: i64, salt: usize) -> Vec<Polynomial<F>> {
    let apery = c.apery_standard_form();
    let ring = &c.ring;
    let mut out = vec![Polynomial::zero(ring); c.ideal.len()];
    for k in 0..ring.nvars() {
        let w = ring.weight(k) as i64 + e;
        if let Some(m) = apery.standard_monomial(w) {
            let scale = F::from_i64((k + salt) as i64 % 3 + 1);
            for (o, f) in out.iter_mut().zip(&c.ideal) {
                *o = o.add(&derivative(f, k).mul_term(&m, &scale));
            }
        }
    }
    // f_j · (monomial) placed in component i, when the degrees allow it.
    let i = salt % c.ideal.len();
    let target = c.generator_degrees[i] as i64 + e;
    for (j, f) in c.ideal.iter().enumerate() {
        if let Some(m) = apery.standard_monomial(target - c.generator_degrees[j] as i64) {
            out[i] = out[i].add(&f.mul_term(&m, &F::one()));
            break;
        }
    }
    out
}

#[test]
fn quadratic_base_is_independent_of_representatives() {
    for s in ["4,7,10,13", "4,9,10,11", "4,5,6,7"] {
        let c = toric_ideal::<Q>(&ns(s));
        let mut p = Presentation::new(&c);
        let q = quadratic_base_of(&mut p, &c);
        let shifted: Vec<Vec<Polynomial<Q>>> = q
            .family
            .perturbations
            .iter()
            .enumerate()
            .map(|(a, pert)| {
                let t = trivial_shift(&c, pert.degree, a);
                pert.generators.iter().zip(&t).map(|(x, y)| x.add(y)).collect()
            })
            .collect();
        assert!(shifted.iter().zip(&q.family.perturbations).any(|(x, p)| *x != p.generators));
        let other = quadratic_base_for(&mut p, q.family.with_representatives(shifted));
        assert!(other.family.products_truncated(2).iter().all(|e| e.is_zero()));
        assert_eq!(
            buchberger(&other.base.equations).generators,
            buchberger(&q.base.equations).generators,
            "{s}"
        );
    }
}

#[test]
fn cusp_unfolding() {
    let c = toric_ideal::<Q>(&ns("2,3"));
    let u = hauser_unfolding(&c);
    assert_eq!(u.nparameters(), 5);
    let sys = hauser_flatness_equations(&u);
    assert!(sys.base.equations.is_empty());
    let f = &u.perturbed_generators()[0];
    assert_eq!(f.len(), 7);
}

/// Generator `f_i` of degree `d` gets one variable per element of `S` below `d`.
fn unfolding_size(s: &NumericalSemigroup, degrees: &[u32]) -> usize {
    degrees.iter().map(|&d| (0..d as u64).filter(|&n| s.contains(n)).count()).sum()
}

#[test]
fn unfolding_sizes() {
    for (_, list) in enumerate_by_genus(5).unwrap().into_iter().skip(1) {
        for s in list {
            let c = toric_ideal::<Q>(&s);
            let u = hauser_unfolding(&c);
            assert_eq!(u.nparameters(), unfolding_size(&s, &c.generator_degrees), "{s}");
            for (p, par) in u.perturbations.iter().zip(&u.parameters) {
                assert_eq!(-p.degree, par.weight as i64);
                assert!(p.relations.is_empty());
            }
        }
    }
}

#[test]
fn flatness_identity() {
    for s in ["3,4,5", "4,5,6,7", "3,5,7"] {
        let c = toric_ideal::<Q>(&ns(s));
        let u = hauser_unfolding(&c);
        let sys = hauser_flatness_equations(&u);
        let f = u.perturbed_generators();
        assert_eq!(sys.lifted_relations.len(), u.relations.len());
        for (r, residue) in sys.lifted_relations.iter().zip(&sys.residues) {
            assert_eq!(&dot(&f, r), residue, "{s}");
        }
        assert!(sys.base.vanishes_at_origin());
        assert!(sys.base.is_weighted_homogeneous());
        assert_eq!(sys.labels.len(), sys.base.equations.len());
    }
}

fn base_ideal(names: &[&str], weights: &[u32], eqs: &[&str]) -> BaseIdeal<Q> {
    let params: Vec<Parameter> = names
        .iter()
        .zip(weights)
        .map(|(n, w)| Parameter {
            name: n.to_string(),
            weight: *w,
        })
        .collect();
    let ring = parameter_ring(&params);
    BaseIdeal {
        equations: eqs.iter().map(|e| parse_polynomial(&ring, e).unwrap()).collect(),
        ring,
        truncation_order: None,
    }
}

#[test]
fn linear_elimination() {
    let b = base_ideal(&["v", "w"], &[2, 1], &["v - w^2"]);
    let el = eliminate_linear(&b, |_| true);
    assert_eq!(el.eliminated, ["v"]);
    assert!(el.reduced.equations.is_empty());
    assert_eq!(el.reduced.nvars(), 1);
    assert_eq!(el.reduced.dimension(), 1);
    assert_eq!(b.dimension(), 1);

    // Not allowed to touch v: nothing happens.
    let el = eliminate_linear(&b, |n| n != "v");
    assert!(el.eliminated.is_empty());

    // Quadrics with no linear part: nothing to eliminate.
    let segre = base_ideal(&["a", "b", "c", "d"], &[1, 1, 1, 1], &["a*d - b*c"]);
    let el = eliminate_linear(&segre, |_| true);
    assert!(el.eliminated.is_empty());
    assert_eq!(el.reduced.equations.len(), 1);
    assert_eq!(el.reduced.dimension(), 3);

    // a = b², c = a·b: substitution chains; the remaining equation is b⁴ − d.
    let b = base_ideal(&["a", "b", "c", "d"], &[2, 1, 3, 4], &["a - b^2", "c - a*b", "c*b - d"]);
    let el = eliminate_linear(&b, |n| n != "d");
    assert_eq!(el.reduced.nvars(), 2);
    assert_eq!(el.reduced.dimension(), b.dimension());
    let tr = eliminate_linear_truncated(&b, |n| n != "d", 3);
    assert_eq!(tr.eliminated, el.eliminated);
}

#[test]
fn lowest_degree_parts() {
    let b = base_ideal(&["u", "v"], &[1, 3], &["u^2 + v", "u^3 + u*v + v^2"]);
    let v = |e: &str| parse_polynomial::<Q>(&b.ring, e).unwrap();
    assert_eq!(lowest_parts(&b, LowestDegree::Weighted).equations, vec![v("u^2"), v("u^3")]);
    assert_eq!(lowest_parts(&b, LowestDegree::Total).equations, vec![v("v"), v("u*v + v^2")]);
    assert_eq!(lowest_parts(&b, LowestDegree::Off).equations, b.equations);
}

fn rows() -> Vec<NumericalSemigroup> {
    enumerate_by_genus(6).unwrap().into_values().skip(1).flatten().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn quadratic_base_shape(index in 0usize..49) {
        let s = rows()[index].clone();
        let c = toric_ideal::<Fp>(&s);
        let q = quadratic_base_equations(&c);
        prop_assert!(q.base.is_weighted_homogeneous());
        prop_assert!(q.base.vanishes_at_origin());
        prop_assert!(q.base.equations.len() <= t2_dimension(&c).total());
        prop_assert_eq!(q.base.nvars(), t1_graded(&c).minus());
        prop_assert!(q.base.dimension() <= q.base.nvars() as i64);
    }
}
