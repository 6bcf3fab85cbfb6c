use std::sync::Arc;

use wsatlas::curve::{curve_ring, parametrization_vanishes, toric_ideal, MonomialCurve};
use wsatlas::groebner::buchberger;
use wsatlas::{enumerate_by_genus, parse_polynomial, Field, NumericalSemigroup, Polynomial, Rational, WeightedRing};

type Q = Rational;

fn ns(s: &str) -> NumericalSemigroup {
    s.parse().unwrap()
}

fn polys(ring: &Arc<WeightedRing>, src: &[&str]) -> Vec<Polynomial<Q>> {
    src.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect()
}

fn minor(m: &[Vec<Polynomial<Q>>], (r1, r2): (usize, usize), (c1, c2): (usize, usize)) -> Polynomial<Q> {
    m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
}

/// Exponent vectors of all monomials of weighted degree `w`.
fn monomials(weights: &[u64], w: u64) -> Vec<Vec<u16>> {
    fn rec(weights: &[u64], v: usize, left: u64, e: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if v == weights.len() {
            if left == 0 {
                out.push(e.clone());
            }
            return;
        }
        let mut k = 0;
        while k * weights[v] <= left {
            e.push(k as u16);
            rec(weights, v + 1, left - k * weights[v], e, out);
            e.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, w, &mut Vec::new(), &mut out);
    out
}

/// The toric ideal is spanned by the binomials `x^a − x^b` of equal weight;
/// those up to the largest generator degree already generate it.
fn binomial_basis(s: &NumericalSemigroup, ring: &Arc<WeightedRing>, top: u64) -> Vec<Polynomial<Q>> {
    let mut gens = Vec::new();
    for w in 1..=top {
        let ms = monomials(s.generators(), w);
        for pair in ms.windows(2) {
            let a = Polynomial::monomial(ring, &pair[0]);
            let b = Polynomial::monomial(ring, &pair[1]);
            gens.push(a.sub(&b));
        }
    }
    buchberger(&gens).generators
}

#[test]
fn toric_ideals_by_binomials() {
    for (_, list) in enumerate_by_genus(5).unwrap().into_iter().skip(1) {
        for s in list {
            let c = toric_ideal::<Q>(&s);
            let top = *c.generator_degrees.iter().max().unwrap() as u64;
            assert_eq!(binomial_basis(&s, &c.ring, top), c.basis.generators, "{s}");
        }
    }
}

#[test]
fn small_ideals() {
    let c = toric_ideal::<Q>(&ns("2,3"));
    assert_eq!(c.ideal, polys(&c.ring, &["y3^2 - x^3"]));

    let c = toric_ideal::<Q>(&ns("3,4,5"));
    let minors = polys(&c.ring, &["y4^2 - x*y5", "y4*y5 - x^3", "y5^2 - x^2*y4"]);
    assert_eq!(c.ideal.len(), 3);
    for g in &c.ideal {
        let monic = g.monic();
        assert!(minors.contains(&monic) || minors.contains(&monic.neg()), "{g}");
    }
}

#[test]
fn determinantal_generators() {
    // 2×2 minors of [[x, y5, y6, y7], [y5, y6, y7, x²]].
    let s = ns("4,5,6,7");
    let ring = curve_ring(&s);
    let rows = [polys(&ring, &["x", "y5", "y6", "y7"]), polys(&ring, &["y5", "y6", "y7", "x^2"])];
    let mut gens = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            gens.push(minor(&rows, (0, 1), (i, j)));
        }
    }
    let c = MonomialCurve::with_generators(&s, gens).expect("minors generate the toric ideal");
    assert_eq!(c.ideal.len(), 6);
    assert_eq!(toric_ideal::<Q>(&s).ideal.len(), 6);
    assert!(c.parametrization_check());

    // 2×2 minors of the symmetric matrix [[x, y6, y11], [y6, x², y13], [y11, y13, x³y6]].
    let s = ns("4,6,11,13");
    let ring = curve_ring(&s);
    let m = [
        polys(&ring, &["x", "y6", "y11"]),
        polys(&ring, &["y6", "x^2", "y13"]),
        polys(&ring, &["y11", "y13", "x^3*y6"]),
    ];
    let mut gens = Vec::new();
    for r in [(0, 1), (0, 2), (1, 2)] {
        for c in [(0, 1), (0, 2), (1, 2)] {
            gens.push(minor(&m, r, c));
        }
    }
    assert!(parametrization_vanishes(&s, &gens));
    assert_eq!(buchberger(&gens).generators, toric_ideal::<Q>(&s).basis.generators);
}

#[test]
fn with_generators_rejects_other_ideals() {
    let s = ns("3,4,5");
    let ring = curve_ring(&s);
    let gens = polys(&ring, &["y4^2 - x*y5", "y4*y5 - x^3"]);
    assert!(MonomialCurve::with_generators(&s, gens).is_none());
}

#[test]
fn parametrization() {
    for (_, list) in enumerate_by_genus(7).unwrap().into_iter().skip(1) {
        for s in list {
            let c = toric_ideal::<Q>(&s);
            assert!(c.parametrization_check(), "{s}");
            assert!(c.ideal.iter().all(|g| g.is_homogeneous()));
            assert!(c.ideal.len() >= c.embedding_dimension() - 1);
        }
    }
    let s = ns("3,4,5");
    let ring = curve_ring(&s);
    assert!(!parametrization_vanishes(&s, &[Polynomial::<Q>::var(&ring, 0)]));
}

#[test]
fn apery_forms() {
    let names = |s: &str| {
        let c = toric_ideal::<Q>(&ns(s));
        let a = c.apery_standard_form();
        a.basis.iter().map(|m| a.ring.format_monomial(m)).collect::<Vec<_>>()
    };
    assert_eq!(names("3,4,5"), ["1", "y4", "y5"]);
    assert_eq!(names("4,5,6,7"), ["1", "y5", "y6", "y7"]);
    assert_eq!(names("6,7,8,10,11"), ["1", "y7", "y8", "y7*y8", "y10", "y11"]);
}

#[test]
fn apery_normal_forms_are_standard() {
    let c = toric_ideal::<Q>(&ns("6,8,9,11,13"));
    let a = c.apery_standard_form();
    for w in 0..60i64 {
        match a.standard_monomial(w) {
            Some(m) => {
                assert!(c.semigroup.contains(w as u64));
                assert_eq!(a.ring.weighted_degree(m.exps()) as i64, w);
                let p = Polynomial::<Q>::term(&a.ring, m.clone(), Q::one());
                assert_eq!(a.normal_form(&p), p);
            }
            None => assert!(!c.semigroup.contains_signed(w)),
        }
    }
    // Every monomial reduces to a multiple of the standard monomial of its weight.
    for e in monomials(c.semigroup.generators(), 40) {
        let p = Polynomial::<Q>::monomial(&a.ring, &e);
        let nf = a.normal_form(&p);
        assert_eq!(nf.len(), 1);
        assert_eq!(nf.terms()[0].0, a.standard_monomial(40).unwrap());
        assert_eq!(nf.terms()[0].1, Q::one());
    }
}

#[test]
fn curve_json() {
    let c = toric_ideal::<Q>(&ns("3,4,5"));
    let j = c.record();
    assert_eq!(j.variables, ["x", "y4", "y5"]);
    assert_eq!(j.weights, [3, 4, 5]);
    let back: wsatlas::curve::CurveJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
    assert_eq!(back, j);
}
