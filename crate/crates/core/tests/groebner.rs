use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use wsatlas::curve::toric_ideal;
use wsatlas::groebner::{
    buchberger, free_resolution, free_resolution_minimal, graded_hilbert_function, ideal_syzygies, is_groebner_basis,
    krull_dimension, FreeModule, Subquotient,
};
use wsatlas::poly::OrderKind;
use wsatlas::{enumerate_by_genus, parse_polynomial, Field, NumericalSemigroup, Polynomial, Rational, WeightedRing};

type Q = Rational;

fn p(ring: &Arc<WeightedRing>, s: &str) -> Polynomial<Q> {
    parse_polynomial(ring, s).unwrap()
}

fn ns(s: &str) -> NumericalSemigroup {
    s.parse().unwrap()
}

/// Every s-polynomial of the basis has normal form zero.
fn s_pairs_reduce(basis: &[Polynomial<Q>]) -> bool {
    (0..basis.len()).all(|i| {
        (i + 1..basis.len()).all(|j| basis[i].s_polynomial(&basis[j]).unwrap().normal_form(basis).is_zero())
    })
}

#[test]
fn small_bases() {
    let r = wsatlas::curve::curve_ring(&ns("2,3"));
    let f = p(&r, "y3^2 - x^3");
    assert_eq!(buchberger(std::slice::from_ref(&f)).generators, vec![f]);

    let c = toric_ideal::<Q>(&ns("3,4,5"));
    assert_eq!(c.basis.generators.len(), 3);
    assert!(s_pairs_reduce(&c.basis.generators));
    let minors = buchberger(&c.ideal);
    assert_eq!(minors.generators.len(), 3);

    let r = WeightedRing::weighted(&["x"], &[1]);
    let unit = buchberger(&[p(&r, "x"), p(&r, "x - 1")]);
    assert_eq!(unit.generators, vec![Polynomial::one(&r)]);
    assert!(unit.is_unit());
}

#[test]
fn toric_bases_are_confluent() {
    for (_, list) in enumerate_by_genus(5).unwrap() {
        for s in list {
            let c = toric_ideal::<Q>(&s);
            assert!(s_pairs_reduce(&c.basis.generators), "{s}");
            assert!(is_groebner_basis(&c.basis.generators), "{s}");
        }
    }
}

#[test]
fn syzygy_examples() {
    let r = wsatlas::curve::curve_ring(&ns("4,6,11"));
    let c = toric_ideal::<Q>(&ns("4,6,11"));
    assert_eq!(c.ideal.len(), 2);
    let syz = ideal_syzygies(&c.ideal);
    assert_eq!(syz.len(), 1);
    let (f, g) = (&c.ideal[0], &c.ideal[1]);
    // Koszul syzygy (g, −f) up to a unit.
    let v = &syz[0];
    let lc = v[0].lead_coeff().unwrap().clone();
    let scale = g.lead_coeff().unwrap().div(&lc);
    assert_eq!(v[0].scale(&scale), *g);
    assert_eq!(v[1].scale(&scale), f.neg());

    let c = toric_ideal::<Q>(&ns("3,4,5"));
    let syz = ideal_syzygies(&c.ideal);
    assert_eq!(syz.len(), 2);
    assert!(syz.iter().all(|v| v.len() == 3));
    for v in &syz {
        let mut s = Polynomial::zero(&c.ring);
        for (a, b) in c.ideal.iter().zip(v) {
            s = s.add(&a.mul(b));
        }
        assert!(s.is_zero());
    }

    assert!(ideal_syzygies(&[Polynomial::<Q>::var(&r, 0)]).is_empty());
}

#[test]
fn betti_examples() {
    let betti = |s: &str| {
        let c = toric_ideal::<Q>(&ns(s));
        free_resolution_minimal(&c.ideal).betti()
    };
    assert_eq!(betti("2,3"), vec![1, 1]);
    assert_eq!(betti("3,4,5"), vec![1, 3, 2]);
    assert_eq!(betti("4,5,6,7"), vec![1, 6, 8, 3]);
}

/// Rank of an integer matrix modulo a large prime.
fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    const P: i64 = 1_000_000_007;
    let pow = |mut b: i64, mut e: i64| {
        let mut r = 1i64;
        b = b.rem_euclid(P);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    };
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col].rem_euclid(P) != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow(rows[rank][col], P - 2);
        for i in 0..rows.len() {
            if i != rank && rows[i][col].rem_euclid(P) != 0 {
                let f = rows[i][col].rem_euclid(P) * inv % P;
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] - f * rows[rank][j]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Graded Betti numbers `β_{i,s} = dim H̃_{i−1}(Δ_s)` with
/// `Δ_s = {F ⊆ gens : s − Σ_F n_j ∈ S}` (the squarefree divisor complex).
fn koszul_betti(s: &NumericalSemigroup) -> BTreeMap<(usize, u64), usize> {
    let gens = s.generators();
    let k = gens.len();
    let bound = s.frobenius().max(0) as u64 + gens.iter().sum::<u64>();
    let mut out = BTreeMap::new();
    for deg in 0..=bound {
        let faces: Vec<Vec<u32>> = (0..=k)
            .map(|q| {
                (0u32..1 << k)
                    .filter(|m| m.count_ones() as usize == q)
                    .filter(|m| {
                        let sum: u64 = (0..k).filter(|j| m & (1 << j) != 0).map(|j| gens[j]).sum();
                        sum <= deg && s.contains(deg - sum)
                    })
                    .collect()
            })
            .collect();
        // ranks[q] = rank of the boundary from faces of size q to size q − 1.
        let mut ranks = vec![0usize; k + 2];
        for q in 1..=k {
            if faces[q].is_empty() || faces[q - 1].is_empty() {
                continue;
            }
            let rows: Vec<Vec<i64>> = faces[q]
                .iter()
                .map(|&f| {
                    faces[q - 1]
                        .iter()
                        .map(|&g| {
                            if g & f != g {
                                return 0;
                            }
                            let removed = (f ^ g).trailing_zeros();
                            let before = (f & ((1 << removed) - 1)).count_ones();
                            if before % 2 == 0 { 1 } else { -1 }
                        })
                        .collect()
                })
                .collect();
            ranks[q] = rank_mod_p(rows);
        }
        for q in 0..=k {
            // H̃ of faces of size q, i.e. dimension q − 1, contributes β_{q, deg}.
            let h = faces[q].len() - ranks[q] - ranks[q + 1];
            if h > 0 {
                out.insert((q, deg), h);
            }
        }
    }
    out
}

fn resolution_betti(s: &NumericalSemigroup) -> BTreeMap<(usize, u64), usize> {
    let c = toric_ideal::<Q>(s);
    let res = free_resolution_minimal(&c.ideal);
    let mut out = BTreeMap::new();
    for (i, shifts) in res.shifts.iter().enumerate() {
        for &d in shifts {
            *out.entry((i, d as u64)).or_insert(0) += 1;
        }
    }
    out
}

#[test]
fn betti_numbers_match_koszul_homology() {
    for (_, list) in enumerate_by_genus(6).unwrap().into_iter().skip(1) {
        for s in list {
            assert_eq!(resolution_betti(&s), koszul_betti(&s), "{s}");
        }
    }
}

#[test]
fn resolutions_are_complexes_and_minimal() {
    for g in ["3,4,5", "4,5,6,7", "5,6,7,8,9", "4,6,11,13", "6,7,8,10,11"] {
        let c = toric_ideal::<Q>(&ns(g));
        let min = free_resolution_minimal(&c.ideal);
        for w in min.matrices.windows(2) {
            assert!(w[0].mul(&w[1]).is_zero(), "{g}");
        }
        assert!(min.matrices.iter().all(|m| !m.has_unit_entry()), "{g}");
        let full = free_resolution(&c.ideal);
        for w in full.matrices.windows(2) {
            assert!(w[0].mul(&w[1]).is_zero(), "{g}");
        }
        // The Euler characteristic of a free resolution of S/I with dim 1 is 0.
        let chi: i64 = min.betti().iter().enumerate().map(|(i, b)| if i % 2 == 0 { *b as i64 } else { -(*b as i64) }).sum();
        assert_eq!(chi, 0, "{g}");
    }
}

/// Alternating sum of shifted Betti numbers equals `∏(1 − t^{n_i}) · Σ_{s∈S} t^s`.
#[test]
fn resolution_matches_hilbert_series() {
    for (_, list) in enumerate_by_genus(7).unwrap().into_iter().skip(1) {
        for s in list {
            let c = toric_ideal::<Q>(&s);
            let res = free_resolution_minimal(&c.ideal);
            let top = s.conductor() as usize + s.generators().iter().sum::<u64>() as usize + 1;
            let mut lhs = vec![0i64; top + 1];
            for (i, shifts) in res.shifts.iter().enumerate() {
                for &d in shifts {
                    lhs[d as usize] += if i % 2 == 0 { 1 } else { -1 };
                }
            }
            let mut rhs: Vec<i64> = (0..=top).map(|n| s.contains(n as u64) as i64).collect();
            for &n in s.generators() {
                for d in (n as usize..=top).rev() {
                    rhs[d] -= rhs[d - n as usize];
                }
            }
            assert_eq!(lhs, rhs, "{s}");
        }
    }
}

/// Dimension of `k[x]/(monomials)` by brute force over variable subsets.
fn dimension_by_subsets(leads: &[Vec<u16>], n: usize) -> i64 {
    if leads.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return -1;
    }
    (0u32..1 << n)
        .filter(|set| leads.iter().all(|m| (0..n).any(|v| m[v] > 0 && set & (1 << v) == 0)))
        .map(|set| set.count_ones() as i64)
        .max()
        .unwrap()
}

#[test]
fn krull_dimensions() {
    let names = ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"];
    let r = WeightedRing::with_kind(&names, &[1; 8], OrderKind::UnitGrevlex);
    let mut minors = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            minors.push(p(&r, &format!("a{i}*b{j} - a{j}*b{i}")));
        }
    }
    assert_eq!(minors.len(), 6);
    assert_eq!(krull_dimension(&minors), 5);
    let leads: Vec<Vec<u16>> = buchberger(&minors)
        .generators
        .iter()
        .map(|g| g.lead_monomial().unwrap().exps().to_vec())
        .collect();
    assert_eq!(dimension_by_subsets(&leads, 8), 5);

    assert_eq!(krull_dimension(&[Polynomial::<Q>::zero(&r)]), 8);
    assert_eq!(krull_dimension(&[Polynomial::<Q>::one(&r)]), -1);
}

#[test]
fn hilbert_functions() {
    let r = WeightedRing::weighted(&["x"], &[2]);
    let module = FreeModule::new(&r, vec![0]);
    let sq = Subquotient {
        module: module.clone(),
        numerator: vec![vec![Polynomial::<Q>::one(&r)]],
        denominator: vec![vec![p(&r, "x^2")]],
    };
    assert_eq!(graded_hilbert_function(&sq).unwrap().entries, BTreeMap::from([(0, 1), (2, 1)]));
    let sq = Subquotient {
        module,
        numerator: vec![vec![p(&r, "x")]],
        denominator: vec![vec![p(&r, "x")]],
    };
    assert!(graded_hilbert_function(&sq).unwrap().entries.is_empty());

    // Tjurina algebra of the cusp: basis {1, x}.
    let r = wsatlas::curve::curve_ring(&ns("2,3"));
    let sq = Subquotient {
        module: FreeModule::new(&r, vec![0]),
        numerator: vec![vec![Polynomial::one(&r)]],
        denominator: ["y3^2 - x^3", "3*x^2", "2*y3"].iter().map(|s| vec![p(&r, s)]).collect(),
    };
    assert_eq!(graded_hilbert_function(&sq).unwrap().entries, BTreeMap::from([(0, 1), (2, 1)]));
}

fn arb_ideal() -> impl Strategy<Value = Vec<Polynomial<Q>>> {
    let r = WeightedRing::weighted(&["a", "b", "c"], &[1, 2, 3]);
    let poly = {
        let r = r.clone();
        prop::collection::vec((prop::collection::vec(0u16..3, 3), -3i64..4), 1..4).prop_map(move |t| {
            let terms = t.into_iter().map(|(e, c)| (r.monomial(&e), Q::from_i64(c))).collect();
            Polynomial::from_terms(&r, terms)
        })
    };
    prop::collection::vec(poly, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn buchberger_is_confluent_and_contains_input(gens in arb_ideal()) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let nonzero: Vec<Polynomial<Q>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let gb = buchberger(&nonzero);
        prop_assert!(s_pairs_reduce(&gb.generators));
        for g in &nonzero {
            prop_assert!(gb.contains(g));
        }
        for g in &gb.generators {
            prop_assert_eq!(g.lead_coeff().unwrap(), &Q::one());
        }
    }

    #[test]
    fn syzygies_vanish(gens in arb_ideal()) {
        let nonzero: Vec<Polynomial<Q>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(nonzero.len() >= 2);
        for v in ideal_syzygies(&nonzero) {
            let mut s = Polynomial::zero(nonzero[0].ring());
            for (a, b) in nonzero.iter().zip(&v) {
                s = s.add(&a.mul(b));
            }
            prop_assert!(s.is_zero());
        }
    }
}
