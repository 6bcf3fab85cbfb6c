use std::collections::BTreeSet;

use proptest::prelude::*;
use wsatlas::semigroup::{enumerate_by_genus, NumericalSemigroup};
use wsatlas::Error;

/// Membership of `0..=bound` by dynamic programming over the raw generators.
fn sieve(raw: &[u64], bound: u64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for n in 1..=bound as usize {
        member[n] = raw.iter().any(|&g| g as usize <= n && member[n - g as usize]);
    }
    member
}

fn ns(raw: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(raw).unwrap()
}

#[test]
fn generators_gaps_and_genus() {
    let s = ns(&[2, 3]);
    assert_eq!(s.generators(), &[2, 3]);
    assert_eq!(s.gaps(), &[1]);
    assert_eq!(s.genus(), 1);

    let s = ns(&[4, 6, 8, 11, 13]);
    assert_eq!(s.generators(), &[4, 6, 11, 13]);
    assert_eq!(s.gaps(), &[1, 2, 3, 5, 7, 9]);
    assert_eq!(s.genus(), 6);

    let s = ns(&[1]);
    assert_eq!(s.generators(), &[1]);
    assert!(s.gaps().is_empty());
    assert_eq!(s.genus(), 0);
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(NumericalSemigroup::from_generators(&[4, 6]), Err(Error::NotNumerical(2))));
    assert!(matches!(NumericalSemigroup::from_generators(&[]), Err(Error::Empty)));
    assert!(matches!(NumericalSemigroup::from_generators(&[0]), Err(Error::Empty)));
    assert!(matches!(ns(&[3, 4]).apery_set(5), Err(Error::NotMember(5))));
    assert!(matches!(enumerate_by_genus(1000), Err(Error::BoundExceeded { .. })));
}

#[test]
fn parse_and_display() {
    let s: NumericalSemigroup = "6,8,9,11,13".parse().unwrap();
    assert_eq!(s.to_string(), "6,8,9,11,13");
    let t: NumericalSemigroup = "13 11 9 8 6".parse().unwrap();
    assert_eq!(s, t);
    assert!("4,x".parse::<NumericalSemigroup>().is_err());
}

#[test]
fn apery_sets() {
    let a = ns(&[2, 3]).apery_set(2).unwrap();
    assert_eq!(a.representatives.iter().copied().collect::<BTreeSet<_>>(), BTreeSet::from([0, 3]));
    let a = ns(&[3, 4, 5]).apery_set(3).unwrap();
    assert_eq!(a.representatives.iter().copied().collect::<BTreeSet<_>>(), BTreeSet::from([0, 4, 5]));
    assert_eq!(ns(&[1]).apery_set(1).unwrap().representatives, vec![0]);
}

#[test]
fn types() {
    assert_eq!(ns(&[2, 3]).type_lambda(), 1);
    let s = ns(&[4, 6, 11, 13]);
    assert_eq!(s.pseudo_frobenius(), vec![2, 7, 9]);
    assert_eq!(s.type_lambda(), 3);
    let s = ns(&[5, 6, 7, 8, 9]);
    assert_eq!(s.pseudo_frobenius(), vec![1, 2, 3, 4]);
    assert_eq!(s.type_lambda(), 4);
}

#[test]
fn enumeration() {
    let by_genus = enumerate_by_genus(7).unwrap();
    let counts: Vec<usize> = (1..=7).map(|g| by_genus[&g].len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 7, 12, 23, 39]);
    let g2: BTreeSet<Vec<u64>> = by_genus[&2].iter().map(|s| s.generators().to_vec()).collect();
    assert_eq!(g2, BTreeSet::from([vec![2, 5], vec![3, 4, 5]]));
    assert_eq!(by_genus[&0], vec![NumericalSemigroup::naturals()]);
    for (g, list) in &by_genus {
        assert!(list.iter().all(|s| s.genus() == *g));
        let distinct: BTreeSet<&[u64]> = list.iter().map(|s| s.generators()).collect();
        assert_eq!(distinct.len(), list.len());
    }
}

/// Counts semigroups of genus `g` by brute force over gap sets contained in
/// `[1, 2g − 1]` (the Frobenius number is at most `2g − 1`).
fn count_by_brute_force(g: usize) -> usize {
    let top = 2 * g as u64;
    let mut count = 0;
    for mask in 0u64..(1 << (top - 1)) {
        if mask.count_ones() as usize != g {
            continue;
        }
        let in_s = |n: u64| n == 0 || n >= top || mask & (1 << (n - 1)) == 0;
        let closed = (1..top).all(|a| (a..top).all(|b| !(in_s(a) && in_s(b)) || in_s(a + b)));
        if closed {
            count += 1;
        }
    }
    count
}

#[test]
fn enumeration_matches_brute_force() {
    let by_genus = enumerate_by_genus(6).unwrap();
    for g in 1..=6 {
        assert_eq!(by_genus[&g].len(), count_by_brute_force(g), "genus {g}");
    }
}

fn raw_generators() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..20, 1..5).prop_map(|mut v| {
        // Coprimality: append a generator congruent to 1 modulo the first.
        let m = v[0];
        v.push(m + 1);
        v
    })
}

proptest! {
    #[test]
    fn membership_matches_sieve(raw in raw_generators()) {
        let s = ns(&raw);
        let bound = s.conductor() + 30;
        let member = sieve(&raw, bound);
        for n in 0..=bound {
            prop_assert_eq!(s.contains(n), member[n as usize], "n = {}", n);
        }
        prop_assert_eq!(s.genus(), member.iter().filter(|b| !**b).count());
    }

    #[test]
    fn generators_are_minimal(raw in raw_generators()) {
        let s = ns(&raw);
        let gens = s.generators();
        let again = ns(gens);
        prop_assert_eq!(again.gaps(), s.gaps());
        for (i, &g) in gens.iter().enumerate() {
            let others: Vec<u64> = gens.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, &x)| x).collect();
            prop_assert!(!sieve(&others, g)[g as usize] || others.is_empty());
        }
    }

    #[test]
    fn frobenius_and_apery(raw in raw_generators()) {
        let s = ns(&raw);
        prop_assert_eq!(s.frobenius(), s.gaps().last().map_or(-1, |&f| f as i64));
        let m = s.multiplicity();
        let a = s.apery_set(m).unwrap();
        for (r, &w) in a.representatives.iter().enumerate() {
            prop_assert_eq!(w % m, r as u64);
            prop_assert!(s.contains(w));
            prop_assert!(w < m || !s.contains(w - m));
        }
        // Selmer: F = max Apéry element − m, g = Σ ⌊w/m⌋.
        prop_assert_eq!(s.frobenius(), *a.representatives.iter().max().unwrap() as i64 - m as i64);
        prop_assert_eq!(s.genus() as u64, a.representatives.iter().map(|w| w / m).sum::<u64>());
    }

    #[test]
    fn type_from_definition(raw in raw_generators()) {
        let s = ns(&raw);
        let bound = s.conductor() + s.multiplicity();
        let members: Vec<u64> = (1..=bound).filter(|&n| s.contains(n)).collect();
        let expected: Vec<u64> = s
            .gaps()
            .iter()
            .copied()
            .filter(|&l| members.iter().all(|&n| s.contains(l + n)))
            .collect();
        prop_assert_eq!(s.pseudo_frobenius(), expected);
        prop_assert!(s.type_lambda() <= s.multiplicity() as usize - 1 || s.genus() == 0);
    }

    #[test]
    fn children_have_genus_plus_one(raw in raw_generators()) {
        let s = ns(&raw);
        prop_assume!(s.genus() <= 20);
        for c in s.children() {
            prop_assert_eq!(c.genus(), s.genus() + 1);
            prop_assert!(c.frobenius() > s.frobenius());
        }
    }
}
