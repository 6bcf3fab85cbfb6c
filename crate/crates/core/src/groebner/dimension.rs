use crate::field::Field;
use crate::groebner::ideal::buchberger;
use crate::poly::{Monomial, Polynomial};

/// Krull dimension of `k[vars]/(gens)`; the unit ideal gives -1.
pub fn krull_dimension<F: Field>(gens: &[Polynomial<F>]) -> i64 {
    let nonzero: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let Some(first) = gens.first() else {
        panic!("krull_dimension needs the ring; pass at least one polynomial");
    };
    let n = first.ring().nvars();
    if nonzero.is_empty() {
        return n as i64;
    }
    let gb = buchberger(&nonzero);
    let leads: Vec<Monomial> = gb
        .generators
        .iter()
        .map(|g| g.lead_monomial().unwrap().clone())
        .collect();
    dimension_of_monomial_ideal(&leads, n)
}

/// Dimension of `k[x_1..x_n]/(leads)`: the size of the largest set of
/// variables containing the support of no generator.
pub fn dimension_of_monomial_ideal(leads: &[Monomial], n: usize) -> i64 {
    if leads.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut supports: Vec<Vec<usize>> = leads.iter().map(|m| m.support().collect()).collect();
    supports.sort();
    supports.dedup();
    // Keep only inclusion-minimal supports.
    let minimal: Vec<Vec<usize>> = supports
        .iter()
        .filter(|s| {
            !supports
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)))
        })
        .cloned()
        .collect();
    n as i64 - min_hitting_set(&minimal, n) as i64
}

/// Size of a smallest set of variables meeting every support.
pub fn min_hitting_set(sets: &[Vec<usize>], n: usize) -> usize {
    let mut best = n;
    let mut chosen = vec![false; n];
    search(sets, &mut chosen, 0, &mut best);
    best
}

fn search(sets: &[Vec<usize>], chosen: &mut Vec<bool>, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    let open: Vec<&Vec<usize>> = sets
        .iter()
        .filter(|s| !s.iter().any(|&v| chosen[v]))
        .collect();
    if open.is_empty() {
        *best = count;
        return;
    }
    // Greedy packing of pairwise disjoint open sets is a lower bound.
    let mut used = vec![false; chosen.len()];
    let mut disjoint = 0;
    for s in &open {
        if s.iter().all(|&v| !used[v]) {
            disjoint += 1;
            for &v in s.iter() {
                used[v] = true;
            }
        }
    }
    if count + disjoint >= *best {
        return;
    }
    let pick = open.iter().min_by_key(|s| s.len()).unwrap();
    for &v in pick.iter() {
        chosen[v] = true;
        search(sets, chosen, count + 1, best);
        chosen[v] = false;
    }
}
