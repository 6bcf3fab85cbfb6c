//! Weighted Hilbert series numerators and graded dimensions of
//! finite-dimensional subquotients.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::module::{module_basis, FreeModule, Vector};
use crate::poly::Monomial;

/// Finitely supported map degree -> dimension, zero values omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub entries: BTreeMap<i64, usize>,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        let mut g = Self::new();
        for &(d, n) in pairs {
            g.add(d, n);
        }
        g
    }

    pub fn add(&mut self, degree: i64, dim: usize) {
        if dim > 0 {
            *self.entries.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: i64) -> usize {
        self.entries.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn positive(&self) -> usize {
        self.entries.range(1..).map(|(_, n)| n).sum()
    }

    pub fn negative(&self) -> usize {
        self.entries.range(..0).map(|(_, n)| n).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Laurent polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly(pub BTreeMap<i64, i128>);

impl LaurentPoly {
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(d: i64, c: i128) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(d, c);
        }
        LaurentPoly(m)
    }

    pub fn coeff(&self, d: i64) -> i128 {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, d: i64, c: i128) {
        let e = self.0.entry(d).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&d);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &c) in &other.0 {
            out.add_term(d, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &c) in &other.0 {
            out.add_term(d, -c);
        }
        out
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly(self.0.iter().map(|(&d, &c)| (d + by, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (&a, &x) in &self.0 {
            for (&b, &y) in &other.0 {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Multiplies by `1 - t^w`.
    pub fn times_one_minus(&self, w: i64) -> Self {
        self.sub(&self.shift(w))
    }

    /// Exact division by `1 - t^w`, `None` if it leaves a remainder.
    pub fn div_one_minus(&self, w: i64) -> Option<Self> {
        let Some((&lo, _)) = self.0.iter().next() else {
            return Some(Self::default());
        };
        let hi = *self.0.keys().next_back().unwrap();
        let mut q = LaurentPoly::default();
        let mut partial: BTreeMap<i64, i128> = BTreeMap::new();
        for d in lo..=hi {
            let prev = partial.get(&(d - w)).copied().unwrap_or(0);
            let v = self.coeff(d) + prev;
            partial.insert(d, v);
            if d <= hi - w {
                q.add_term(d, v);
            } else if v != 0 {
                return None;
            }
        }
        Some(q)
    }
}

/// Numerator `K` of the Hilbert series `K / Π(1 - t^{w_i})` of
/// `k[x]/(gens)` for a monomial ideal with variable weights `weights`.
pub fn hilbert_numerator(gens: &[Vec<u16>], weights: &[u32]) -> LaurentPoly {
    let mut gens: Vec<Vec<u16>> = gens.to_vec();
    minimalize(&mut gens);
    numerator_rec(gens, weights)
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(gens: &mut Vec<Vec<u16>>) {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::new();
    for g in gens.drain(..) {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    *gens = out;
}

fn degree(g: &[u16], weights: &[u32]) -> i64 {
    g.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum()
}

fn numerator_rec(gens: Vec<Vec<u16>>, weights: &[u32]) -> LaurentPoly {
    if gens.is_empty() {
        return LaurentPoly::one();
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return LaurentPoly::default();
    }
    let n = weights.len();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for v in 0..n {
            if g[v] > 0 {
                counts[v] += 1;
            }
        }
    }
    let (v, &most) = counts.iter().enumerate().max_by_key(|(v, &c)| (c, std::cmp::Reverse(*v))).unwrap();
    if most <= 1 {
        // Pairwise coprime generators.
        let mut k = LaurentPoly::one();
        for g in &gens {
            k = k.times_one_minus(degree(g, weights));
        }
        return k;
    }
    let e = gens.iter().filter(|g| g[v] > 0).map(|g| g[v]).min().unwrap();
    let mut pivot = vec![0u16; n];
    pivot[v] = e;
    // K(J) = K(J + p) + t^deg(p) K(J : p)
    let mut plus: Vec<Vec<u16>> = gens.clone();
    plus.push(pivot.clone());
    minimalize(&mut plus);
    let mut colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[v] = h[v].saturating_sub(e);
            h
        })
        .collect();
    minimalize(&mut colon);
    numerator_rec(plus, weights).add(&numerator_rec(colon, weights).shift(degree(&pivot, weights)))
}

/// Hilbert series numerator of `module / submodule` where `leads[c]`
/// holds the leading monomials of the submodule in component `c`.
pub fn module_numerator(shifts: &[i64], leads: &[Vec<Vec<u16>>], weights: &[u32]) -> LaurentPoly {
    let mut k = LaurentPoly::default();
    for (c, s) in shifts.iter().enumerate() {
        k = k.add(&hilbert_numerator(&leads[c], weights).shift(*s));
    }
    k
}

/// Expands `K / Π(1 - t^{w_i})`, failing when it is not a polynomial.
pub fn finite_series(k: &LaurentPoly, weights: &[u32]) -> Result<LaurentPoly> {
    let mut q = k.clone();
    for &w in weights {
        q = q.div_one_minus(w as i64).ok_or(Error::InfiniteDimensional)?;
    }
    Ok(q)
}

/// A subquotient `numerator / denominator` of a graded free module.
#[derive(Clone, Debug)]
pub struct Subquotient<F: Field> {
    pub module: FreeModule,
    pub numerator: Vec<Vector<F>>,
    pub denominator: Vec<Vector<F>>,
}

fn leading_data<F: Field>(module: &FreeModule, gens: &[Vector<F>]) -> Vec<Vec<Vec<u16>>> {
    let (enc, basis) = module_basis(module, gens);
    let n = module.ring.nvars();
    let mut leads = vec![Vec::new(); module.rank()];
    for b in &basis {
        let c = enc.component_of(b).unwrap();
        let m: &Monomial = b.lead_monomial().unwrap();
        leads[c].push(m.exps()[..n].to_vec());
    }
    leads
}

/// Graded dimensions of a finite-dimensional subquotient.
pub fn graded_hilbert_function<F: Field>(sq: &Subquotient<F>) -> Result<GradedDims> {
    let weights = sq.module.ring.weights().to_vec();
    let mut both = sq.numerator.clone();
    both.extend(sq.denominator.iter().cloned());
    let k_den = module_numerator(&sq.module.shifts, &leading_data(&sq.module, &sq.denominator), &weights);
    let k_num = module_numerator(&sq.module.shifts, &leading_data(&sq.module, &both), &weights);
    let series = finite_series(&k_den.sub(&k_num), &weights)?;
    let mut out = GradedDims::new();
    for (&d, &c) in &series.0 {
        assert!(c >= 0, "negative Hilbert function value");
        out.add(d, c as usize);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerator_of_a_point() {
        // k[x,y]/(x,y): K = (1-t^2)(1-t^3).
        let k = hilbert_numerator(&[vec![1, 0], vec![0, 1]], &[2, 3]);
        let series = finite_series(&k, &[2, 3]).unwrap();
        assert_eq!(series, LaurentPoly::one());
    }

    #[test]
    fn infinite_quotient_detected() {
        let k = hilbert_numerator(&[vec![1, 0]], &[1, 1]);
        assert!(finite_series(&k, &[1, 1]).is_err());
    }

    #[test]
    fn pivot_recursion_matches_enumeration() {
        // (x^2, xy, y^3) in unit weights: standard monomials 1, x, y, y^2.
        let k = hilbert_numerator(&[vec![2, 0], vec![1, 1], vec![0, 3]], &[1, 1]);
        let s = finite_series(&k, &[1, 1]).unwrap();
        assert_eq!(s.coeff(0), 1);
        assert_eq!(s.coeff(1), 2);
        assert_eq!(s.coeff(2), 1);
        assert_eq!(s.0.len(), 3);
    }
}
