use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::ring::{Monomial, WeightedRing};

/// Sparse polynomial; terms are kept strictly descending in the ring order
/// with no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<WeightedRing>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<WeightedRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<WeightedRing>, c: F) -> Self {
        Self::term(ring, ring.one(), c)
    }

    pub fn one(ring: &Arc<WeightedRing>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn var(ring: &Arc<WeightedRing>, v: usize) -> Self {
        Self::term(ring, ring.variable(v), F::one())
    }

    pub fn term(ring: &Arc<WeightedRing>, m: Monomial, c: F) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<WeightedRing>, exps: &[u16]) -> Self {
        Self::term(ring, ring.monomial(exps), F::one())
    }

    /// Builds from arbitrary terms, combining duplicates and sorting.
    pub fn from_terms(ring: &Arc<WeightedRing>, terms: Vec<(Monomial, F)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<WeightedRing>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<WeightedRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// Sum of all coefficients (value at the all-ones point).
    pub fn coeff_sum(&self) -> F {
        self.terms.iter().fold(F::zero(), |acc, (_, c)| acc.add(c))
    }

    /// Maximum weighted degree over the terms, `None` for zero.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.weighted_degree(m.exps()))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| self.ring.weighted_degree(m.exps()));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Terms of minimal weighted degree.
    pub fn lowest_degree_part(&self) -> Self {
        let Some(d) = self
            .terms
            .iter()
            .map(|(m, _)| self.ring.weighted_degree(m.exps()))
            .min()
        else {
            return self.clone();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ring.weighted_degree(m.exps()) == d)
            .cloned()
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Self::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect();
        Self::from_sorted(&self.ring, terms)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), a.mul(c)))
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one(), None)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one().neg(), None)
    }

    /// `self + c * m * other` in one merge pass.
    pub fn add_scaled(&self, other: &Self, c: &F, m: Option<&Monomial>) -> Self {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let scaled = |t: &Monomial| match m {
            Some(m) => t.mul(m),
            None => t.clone(),
        };
        let one = ring.one();
        let shift = m.unwrap_or(&one);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ca) = &self.terms[i];
            let (b, cb) = &other.terms[j];
            match ring.cmp_products(a, &one, b, shift) {
                Ordering::Greater => {
                    out.push((a.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((scaled(b), cb.mul(c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca.add(&cb.mul(c));
                    if !s.is_zero() {
                        out.push((a.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(b, cb)| (scaled(b), cb.mul(c))));
        out.retain(|(_, c)| !c.is_zero());
        Self::from_sorted(ring, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() <= 4 {
            let mut acc = Self::zero(&self.ring);
            for (m, c) in &small.terms {
                acc = acc.add_scaled(big, c, Some(m));
            }
            return acc;
        }
        let mut terms = Vec::with_capacity(small.len() * big.len());
        for (a, ca) in &small.terms {
            for (b, cb) in &big.terms {
                terms.push((a.mul(b), ca.mul(cb)));
            }
        }
        Self::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Maps variable `v` of this ring to `images[v]` (all in one target ring).
    pub fn substitute(&self, images: &[Polynomial<F>], target: &Arc<WeightedRing>) -> Polynomial<F> {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut power = |v: usize, k: u16| -> Polynomial<F> {
            while powers[v].len() <= k as usize {
                let next = powers[v].last().unwrap().mul(&images[v]);
                powers[v].push(next);
            }
            powers[v][k as usize].clone()
        };
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut p = Polynomial::constant(target, c.clone());
            for v in m.support().collect::<Vec<_>>() {
                p = p.mul(&power(v, m.exp(v)));
            }
            terms.extend(p.terms);
        }
        Polynomial::from_terms(target, terms)
    }

    /// Re-expresses the polynomial in `target`, sending variable `v` to
    /// variable `map[v]`.
    pub fn embed(&self, target: &Arc<WeightedRing>, map: &[usize]) -> Polynomial<F> {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (v, &a) in m.exps().iter().enumerate() {
                    e[map[v]] += a;
                }
                (target.monomial(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same terms viewed in a ring with identical variables and another order.
    pub fn reorder(&self, target: &Arc<WeightedRing>) -> Polynomial<F> {
        let id: Vec<usize> = (0..self.ring.nvars()).collect();
        self.embed(target, &id)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Variables occurring in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for v in m.support() {
                seen[v] = true;
            }
        }
        (0..seen.len()).filter(|&v| seen[v]).collect()
    }

    /// Splits by the exponents of the variables in `keep`:
    /// `self = Σ key · coefficient`, coefficients free of the `keep` variables.
    pub fn collect_by(&self, keep: &[usize]) -> Vec<(Monomial, Polynomial<F>)> {
        let n = self.ring.nvars();
        let mut groups: Vec<(Monomial, Vec<(Monomial, F)>)> = Vec::new();
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        for (m, c) in &self.terms {
            let mut k = vec![0u16; n];
            let mut rest = m.exps().to_vec();
            for &v in keep {
                k[v] = rest[v];
                rest[v] = 0;
            }
            let key = self.ring.monomial(&k);
            let slot = *index.entry(key.clone()).or_insert_with(|| {
                groups.push((key, Vec::new()));
                groups.len() - 1
            });
            groups[slot].1.push((self.ring.monomial(&rest), c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, t)| (k, Polynomial::from_terms(&self.ring, t)))
            .collect()
    }

    /// Division with remainder by an ordered list: returns `(remainder,
    /// quotients)` with `self = Σ q_i g_i + remainder` and no remainder term
    /// divisible by a leading monomial of the list.
    pub fn reduce_by_set(&self, g: &[Polynomial<F>]) -> (Polynomial<F>, Vec<Polynomial<F>>) {
        let (r, q) = reduce_impl(self, g, true, true);
        (r, q.unwrap())
    }

    /// Remainder only (full reduction).
    pub fn normal_form(&self, g: &[Polynomial<F>]) -> Polynomial<F> {
        reduce_impl(self, g, true, false).0
    }

    /// Reduces only while the leading term is divisible.
    pub fn top_reduce(&self, g: &[Polynomial<F>]) -> Polynomial<F> {
        reduce_impl(self, g, false, false).0
    }

    /// The lcm-cancellation combination of two nonzero polynomials.
    pub fn s_polynomial(&self, other: &Self) -> Result<Self> {
        let (Some(a), Some(b)) = (self.lead_monomial(), other.lead_monomial()) else {
            return Err(Error::ZeroInput);
        };
        let l = a.lcm(b, &self.ring);
        let ca = self.lead_coeff().unwrap();
        let cb = other.lead_coeff().unwrap();
        let left = self.mul_term(&l.div(a), &cb.clone());
        Ok(left.add_scaled(other, &ca.neg(), Some(&l.div(b))))
    }

    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&self.ring.format_monomial(m));
            }
        }
        s
    }
}

fn reduce_impl<F: Field>(
    p: &Polynomial<F>,
    g: &[Polynomial<F>],
    full: bool,
    track: bool,
) -> (Polynomial<F>, Option<Vec<Polynomial<F>>>) {
    let ring = p.ring.clone();
    let mut quotients: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); if track { g.len() } else { 0 }];
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    let mut cur = p.clone();
    let leads: Vec<Option<(&Monomial, F)>> = g
        .iter()
        .map(|q| q.lead_monomial().map(|m| (m, q.lead_coeff().unwrap().inv())))
        .collect();
    // Terms of `cur` before `start` are already known to be irreducible.
    let mut start = 0;
    while start < cur.terms.len() {
        let (m, c) = &cur.terms[start];
        let hit = leads
            .iter()
            .position(|l| matches!(l, Some((lm, _)) if lm.divides(m)));
        match hit {
            Some(i) => {
                let (lm, inv) = leads[i].as_ref().unwrap();
                let t = m.div(lm);
                let k = c.mul(inv);
                rem.extend(cur.terms.drain(..start));
                start = 0;
                cur = cur.add_scaled(&g[i], &k.neg(), Some(&t));
                if track {
                    quotients[i].push((t, k));
                }
            }
            None if full => start += 1,
            None => break,
        }
    }
    rem.extend(cur.terms);
    let remainder = Polynomial::from_sorted(&ring, rem);
    let q = track.then(|| {
        quotients
            .into_iter()
            .map(|t| Polynomial::from_terms(&ring, t))
            .collect()
    });
    (remainder, q)
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}
