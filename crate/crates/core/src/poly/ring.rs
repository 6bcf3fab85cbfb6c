use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 8]>;

/// Which degree function the grevlex comparison starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum OrderKind {
    /// Weighted degree with the ring weights, then reverse lexicographic.
    WeightedGrevlex,
    /// Total degree with all weights 1, then reverse lexicographic.
    UnitGrevlex,
}

/// Monomial order: an optional block whose degree is compared first,
/// then the degree of `kind`, then reverse lexicographic along `permutation`
/// (the last entry of the permutation is the "last variable").
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub permutation: Vec<usize>,
    /// Variables whose degree (of `kind`) is compared before anything else.
    pub priority_block: Option<Vec<usize>>,
}

/// Variables with positive integer weights and a monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedRing {
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
    /// `rank[v]` is the position of variable `v` in the permutation.
    rank: Vec<usize>,
    block_mask: Vec<bool>,
}

impl WeightedRing {
    pub fn new(names: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> Result<Arc<Self>> {
        let n = names.len();
        if weights.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: weights.len(),
            });
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Parse("variable weights must be positive".into()));
        }
        let mut rank = vec![usize::MAX; n];
        if order.permutation.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: order.permutation.len(),
            });
        }
        for (pos, &v) in order.permutation.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::Parse("order permutation is not a bijection".into()));
            }
            rank[v] = pos;
        }
        let mut block_mask = vec![false; n];
        if let Some(block) = &order.priority_block {
            for &v in block {
                if v >= n {
                    return Err(Error::Parse("priority block names a missing variable".into()));
                }
                block_mask[v] = true;
            }
        }
        Ok(Arc::new(WeightedRing {
            names,
            weights,
            order,
            rank,
            block_mask,
        }))
    }

    /// Weighted grevlex with the identity permutation.
    pub fn weighted(names: &[&str], weights: &[u32]) -> Arc<Self> {
        Self::with_kind(names, weights, OrderKind::WeightedGrevlex)
    }

    pub fn with_kind(names: &[&str], weights: &[u32], kind: OrderKind) -> Arc<Self> {
        let order = MonomialOrder {
            kind,
            permutation: (0..names.len()).collect(),
            priority_block: None,
        };
        Self::new(
            names.iter().map(|s| s.to_string()).collect(),
            weights.to_vec(),
            order,
        )
        .expect("well-formed ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and weights with a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(self.names.clone(), self.weights.clone(), order)
    }

    fn order_weight(&self, v: usize) -> u32 {
        match self.order.kind {
            OrderKind::WeightedGrevlex => self.weights[v],
            OrderKind::UnitGrevlex => 1,
        }
    }

    /// Degree used by the order (weighted or unit).
    pub fn order_degree(&self, e: &[u16]) -> u32 {
        e.iter()
            .enumerate()
            .map(|(v, &a)| a as u32 * self.order_weight(v))
            .sum()
    }

    pub fn weighted_degree(&self, e: &[u16]) -> u32 {
        e.iter()
            .zip(&self.weights)
            .map(|(&a, &w)| a as u32 * w)
            .sum()
    }

    fn block_degree(&self, e: &[u16]) -> u32 {
        e.iter()
            .enumerate()
            .filter(|(v, _)| self.block_mask[*v])
            .map(|(v, &a)| a as u32 * self.order_weight(v))
            .sum()
    }

    /// Builds a monomial, caching its order degree.
    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        debug_assert_eq!(exps.len(), self.nvars());
        Monomial {
            deg: self.order_degree(exps),
            exps: Exponents::from_slice(exps),
        }
    }

    pub fn one(&self) -> Monomial {
        self.monomial(&vec![0; self.nvars()])
    }

    pub fn variable(&self, v: usize) -> Monomial {
        let mut e = vec![0; self.nvars()];
        e[v] = 1;
        self.monomial(&e)
    }

    /// Compares two exponent vectors; errors on arity mismatch.
    pub fn compare_monomials(&self, a: &[u16], b: &[u16]) -> Result<Ordering> {
        for e in [a, b] {
            if e.len() != self.nvars() {
                return Err(Error::ArityMismatch {
                    expected: self.nvars(),
                    got: e.len(),
                });
            }
        }
        Ok(self.cmp(&self.monomial(a), &self.monomial(b)))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.order.priority_block.is_some() {
            let c = self.block_degree(&a.exps).cmp(&self.block_degree(&b.exps));
            if c != Ordering::Equal {
                return c;
            }
        }
        match a.deg.cmp(&b.deg) {
            Ordering::Equal => self.revlex(&a.exps, &b.exps),
            c => c,
        }
    }

    #[inline]
    fn revlex(&self, a: &[u16], b: &[u16]) -> Ordering {
        for &v in self.order.permutation.iter().rev() {
            if a[v] != b[v] {
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    }

    /// Compares `m1*t1` with `m2*t2` without allocating the products.
    pub fn cmp_products(&self, m1: &Monomial, t1: &Monomial, m2: &Monomial, t2: &Monomial) -> Ordering {
        if self.order.priority_block.is_some() {
            let c = (self.block_degree(&m1.exps) + self.block_degree(&t1.exps))
                .cmp(&(self.block_degree(&m2.exps) + self.block_degree(&t2.exps)));
            if c != Ordering::Equal {
                return c;
            }
        }
        match (m1.deg + t1.deg).cmp(&(m2.deg + t2.deg)) {
            Ordering::Equal => {}
            c => return c,
        }
        for &v in self.order.permutation.iter().rev() {
            let a = m1.exps[v] + t1.exps[v];
            let b = m2.exps[v] + t2.exps[v];
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &a) in m.exps.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(self.names[v].clone()),
                _ => parts.push(format!("{}^{}", self.names[v], a)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for WeightedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self
            .names
            .iter()
            .zip(&self.weights)
            .map(|(n, w)| format!("{n}:{w}"))
            .collect();
        write!(f, "Ring[{}; {:?}]", vars.join(", "), self.order.kind)
    }
}

/// Exponent vector with its cached order degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, v: usize) -> u16 {
        self.exps[v]
    }

    /// The degree the ring order uses (weighted or unit).
    pub fn order_degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&a| a as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg - other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial, ring: &WeightedRing) -> Monomial {
        let e: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        ring.monomial(&e)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(v, _)| v)
    }
}
