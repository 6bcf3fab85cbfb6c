//! Numerical semigroups: construction, gaps, Apéry sets, type, and the
//! genus-by-genus enumeration along the semigroup tree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest genus accepted by [`enumerate_by_genus`].
pub const GENUS_CEILING: usize = 25;

/// A cofinite additive submonoid of the nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// Semigroup generated by `raw`, reduced to its minimal generating set.
    pub fn from_generators(raw: &[u64]) -> Result<Self> {
        let nonzero: Vec<u64> = raw.iter().copied().filter(|&g| g > 0).collect();
        if nonzero.is_empty() {
            return Err(Error::Empty);
        }
        let g = nonzero.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NotNumerical(g));
        }
        let m = *nonzero.iter().min().unwrap() as usize;
        // Sieve until `m` consecutive members appear; everything after is in S.
        let mut member = vec![true];
        let mut run = 1usize;
        while run < m {
            let n = member.len();
            let is_member = nonzero
                .iter()
                .any(|&g| g as usize <= n && member[n - g as usize]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
        }
        let gaps = member
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i as u64)
            .collect();
        Ok(Self::from_gap_list(gaps))
    }

    /// Semigroup with the given (sorted, closed-complement) gap list.
    fn from_gap_list(gaps: Vec<u64>) -> Self {
        let mut s = NumericalSemigroup {
            generators: Vec::new(),
            gaps,
        };
        let m = s.multiplicity_from_gaps();
        let limit = s.conductor() + m;
        let mut gens = Vec::new();
        for n in 1..=limit {
            if !s.contains(n) {
                continue;
            }
            let decomposable = (1..n).any(|a| s.contains(a) && s.contains(n - a));
            if !decomposable {
                gens.push(n);
            }
        }
        s.generators = gens;
        s
    }

    fn multiplicity_from_gaps(&self) -> u64 {
        (1..).find(|&n| self.contains(n)).unwrap()
    }

    /// The full semigroup of nonnegative integers.
    pub fn naturals() -> Self {
        Self::from_gap_list(Vec::new())
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest gap, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&f| f as i64)
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius() + 1) as u64
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.gaps.last() {
            Some(&f) if n <= f => self.gaps.binary_search(&n).is_err(),
            _ => true,
        }
    }

    /// Signed membership test; negative integers are never members.
    pub fn contains_signed(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u64)
    }

    /// Elements of the semigroup in `[0, bound]`.
    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }

    /// Least element in each residue class modulo `n`.
    pub fn apery_set(&self, n: u64) -> Result<AperyData> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotMember(n));
        }
        let mut reps = vec![None; n as usize];
        let mut found = 0;
        let mut s = 0u64;
        while found < n {
            if self.contains(s) {
                let slot = &mut reps[(s % n) as usize];
                if slot.is_none() {
                    *slot = Some(s);
                    found += 1;
                }
            }
            s += 1;
        }
        Ok(AperyData {
            modulus: n,
            representatives: reps.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// Gaps `l` with `l + n` in the semigroup for every nonzero element `n`.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        let found: Vec<u64> = self
            .gaps
            .iter()
            .copied()
            .filter(|&l| self.generators.iter().all(|&g| self.contains(l + g)))
            .collect();
        debug_assert_eq!(found, self.pseudo_frobenius_by_definition());
        found
    }

    /// Literal definition: test every nonzero element up to the conductor.
    pub fn pseudo_frobenius_by_definition(&self) -> Vec<u64> {
        let elems: Vec<u64> = (1..=self.conductor())
            .filter(|&n| self.contains(n))
            .collect();
        self.gaps
            .iter()
            .copied()
            .filter(|&l| elems.iter().all(|&n| self.contains(l + n)))
            .collect()
    }

    /// The type λ(N): number of pseudo-Frobenius numbers.
    pub fn type_lambda(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// Children in the semigroup tree: remove a minimal generator larger
    /// than the Frobenius number.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        let f = self.frobenius();
        self.generators
            .iter()
            .copied()
            .filter(|&g| g as i64 > f)
            .map(|g| {
                let mut gaps = self.gaps.clone();
                gaps.push(g);
                Self::from_gap_list(gaps)
            })
            .collect()
    }

    pub fn record(&self) -> SemigroupRecord {
        SemigroupRecord {
            generators: self.generators.clone(),
            gaps: self.gaps.clone(),
            genus: self.genus(),
            frobenius: self.frobenius(),
            r#type: if self.genus() == 0 { 0 } else { self.type_lambda() },
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Parses `"4,6,11,13"` (spaces are also accepted as separators).
    fn from_str(s: &str) -> Result<Self> {
        let gens = parse_generator_list(s)?;
        Self::from_generators(&gens)
    }
}

pub fn parse_generator_list(s: &str) -> Result<Vec<u64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad generator `{t}`")))
        })
        .collect()
}

/// JSON form of a semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub generators: Vec<u64>,
    pub gaps: Vec<u64>,
    pub genus: usize,
    pub frobenius: i64,
    #[serde(rename = "type")]
    pub r#type: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyData {
    pub modulus: u64,
    /// `representatives[r]` is the least element congruent to `r`.
    pub representatives: Vec<u64>,
}

/// All semigroups of genus `0..=g_max`, each block sorted by gap sequence.
pub fn enumerate_by_genus(g_max: usize) -> Result<BTreeMap<usize, Vec<NumericalSemigroup>>> {
    if g_max > GENUS_CEILING {
        return Err(Error::BoundExceeded {
            requested: g_max,
            ceiling: GENUS_CEILING,
        });
    }
    let mut out = BTreeMap::new();
    let mut level = vec![NumericalSemigroup::naturals()];
    for g in 0..=g_max {
        level.sort_by(|a, b| a.gaps.cmp(&b.gaps));
        let next = if g < g_max {
            level.iter().flat_map(|s| s.children()).collect()
        } else {
            Vec::new()
        };
        out.insert(g, std::mem::replace(&mut level, next));
    }
    Ok(out)
}
