//! Schreyer frames and free resolutions.
//!
//! Level 1 of a frame is a reduced Gröbner basis `G` of the ideal; level
//! `L + 1` is the Gröbner basis of the syzygies of level `L` for the
//! induced Schreyer order, obtained from the minimal generators of the
//! colon ideals of leading terms and division with recorded quotients.
//! Betti numbers are read off from the ranks of the constant parts of the
//! differentials; the minimal resolution is obtained by pruning constant
//! entries.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::groebner::ideal::{buchberger, GroebnerBasis};
use crate::linalg;
use crate::poly::{Monomial, Polynomial, WeightedRing};

/// Term `coeff * m * e_comp` of a vector in a free module.
pub type Term<F> = (Monomial, u32, F);

#[derive(Clone, Debug)]
pub struct FrameElement<F: Field> {
    /// The element as a vector in the previous level, descending.
    pub terms: Vec<Term<F>>,
    /// Weighted degree of the corresponding basis vector.
    pub degree: u32,
    total: Monomial,
    pos: u32,
}

impl<F: Field> FrameElement<F> {
    pub fn lead(&self) -> (&Monomial, u32) {
        let (m, c, _) = &self.terms[0];
        (m, *c)
    }
}

#[derive(Clone, Debug)]
pub struct SchreyerFrame<F: Field> {
    pub ring: Arc<WeightedRing>,
    /// `levels[0]` is the rank-one base; `levels[1]` the Gröbner basis.
    pub levels: Vec<Vec<FrameElement<F>>>,
}

fn key_cmp<F: Field>(ring: &WeightedRing, below: &[FrameElement<F>], a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
    let ea = &below[a.1 as usize];
    let eb = &below[b.1 as usize];
    ring.cmp_products(a.0, &ea.total, b.0, &eb.total)
        .then(ea.pos.cmp(&eb.pos))
}

/// `a + c * shift * b`, merged in the key order of `below`.
fn merge<F: Field>(
    ring: &WeightedRing,
    below: &[FrameElement<F>],
    a: &[Term<F>],
    b: &[Term<F>],
    c: &F,
    shift: &Monomial,
) -> Vec<Term<F>> {
    let b: Vec<Term<F>> = b
        .iter()
        .map(|(m, k, x)| (m.mul(shift), *k, x.mul(c)))
        .collect();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ma, ca, xa) = &a[i];
        let (mb, cb, xb) = &b[j];
        match key_cmp(ring, below, (ma, *ca), (mb, *cb)) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let s = xa.add(xb);
                if !s.is_zero() {
                    out.push((ma.clone(), *ca, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().cloned());
    out
}

fn sort_terms<F: Field>(ring: &WeightedRing, below: &[FrameElement<F>], terms: Vec<Term<F>>) -> Vec<Term<F>> {
    let mut acc: HashMap<(Monomial, u32), F> = HashMap::new();
    for (m, c, x) in terms {
        let e = acc.entry((m, c)).or_insert_with(F::zero);
        *e = e.add(&x);
    }
    let mut out: Vec<Term<F>> = acc
        .into_iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|((m, c), x)| (m, c, x))
        .collect();
    out.sort_by(|a, b| key_cmp(ring, below, (&b.0, b.1), (&a.0, a.1)));
    out
}

impl<F: Field> SchreyerFrame<F> {
    /// Frame of the ideal with (monic) Gröbner basis `gb`.
    pub fn new(gb: &GroebnerBasis<F>) -> Self {
        Self::with_depth(gb, usize::MAX)
    }

    /// Frame truncated after level `depth`.
    pub fn with_depth(gb: &GroebnerBasis<F>, depth: usize) -> Self {
        let ring = gb.ring.clone();
        let base = FrameElement {
            terms: Vec::new(),
            degree: 0,
            total: ring.one(),
            pos: 0,
        };
        let mut levels = vec![vec![base]];
        let first: Vec<FrameElement<F>> = gb
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                assert!(g.lead_coeff().map_or(false, |c| c.is_one()), "frame needs a monic basis");
                FrameElement {
                    terms: g.terms().iter().map(|(m, x)| (m.clone(), 0, x.clone())).collect(),
                    degree: g.weighted_degree().unwrap(),
                    total: g.lead_monomial().unwrap().clone(),
                    pos: i as u32,
                }
            })
            .collect();
        if first.is_empty() || gb.is_unit() {
            levels.push(first);
            return SchreyerFrame { ring, levels };
        }
        levels.push(first);
        while levels.len() <= depth {
            let next = Self::next_level(&ring, &levels[levels.len() - 2], &levels[levels.len() - 1]);
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        SchreyerFrame { ring, levels }
    }

    fn next_level(
        ring: &Arc<WeightedRing>,
        below: &[FrameElement<F>],
        cur: &[FrameElement<F>],
    ) -> Vec<FrameElement<F>> {
        let n = ring.nvars();
        let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
        for (j, e) in cur.iter().enumerate() {
            by_comp.entry(e.lead().1).or_default().push(j);
        }
        let mut raw: Vec<(Vec<Term<F>>, u32, Monomial)> = Vec::new();
        for (j, ej) in cur.iter().enumerate() {
            let (nj, cj) = ej.lead();
            let earlier: Vec<usize> = by_comp[&cj].iter().copied().filter(|&i| i < j).collect();
            if earlier.is_empty() {
                continue;
            }
            let colons: Vec<(usize, Monomial)> = earlier
                .iter()
                .map(|&i| {
                    let ni = cur[i].lead().0;
                    let e: Vec<u16> = (0..n).map(|v| ni.exp(v).saturating_sub(nj.exp(v))).collect();
                    (i, ring.monomial(&e))
                })
                .collect();
            let mut minimal: Vec<Monomial> = Vec::new();
            for (k, (_, m)) in colons.iter().enumerate() {
                assert!(!m.is_one(), "frame leading terms are not minimal");
                let redundant = colons.iter().enumerate().any(|(l, (_, o))| {
                    l != k && o.divides(m) && (o != m || l < k)
                });
                if !redundant {
                    minimal.push(m.clone());
                }
            }
            minimal.sort_by(|a, b| ring.cmp(a, b));
            for m in minimal {
                let (i, _) = colons.iter().find(|(_, c)| c.divides(&m)).unwrap();
                let ni = cur[*i].lead().0;
                let t = m.mul(nj).div(ni);
                let lhs: Vec<Term<F>> = ej
                    .terms
                    .iter()
                    .map(|(a, c, x)| (a.mul(&m), *c, x.clone()))
                    .collect();
                let h = merge(ring, below, &lhs, &cur[*i].terms, &F::one().neg(), &t);
                let quotients = reduce_to_zero(ring, below, cur, &by_comp, h);
                let mut terms: Vec<Term<F>> = vec![(m.clone(), j as u32, F::one()), (t, *i as u32, F::one().neg())];
                terms.extend(quotients.into_iter().map(|(q, k, x)| (q, k, x.neg())));
                let degree = ring.weighted_degree(m.exps()) + ej.degree;
                raw.push((terms, degree, m));
            }
        }
        let mut out: Vec<FrameElement<F>> = raw
            .into_iter()
            .map(|(terms, degree, _)| {
                let terms = sort_terms(ring, cur, terms);
                let (m, c, _) = &terms[0];
                let total = m.mul(&cur[*c as usize].total);
                FrameElement {
                    terms,
                    degree,
                    total,
                    pos: 0,
                }
            })
            .collect();
        let mut order: Vec<usize> = (0..out.len()).collect();
        order.sort_by_key(|&k| (cur[out[k].lead().1 as usize].pos, k));
        for (p, &k) in order.iter().enumerate() {
            out[k].pos = p as u32;
        }
        out
    }

    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }

    /// Expresses `v` (a vector in level `level - 1`) through the elements
    /// of `level`; returns quotient terms `(monomial, index, coeff)`.
    /// Panics if `v` is not in their span.
    pub fn lift(&self, level: usize, v: Vec<Term<F>>) -> Vec<Term<F>> {
        let cur = &self.levels[level];
        let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
        for (j, e) in cur.iter().enumerate() {
            by_comp.entry(e.lead().1).or_default().push(j);
        }
        reduce_to_zero(&self.ring, &self.levels[level - 1], cur, &by_comp, v)
    }

    /// Sorts arbitrary terms of a vector in level `level` into key order.
    pub fn vector(&self, level: usize, terms: Vec<Term<F>>) -> Vec<Term<F>> {
        sort_terms(&self.ring, &self.levels[level], terms)
    }

    /// Graded Betti numbers `level -> degree -> count` of the minimal
    /// resolution, from the ranks of the constant parts.
    pub fn betti_table(&self) -> Vec<BTreeMap<u32, usize>> {
        let len = self.levels.len();
        let mut counts: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new(); len];
        for (l, level) in self.levels.iter().enumerate() {
            for e in level {
                *counts[l].entry(e.degree).or_insert(0) += 1;
            }
        }
        // ranks[l][d]: rank of the constant part of the map level l -> l-1.
        let mut ranks: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new(); len + 1];
        for l in 1..len {
            let mut groups: BTreeMap<u32, (HashMap<u32, usize>, Vec<Vec<(usize, F)>>)> = BTreeMap::new();
            for e in &self.levels[l] {
                let consts: Vec<&Term<F>> = e.terms.iter().filter(|(m, _, _)| m.is_one()).collect();
                if consts.is_empty() {
                    continue;
                }
                let (rows, cols) = groups.entry(e.degree).or_default();
                let mut col = Vec::new();
                for (_, c, x) in consts {
                    let next = rows.len();
                    let r = *rows.entry(*c).or_insert(next);
                    col.push((r, x.clone()));
                }
                cols.push(col);
            }
            for (d, (rows, cols)) in groups {
                let dense: Vec<Vec<F>> = cols
                    .iter()
                    .map(|col| {
                        let mut v = vec![F::zero(); rows.len()];
                        for (r, x) in col {
                            v[*r] = x.clone();
                        }
                        v
                    })
                    .collect();
                ranks[l].insert(d, linalg::rank(&dense, rows.len()));
            }
        }
        let mut table = Vec::new();
        for l in 0..len {
            let mut row = BTreeMap::new();
            for (&d, &n) in &counts[l] {
                let r_in = ranks[l].get(&d).copied().unwrap_or(0);
                let r_out = ranks[l + 1].get(&d).copied().unwrap_or(0);
                let b = n - r_in - r_out;
                if b > 0 {
                    row.insert(d, b);
                }
            }
            table.push(row);
        }
        while table.last().map_or(false, |r| r.is_empty()) {
            table.pop();
        }
        table
    }

    /// Total Betti numbers `β_0, β_1, ...` of the minimal resolution.
    pub fn betti(&self) -> Vec<usize> {
        self.betti_table().iter().map(|r| r.values().sum()).collect()
    }

    /// Indices of a subset of the Gröbner basis that minimally generates
    /// the ideal: per degree, drop a maximal set of elements on which the
    /// constant syzygies have full rank, preferring the latest ones.
    pub fn minimal_generator_indices(&self) -> Vec<usize> {
        let gens = &self.levels[1];
        if self.levels.len() < 3 {
            return (0..gens.len()).collect();
        }
        let mut removed = vec![false; gens.len()];
        let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, g) in gens.iter().enumerate() {
            by_degree.entry(g.degree).or_default().push(i);
        }
        for (d, rows) in by_degree {
            let cols: Vec<&FrameElement<F>> = self.levels[2].iter().filter(|e| e.degree == d).collect();
            if cols.is_empty() {
                continue;
            }
            // Row vectors (one per generator) of the constant part.
            let row_vecs: Vec<Vec<F>> = rows
                .iter()
                .rev()
                .map(|&r| {
                    cols.iter()
                        .map(|e| {
                            e.terms
                                .iter()
                                .find(|(m, c, _)| m.is_one() && *c as usize == r)
                                .map(|t| t.2.clone())
                                .unwrap_or_else(F::zero)
                        })
                        .collect()
                })
                .collect();
            let chosen = linalg::independent_subset(&row_vecs, cols.len());
            let rev: Vec<usize> = rows.iter().rev().copied().collect();
            for k in chosen {
                removed[rev[k]] = true;
            }
        }
        (0..gens.len()).filter(|&i| !removed[i]).collect()
    }

    /// The frame as a (generally non-minimal) free resolution.
    pub fn to_resolution(&self) -> FreeResolution<F> {
        let mut matrices = Vec::new();
        for l in 1..self.levels.len() {
            let nrows = self.levels[l - 1].len();
            let cols = self.levels[l]
                .iter()
                .map(|e| {
                    let mut grouped: BTreeMap<usize, Vec<(Monomial, F)>> = BTreeMap::new();
                    for (m, c, x) in &e.terms {
                        grouped.entry(*c as usize).or_default().push((m.clone(), x.clone()));
                    }
                    grouped
                        .into_iter()
                        .map(|(r, t)| (r, Polynomial::from_terms(&self.ring, t)))
                        .collect()
                })
                .collect();
            matrices.push(SparseMatrix { nrows, cols });
        }
        FreeResolution {
            ring: self.ring.clone(),
            matrices,
            shifts: self
                .levels
                .iter()
                .map(|l| l.iter().map(|e| e.degree).collect())
                .collect(),
            minimal: false,
        }
    }
}

fn reduce_to_zero<F: Field>(
    ring: &WeightedRing,
    below: &[FrameElement<F>],
    cur: &[FrameElement<F>],
    by_comp: &HashMap<u32, Vec<usize>>,
    mut h: Vec<Term<F>>,
) -> Vec<Term<F>> {
    let mut quotients = Vec::new();
    while let Some((m, c, x)) = h.first().cloned() {
        let k = by_comp
            .get(&c)
            .and_then(|list| list.iter().copied().find(|&k| cur[k].lead().0.divides(&m)))
            .expect("vector does not reduce to zero against the frame level");
        let t = m.div(cur[k].lead().0);
        h = merge(ring, below, &h, &cur[k].terms, &x.neg(), &t);
        quotients.push((t, k as u32, x));
    }
    quotients
}

/// Matrix with sparse polynomial columns.
#[derive(Clone, Debug)]
pub struct SparseMatrix<F: Field> {
    pub nrows: usize,
    pub cols: Vec<BTreeMap<usize, Polynomial<F>>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&Polynomial<F>> {
        self.cols[c].get(&r)
    }

    /// `self * other`; both must live in the same ring.
    pub fn mul(&self, other: &SparseMatrix<F>) -> SparseMatrix<F> {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut out: BTreeMap<usize, Polynomial<F>> = BTreeMap::new();
                for (k, b) in col {
                    for (r, a) in &self.cols[*k] {
                        let p = a.mul(b);
                        let e = out.remove(r);
                        let s = match e {
                            Some(old) => old.add(&p),
                            None => p,
                        };
                        if !s.is_zero() {
                            out.insert(*r, s);
                        }
                    }
                }
                out
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.values().all(|p| p.is_zero()))
    }

    pub fn has_unit_entry(&self) -> bool {
        self.cols
            .iter()
            .any(|c| c.values().any(|p| p.is_constant() && !p.is_zero()))
    }
}

/// `0 <- S <- F_1 <- F_2 <- ...` with `matrices[i]` the map `F_{i+1} -> F_i`.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    pub ring: Arc<WeightedRing>,
    pub matrices: Vec<SparseMatrix<F>>,
    /// `shifts[i]` lists the degrees of the basis of `F_i`.
    pub shifts: Vec<Vec<u32>>,
    pub minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionSummary {
    pub betti: Vec<usize>,
    pub shifts: Vec<Vec<u32>>,
}

impl<F: Field> FreeResolution<F> {
    pub fn betti(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    pub fn summary(&self) -> ResolutionSummary {
        ResolutionSummary {
            betti: self.betti(),
            shifts: self.shifts.clone(),
        }
    }

    /// Prunes constant entries until none remain. `keep_first` lists basis
    /// elements of `F_1` to avoid removing when there is a choice.
    pub fn minimize(mut self, keep_first: &[usize]) -> Self {
        let levels = self.shifts.len();
        let mut alive: Vec<Vec<bool>> = self.shifts.iter().map(|s| vec![true; s.len()]).collect();
        for l in 1..levels {
            loop {
                let m = &self.matrices[l - 1];
                let mut pivot: Option<(usize, usize, bool)> = None;
                for (b, col) in m.cols.iter().enumerate() {
                    if !alive[l][b] {
                        continue;
                    }
                    for (&a, p) in col {
                        if p.is_constant() && !p.is_zero() && alive[l - 1][a] {
                            let avoided = l == 2 && keep_first.contains(&a);
                            let better = match pivot {
                                None => true,
                                Some((_, _, prev_avoided)) => prev_avoided && !avoided,
                            };
                            if better {
                                pivot = Some((a, b, avoided));
                            }
                        }
                    }
                    if matches!(pivot, Some((_, _, false))) {
                        break;
                    }
                }
                let Some((a, b, _)) = pivot else { break };
                self.prune(l, a, b);
                alive[l - 1][a] = false;
                alive[l][b] = false;
            }
        }
        // Compact indices.
        let remap: Vec<Vec<Option<usize>>> = alive
            .iter()
            .map(|flags| {
                let mut next = 0;
                flags
                    .iter()
                    .map(|&f| {
                        f.then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let mut matrices = Vec::new();
        for l in 1..levels {
            let m = &self.matrices[l - 1];
            let cols: Vec<BTreeMap<usize, Polynomial<F>>> = m
                .cols
                .iter()
                .enumerate()
                .filter(|(b, _)| alive[l][*b])
                .map(|(_, col)| {
                    col.iter()
                        .filter_map(|(a, p)| remap[l - 1][*a].map(|r| (r, p.clone())))
                        .collect()
                })
                .collect();
            if cols.is_empty() {
                break;
            }
            matrices.push(SparseMatrix {
                nrows: remap[l - 1].iter().flatten().count(),
                cols,
            });
        }
        let shifts: Vec<Vec<u32>> = self
            .shifts
            .iter()
            .zip(&alive)
            .map(|(s, f)| s.iter().zip(f).filter(|(_, &a)| a).map(|(d, _)| *d).collect())
            .take(matrices.len() + 1)
            .collect();
        FreeResolution {
            ring: self.ring,
            matrices,
            shifts,
            minimal: true,
        }
    }

    /// Cancels the unit entry at row `a`, column `b` of the map `F_l -> F_{l-1}`.
    fn prune(&mut self, l: usize, a: usize, b: usize) {
        let m = &mut self.matrices[l - 1];
        let u = m.cols[b][&a].lead_coeff().unwrap().clone();
        let pivot_col = m.cols[b].clone();
        for (bp, col) in m.cols.iter_mut().enumerate() {
            if bp == b {
                continue;
            }
            let Some(p) = col.get(&a).cloned() else { continue };
            let factor = p.scale(&u.inv());
            for (r, q) in &pivot_col {
                let delta = q.mul(&factor);
                let e = col.remove(r);
                let s = match e {
                    Some(old) => old.sub(&delta),
                    None => delta.neg(),
                };
                if !s.is_zero() {
                    col.insert(*r, s);
                }
            }
            debug_assert!(!col.contains_key(&a));
        }
        m.cols[b].clear();
        if l < self.matrices.len() {
            for col in self.matrices[l].cols.iter_mut() {
                col.remove(&b);
            }
        }
        if l >= 2 {
            self.matrices[l - 2].cols[a].clear();
        }
    }
}

/// Non-minimal resolution from the Schreyer frame of `gens`.
pub fn free_resolution<F: Field>(gens: &[Polynomial<F>]) -> FreeResolution<F> {
    SchreyerFrame::new(&buchberger(gens)).to_resolution()
}

/// Minimal graded free resolution of `S/(gens)`.
pub fn free_resolution_minimal<F: Field>(gens: &[Polynomial<F>]) -> FreeResolution<F> {
    let frame = SchreyerFrame::new(&buchberger(gens));
    let keep = frame.minimal_generator_indices();
    let res = frame.to_resolution().minimize(&keep);
    debug_assert_eq!(res.betti(), frame.betti());
    res
}
