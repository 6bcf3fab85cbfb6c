use std::collections::{BTreeSet, HashSet};
use std::ops::Range;
use std::sync::Arc;

use crate::field::Field;
use crate::poly::{Polynomial, WeightedRing};

/// A Gröbner basis with respect to the order of its ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub ring: Arc<WeightedRing>,
    pub generators: Vec<Polynomial<F>>,
    pub reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        p.normal_form(&self.generators)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Options for [`buchberger_with`].
#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Variables that encode free-module components. Every input term
    /// must contain exactly one of them; pairs are only formed between
    /// elements with the same leading component.
    pub components: Option<Range<usize>>,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    buchberger_with(gens, &GbOptions::default())
}

pub fn buchberger_with<F: Field>(gens: &[Polynomial<F>], opts: &GbOptions) -> GroebnerBasis<F> {
    assert!(!gens.is_empty(), "buchberger needs at least one generator");
    let ring = gens[0].ring().clone();
    let component = |p: &Polynomial<F>| -> Option<usize> {
        let r = opts.components.as_ref()?;
        let m = p.lead_monomial()?;
        r.clone().find(|&v| m.exp(v) > 0)
    };

    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut comps: Vec<Option<usize>> = Vec::new();
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut live: HashSet<(usize, usize)> = HashSet::new();

    let add = |p: Polynomial<F>,
                   basis: &mut Vec<Polynomial<F>>,
                   comps: &mut Vec<Option<usize>>,
                   pending: &mut BTreeSet<(u32, usize, usize)>,
                   live: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        let ck = component(&p);
        let lk = p.lead_monomial().unwrap().clone();
        for (i, q) in basis.iter().enumerate() {
            if comps[i] != ck {
                continue;
            }
            let l = lk.lcm(q.lead_monomial().unwrap(), &ring);
            pending.insert((l.order_degree(), k, i));
            live.insert((i, k));
        }
        basis.push(p);
        comps.push(ck);
    };

    let mut inputs: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    inputs.sort_by(|a, b| ring.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    for g in inputs {
        let r = g.top_reduce(&basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return unit_basis(&ring);
        }
        add(r.normal_form(&basis).monic(), &mut basis, &mut comps, &mut pending, &mut live);
    }

    while let Some(&(deg, k, i)) = pending.iter().next() {
        pending.remove(&(deg, k, i));
        live.remove(&(i, k));
        let li = basis[i].lead_monomial().unwrap();
        let lk = basis[k].lead_monomial().unwrap();
        if opts.components.is_none() && li.coprime(lk) {
            continue;
        }
        let l = li.lcm(lk, &ring);
        let chain = (0..basis.len()).any(|j| {
            j != i
                && j != k
                && basis[j].lead_monomial().unwrap().divides(&l)
                && !live.contains(&(i.min(j), i.max(j)))
                && !live.contains(&(k.min(j), k.max(j)))
        });
        if chain {
            continue;
        }
        let s = basis[i].s_polynomial(&basis[k]).expect("nonzero basis elements");
        let r = s.top_reduce(&basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return unit_basis(&ring);
        }
        add(r.normal_form(&basis).monic(), &mut basis, &mut comps, &mut pending, &mut live);
    }

    GroebnerBasis {
        generators: interreduce(&ring, basis),
        ring,
        reduced: true,
    }
}

fn unit_basis<F: Field>(ring: &Arc<WeightedRing>) -> GroebnerBasis<F> {
    GroebnerBasis {
        ring: ring.clone(),
        generators: vec![Polynomial::one(ring)],
        reduced: true,
    }
}

/// Minimalizes and tail-reduces a Gröbner basis; output sorted by
/// ascending leading monomial, every element monic.
pub fn interreduce<F: Field>(ring: &Arc<WeightedRing>, basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut keep: Vec<Polynomial<F>> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lp = p.lead_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            let lq = q.lead_monomial().unwrap();
            j != i && lq.divides(lp) && (lq != lp || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    keep.sort_by(|a, b| ring.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial<F>> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        out.push(keep[i].normal_form(&others).monic());
    }
    out
}

/// Checks that every s-polynomial of `basis` reduces to zero (no criteria).
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = basis[i].s_polynomial(&basis[j]).expect("nonzero");
            if !s.normal_form(basis).is_zero() {
                return false;
            }
        }
    }
    true
}
