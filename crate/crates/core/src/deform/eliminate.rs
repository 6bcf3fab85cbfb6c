use crate::field::Field;
use crate::poly::Polynomial;

use super::{parameter_ring, BaseIdeal, Parameter};

/// Which lowest-degree part to keep after elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowestDegree {
    /// Keep the equations whole.
    Off,
    /// Lowest part for the weights of the deformation variables.
    Weighted,
    /// Lowest part for the total degree (the tangent cone at the origin).
    Total,
}

#[derive(Clone, Debug)]
pub struct Elimination<F: Field> {
    /// Remaining nonzero equations in the remaining variables.
    pub reduced: BaseIdeal<F>,
    /// Eliminated variables, in the order they were removed.
    pub eliminated: Vec<String>,
    /// For each remaining equation, its index in the input.
    pub kept: Vec<usize>,
}

/// Repeatedly solves an equation of the form `c·v + g` (`c` a nonzero
/// constant, `g` free of `v`) for a variable `v` accepted by `allow`, and
/// substitutes `v = −g/c` everywhere.
pub fn eliminate_linear<F: Field>(b: &BaseIdeal<F>, allow: impl Fn(&str) -> bool) -> Elimination<F> {
    eliminate_impl(b, allow, None)
}

/// As [`eliminate_linear`], computing modulo all monomials of total degree
/// above `degree`. Every equation vanishes at the origin, so substitution
/// respects this truncation and the parts of degree at most `degree` of the
/// result are exact; equations whose lowest part lies above `degree` become zero.
pub fn eliminate_linear_truncated<F: Field>(
    b: &BaseIdeal<F>,
    allow: impl Fn(&str) -> bool,
    degree: u32,
) -> Elimination<F> {
    eliminate_impl(b, allow, Some(degree))
}

fn eliminate_impl<F: Field>(b: &BaseIdeal<F>, allow: impl Fn(&str) -> bool, cut: Option<u32>) -> Elimination<F> {
    let ring = b.ring.clone();
    let truncate = |p: Polynomial<F>| -> Polynomial<F> {
        match cut {
            Some(d) if p.terms().iter().any(|(m, _)| m.total_degree() > d) => {
                let terms = p.terms().iter().filter(|(m, _)| m.total_degree() <= d).cloned().collect();
                Polynomial::from_terms(&ring, terms)
            }
            _ => p,
        }
    };
    let n = ring.nvars();
    let mut eqs: Vec<Option<Polynomial<F>>> = b
        .equations
        .iter()
        .map(|e| truncate(e.clone()))
        .map(|e| (!e.is_zero()).then_some(e))
        .collect();
    let mut gone = vec![false; n];
    let mut eliminated = Vec::new();
    loop {
        let mut occurrences = vec![0usize; n];
        for e in eqs.iter().flatten() {
            for v in e.variables() {
                occurrences[v] += 1;
            }
        }
        let mut choice = None;
        for (i, e) in eqs.iter().enumerate() {
            let Some(e) = e else { continue };
            let best = e
                .variables()
                .into_iter()
                .filter(|&v| allow(ring.name(v)) && solvable(e, v))
                .min_by_key(|&v| (occurrences[v], v));
            if let Some(v) = best {
                choice = Some((i, v));
                break;
            }
        }
        let Some((i, v)) = choice else { break };
        let e = eqs[i].take().unwrap();
        let var = ring.variable(v);
        let c = e.coeff(&var);
        let g = e.sub(&Polynomial::term(&ring, var, c.clone()));
        let image = g.scale(&c.inv().neg());
        for slot in eqs.iter_mut() {
            if let Some(p) = slot {
                if p.variables().contains(&v) {
                    let q = truncate(substitute_one(p, v, &image));
                    *slot = (!q.is_zero()).then_some(q);
                }
            }
        }
        gone[v] = true;
        eliminated.push(ring.name(v).to_string());
    }

    let remaining: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
    let parameters: Vec<Parameter> = remaining
        .iter()
        .map(|&v| Parameter {
            name: ring.name(v).to_string(),
            weight: ring.weight(v),
        })
        .collect();
    let target = parameter_ring(&parameters);
    let mut map = vec![0usize; n];
    for (new, &old) in remaining.iter().enumerate() {
        map[old] = new;
    }
    let mut kept = Vec::new();
    let mut equations = Vec::new();
    for (i, e) in eqs.into_iter().enumerate() {
        if let Some(e) = e {
            kept.push(i);
            equations.push(e.embed(&target, &map));
        }
    }
    Elimination {
        reduced: BaseIdeal {
            ring: target,
            equations,
            truncation_order: b.truncation_order,
        },
        eliminated,
        kept,
    }
}

/// Eliminates every linearly occurring variable, optionally passes to the
/// lowest-degree parts, and returns the Krull dimension of the result.
pub fn eliminate_and_dimension<F: Field>(b: &BaseIdeal<F>, lowest: LowestDegree) -> (Elimination<F>, i64) {
    let mut elim = eliminate_linear(b, |_| true);
    elim.reduced = lowest_parts(&elim.reduced, lowest);
    let dim = elim.reduced.dimension();
    (elim, dim)
}

pub fn lowest_parts<F: Field>(b: &BaseIdeal<F>, lowest: LowestDegree) -> BaseIdeal<F> {
    let equations = b
        .equations
        .iter()
        .map(|e| match lowest {
            LowestDegree::Off => e.clone(),
            LowestDegree::Weighted => e.lowest_degree_part(),
            LowestDegree::Total => {
                let low = e.terms().iter().map(|(m, _)| m.total_degree()).min().unwrap_or(0);
                let terms = e.terms().iter().filter(|(m, _)| m.total_degree() == low).cloned().collect();
                Polynomial::from_terms(&b.ring, terms)
            }
        })
        .collect();
    BaseIdeal {
        ring: b.ring.clone(),
        equations,
        truncation_order: b.truncation_order,
    }
}

/// True when `v` occurs in `e` only in a single term `c·v`.
fn solvable<F: Field>(e: &Polynomial<F>, v: usize) -> bool {
    let mut linear = false;
    for (m, _) in e.terms() {
        if m.exp(v) == 0 {
            continue;
        }
        if m.exp(v) == 1 && m.total_degree() == 1 && !linear {
            linear = true;
        } else {
            return false;
        }
    }
    linear
}

/// Replaces the variable `v` by `image` (a polynomial free of `v`).
pub(crate) fn substitute_one<F: Field>(p: &Polynomial<F>, v: usize, image: &Polynomial<F>) -> Polynomial<F> {
    let ring = p.ring();
    let mut powers = vec![Polynomial::one(ring)];
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        let k = m.exp(v) as usize;
        while powers.len() <= k {
            let next = powers.last().unwrap().mul(image);
            powers.push(next);
        }
        let mut e = m.exps().to_vec();
        e[v] = 0;
        let rest = ring.monomial(&e);
        out.extend(powers[k].mul_term(&rest, c).into_terms());
    }
    Polynomial::from_terms(ring, out)
}
