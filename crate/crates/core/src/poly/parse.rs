use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::WeightedRing;

/// Parses a sum of terms such as `3*x^2*y - 1/2*z` over `ring`.
pub fn parse_polynomial<F: Field>(ring: &Arc<WeightedRing>, src: &str) -> Result<Polynomial<F>> {
    let text: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut rest = text.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = F::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = sign.neg();
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if !first {
            return Err(Error::Parse(format!("expected + or - in `{src}`")));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (body, tail) = rest.split_at(end);
        terms.push(parse_term(ring, body, sign)?);
        rest = tail;
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term<F: Field>(
    ring: &Arc<WeightedRing>,
    body: &str,
    sign: F,
) -> Result<(crate::poly::Monomial, F)> {
    if body.is_empty() {
        return Err(Error::Parse("dangling sign".into()));
    }
    let mut coeff = sign;
    let mut exps = vec![0u16; ring.nvars()];
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{body}`")));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            coeff = coeff.mul(&F::parse(factor)?);
            continue;
        }
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => (
                n,
                p.parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        let v = ring
            .var_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        exps[v] += power;
    }
    Ok((ring.monomial(&exps), coeff))
}
