//! Unfolding of <4,5,6,7> written as 2×2 minors, with hand normalizations.
//!
//! Coefficients that are polynomials in x give fifteen equations once the
//! constant terms are eliminated; with one variable per x-power the
//! reduced system cuts out a cone of dimension 8.

use std::sync::Arc;

use wsatlas::curve::{curve_ring, MonomialCurve};
use wsatlas::deform::{
    eliminate_and_dimension, eliminate_linear, hauser_flatness_equations, hauser_flatness_equations_in_x,
    hauser_unfolding, hauser_unfolding_in_x, LowestDegree,
};
use wsatlas::{parse_polynomial, Monomial, NumericalSemigroup, Polynomial, Rational, WeightedRing};

type Q = Rational;

fn monomial(ring: &Arc<WeightedRing>, s: &str) -> Monomial {
    let p: Polynomial<Q> = parse_polynomial(ring, s).unwrap();
    p.lead_monomial().unwrap().clone()
}

fn main() -> wsatlas::Result<()> {
    let s: NumericalSemigroup = "4,5,6,7".parse()?;
    let ring = curve_ring(&s);
    let minors = ["y5^2 - x*y6", "y5*y6 - x*y7", "y5*y7 - x^3", "y6^2 - x^3", "y6*y7 - x^2*y5", "y7^2 - x^2*y6"];
    let gens = minors.iter().map(|m| parse_polynomial(&ring, m)).collect::<Result<_, _>>()?;
    let c = MonomialCurve::<Q>::with_generators(&s, gens).expect("the minors generate the ideal");

    let u = hauser_unfolding_in_x(&c);
    let drop: Vec<usize> = [(2, "y7"), (4, "y6"), (4, "y7")]
        .iter()
        .map(|(i, m)| u.parameter_for(*i, &monomial(&ring, m)).unwrap())
        .collect();
    let u = u.without_parameters(&drop);
    let sys = hauser_flatness_equations_in_x(&u);
    let constants: Vec<String> = u
        .perturbations
        .iter()
        .zip(&u.parameters)
        .filter(|(p, _)| p.generators.iter().any(|g| g.terms().iter().any(|(m, _)| m.is_one())))
        .map(|(_, p)| p.name.clone())
        .collect();
    let el = eliminate_linear(&sys.base, |n| constants.iter().any(|c| c == n));
    let minimal = el.reduced.minimal_generators();
    println!("coefficients in k[x]: {} symbols, eliminated {}", u.nparameters(), el.eliminated.join(" "));
    println!("{} equations, minimal generators:", el.reduced.equations.len());
    for e in &minimal {
        println!("  {e}");
    }
    println!("{} minimal equations", minimal.len());

    let full = hauser_unfolding(&c);
    let normalizations = [
        (0, "y6"),
        (0, "x*y5"),
        (1, "x*y6"),
        (2, "y7"),
        (2, "x*y7"),
        (2, "x*y6"),
        (4, "y6"),
        (4, "x*y6"),
        (4, "y7"),
        (4, "x*y7"),
    ];
    let drop: Vec<usize> = normalizations
        .iter()
        .map(|(i, m)| full.parameter_for(*i, &monomial(&ring, m)).unwrap())
        .collect();
    let u = full.without_parameters(&drop);
    let sys = hauser_flatness_equations(&u);
    let (el, dim) = eliminate_and_dimension(&sys.base, LowestDegree::Off);
    println!(
        "one variable per x-power: {} variables, {} equations -> {} in {} variables, affine dimension {dim}",
        u.nparameters(),
        sys.base.equations.len(),
        el.reduced.equations.len(),
        el.reduced.nvars()
    );
    Ok(())
}
