//! Weighted polynomial rings and sparse exact polynomials.

mod parse;
mod polynomial;
mod ring;

pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::{Exponents, Monomial, MonomialOrder, OrderKind, WeightedRing};
