//! Exact computer algebra for numerical semigroups of low genus.
//!
//! The crate builds the monomial curve of a numerical semigroup, resolves
//! its ideal, computes the graded cotangent cohomology `T¹`, `T²`, and runs
//! negative-weight deformation computations: the quadratic part of the
//! versal base and Hauser's unfolding with flatness equations. The `atlas`
//! module ties these together into the table of moduli dimensions for all
//! semigroups of genus at most seven.

pub mod atlas;
pub mod cotangent;
pub mod deform;
pub mod curve;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod moduli;
pub mod poly;
pub mod semigroup;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, Fp, Rational};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, OrderKind, Polynomial, WeightedRing};
pub use semigroup::{enumerate_by_genus, AperyData, NumericalSemigroup};
