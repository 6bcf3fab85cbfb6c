//! Gröbner bases, syzygies, free resolutions, Krull dimension and graded
//! Hilbert functions.

pub mod dimension;
pub mod hilbert;
pub mod ideal;
pub mod module;
pub mod resolution;

pub use dimension::{dimension_of_monomial_ideal, krull_dimension};
pub use hilbert::{graded_hilbert_function, GradedDims, LaurentPoly, Subquotient};
pub use ideal::{buchberger, buchberger_with, is_groebner_basis, GbOptions, GroebnerBasis};
pub use module::{ideal_syzygies, syzygies, FreeModule, Vector};
pub use resolution::{
    free_resolution, free_resolution_minimal, FreeResolution, ResolutionSummary, SchreyerFrame,
    SparseMatrix, Term,
};
