//! Exact symbolic calculus: scalars, polynomials, forms, fields, maps.

mod field;
mod form;
mod map;
mod poly;
mod scalar;

pub use field::{hamiltonian_vector_field, poisson_bracket, PolyField};
pub use form::{IndexTuple, PolyForm};
pub use map::PolyMap;
pub use poly::{Exps, PolyFn};
pub use scalar::{GaussRat, Scalar};

/// Usage errors for the symbolic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("coordinate list mismatch: expected ({expected}), found ({found})")]
    CoordinateMismatch { expected: String, found: String },
    #[error("dimension mismatch: expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected a 2-form, found degree {degree}")]
    NotATwoForm { degree: usize },
    #[error("2-form must have constant unit-free coefficients")]
    NonConstantForm,
    #[error("2-form is degenerate")]
    DegenerateForm,
}
