//! Exact symbolic toolkit for integrable systems on symplectic manifolds.
//!
//! Everything is computed over the Gaussian rationals; no floating point
//! enters any mathematical statement. The crate is organized as:
//!
//! - [`symcalc`]: sparse multivariate polynomials, differential forms,
//!   Hamiltonian vector fields, Poisson brackets, pullbacks.
//! - [`normal_forms`]: Williamson block data, cotangent-lifted actions with
//!   infinitesimal generators, and connection one-forms.
//! - [`cech`]: sheaf cohomology of a prequantized cylinder band with exact
//!   Bohr-Sommerfeld leaf detection.
//! - [`polytope`]: Delzant validation and lattice point enumeration.
//! - [`quantize`]: finite and infinite dimensional quantization reports.
//! - [`verify`]: named self-check suites used by the CLI.
//!
//! With the default `parallel` feature the lattice and cohomology batch
//! routines run on rayon; disabling it keeps a sequential fallback with the
//! same results.

pub mod cech;
pub mod linalg;
pub mod normal_forms;
pub mod polytope;
pub mod quantize;
pub mod symcalc;
pub mod verify;

pub use symcalc::{GaussRat, PolyField, PolyForm, PolyFn, PolyMap, Scalar};
