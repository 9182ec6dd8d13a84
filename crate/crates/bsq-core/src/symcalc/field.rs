//! Polynomial vector fields, Hamiltonian vector fields, Poisson brackets.

use super::form::PolyForm;
use super::poly::PolyFn;
use super::scalar::GaussRat;
use super::SymError;
use crate::linalg::Mat;
use num_traits::Zero;
use std::fmt;

/// Vector field with one polynomial component per coordinate.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyField {
    vars: Vec<String>,
    comps: Vec<PolyFn>,
}

impl PolyField {
    pub fn new(comps: Vec<PolyFn>) -> Self {
        let vars = comps
            .first()
            .map(|f| f.vars().to_vec())
            .expect("vector field needs at least one component");
        assert_eq!(vars.len(), comps.len(), "field component count must match coordinates");
        for c in &comps {
            assert_eq!(c.vars(), vars.as_slice(), "coordinate list mismatch in field");
        }
        PolyField { vars, comps }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn components(&self) -> &[PolyFn] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for PolyField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Extract the constant antisymmetric coefficient matrix of a 2-form; the
/// entries must be unit-free constants.
fn constant_matrix(omega: &PolyForm) -> Result<Mat<GaussRat>, SymError> {
    if omega.degree() != 2 {
        return Err(SymError::NotATwoForm { degree: omega.degree() });
    }
    let n = omega.vars().len();
    let mut m = Mat::zero(n, n);
    for (idx, f) in omega.components() {
        let c = f
            .as_constant()
            .ok_or(SymError::NonConstantForm)?
            .as_gauss()
            .ok_or(SymError::NonConstantForm)?;
        let (i, j) = (idx[0] as usize, idx[1] as usize);
        m[(i, j)] = c.clone();
        m[(j, i)] = -&c;
    }
    Ok(m)
}

/// Solve `i_X omega = -dh` for `X` against a constant nondegenerate 2-form.
///
/// Degenerate forms are rejected; the solve is exact since the coefficient
/// matrix is constant.
pub fn hamiltonian_vector_field(h: &PolyFn, omega: &PolyForm) -> Result<PolyField, SymError> {
    if h.vars() != omega.vars() {
        return Err(SymError::CoordinateMismatch {
            expected: omega.vars().join(","),
            found: h.vars().join(","),
        });
    }
    let m = constant_matrix(omega)?;
    // i_X omega has dx_m coefficient sum_l Omega_{lm} X_l, so the system is
    // Omega^T X = -grad h.
    let inv = m.transpose().inverse().ok_or(SymError::DegenerateForm)?;
    let n = h.vars().len();
    let vars: Vec<&str> = h.vars().iter().map(|s| s.as_str()).collect();
    let grad: Vec<PolyFn> = (0..n).map(|i| h.partial_deriv(i)).collect();
    let comps: Vec<PolyFn> = (0..n)
        .map(|l| {
            let mut acc = PolyFn::zero(&vars);
            for (mcol, g) in grad.iter().enumerate() {
                let coeff = &inv[(l, mcol)];
                if coeff.is_zero() {
                    continue;
                }
                let scaled = g.scale(&super::scalar::Scalar::from_gauss(-coeff));
                acc = &acc + &scaled;
            }
            acc
        })
        .collect();
    Ok(PolyField::new(comps))
}

/// Poisson bracket `{f, g} = omega(X_f, X_g)`.
pub fn poisson_bracket(f: &PolyFn, g: &PolyFn, omega: &PolyForm) -> Result<PolyFn, SymError> {
    let xf = hamiltonian_vector_field(f, omega)?;
    let xg = hamiltonian_vector_field(g, omega)?;
    let inner = omega.interior_product(xf.components())?;
    let result = inner.interior_product(xg.components())?;
    // omega(X_f, X_g) = i_{X_g} i_{X_f} omega.
    Ok(result.component(&[]))
}
