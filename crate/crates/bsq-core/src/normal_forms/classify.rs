//! Williamson block recognition for homogeneous quadratics.
//!
//! The linearization `A = Omega^{-1} H` of a quadratic Hamiltonian is an
//! infinitesimally symplectic matrix, so its characteristic polynomial is
//! even; the block kind is read off the exact coefficients. In dimension 4 a
//! pair is focus-focus exactly when a generic combination has a genuinely
//! complex eigenvalue quadruple `+-alpha +- i beta` with `alpha beta != 0`,
//! i.e. `p^2 - 4q < 0` for the reduced quartic `l^4 + p l^2 + q`.

use super::{BlockKind, NormalFormError};
use crate::linalg::Mat;
use crate::symcalc::{poisson_bracket, PolyForm, PolyFn};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Extract `Omega^{-1} H` for a homogeneous quadratic; all entries must be
/// real rationals.
fn linearization(f: &PolyFn, omega: &PolyForm) -> Result<Mat<BigRational>, NormalFormError> {
    if !f.is_homogeneous_quadratic() {
        return Err(NormalFormError::NotHomogeneousQuadratic);
    }
    let n = f.n_vars();
    let hess = f
        .constant_hessian()
        .ok_or(NormalFormError::NotHomogeneousQuadratic)?;
    let mut h = Mat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let g = hess[i][j]
                .as_gauss()
                .ok_or(NormalFormError::NotHomogeneousQuadratic)?;
            let r = g
                .as_rational()
                .ok_or(NormalFormError::NotHomogeneousQuadratic)?
                .clone();
            h[(i, j)] = r;
        }
    }
    let mut om = Mat::zero(n, n);
    for (idx, c) in omega.components() {
        let v = c
            .as_constant()
            .and_then(|s| s.as_gauss())
            .and_then(|g| g.as_rational().cloned())
            .ok_or(NormalFormError::InvalidSymplecticForm)?;
        om[(idx[0] as usize, idx[1] as usize)] = v.clone();
        om[(idx[1] as usize, idx[0] as usize)] = -v;
    }
    let om_inv = om.inverse().ok_or(NormalFormError::InvalidSymplecticForm)?;
    Ok(om_inv.mul_mat(&h))
}

/// Coefficients `(p, q)` of the even characteristic polynomial
/// `l^4 + p l^2 + q` of a 4x4 matrix; errors if the odd coefficients do not
/// vanish (the matrix would not be infinitesimally symplectic).
fn even_quartic_coeffs(a: &Mat<BigRational>) -> Result<(BigRational, BigRational), NormalFormError> {
    // Faddeev-LeVerrier: c_k from traces of powers.
    let n = 4usize;
    let mut m = a.clone();
    let mut coeffs = vec![BigRational::one()]; // leading coefficient
    let mut c = BigRational::one();
    for k in 1..=n {
        if k > 1 {
            // M <- A (M + c_{k-1} I)
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] = &shifted[(i, i)] + &c;
            }
            m = a.mul_mat(&shifted);
        }
        let tr: BigRational = (0..n).map(|i| m[(i, i)].clone()).sum();
        c = -(tr / BigRational::from_integer(k.into()));
        coeffs.push(c.clone());
    }
    // char poly = l^4 + c1 l^3 + c2 l^2 + c3 l + c4
    if !coeffs[1].is_zero() || !coeffs[3].is_zero() {
        return Err(NormalFormError::NotInfinitesimallySymplectic);
    }
    Ok((coeffs[2].clone(), coeffs[4].clone()))
}

/// Classify one quadratic (dimension 2) or a commuting pair (dimension 4)
/// into its Williamson block kind.
pub fn williamson_classify(
    quadratics: &[PolyFn],
    omega: &PolyForm,
) -> Result<BlockKind, NormalFormError> {
    let dim = omega.vars().len();
    match (dim, quadratics.len()) {
        (2, 1) => {
            let a = linearization(&quadratics[0], omega)?;
            // char poly is l^2 - tr l + det with tr = 0, so l^2 + det.
            let tr = &a[(0, 0)] + &a[(1, 1)];
            if !tr.is_zero() {
                return Err(NormalFormError::NotInfinitesimallySymplectic);
            }
            let c = a.det();
            if c.is_zero() {
                Err(NormalFormError::Degenerate)
            } else if c.is_positive() {
                Ok(BlockKind::Elliptic)
            } else {
                Ok(BlockKind::Hyperbolic)
            }
        }
        (4, 2) => {
            let bracket = poisson_bracket(&quadratics[0], &quadratics[1], omega)
                .map_err(NormalFormError::Symbolic)?;
            if !bracket.is_zero() {
                return Err(NormalFormError::NonCommuting);
            }
            let a1 = linearization(&quadratics[0], omega)?;
            let a2 = linearization(&quadratics[1], omega)?;
            let combos: [(i64, i64); 5] = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)];
            let mut saw_nonsingular = false;
            for (c1, c2) in combos {
                let mut a = Mat::zero(4, 4);
                let r1 = BigRational::from_integer(c1.into());
                let r2 = BigRational::from_integer(c2.into());
                for i in 0..4 {
                    for j in 0..4 {
                        a[(i, j)] = &(&a1[(i, j)] * &r1) + &(&a2[(i, j)] * &r2);
                    }
                }
                let (p, q) = even_quartic_coeffs(&a)?;
                if q.is_zero() {
                    continue;
                }
                saw_nonsingular = true;
                let disc = &(&p * &p) - &(&BigRational::from_integer(4.into()) * &q);
                if disc.is_negative() {
                    return Ok(BlockKind::FocusFocus);
                }
            }
            if saw_nonsingular {
                Err(NormalFormError::NotFocusFocus)
            } else {
                Err(NormalFormError::Degenerate)
            }
        }
        _ => Err(NormalFormError::UnsupportedClassificationInput {
            dim,
            functions: quadratics.len(),
        }),
    }
}
