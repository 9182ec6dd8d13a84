//! Polynomial maps between coordinate charts and form pullback.

use super::form::PolyForm;
use super::poly::PolyFn;
use super::SymError;
use std::fmt;

/// Polynomial map: each target coordinate expressed in source coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMap {
    source: Vec<String>,
    target: Vec<String>,
    comps: Vec<PolyFn>,
}

impl PolyMap {
    /// `comps[i]` is the expression of target coordinate `i` over `source`.
    pub fn new(source: &[&str], target: &[&str], comps: Vec<PolyFn>) -> Result<Self, SymError> {
        if comps.len() != target.len() {
            return Err(SymError::DimensionMismatch {
                expected: target.len(),
                found: comps.len(),
            });
        }
        let source: Vec<String> = source.iter().map(|s| s.to_string()).collect();
        for c in &comps {
            if c.vars() != source.as_slice() {
                return Err(SymError::CoordinateMismatch {
                    expected: source.join(","),
                    found: c.vars().join(","),
                });
            }
        }
        Ok(PolyMap {
            source,
            target: target.iter().map(|s| s.to_string()).collect(),
            comps,
        })
    }

    pub fn identity(vars: &[&str]) -> Self {
        let comps = (0..vars.len()).map(|i| PolyFn::var(vars, i)).collect();
        PolyMap::new(vars, vars, comps).unwrap()
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn components(&self) -> &[PolyFn] {
        &self.comps
    }

    /// Composition `self . inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap, SymError> {
        if self.source != inner.target {
            return Err(SymError::CoordinateMismatch {
                expected: self.source.join(","),
                found: inner.target.join(","),
            });
        }
        let comps: Result<Vec<PolyFn>, SymError> = self
            .comps
            .iter()
            .map(|c| c.substitute(inner.components()))
            .collect();
        let src: Vec<&str> = inner.source.iter().map(|s| s.as_str()).collect();
        let tgt: Vec<&str> = self.target.iter().map(|s| s.as_str()).collect();
        PolyMap::new(&src, &tgt, comps?)
    }

    /// Pull a function on the target back to the source.
    pub fn pullback_fn(&self, f: &PolyFn) -> Result<PolyFn, SymError> {
        if f.vars() != self.target.as_slice() {
            return Err(SymError::CoordinateMismatch {
                expected: self.target.join(","),
                found: f.vars().join(","),
            });
        }
        f.substitute(&self.comps)
    }

    /// Pull a form on the target back to the source:
    /// `phi^*(f dx_I) = (f . phi) dphi_{i_1} /\ ... /\ dphi_{i_d}`.
    pub fn pullback(&self, form: &PolyForm) -> Result<PolyForm, SymError> {
        if form.vars() != self.target.as_slice() {
            return Err(SymError::CoordinateMismatch {
                expected: self.target.join(","),
                found: form.vars().join(","),
            });
        }
        let src: Vec<&str> = self.source.iter().map(|s| s.as_str()).collect();
        // Differentials of the component functions, as 1-forms on the source.
        let dphi: Vec<PolyForm> = self
            .comps
            .iter()
            .map(|c| PolyForm::from_function(c.clone()).exterior_derivative())
            .collect();
        let mut out = PolyForm::zero(&src, form.degree());
        for (idx, f) in form.components() {
            let pulled = self.pullback_fn(f)?;
            let mut wedge = PolyForm::from_function(pulled);
            for &i in idx {
                wedge = wedge.wedge(&dphi[i as usize])?;
            }
            out = &out + &wedge;
        }
        Ok(out)
    }
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) -> (", self.source.join(", "))?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} = {}", self.target[i], c)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcalc::Scalar;

    const QP: &[&str] = &["q", "p"];

    #[test]
    fn translation_preserves_liouville() {
        // (q, p) -> (q + c, p) pulls p dq back to itself.
        let q = PolyFn::var(QP, 0);
        let p = PolyFn::var(QP, 1);
        let c = PolyFn::constant(QP, Scalar::ratio(7, 3));
        let phi = PolyMap::new(QP, QP, vec![&q + &c, p.clone()]).unwrap();
        let mut liouville = PolyForm::zero(QP, 1);
        liouville.add_component(vec![0], p.clone());
        let pulled = phi.pullback(&liouville).unwrap();
        assert_eq!(pulled, liouville);
    }

    #[test]
    fn identity_pullback() {
        let omega = PolyForm::darboux(QP, &[(0, 1)]);
        let id = PolyMap::identity(QP);
        assert_eq!(id.pullback(&omega).unwrap(), omega);
    }

    #[test]
    fn unit_pair_scaling_preserves_symplectic() {
        // (x, y) -> (a x, a^{-1} y) with a a formal unit preserves dx /\ dy.
        let xy: &[&str] = &["x", "y"];
        let x = PolyFn::var(xy, 0);
        let y = PolyFn::var(xy, 1);
        let a = Scalar::unit(0);
        let phi = PolyMap::new(
            xy,
            xy,
            vec![x.scale(&a), y.scale(&a.inv().unwrap())],
        )
        .unwrap();
        let omega = PolyForm::darboux(xy, &[(0, 1)]);
        assert_eq!(phi.pullback(&omega).unwrap(), omega);
    }

    #[test]
    fn pullback_commutes_with_d() {
        // Nonlinear map check: phi = (u^2, u + v^3).
        let uv: &[&str] = &["u", "v"];
        let u = PolyFn::var(uv, 0);
        let v = PolyFn::var(uv, 1);
        let phi = PolyMap::new(uv, QP, vec![&u * &u, &u + &(&(&v * &v) * &v)]).unwrap();
        let q = PolyFn::var(QP, 0);
        let p = PolyFn::var(QP, 1);
        let mut alpha = PolyForm::zero(QP, 1);
        alpha.add_component(vec![0], &p * &q);
        alpha.add_component(vec![1], q.clone());
        let lhs = phi.pullback(&alpha).unwrap().exterior_derivative();
        let rhs = phi.pullback(&alpha.exterior_derivative()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_functorial() {
        let ab: &[&str] = &["a", "b"];
        let a = PolyFn::var(ab, 0);
        let b = PolyFn::var(ab, 1);
        let psi = PolyMap::new(ab, QP, vec![&a + &b, &a - &b]).unwrap();
        let q = PolyFn::var(QP, 0);
        let p = PolyFn::var(QP, 1);
        let phi = PolyMap::new(QP, QP, vec![&q * &p, q.clone()]).unwrap();
        let composed = phi.compose(&psi).unwrap();
        let omega = PolyForm::darboux(QP, &[(0, 1)]);
        let two_step = psi.pullback(&phi.pullback(&omega).unwrap()).unwrap();
        let one_step = composed.pullback(&omega).unwrap();
        assert_eq!(two_step, one_step);
    }
}
