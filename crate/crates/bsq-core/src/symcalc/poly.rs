//! Sparse multivariate polynomials over exact [`Scalar`] coefficients.
//!
//! Key operations:
//! - Ring arithmetic with canonical term maps (no zero terms stored).
//! - Exact partial derivatives.
//! - Substitution of polynomial expressions for the coordinates, which
//!   backs pullbacks and linear changes of variables.
//!
//! Design notes:
//! - A polynomial carries its coordinate list; mixing lists is a usage error
//!   and is rejected rather than silently unified.
//! - Exponent vectors always have one entry per coordinate.

use super::scalar::{GaussRat, Scalar};
use crate::symcalc::SymError;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector, one entry per coordinate.
pub type Exps = Vec<u32>;

/// Sparse polynomial in named coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyFn {
    vars: Vec<String>,
    terms: BTreeMap<Exps, Scalar>,
}

fn names(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|s| s.to_string()).collect()
}

impl PolyFn {
    pub fn zero(vars: &[&str]) -> Self {
        PolyFn { vars: names(vars), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; p.vars.len()], c);
        p
    }

    pub fn int(vars: &[&str], n: i64) -> Self {
        Self::constant(vars, Scalar::from_int(n))
    }

    /// The coordinate with index `idx`.
    pub fn var(vars: &[&str], idx: usize) -> Self {
        let mut p = Self::zero(vars);
        assert!(idx < p.vars.len(), "coordinate index out of range");
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.add_term(e, Scalar::one());
        p
    }

    /// The coordinate with the given name.
    pub fn named_var(vars: &[&str], name: &str) -> Self {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown coordinate {name}"));
        Self::var(vars, idx)
    }

    pub fn monomial(vars: &[&str], exps: Exps, c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        assert_eq!(exps.len(), p.vars.len(), "exponent vector length mismatch");
        p.add_term(exps, c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// The constant value if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&k| k == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, exps: Exps, c: Scalar) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn same_vars(&self, other: &PolyFn) -> Result<(), SymError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(SymError::CoordinateMismatch {
                expected: self.vars.join(","),
                found: other.vars.join(","),
            })
        }
    }

    pub fn scale(&self, c: &Scalar) -> PolyFn {
        let mut out = PolyFn { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, t) in &self.terms {
            out.add_term(e.clone(), t * c);
        }
        out
    }

    /// Exact partial derivative with respect to coordinate `idx`.
    pub fn partial_deriv(&self, idx: usize) -> PolyFn {
        assert!(idx < self.vars.len(), "coordinate index out of range");
        let mut out = PolyFn { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[idx] -= 1;
            out.add_term(d, &Scalar::from_int(e[idx] as i64) * c);
        }
        out
    }

    /// Substitute `exprs[i]` for coordinate `i`; all `exprs` share one
    /// coordinate list, which becomes the result's list.
    pub fn substitute(&self, exprs: &[PolyFn]) -> Result<PolyFn, SymError> {
        if exprs.len() != self.vars.len() {
            return Err(SymError::DimensionMismatch {
                expected: self.vars.len(),
                found: exprs.len(),
            });
        }
        let target_vars: Vec<&str> = match exprs.first() {
            Some(e) => e.vars.iter().map(|s| s.as_str()).collect(),
            None => Vec::new(),
        };
        for e in exprs {
            exprs[0].same_vars(e)?;
        }
        // Cache powers of each substituted expression.
        let mut powers: Vec<Vec<PolyFn>> = exprs
            .iter()
            .map(|e| vec![PolyFn::constant(&target_vars, Scalar::one()), e.clone()])
            .collect();
        let mut out = PolyFn::zero(&target_vars);
        for (e, c) in &self.terms {
            let mut term = PolyFn::constant(&target_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Evaluate at a point given by one scalar per coordinate.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.vars.len(), "evaluation point length mismatch");
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &point[i].pow(k);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluate at a Gaussian rational point (no units involved).
    pub fn eval_gauss(&self, point: &[GaussRat]) -> GaussRat {
        let scalars: Vec<Scalar> = point.iter().cloned().map(Scalar::from_gauss).collect();
        self.eval(&scalars)
            .as_gauss()
            .expect("polynomial with unit coefficients evaluated as Gaussian rational")
    }

    /// True when every monomial has total degree exactly 2.
    pub fn is_homogeneous_quadratic(&self) -> bool {
        !self.terms.is_empty()
            && self.terms.keys().all(|e| e.iter().sum::<u32>() == 2)
    }

    /// Constant Hessian matrix entries `d2 f / dxi dxj` as scalars; fails if
    /// any second derivative is non-constant.
    pub fn constant_hessian(&self) -> Option<Vec<Vec<Scalar>>> {
        let n = self.vars.len();
        let mut h = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            let di = self.partial_deriv(i);
            for (j, slot) in h[i].iter_mut().enumerate().take(n) {
                *slot = di.partial_deriv(j).as_constant()?;
            }
        }
        Some(h)
    }
}

impl fmt::Debug for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_constant_term = e.iter().all(|&k| k == 0);
            if is_constant_term {
                write!(f, "{}", c)?;
                continue;
            }
            if c.num_terms() > 1 || c.as_gauss().map(|g| g != GaussRat::one()).unwrap_or(true) {
                write!(f, "({})*", c)?;
            }
            let mut first_factor = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first_factor {
                    write!(f, "*")?;
                }
                first_factor = false;
                if k == 1 {
                    write!(f, "{}", self.vars[i])?;
                } else {
                    write!(f, "{}^{}", self.vars[i], k)?;
                }
            }
        }
        Ok(())
    }
}

// ---- Add ----

impl Add for &PolyFn {
    type Output = PolyFn;
    fn add(self, rhs: &PolyFn) -> PolyFn {
        self.same_vars(rhs).expect("coordinate list mismatch in +");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

// ---- Sub ----

impl Sub for &PolyFn {
    type Output = PolyFn;
    fn sub(self, rhs: &PolyFn) -> PolyFn {
        self + &(-rhs)
    }
}

// ---- Neg ----

impl Neg for &PolyFn {
    type Output = PolyFn;
    fn neg(self) -> PolyFn {
        PolyFn {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

// ---- Mul ----

impl Mul for &PolyFn {
    type Output = PolyFn;
    fn mul(self, rhs: &PolyFn) -> PolyFn {
        self.same_vars(rhs).expect("coordinate list mismatch in *");
        let mut out = PolyFn { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_poly_ops {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for PolyFn {
            type Output = PolyFn;
            fn $m(self, rhs: PolyFn) -> PolyFn { $tr::$m(&self, &rhs) }
        }
    )*};
}
forward_poly_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for PolyFn {
    type Output = PolyFn;
    fn neg(self) -> PolyFn {
        -&self
    }
}
