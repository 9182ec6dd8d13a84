//! Cotangent-lifted parameter families of the model actions.
//!
//! Matrix entries live in the commutative algebra generated by
//! `{t, e^t, e^-t, cos th, sin th}` over the Gaussian rationals, with the
//! relations `e^t * e^-t = 1` and `cos^2 = 1 - sin^2` applied at
//! normalization. Differentiation only ever happens at parameter zero,
//! through the rule table
//!
//! | symbol | value at 0 | d/dt at 0 | d/dth at 0 |
//! |--------|-----------|-----------|------------|
//! | t      | 0         | 1         | 0          |
//! | e^t    | 1         | 1         | 0          |
//! | e^-t   | 1         | -1        | 0          |
//! | cos th | 1         | 0         | 0          |
//! | sin th | 0         | 0         | 1          |
//!
//! extended to products by the Leibniz rule.

use super::NormalFormError;
use crate::symcalc::{GaussRat, PolyField, PolyFn, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Monomial in the lift algebra; `cos <= 1` after normalization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
struct LiftMono {
    t: u8,
    ep: u8,
    em: u8,
    cos: u8,
    sin: u8,
}

impl LiftMono {
    const ONE: LiftMono = LiftMono { t: 0, ep: 0, em: 0, cos: 0, sin: 0 };
}

/// Element of the formal lift algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalScalar {
    terms: BTreeMap<LiftMono, GaussRat>,
}

impl FormalScalar {
    pub fn zero() -> Self {
        FormalScalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussRat::one())
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        let mut s = Self::zero();
        s.push(LiftMono::ONE, c);
        s
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRat::from_int(n))
    }

    /// The parameter `t` itself (translation families are affine in it).
    pub fn t() -> Self {
        let mut s = Self::zero();
        s.push(LiftMono { t: 1, ..LiftMono::ONE }, GaussRat::one());
        s
    }

    pub fn exp_t() -> Self {
        let mut s = Self::zero();
        s.push(LiftMono { ep: 1, ..LiftMono::ONE }, GaussRat::one());
        s
    }

    pub fn exp_neg_t() -> Self {
        let mut s = Self::zero();
        s.push(LiftMono { em: 1, ..LiftMono::ONE }, GaussRat::one());
        s
    }

    pub fn cos_theta() -> Self {
        let mut s = Self::zero();
        s.push(LiftMono { cos: 1, ..LiftMono::ONE }, GaussRat::one());
        s
    }

    pub fn sin_theta() -> Self {
        let mut s = Self::zero();
        s.push(LiftMono { sin: 1, ..LiftMono::ONE }, GaussRat::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Insert a possibly non-canonical term, applying both relations.
    fn push(&mut self, mono: LiftMono, coeff: GaussRat) {
        if coeff.is_zero() {
            return;
        }
        let mut m = mono;
        let cancel = m.ep.min(m.em);
        m.ep -= cancel;
        m.em -= cancel;
        if m.cos >= 2 {
            // cos^2 = 1 - sin^2
            let reduced = LiftMono { cos: m.cos - 2, ..m };
            self.push(reduced, coeff.clone());
            self.push(LiftMono { sin: m.sin + 2, ..reduced }, -&coeff);
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Value at parameter zero.
    pub fn value_at_zero(&self) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            if m.t == 0 && m.sin == 0 {
                acc += c;
            }
        }
        acc
    }

    /// Derivative at parameter zero with respect to `param`.
    pub fn derivative_at_zero(&self, param: LiftParam) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            let factor: i64 = match param {
                LiftParam::T => {
                    if m.sin != 0 {
                        0
                    } else if m.t == 1 {
                        1
                    } else if m.t == 0 {
                        m.ep as i64 - m.em as i64
                    } else {
                        0
                    }
                }
                LiftParam::Theta => {
                    // d/dth of cos^d sin^e at 0 is nonzero only for e = 1.
                    if m.t == 0 && m.sin == 1 {
                        1
                    } else {
                        0
                    }
                }
            };
            if factor != 0 {
                let add = &GaussRat::from_int(factor) * c;
                acc += &add;
            }
        }
        acc
    }
}

impl fmt::Debug for FormalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (sym, e) in [
                ("t", m.t),
                ("e^t", m.ep),
                ("e^-t", m.em),
                ("cos", m.cos),
                ("sin", m.sin),
            ] {
                if e > 0 {
                    write!(f, "*{}^{}", sym, e)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &FormalScalar {
    type Output = FormalScalar;
    fn add(self, rhs: &FormalScalar) -> FormalScalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.push(*m, c.clone());
        }
        out
    }
}

impl Sub for &FormalScalar {
    type Output = FormalScalar;
    fn sub(self, rhs: &FormalScalar) -> FormalScalar {
        self + &(-rhs)
    }
}

impl Neg for &FormalScalar {
    type Output = FormalScalar;
    fn neg(self) -> FormalScalar {
        FormalScalar {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &FormalScalar {
    type Output = FormalScalar;
    fn mul(self, rhs: &FormalScalar) -> FormalScalar {
        let mut out = FormalScalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = LiftMono {
                    t: ma.t + mb.t,
                    ep: ma.ep + mb.ep,
                    em: ma.em + mb.em,
                    cos: ma.cos + mb.cos,
                    sin: ma.sin + mb.sin,
                };
                out.push(m, ca * cb);
            }
        }
        out
    }
}

/// Parameter of a lifted family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LiftParam {
    /// Real dilation/translation parameter `t`.
    T,
    /// Angular parameter `th`.
    Theta,
}

/// The named model actions whose cotangent lifts are built in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelAction {
    /// `(x, y) -> (e^-t x, e^t y)` on the hyperbolic block.
    Hyperbolic,
    /// `(z, zbar) -> (e^{i th} z, e^{-i th} zbar)` in conjugate coordinates.
    Elliptic,
    /// Simultaneous rotation and dilation on the focus-focus block.
    FocusFocus,
    /// `(q, p) -> (q + t, p)`.
    Translation,
    /// Planar rotation lifted diagonally to base and fiber.
    Rotation,
}

impl FromStr for ModelAction {
    type Err = NormalFormError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hyperbolic" => Ok(ModelAction::Hyperbolic),
            "elliptic" => Ok(ModelAction::Elliptic),
            "focus-focus" => Ok(ModelAction::FocusFocus),
            "translation" => Ok(ModelAction::Translation),
            "rotation" => Ok(ModelAction::Rotation),
            other => Err(NormalFormError::UnsupportedAction(other.to_string())),
        }
    }
}

/// One-parameter (or two-parameter) family of cotangent-lifted phase-space
/// maps, affine in the coordinates with entries in the lift algebra.
#[derive(Clone)]
pub struct LiftedFamily {
    action: ModelAction,
    coords: Vec<String>,
    base: Vec<usize>,
    fiber: Vec<usize>,
    params: Vec<LiftParam>,
    matrix: Vec<Vec<FormalScalar>>,
    translation: Vec<FormalScalar>,
}

impl LiftedFamily {
    pub fn action(&self) -> ModelAction {
        self.action
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn params(&self) -> &[LiftParam] {
        &self.params
    }

    pub fn base_indices(&self) -> &[usize] {
        &self.base
    }

    pub fn fiber_indices(&self) -> &[usize] {
        &self.fiber
    }

    pub fn matrix(&self) -> &[Vec<FormalScalar>] {
        &self.matrix
    }

    /// The family evaluates to the identity map at parameter zero.
    pub fn is_identity_at_zero(&self) -> bool {
        let n = self.coords.len();
        for i in 0..n {
            if !self.translation[i].value_at_zero().is_zero() {
                return false;
            }
            for j in 0..n {
                let v = self.matrix[i][j].value_at_zero();
                let expect = if i == j { GaussRat::one() } else { GaussRat::zero() };
                if v != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Verify `base^T * fiber = I` inside the algebra, i.e. the fiber block
    /// is the inverse transpose of the base block.
    pub fn fiber_is_inverse_transpose(&self) -> bool {
        let m = self.base.len();
        if self.fiber.len() != m {
            return false;
        }
        for r in 0..m {
            for c in 0..m {
                let mut acc = FormalScalar::zero();
                for k in 0..m {
                    // (base^T)_{rk} = base_{kr}
                    let a = &self.matrix[self.base[k]][self.base[r]];
                    let b = &self.matrix[self.fiber[k]][self.fiber[c]];
                    acc = &acc + &(a * b);
                }
                let expect = if r == c { FormalScalar::one() } else { FormalScalar::zero() };
                if acc != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Infinitesimal generator: differentiate the family at parameter zero.
    pub fn generator(&self, param: LiftParam) -> Result<PolyField, NormalFormError> {
        if !self.params.contains(&param) {
            return Err(NormalFormError::UnknownParameter);
        }
        let vars: Vec<&str> = self.coords.iter().map(|s| s.as_str()).collect();
        let n = vars.len();
        let comps: Vec<PolyFn> = (0..n)
            .map(|i| {
                let mut f = PolyFn::constant(
                    &vars,
                    Scalar::from_gauss(self.translation[i].derivative_at_zero(param)),
                );
                for j in 0..n {
                    let d = self.matrix[i][j].derivative_at_zero(param);
                    if !d.is_zero() {
                        let term = PolyFn::var(&vars, j).scale(&Scalar::from_gauss(d));
                        f = &f + &term;
                    }
                }
                f
            })
            .collect();
        Ok(PolyField::new(comps))
    }
}

/// Build the cotangent lift of a named model action.
pub fn cotangent_lift(action: ModelAction) -> LiftedFamily {
    let one = FormalScalar::one;
    let zero = FormalScalar::zero;
    match action {
        ModelAction::Hyperbolic => LiftedFamily {
            action,
            coords: vec!["x".into(), "y".into()],
            base: vec![0],
            fiber: vec![1],
            params: vec![LiftParam::T],
            matrix: vec![
                vec![FormalScalar::exp_neg_t(), zero()],
                vec![zero(), FormalScalar::exp_t()],
            ],
            translation: vec![zero(), zero()],
        },
        ModelAction::Elliptic => {
            // e^{i th} = cos th + i sin th on the base coordinate z.
            let i = FormalScalar::from_gauss(GaussRat::i());
            let eith = &FormalScalar::cos_theta() + &(&i * &FormalScalar::sin_theta());
            let eith_conj = &FormalScalar::cos_theta() - &(&i * &FormalScalar::sin_theta());
            LiftedFamily {
                action,
                coords: vec!["z".into(), "zbar".into()],
                base: vec![0],
                fiber: vec![1],
                params: vec![LiftParam::Theta],
                matrix: vec![vec![eith, zero()], vec![zero(), eith_conj]],
                translation: vec![zero(), zero()],
            }
        }
        ModelAction::FocusFocus => {
            let c = FormalScalar::cos_theta;
            let s = FormalScalar::sin_theta;
            let em = FormalScalar::exp_neg_t;
            let ep = FormalScalar::exp_t;
            let base_rot = |a: &FormalScalar| {
                [
                    [a * &c(), a * &s()],
                    [&FormalScalar::zero() - &(a * &s()), a * &c()],
                ]
            };
            let b = base_rot(&em());
            let f = base_rot(&ep());
            LiftedFamily {
                action,
                coords: vec!["x1".into(), "x2".into(), "y1".into(), "y2".into()],
                base: vec![0, 1],
                fiber: vec![2, 3],
                params: vec![LiftParam::Theta, LiftParam::T],
                matrix: vec![
                    vec![b[0][0].clone(), b[0][1].clone(), zero(), zero()],
                    vec![b[1][0].clone(), b[1][1].clone(), zero(), zero()],
                    vec![zero(), zero(), f[0][0].clone(), f[0][1].clone()],
                    vec![zero(), zero(), f[1][0].clone(), f[1][1].clone()],
                ],
                translation: vec![zero(), zero(), zero(), zero()],
            }
        }
        ModelAction::Translation => LiftedFamily {
            action,
            coords: vec!["q".into(), "p".into()],
            base: vec![0],
            fiber: vec![1],
            params: vec![LiftParam::T],
            matrix: vec![vec![one(), zero()], vec![zero(), one()]],
            translation: vec![FormalScalar::t(), zero()],
        },
        ModelAction::Rotation => {
            let c = FormalScalar::cos_theta;
            let s = FormalScalar::sin_theta;
            let neg = |f: FormalScalar| &FormalScalar::zero() - &f;
            LiftedFamily {
                action,
                coords: vec!["q1".into(), "q2".into(), "p1".into(), "p2".into()],
                base: vec![0, 1],
                fiber: vec![2, 3],
                params: vec![LiftParam::Theta],
                matrix: vec![
                    vec![c(), s(), zero(), zero()],
                    vec![neg(s()), c(), zero(), zero()],
                    vec![zero(), zero(), c(), s()],
                    vec![zero(), zero(), neg(s()), c()],
                ],
                translation: vec![zero(), zero(), zero(), zero()],
            }
        }
    }
}

/// Differentiate a lifted family at parameter zero.
pub fn infinitesimal_generator(
    fam: &LiftedFamily,
    param: LiftParam,
) -> Result<PolyField, NormalFormError> {
    fam.generator(param)
}
