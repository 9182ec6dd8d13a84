//! Exact scalars: Gaussian rationals, optionally with adjoined formal units.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A Gaussian rational `re + im*i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRat { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a real Gaussian rational; `q` must be nonzero.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real part if the imaginary part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.im.is_zero() {
            Some(&self.re)
        } else {
            None
        }
    }

    /// `|z|^2 = re^2 + im^2`, rational and nonnegative.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussRat { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn pow(&self, k: u32) -> GaussRat {
        let mut acc = GaussRat::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl std::ops::AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

// ---- ring operations ----

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv().expect("division by zero GaussRat")
    }
}

macro_rules! forward_value_ops {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(&self, &rhs) }
        }
    )*};
}
forward_value_ops!(GaussRat, Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

/// Monomial in the formal units: exponent per unit symbol, trailing zeros
/// trimmed so the empty vector is the unit-free monomial.
type UnitExps = Vec<i32>;

fn trim(mut e: UnitExps) -> UnitExps {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

/// Element of the Laurent ring `Q(i)[u_0^{+-1}, u_1^{+-1}, ...]`.
///
/// The units model exponentials frozen at a parameter value: each pair
/// `(u, u^{-1})` satisfies exactly the relation `u * u^{-1} = 1`, which is
/// automatic for Laurent exponents. Most scalars never touch a unit and are
/// plain Gaussian rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    terms: BTreeMap<UnitExps, GaussRat>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Scalar::from_gauss(GaussRat::one())
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::i())
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Scalar { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRat::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_gauss(GaussRat::from_rational(r))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_gauss(GaussRat::ratio(p, q))
    }

    /// The formal unit `u_idx`.
    pub fn unit(idx: usize) -> Self {
        Self::unit_pow(idx, 1)
    }

    /// The inverse formal unit `u_idx^{-1}`.
    pub fn unit_inv(idx: usize) -> Self {
        Self::unit_pow(idx, -1)
    }

    pub fn unit_pow(idx: usize, e: i32) -> Self {
        let mut exps = vec![0; idx + 1];
        exps[idx] = e;
        let mut terms = BTreeMap::new();
        terms.insert(trim(exps), GaussRat::one());
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if no unit appears.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.is_empty() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UnitExps, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent of unit `idx` across terms (0 when absent).
    pub fn unit_degree(&self, idx: usize) -> i32 {
        self.terms
            .keys()
            .map(|e| e.get(idx).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    fn insert_term(terms: &mut BTreeMap<UnitExps, GaussRat>, e: UnitExps, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        match terms.entry(e) {
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

    /// Multiplicative inverse; only single-term scalars (unit monomials times
    /// a nonzero coefficient) are invertible here.
    pub fn inv(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let ci = c.inv()?;
        let einv: UnitExps = e.iter().map(|k| -k).collect();
        let mut terms = BTreeMap::new();
        terms.insert(trim(einv), ci);
        Some(Scalar { terms })
    }

    /// Substitute concrete nonzero values for the units.
    pub fn eval_units(&self, values: &[GaussRat]) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = values
                    .get(idx)
                    .expect("missing unit value in eval_units");
                let p = if k > 0 {
                    v.pow(k as u32)
                } else {
                    v.inv().expect("unit evaluated at zero").pow((-k) as u32)
                };
                term = &term * &p;
            }
            acc = &acc + &term;
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_empty() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "({})", c)?;
                for (idx, &k) in e.iter().enumerate() {
                    if k != 0 {
                        write!(f, "*u{}^{}", idx, k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Scalar::insert_term(&mut terms, e.clone(), c.clone());
        }
        Scalar { terms }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let n = ea.len().max(eb.len());
                let mut e = vec![0; n];
                for (i, s) in e.iter_mut().enumerate() {
                    *s = ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0);
                }
                Scalar::insert_term(&mut terms, e, ca * cb);
            }
        }
        Scalar { terms }
    }
}

forward_value_ops!(Scalar, Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
