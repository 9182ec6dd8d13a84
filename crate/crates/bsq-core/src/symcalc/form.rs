//! Polynomial differential forms in canonical coordinates.
//!
//! Components are indexed by strictly increasing coordinate tuples; signs
//! from reordering are folded into the coefficients at construction, so two
//! forms are equal iff their canonical term maps are equal.

use super::poly::PolyFn;
use super::scalar::Scalar;
use super::SymError;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Strictly increasing tuple of coordinate indices.
pub type IndexTuple = Vec<u8>;

/// Sort an index tuple, returning the permutation sign; `None` on a repeat.
fn canonical_sign(indices: &mut IndexTuple) -> Option<i8> {
    let mut sign = 1i8;
    // Insertion sort; tuples have at most a handful of entries.
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Differential form of fixed degree with [`PolyFn`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyForm {
    vars: Vec<String>,
    degree: usize,
    comps: BTreeMap<IndexTuple, PolyFn>,
}

impl PolyForm {
    pub fn zero(vars: &[&str], degree: usize) -> Self {
        PolyForm {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// A 0-form is a plain function.
    pub fn from_function(f: PolyFn) -> Self {
        let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
        let mut form = PolyForm::zero(&vars, 0);
        form.add_component(Vec::new(), f);
        form
    }

    /// The basis 1-form `dx_idx`.
    pub fn basis_one_form(vars: &[&str], idx: usize) -> Self {
        let mut form = PolyForm::zero(vars, 1);
        form.add_component(vec![idx as u8], PolyFn::constant(vars, Scalar::one()));
        form
    }

    /// Darboux 2-form `sum dx_a /\ dx_b` over the given index pairs.
    pub fn darboux(vars: &[&str], pairs: &[(usize, usize)]) -> Self {
        let mut form = PolyForm::zero(vars, 2);
        for &(a, b) in pairs {
            form.add_component(vec![a as u8, b as u8], PolyFn::constant(vars, Scalar::one()));
        }
        form
    }

    /// Add `f dx_{indices}`, canonicalizing the index tuple. Terms with a
    /// repeated index vanish.
    pub fn add_component(&mut self, mut indices: IndexTuple, f: PolyFn) {
        assert_eq!(indices.len(), self.degree, "index tuple has wrong degree");
        assert!(
            indices.iter().all(|&i| (i as usize) < self.vars.len()),
            "form index out of range"
        );
        let Some(sign) = canonical_sign(&mut indices) else {
            return;
        };
        let f = if sign < 0 { -&f } else { f };
        if f.is_zero() {
            return;
        }
        match self.comps.entry(indices) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &f;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&IndexTuple, &PolyFn)> {
        self.comps.iter()
    }

    pub fn component(&self, indices: &[u8]) -> PolyFn {
        self.comps
            .get(indices)
            .cloned()
            .unwrap_or_else(|| PolyFn::zero(&self.var_refs()))
    }

    pub fn scale(&self, c: &Scalar) -> PolyForm {
        let mut out = PolyForm::zero(&self.var_refs(), self.degree);
        for (idx, f) in &self.comps {
            out.add_component(idx.clone(), f.scale(c));
        }
        out
    }

    /// Exterior derivative; on a top-degree form the result is the zero form
    /// of one degree higher (there are no nonzero components to hold).
    pub fn exterior_derivative(&self) -> PolyForm {
        let vars = self.var_refs();
        let mut out = PolyForm::zero(&vars, self.degree + 1);
        if self.degree + 1 > self.vars.len() {
            return out;
        }
        for (idx, f) in &self.comps {
            for j in 0..self.vars.len() {
                let df = f.partial_deriv(j);
                if df.is_zero() {
                    continue;
                }
                let mut tuple = Vec::with_capacity(self.degree + 1);
                tuple.push(j as u8);
                tuple.extend_from_slice(idx);
                out.add_component(tuple, df);
            }
        }
        out
    }

    /// Wedge product.
    pub fn wedge(&self, rhs: &PolyForm) -> Result<PolyForm, SymError> {
        if self.vars != rhs.vars {
            return Err(SymError::CoordinateMismatch {
                expected: self.vars.join(","),
                found: rhs.vars.join(","),
            });
        }
        let vars = self.var_refs();
        let mut out = PolyForm::zero(&vars, self.degree + rhs.degree);
        if self.degree + rhs.degree > self.vars.len() {
            return Ok(out);
        }
        for (ia, fa) in &self.comps {
            for (ib, fb) in &rhs.comps {
                let mut tuple = ia.clone();
                tuple.extend_from_slice(ib);
                out.add_component(tuple, fa * fb);
            }
        }
        Ok(out)
    }

    /// Interior product with a vector field given componentwise.
    pub fn interior_product(&self, field: &[PolyFn]) -> Result<PolyForm, SymError> {
        if field.len() != self.vars.len() {
            return Err(SymError::DimensionMismatch {
                expected: self.vars.len(),
                found: field.len(),
            });
        }
        let vars = self.var_refs();
        if self.degree == 0 {
            return Ok(PolyForm::zero(&vars, 0));
        }
        let mut out = PolyForm::zero(&vars, self.degree - 1);
        for (idx, f) in &self.comps {
            for (pos, &i) in idx.iter().enumerate() {
                let xi = &field[i as usize];
                if xi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let mut g = xi * f;
                if pos % 2 == 1 {
                    g = -&g;
                }
                out.add_component(rest, g);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, g) in &self.comps {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", g)?;
            for &i in idx {
                write!(f, " d{}", self.vars[i as usize])?;
            }
        }
        Ok(())
    }
}

impl Add for &PolyForm {
    type Output = PolyForm;
    fn add(self, rhs: &PolyForm) -> PolyForm {
        assert_eq!(self.vars, rhs.vars, "coordinate list mismatch in form +");
        assert_eq!(self.degree, rhs.degree, "degree mismatch in form +");
        let mut out = self.clone();
        for (idx, f) in &rhs.comps {
            out.add_component(idx.clone(), f.clone());
        }
        out
    }
}

impl Sub for &PolyForm {
    type Output = PolyForm;
    fn sub(self, rhs: &PolyForm) -> PolyForm {
        self + &(-rhs)
    }
}

impl Neg for &PolyForm {
    type Output = PolyForm;
    fn neg(self) -> PolyForm {
        PolyForm {
            vars: self.vars.clone(),
            degree: self.degree,
            comps: self.comps.iter().map(|(i, f)| (i.clone(), -f)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: &[&str] = &["x", "y"];

    fn x() -> PolyFn {
        PolyFn::var(XY, 0)
    }

    fn y() -> PolyFn {
        PolyFn::var(XY, 1)
    }

    #[test]
    fn d_of_function() {
        // d(xy) = y dx + x dy
        let f = PolyForm::from_function(&x() * &y());
        let df = f.exterior_derivative();
        assert_eq!(df.component(&[0]), y());
        assert_eq!(df.component(&[1]), x());
    }

    #[test]
    fn d_antisymmetry_sign() {
        // d(x^2 y dx) = x^2 dy /\ dx = -x^2 dx /\ dy
        let mut form = PolyForm::zero(XY, 1);
        form.add_component(vec![0], &(&x() * &x()) * &y());
        let d = form.exterior_derivative();
        assert_eq!(d.component(&[0, 1]), -&(&x() * &x()));
    }

    #[test]
    fn d_squared_vanishes() {
        let mut form = PolyForm::zero(XY, 0);
        form.add_component(vec![], &(&x() * &x()) * &(&y() * &y()));
        let dd = form.exterior_derivative().exterior_derivative();
        assert!(dd.is_zero());
    }

    #[test]
    fn canonicalization_sign() {
        // dy /\ dx stored as -(dx /\ dy)
        let mut form = PolyForm::zero(XY, 2);
        form.add_component(vec![1, 0], PolyFn::int(XY, 1));
        assert_eq!(form.component(&[0, 1]), PolyFn::int(XY, -1));
        // Repeated index vanishes.
        let mut degenerate = PolyForm::zero(XY, 2);
        degenerate.add_component(vec![0, 0], x());
        assert!(degenerate.is_zero());
    }

    #[test]
    fn interior_product_signs() {
        // i_{(-x, y)} (dx /\ dy) = -x dy - y dx, which equals -d(xy).
        let omega = PolyForm::darboux(XY, &[(0, 1)]);
        let contraction = omega.interior_product(&[-&x(), y()]).unwrap();
        let d_xy = PolyForm::from_function(&x() * &y()).exterior_derivative();
        assert_eq!(contraction, -&d_xy);
    }

    #[test]
    fn wedge_anticommutes_on_one_forms() {
        let dx = PolyForm::basis_one_form(XY, 0);
        let dy = PolyForm::basis_one_form(XY, 1);
        let a = dx.wedge(&dy).unwrap();
        let b = dy.wedge(&dx).unwrap();
        assert_eq!(a, -&b);
        assert!(dx.wedge(&dx).unwrap().is_zero());
    }

    #[test]
    fn top_degree_derivative_is_empty() {
        let omega = PolyForm::darboux(XY, &[(0, 1)]);
        let d = omega.exterior_derivative();
        assert_eq!(d.degree(), 3);
        assert!(d.is_zero());
    }
}
