//! Exact cohomology of the sheaf of leafwise flat sections over a band
//! of the cylinder.
//!
//! The cylinder carries the foliation by circles at constant height `t`,
//! and a section over a leaf is flat iff it has the form
//! `sigma(t, theta) = a(t) e^{i t theta}`. Continuing such a section once
//! around the circle multiplies it by `e^{2 pi i t}`, so a leaf carries a
//! nonzero global flat section iff its height is an integer. Over a band
//! `S^1 x (a, b)` the cohomology of this sheaf is computed from a cyclic
//! cover of the circle direction by `k >= 3` arcs: the degree-0 to
//! degree-1 coboundary is a `k x k` matrix whose single wrap-around entry
//! carries the holonomy factor.
//!
//! The transcendental factor `e^{-2 pi i t}` is represented by the formal
//! unit `u` (unit index 0 of [`Scalar`]) with the exact semantics
//! "`u = 1` iff `t` is an integer". The coboundary determinant works out
//! to `+-(u - 1)`, so the matrix is invertible away from integer heights;
//! this is certified symbolically rather than numerically. At each
//! integer height the matrix drops rank by exactly one and the cokernel
//! is spanned by the cyclic sum functional, giving one solvability
//! condition per integer in the band.

use crate::linalg::Mat;
use crate::symcalc::{GaussRat, PolyFn, Scalar, SymError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Errors from band complexes and cochain operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CechError {
    #[error("band interval ({lo}, {hi}) is empty")]
    EmptyInterval { lo: BigRational, hi: BigRational },
    #[error("cover needs at least 3 arcs, got {k}")]
    CoverTooSmall { k: usize },
    #[error("coboundary is defined on cochains of degree 0 and 1, got {found}")]
    CochainDegree { found: u8 },
    #[error("expected {expected} coefficient functions, got {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("coefficient functions must be polynomials in the single variable t")]
    UnexpectedCoordinates,
    #[error("exactness certificate failed: {0}")]
    CertificateFailure(&'static str),
    #[error(transparent)]
    Symbolic(#[from] SymError),
}

/// Open height interval `(lo, hi)` of a cylinder band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Band {
    lo: BigRational,
    hi: BigRational,
}

impl Band {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self, CechError> {
        if lo >= hi {
            return Err(CechError::EmptyInterval { lo, hi });
        }
        Ok(Band { lo, hi })
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    /// Integers strictly inside the interval, in increasing order.
    pub fn integer_heights(&self) -> Vec<BigInt> {
        let mut m: BigInt = self.lo.floor().to_integer() + 1;
        let top: BigInt = self.hi.ceil().to_integer() - 1;
        let mut out = Vec::new();
        while m <= top {
            out.push(m.clone());
            m += 1;
        }
        out
    }

    /// Some non-integer rational strictly inside the interval.
    pub fn noninteger_sample(&self) -> BigRational {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        if !mid.is_integer() {
            return mid;
        }
        let half = BigRational::new(1.into(), 2.into());
        if &self.hi - &mid > half {
            mid + half
        } else {
            let quarter = (&self.hi - &mid) / BigRational::from_integer(2.into());
            mid + quarter
        }
    }
}

/// Holonomy of the flat connection around the leaf at a given height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Holonomy {
    pub trivial: bool,
    /// Height mod 1, reported exactly in `[0, 1)`.
    pub phase: BigRational,
}

/// Holonomy around the circle at height `t0`: trivial iff `t0` is an
/// integer.
pub fn holonomy(t0: &BigRational) -> Holonomy {
    let phase = t0 - t0.floor();
    Holonomy { trivial: phase.is_zero(), phase }
}

/// Residual of the flatness equation for a candidate section
/// `a(t) e^{i c(t, theta)}`, divided by the nonvanishing phase factor:
/// `i a (dc/dtheta - t)`. Zero iff the candidate is leafwise flat.
pub fn flat_section_residual(phase_exponent: &PolyFn, amplitude: &PolyFn) -> Result<PolyFn, CechError> {
    let tt: Vec<&str> = phase_exponent.vars().iter().map(|s| s.as_str()).collect();
    if tt.len() != 2 {
        return Err(CechError::UnexpectedCoordinates);
    }
    if amplitude.vars().len() != 1 || amplitude.vars()[0] != tt[0] {
        return Err(CechError::UnexpectedCoordinates);
    }
    let lifted = amplitude.substitute(&[PolyFn::var(&tt, 0)])?;
    let t = PolyFn::var(&tt, 0);
    let residual = &phase_exponent.partial_deriv(1) - &t;
    Ok((&lifted * &residual).scale(&Scalar::i()))
}

/// A leafwise flat section `a(t) e^{i t theta}` over a band.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatSection {
    amplitude: PolyFn,
}

impl FlatSection {
    /// `amplitude` is a polynomial in the single variable `t`.
    pub fn new(amplitude: PolyFn) -> Result<Self, CechError> {
        if amplitude.vars().len() != 1 {
            return Err(CechError::UnexpectedCoordinates);
        }
        Ok(FlatSection { amplitude })
    }

    pub fn amplitude(&self) -> &PolyFn {
        &self.amplitude
    }

    /// The phase exponent `t * theta` in coordinates (t, theta).
    pub fn phase_exponent(&self) -> PolyFn {
        let t_name = self.amplitude.vars()[0].clone();
        let vars = [t_name.as_str(), "theta"];
        &PolyFn::var(&vars, 0) * &PolyFn::var(&vars, 1)
    }

    /// Flatness residual; identically zero by construction of the phase.
    pub fn residual(&self) -> Result<PolyFn, CechError> {
        flat_section_residual(&self.phase_exponent(), &self.amplitude)
    }
}

/// Čech cochain on a cyclic band cover: one polynomial coefficient
/// function of `t` per arc (degree 0) or per intersection (degree 1).
/// Degree-2 cochains are empty because consecutive-arc triples do not
/// intersect.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    degree: u8,
    comps: Vec<PolyFn>,
}

impl Cochain {
    pub fn new(degree: u8, comps: Vec<PolyFn>) -> Result<Self, CechError> {
        if degree > 2 {
            return Err(CechError::CochainDegree { found: degree });
        }
        for c in &comps {
            if c.vars().len() != 1 {
                return Err(CechError::UnexpectedCoordinates);
            }
        }
        Ok(Cochain { degree, comps })
    }

    pub fn zero(degree: u8, count: usize) -> Self {
        let comps = (0..count).map(|_| PolyFn::zero(&["t"])).collect();
        Cochain { degree, comps }
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn components(&self) -> &[PolyFn] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}

/// Summary of the band cohomology: `h0`, `h1` and the integer heights
/// realizing `h1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySummary {
    pub h0: usize,
    pub h1: usize,
    pub bs_leaves: Vec<BigInt>,
}

impl fmt::Display for CohomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H0={} H1={} BS={{", self.h0, self.h1)?;
        for (i, m) in self.bs_leaves.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, "}}")
    }
}

/// Exact solvability analysis of the degree-1 coboundary image inside
/// polynomial cochains of bounded degree.
#[derive(Clone, Debug, PartialEq)]
pub struct SolvabilityReport {
    pub degree_bound: usize,
    pub bs_leaves: Vec<BigInt>,
    /// Dimension of the pointwise cokernel at each integer height; each
    /// entry is 1.
    pub per_leaf_quotient_dim: Vec<usize>,
    /// Witness that the band contains non-integer heights.
    pub noninteger_sample: BigRational,
    /// The coboundary matrix is invertible wherever `u != 1`.
    pub invertible_off_leaves: bool,
    /// Rank of the cyclic-sum functionals on bounded-degree cochains.
    pub functional_rank: usize,
    /// Codimension of the coboundary image.
    pub codimension: usize,
}

/// Cyclic cover of a band by `k >= 3` arcs in the circle direction,
/// with the angle-branch jump placed on the last intersection
/// `(k-1, 0)`.
#[derive(Clone, Debug)]
pub struct CechBandComplex {
    band: Band,
    k: usize,
}

impl CechBandComplex {
    pub fn new(band: Band, k: usize) -> Result<Self, CechError> {
        if k < 3 {
            return Err(CechError::CoverTooSmall { k });
        }
        Ok(CechBandComplex { band, k })
    }

    pub fn band(&self) -> &Band {
        &self.band
    }

    pub fn cover_size(&self) -> usize {
        self.k
    }

    /// Ordered intersections of consecutive arcs, cyclically.
    pub fn intersections(&self) -> Vec<(usize, usize)> {
        (0..self.k).map(|i| (i, (i + 1) % self.k)).collect()
    }

    /// Index of the intersection carrying the angle-branch jump.
    pub fn branch_jump(&self) -> usize {
        self.k - 1
    }

    /// The formal holonomy unit `u` multiplying the wrapped term.
    pub fn holonomy_unit() -> Scalar {
        Scalar::unit(0)
    }

    /// The `k x k` degree-0 coboundary matrix over the unit ring: rows
    /// indexed by intersections, columns by arcs.
    pub fn coboundary_matrix(&self) -> Vec<Vec<Scalar>> {
        let k = self.k;
        let mut m = vec![vec![Scalar::zero(); k]; k];
        for i in 0..k - 1 {
            m[i][i] = -&Scalar::one();
            m[i][i + 1] = Scalar::one();
        }
        m[k - 1][k - 1] = -&Scalar::one();
        m[k - 1][0] = Self::holonomy_unit();
        m
    }

    /// Coboundary of a cochain. Degree 0 maps to degree 1 by consecutive
    /// differences with the holonomy unit on the wrapped term; degree 1
    /// maps to the empty degree-2 cochain.
    pub fn coboundary(&self, alpha: &Cochain) -> Result<Cochain, CechError> {
        match alpha.degree() {
            0 => {
                let a = alpha.components();
                if a.len() != self.k {
                    return Err(CechError::ComponentCount { expected: self.k, found: a.len() });
                }
                let mut comps = Vec::with_capacity(self.k);
                for i in 0..self.k - 1 {
                    comps.push(&a[i + 1] - &a[i]);
                }
                comps.push(&a[0].scale(&Self::holonomy_unit()) - &a[self.k - 1]);
                Cochain::new(1, comps)
            }
            1 => {
                if alpha.components().len() != self.k {
                    return Err(CechError::ComponentCount {
                        expected: self.k,
                        found: alpha.components().len(),
                    });
                }
                Ok(Cochain::zero(2, 0))
            }
            d => Err(CechError::CochainDegree { found: d }),
        }
    }

    /// Symbolic determinant of the coboundary matrix, by cofactor
    /// expansion over the unit ring.
    pub fn coboundary_determinant(&self) -> Scalar {
        fn det(m: &[Vec<Scalar>]) -> Scalar {
            let n = m.len();
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = Scalar::zero();
            for (r, row) in m.iter().enumerate() {
                if row[0].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Scalar>> = m
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != r)
                    .map(|(_, rr)| rr[1..].to_vec())
                    .collect();
                let term = &row[0] * &det(&minor);
                acc = if r % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        det(&self.coboundary_matrix())
    }

    /// Certify that the determinant is a nonzero multiple of `u - 1`, so
    /// the coboundary is injective and surjective wherever `u != 1`.
    fn certify_determinant(&self) -> Result<(), CechError> {
        let det = self.coboundary_determinant();
        let mut c0 = GaussRat::zero();
        let mut c1 = GaussRat::zero();
        for (exps, coeff) in det.terms() {
            match exps.as_slice() {
                [] => c0 = coeff.clone(),
                [1] => c1 = coeff.clone(),
                _ => return Err(CechError::CertificateFailure("determinant is not linear in u")),
            }
        }
        if c1.is_zero() || c0 != -&c1 {
            return Err(CechError::CertificateFailure("determinant does not vanish exactly at u = 1"));
        }
        Ok(())
    }

    /// The coboundary matrix with the holonomy unit set to 1, as it acts
    /// at an integer height.
    fn matrix_at_unit_one(&self) -> Mat<GaussRat> {
        let sym = self.coboundary_matrix();
        let one = [GaussRat::one()];
        let rows: Vec<Vec<GaussRat>> = sym
            .iter()
            .map(|row| row.iter().map(|e| e.eval_units(&one)).collect())
            .collect();
        Mat::from_rows(rows)
    }

    /// Exact rank analysis at an integer height: the matrix has rank
    /// `k - 1` and its image is exactly the kernel of the cyclic-sum
    /// functional.
    fn certify_integer_height(&self) -> Result<(), CechError> {
        let m = self.matrix_at_unit_one();
        if m.rank() != self.k - 1 {
            return Err(CechError::CertificateFailure("rank at an integer height is not k - 1"));
        }
        for j in 0..self.k {
            let mut sum = GaussRat::zero();
            for i in 0..self.k {
                sum += &m[(i, j)];
            }
            if !sum.is_zero() {
                return Err(CechError::CertificateFailure(
                    "cyclic sum does not annihilate the image at an integer height",
                ));
            }
        }
        Ok(())
    }

    /// Cohomology of the band: `h0 = 0` always, `h1` the number of
    /// integer heights inside the band, each contributing one dimension.
    pub fn cohomology_dimensions(&self) -> Result<CohomologySummary, CechError> {
        self.certify_determinant()?;
        let bs_leaves = self.band.integer_heights();
        if !bs_leaves.is_empty() {
            self.certify_integer_height()?;
        }
        Ok(CohomologySummary { h0: 0, h1: bs_leaves.len(), bs_leaves })
    }

    /// Codimension of the coboundary image inside degree-1 cochains with
    /// polynomial coefficients of degree at most `degree_bound`: one
    /// cyclic-sum condition per integer height, certified by exact rank
    /// computations.
    pub fn solvability_analysis(&self, degree_bound: usize) -> Result<SolvabilityReport, CechError> {
        self.certify_determinant()?;
        let bs_leaves = self.band.integer_heights();
        let mut per_leaf_quotient_dim = Vec::with_capacity(bs_leaves.len());
        for _ in &bs_leaves {
            self.certify_integer_height()?;
            let m = self.matrix_at_unit_one();
            per_leaf_quotient_dim.push(self.k - m.rank());
        }
        // Cyclic-sum functionals on the monomial basis t^d e_i evaluate
        // to m^d; across distinct integer heights the rows form a
        // Vandermonde system of full rank once degree_bound + 1 covers
        // the number of leaves.
        let functional_rank = if bs_leaves.is_empty() {
            0
        } else {
            let cols = self.k * (degree_bound + 1);
            let rows: Vec<Vec<GaussRat>> = bs_leaves
                .iter()
                .map(|m| {
                    let mq = GaussRat::from_rational(BigRational::from_integer(m.clone()));
                    let mut powers = Vec::with_capacity(degree_bound + 1);
                    let mut p = GaussRat::one();
                    for _ in 0..=degree_bound {
                        powers.push(p.clone());
                        p = &p * &mq;
                    }
                    let mut row = Vec::with_capacity(cols);
                    for _arc in 0..self.k {
                        row.extend(powers.iter().cloned());
                    }
                    row
                })
                .collect();
            Mat::from_rows(rows).rank()
        };
        if functional_rank != bs_leaves.len() {
            return Err(CechError::CertificateFailure(
                "cyclic-sum functionals are not independent at this degree bound",
            ));
        }
        Ok(SolvabilityReport {
            degree_bound,
            per_leaf_quotient_dim,
            noninteger_sample: self.band.noninteger_sample(),
            invertible_off_leaves: true,
            functional_rank,
            codimension: bs_leaves.len(),
            bs_leaves,
        })
    }
}

/// Cohomology of many band complexes, sequentially.
pub fn batch_cohomology_seq(
    jobs: &[(Band, usize)],
) -> Result<Vec<CohomologySummary>, CechError> {
    jobs.iter()
        .map(|(band, k)| CechBandComplex::new(band.clone(), *k)?.cohomology_dimensions())
        .collect()
}

/// Cohomology of many band complexes, in parallel across jobs.
#[cfg(feature = "parallel")]
pub fn batch_cohomology_par(
    jobs: &[(Band, usize)],
) -> Result<Vec<CohomologySummary>, CechError> {
    use rayon::prelude::*;
    jobs.par_iter()
        .map(|(band, k)| CechBandComplex::new(band.clone(), *k)?.cohomology_dimensions())
        .collect()
}

/// Cohomology of many band complexes, parallel when the feature is on.
pub fn batch_cohomology(jobs: &[(Band, usize)]) -> Result<Vec<CohomologySummary>, CechError> {
    #[cfg(feature = "parallel")]
    {
        batch_cohomology_par(jobs)
    }
    #[cfg(not(feature = "parallel"))]
    {
        batch_cohomology_seq(jobs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn band(lo: (i64, i64), hi: (i64, i64)) -> Band {
        Band::new(rat(lo.0, lo.1), rat(hi.0, hi.1)).unwrap()
    }

    #[test]
    fn holonomy_examples() {
        assert!(holonomy(&rat(3, 1)).trivial);
        assert!(holonomy(&rat(-2, 1)).trivial);
        let h = holonomy(&rat(1, 2));
        assert!(!h.trivial);
        assert_eq!(h.phase, rat(1, 2));
        let h = holonomy(&rat(-5, 2));
        assert_eq!(h.phase, rat(1, 2));
        let h = holonomy(&rat(7, 3));
        assert_eq!(h.phase, rat(1, 3));
    }

    #[test]
    fn flatness_residuals() {
        let tt: &[&str] = &["t", "theta"];
        let tv: &[&str] = &["t"];
        let one = PolyFn::int(tv, 1);
        let t_theta = &PolyFn::var(tt, 0) * &PolyFn::var(tt, 1);
        assert!(flat_section_residual(&t_theta, &one).unwrap().is_zero());
        let zero_phase = PolyFn::zero(tt);
        let r = flat_section_residual(&zero_phase, &one).unwrap();
        let minus_it = PolyFn::var(tt, 0).scale(&-&Scalar::i());
        assert_eq!(r, minus_it);
        let double = t_theta.scale(&Scalar::from_int(2));
        let r = flat_section_residual(&double, &one).unwrap();
        assert_eq!(r, PolyFn::var(tt, 0).scale(&Scalar::i()));
    }

    #[test]
    fn flat_section_type_is_flat() {
        let tv: &[&str] = &["t"];
        let a = &PolyFn::var(tv, 0) + &PolyFn::int(tv, 3);
        let s = FlatSection::new(a).unwrap();
        assert!(s.residual().unwrap().is_zero());
    }

    #[test]
    fn coboundary_of_constant_cochain() {
        let cx = CechBandComplex::new(band((-1, 2), (1, 2)), 3).unwrap();
        let tv: &[&str] = &["t"];
        let ones = Cochain::new(0, vec![PolyFn::int(tv, 1); 3]).unwrap();
        let b = cx.coboundary(&ones).unwrap();
        assert_eq!(b.degree(), 1);
        assert!(b.components()[0].is_zero());
        assert!(b.components()[1].is_zero());
        let u_minus_one =
            PolyFn::constant(tv, &CechBandComplex::holonomy_unit() - &Scalar::one());
        assert_eq!(b.components()[2], u_minus_one);
        // Linearity sends zero to zero.
        let z = Cochain::zero(0, 3);
        assert!(cx.coboundary(&z).unwrap().is_zero());
        // Twice gives the empty degree-2 cochain.
        let dd = cx.coboundary(&b).unwrap();
        assert_eq!(dd.degree(), 2);
        assert!(dd.is_zero());
    }

    #[test]
    fn determinant_is_unit_linear() {
        for k in 3..=8 {
            let cx = CechBandComplex::new(band((0, 1), (1, 1)), k).unwrap();
            let det = cx.coboundary_determinant();
            let u = CechBandComplex::holonomy_unit();
            let expected = if k % 2 == 0 {
                &Scalar::one() - &u
            } else {
                &u - &Scalar::one()
            };
            assert_eq!(det, expected, "k = {}", k);
        }
    }

    #[test]
    fn cohomology_examples() {
        let cx = CechBandComplex::new(band((1, 4), (3, 4)), 3).unwrap();
        let s = cx.cohomology_dimensions().unwrap();
        assert_eq!((s.h0, s.h1), (0, 0));
        assert!(s.bs_leaves.is_empty());

        let cx = CechBandComplex::new(band((-1, 2), (1, 2)), 3).unwrap();
        let s = cx.cohomology_dimensions().unwrap();
        assert_eq!((s.h0, s.h1), (0, 1));
        assert_eq!(s.bs_leaves, vec![BigInt::from(0)]);

        let cx = CechBandComplex::new(band((-1, 2), (5, 2)), 5).unwrap();
        let s = cx.cohomology_dimensions().unwrap();
        assert_eq!((s.h0, s.h1), (0, 3));
        assert_eq!(s.bs_leaves, vec![0.into(), 1.into(), 2.into()]);
        assert_eq!(format!("{}", s), "H0=0 H1=3 BS={0,1,2}");
    }

    #[test]
    fn cover_size_independence() {
        let intervals =
            [band((-1, 2), (5, 2)), band((1, 4), (3, 4)), band((-7, 3), (22, 7)), band((9, 2), (11, 2))];
        for b in &intervals {
            let reference = CechBandComplex::new(b.clone(), 3)
                .unwrap()
                .cohomology_dimensions()
                .unwrap();
            for k in 4..=8 {
                let s = CechBandComplex::new(b.clone(), k).unwrap().cohomology_dimensions().unwrap();
                assert_eq!(s, reference, "cover size {}", k);
            }
        }
    }

    #[test]
    fn integer_enumeration_matches_band() {
        // Open endpoints: integers on the boundary are excluded.
        assert_eq!(band((0, 1), (3, 1)).integer_heights(), vec![BigInt::from(1), 2.into()]);
        assert_eq!(band((-1, 2), (1, 2)).integer_heights(), vec![BigInt::from(0)]);
        assert!(band((1, 4), (3, 4)).integer_heights().is_empty());
        assert_eq!(
            band((-5, 2), (1, 1)).integer_heights(),
            vec![BigInt::from(-2), (-1).into(), 0.into()]
        );
    }

    #[test]
    fn noninteger_sample_lies_inside() {
        for b in [band((0, 1), (2, 1)), band((-1, 2), (5, 2)), band((3, 1), (5, 1)), band((0, 1), (8, 1))] {
            let s = b.noninteger_sample();
            assert!(&s > b.lo() && &s < b.hi());
            assert!(!s.is_integer());
        }
    }

    #[test]
    fn solvability_counts_one_condition_per_leaf() {
        let cx = CechBandComplex::new(band((-1, 2), (5, 2)), 4).unwrap();
        let r = cx.solvability_analysis(8).unwrap();
        assert_eq!(r.per_leaf_quotient_dim, vec![1, 1, 1]);
        assert_eq!(r.functional_rank, 3);
        assert_eq!(r.codimension, 3);
        assert!(r.invertible_off_leaves);
        // Coboundary images are annihilated by the cyclic-sum functional
        // at each leaf: check on a concrete image cochain.
        let tv: &[&str] = &["t"];
        let alpha = Cochain::new(
            0,
            vec![
                PolyFn::var(tv, 0),
                PolyFn::int(tv, 7),
                &PolyFn::var(tv, 0) * &PolyFn::var(tv, 0),
                PolyFn::int(tv, -2),
            ],
        )
        .unwrap();
        let beta = cx.coboundary(&alpha).unwrap();
        for m in &r.bs_leaves {
            let height = GaussRat::from_rational(BigRational::from_integer(m.clone()));
            let mut sum = GaussRat::zero();
            for c in beta.components() {
                // At an integer height the unit is 1.
                let coeffs = c.eval(&[Scalar::from_gauss(height.clone())]);
                sum += &coeffs.eval_units(&[GaussRat::one()]);
            }
            assert!(sum.is_zero(), "cyclic sum at height {}", m);
        }
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(matches!(
            Band::new(rat(1, 2), rat(1, 2)),
            Err(CechError::EmptyInterval { .. })
        ));
        assert!(matches!(
            CechBandComplex::new(band((0, 1), (1, 1)), 2),
            Err(CechError::CoverTooSmall { k: 2 })
        ));
        let cx = CechBandComplex::new(band((0, 1), (1, 1)), 3).unwrap();
        let short = Cochain::zero(0, 2);
        assert!(matches!(
            cx.coboundary(&short),
            Err(CechError::ComponentCount { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn batch_matches_single() {
        let jobs: Vec<(Band, usize)> = (0..12i64)
            .map(|i| (band((-i, 3), (i + 2, 3)), 3 + (i % 6) as usize))
            .collect();
        let seq = batch_cohomology_seq(&jobs).unwrap();
        let auto = batch_cohomology(&jobs).unwrap();
        assert_eq!(seq, auto);
        for ((b, k), s) in jobs.iter().zip(&seq) {
            let single = CechBandComplex::new(b.clone(), *k).unwrap().cohomology_dimensions().unwrap();
            assert_eq!(&single, s);
        }
    }
}
