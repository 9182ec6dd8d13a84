//! Delzant polytopes over exact rationals: convex-hull facet derivation
//! in dimensions 1 to 3, smoothness validation, interior lattice-point
//! enumeration, and the discrete translation-orbit intersection.
//!
//! Half-spaces are stored with primitive integer inward normals, so
//! interior membership of an integer point reduces to exact integer
//! against rational comparisons. Enumeration scans the vertex bounding
//! box in lexicographic order; the parallel variant splits the scan on
//! the first axis and preserves the sequential order.

use crate::linalg::Mat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Errors from polytope construction and queries.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolytopeError {
    #[error("a polytope needs at least one vertex")]
    NoVertices,
    #[error("point has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertex set spans dimension {rank}, expected {dim}")]
    NotFullDimensional { dim: usize, rank: usize },
    #[error("facet derivation covers dimensions 1 to 3; supply facets explicitly for dimension {dim}")]
    FacetsRequired { dim: usize },
    #[error("facet data inconsistent with the vertex set: {0}")]
    InconsistentFacets(&'static str),
}

/// Closed half-space `<normal, x> >= offset` with a primitive integer
/// inward normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    normal: Vec<BigInt>,
    offset: BigRational,
}

impl Facet {
    pub fn new(normal: Vec<BigInt>, offset: BigRational) -> Result<Self, PolytopeError> {
        if normal.iter().all(|n| n.is_zero()) {
            return Err(PolytopeError::InconsistentFacets("zero facet normal"));
        }
        let g = normal.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let normal: Vec<BigInt> = normal.into_iter().map(|n| n / &g).collect();
        let offset = offset / BigRational::from_integer(g);
        Ok(Facet { normal, offset })
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    fn eval(&self, p: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (n, x) in self.normal.iter().zip(p) {
            acc += BigRational::from_integer(n.clone()) * x;
        }
        acc
    }

    fn eval_int(&self, p: &[BigInt]) -> BigInt {
        self.normal.iter().zip(p).map(|(n, x)| n * x).sum()
    }

    /// Strict interior side for an integer point.
    fn strictly_inside_int(&self, p: &[BigInt]) -> bool {
        BigRational::from_integer(self.eval_int(p)) > self.offset
    }

    fn strictly_inside(&self, p: &[BigRational]) -> bool {
        self.eval(p) > self.offset
    }

    fn contains(&self, p: &[BigRational]) -> bool {
        self.eval(p) >= self.offset
    }

    fn active_at(&self, p: &[BigRational]) -> bool {
        self.eval(p) == self.offset
    }
}

/// An integer point tagged with its position relative to the polytope.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticePoint {
    pub coords: Vec<BigInt>,
    pub interior: bool,
}

/// The lattice of integer translations acting on the base, anchored at a
/// rational basepoint; its orbit is `basepoint + Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteAction {
    basepoint: Vec<BigRational>,
}

impl DiscreteAction {
    pub fn new(basepoint: Vec<BigRational>) -> Self {
        DiscreteAction { basepoint }
    }

    pub fn basepoint(&self) -> &[BigRational] {
        &self.basepoint
    }
}

/// One vertex-level violation of the smoothness condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantViolation {
    pub vertex: Vec<BigRational>,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The number of active facets differs from the dimension.
    NonSimple { active_facets: usize },
    /// Primitive edge directions do not form a lattice basis.
    NonUnimodular { det: BigInt },
}

/// Outcome of the vertex-by-vertex smoothness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantVerdict {
    pub violations: Vec<DelzantViolation>,
}

impl DelzantVerdict {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Bounded convex polytope given by exact rational vertices together
/// with derived (or supplied) half-space data.
#[derive(Clone, Debug, PartialEq)]
pub struct DelzantPolytope {
    dim: usize,
    vertices: Vec<Vec<BigRational>>,
    facets: Vec<Facet>,
}

fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scale a nonzero rational direction to a primitive integer vector,
/// preserving orientation.
fn primitive(dir: &[BigRational]) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for d in dir {
        scale = scale.lcm(d.denom());
    }
    let ints: Vec<BigInt> = dir.iter().map(|d| (d * BigRational::from_integer(scale.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    ints.into_iter().map(|n| n / &g).collect()
}

impl DelzantPolytope {
    /// Build from vertices alone; the facet description is derived by
    /// exact convex hull computation in dimensions 1 to 3.
    pub fn from_vertices(points: Vec<Vec<BigRational>>) -> Result<Self, PolytopeError> {
        let (dim, points) = Self::prepare(points)?;
        let facets = match dim {
            1 => Self::facets_1d(&points),
            2 => Self::facets_2d(&points),
            3 => Self::facets_3d(&points),
            _ => return Err(PolytopeError::FacetsRequired { dim }),
        };
        Self::assemble(dim, points, facets)
    }

    /// Build from vertices and an explicit half-space description; the
    /// caller asserts that the half-spaces cut out exactly the hull of
    /// the vertices. Consistency checks: every vertex satisfies every
    /// half-space, every facet is active at `dim` or more vertices, and
    /// every supplied point supported by `dim` independent facets.
    pub fn from_vertices_and_facets(
        points: Vec<Vec<BigRational>>,
        facets: Vec<Facet>,
    ) -> Result<Self, PolytopeError> {
        let (dim, points) = Self::prepare(points)?;
        for f in &facets {
            if f.normal.len() != dim {
                return Err(PolytopeError::DimensionMismatch { expected: dim, found: f.normal.len() });
            }
        }
        Self::assemble(dim, points, facets)
    }

    fn prepare(points: Vec<Vec<BigRational>>) -> Result<(usize, Vec<Vec<BigRational>>), PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::NoVertices);
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(PolytopeError::NotFullDimensional { dim: 0, rank: 0 });
        }
        for p in &points {
            if p.len() != dim {
                return Err(PolytopeError::DimensionMismatch { expected: dim, found: p.len() });
            }
        }
        let set: BTreeSet<Vec<BigRational>> = points.into_iter().collect();
        let points: Vec<Vec<BigRational>> = set.into_iter().collect();
        let diffs: Vec<Vec<BigRational>> =
            points.iter().skip(1).map(|p| sub(p, &points[0])).collect();
        let rank = if diffs.is_empty() { 0 } else { Mat::from_rows(diffs).rank() };
        if rank != dim {
            return Err(PolytopeError::NotFullDimensional { dim, rank });
        }
        Ok((dim, points))
    }

    fn assemble(
        dim: usize,
        points: Vec<Vec<BigRational>>,
        facets: Vec<Facet>,
    ) -> Result<Self, PolytopeError> {
        if facets.len() < dim + 1 {
            return Err(PolytopeError::InconsistentFacets("too few facets for the dimension"));
        }
        for f in &facets {
            if !points.iter().all(|p| f.contains(p)) {
                return Err(PolytopeError::InconsistentFacets("a vertex violates a half-space"));
            }
            let touching = points.iter().filter(|p| f.active_at(p)).count();
            if touching < dim {
                return Err(PolytopeError::InconsistentFacets("a facet misses the vertex set"));
            }
        }
        // Keep exactly the points whose active normals span the space:
        // the actual vertices of the intersection.
        let vertices: Vec<Vec<BigRational>> = points
            .into_iter()
            .filter(|p| {
                let rows: Vec<Vec<BigRational>> = facets
                    .iter()
                    .filter(|f| f.active_at(p))
                    .map(|f| f.normal.iter().cloned().map(BigRational::from_integer).collect())
                    .collect();
                !rows.is_empty() && Mat::from_rows(rows).rank() == dim
            })
            .collect();
        if vertices.is_empty() {
            return Err(PolytopeError::InconsistentFacets("no point is a vertex of the intersection"));
        }
        Ok(DelzantPolytope { dim, vertices, facets })
    }

    fn facets_1d(points: &[Vec<BigRational>]) -> Vec<Facet> {
        let lo = points.iter().map(|p| p[0].clone()).min().unwrap();
        let hi = points.iter().map(|p| p[0].clone()).max().unwrap();
        vec![
            Facet::new(vec![BigInt::one()], lo).unwrap(),
            Facet::new(vec![-BigInt::one()], -hi).unwrap(),
        ]
    }

    fn facets_2d(points: &[Vec<BigRational>]) -> Vec<Facet> {
        // Monotone-chain hull in counterclockwise order; `points` arrive
        // lexicographically sorted and deduplicated.
        fn cross(o: &[BigRational], a: &[BigRational], b: &[BigRational]) -> BigRational {
            (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
        }
        let mut lower: Vec<&Vec<BigRational>> = Vec::new();
        for p in points {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= BigRational::zero() {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<&Vec<BigRational>> = Vec::new();
        for p in points.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= BigRational::zero() {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        let hull: Vec<&Vec<BigRational>> = lower.into_iter().chain(upper).collect();
        let mut facets = Vec::with_capacity(hull.len());
        for i in 0..hull.len() {
            let v = hull[i];
            let w = hull[(i + 1) % hull.len()];
            let d = sub(w, v);
            // Interior lies to the left of each counterclockwise edge.
            let inward = [-d[1].clone(), d[0].clone()];
            let normal = primitive(&inward);
            let offset = normal
                .iter()
                .zip(v)
                .map(|(n, x)| BigRational::from_integer(n.clone()) * x)
                .sum();
            facets.push(Facet::new(normal, offset).unwrap());
        }
        facets
    }

    fn facets_3d(points: &[Vec<BigRational>]) -> Vec<Facet> {
        // Supporting planes through vertex triples with all points on one
        // side; deduplicated on the primitive normal and offset.
        let mut seen: BTreeSet<(Vec<BigInt>, BigRational)> = BTreeSet::new();
        let m = points.len();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let u = sub(&points[j], &points[i]);
                    let v = sub(&points[k], &points[i]);
                    let n = [
                        &u[1] * &v[2] - &u[2] * &v[1],
                        &u[2] * &v[0] - &u[0] * &v[2],
                        &u[0] * &v[1] - &u[1] * &v[0],
                    ];
                    if n.iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    let mut pos = false;
                    let mut neg = false;
                    for p in points {
                        let d = sub(p, &points[i]);
                        let s: BigRational = n.iter().zip(&d).map(|(a, b)| a * b).sum();
                        if s > BigRational::zero() {
                            pos = true;
                        } else if s < BigRational::zero() {
                            neg = true;
                        }
                    }
                    if pos && neg {
                        continue;
                    }
                    let oriented: Vec<BigRational> =
                        if neg { n.iter().map(|c| -c).collect() } else { n.to_vec() };
                    let normal = primitive(&oriented);
                    let offset: BigRational = normal
                        .iter()
                        .zip(&points[i])
                        .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
                        .sum();
                    seen.insert((normal, offset));
                }
            }
        }
        seen.into_iter().map(|(n, o)| Facet::new(n, o).unwrap()).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Cartesian product: coordinates concatenate, facets pad with
    /// zeros, vertices pair up.
    pub fn product(&self, other: &DelzantPolytope) -> DelzantPolytope {
        let dim = self.dim + other.dim;
        let mut vertices = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                let mut v = a.clone();
                v.extend(b.iter().cloned());
                vertices.push(v);
            }
        }
        vertices.sort();
        let mut facets = Vec::with_capacity(self.facets.len() + other.facets.len());
        for f in &self.facets {
            let mut n = f.normal.clone();
            n.extend(std::iter::repeat(BigInt::zero()).take(other.dim));
            facets.push(Facet { normal: n, offset: f.offset.clone() });
        }
        for f in &other.facets {
            let mut n: Vec<BigInt> = std::iter::repeat(BigInt::zero()).take(self.dim).collect();
            n.extend(f.normal.iter().cloned());
            facets.push(Facet { normal: n, offset: f.offset.clone() });
        }
        DelzantPolytope { dim, vertices, facets }
    }

    pub fn contains(&self, p: &[BigRational]) -> bool {
        p.len() == self.dim && self.facets.iter().all(|f| f.contains(p))
    }

    pub fn strictly_contains(&self, p: &[BigRational]) -> bool {
        p.len() == self.dim && self.facets.iter().all(|f| f.strictly_inside(p))
    }

    /// Per-vertex smoothness check: exactly `dim` active facets, and the
    /// primitive edge directions form a lattice basis (determinant of
    /// absolute value 1).
    pub fn validate_delzant(&self) -> DelzantVerdict {
        let mut violations = Vec::new();
        for v in &self.vertices {
            let active: Vec<&Facet> = self.facets.iter().filter(|f| f.active_at(v)).collect();
            if active.len() != self.dim {
                violations.push(DelzantViolation {
                    vertex: v.clone(),
                    kind: ViolationKind::NonSimple { active_facets: active.len() },
                });
                continue;
            }
            let mut directions: Vec<Vec<BigInt>> = Vec::with_capacity(self.dim);
            for dropped in 0..self.dim {
                // The edge leaving `v` keeps every other facet active:
                // its direction spans the nullspace of their normals,
                // oriented inward across the dropped facet.
                let rows: Vec<Vec<BigRational>> = active
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != dropped)
                    .map(|(_, f)| f.normal.iter().cloned().map(BigRational::from_integer).collect())
                    .collect();
                let d = if self.dim == 1 {
                    vec![BigRational::one()]
                } else {
                    let ns = Mat::from_rows(rows).nullspace();
                    debug_assert_eq!(ns.len(), 1);
                    ns.into_iter().next().unwrap()
                };
                let side: BigRational = active[dropped]
                    .normal
                    .iter()
                    .zip(&d)
                    .map(|(n, x)| BigRational::from_integer(n.clone()) * x)
                    .sum();
                debug_assert!(!side.is_zero());
                let oriented: Vec<BigRational> =
                    if side < BigRational::zero() { d.iter().map(|x| -x).collect() } else { d };
                directions.push(primitive(&oriented));
            }
            let rows: Vec<Vec<BigRational>> = directions
                .iter()
                .map(|d| d.iter().cloned().map(BigRational::from_integer).collect())
                .collect();
            let det = Mat::from_rows(rows).det().to_integer();
            if det.abs() != BigInt::one() {
                violations.push(DelzantViolation {
                    vertex: v.clone(),
                    kind: ViolationKind::NonUnimodular { det },
                });
            }
        }
        DelzantVerdict { violations }
    }

    /// Integer candidate range per axis from the vertex bounding box.
    fn axis_ranges(&self) -> Vec<(BigInt, BigInt)> {
        (0..self.dim)
            .map(|i| {
                let lo = self.vertices.iter().map(|v| v[i].clone()).min().unwrap();
                let hi = self.vertices.iter().map(|v| v[i].clone()).max().unwrap();
                (lo.ceil().to_integer(), hi.floor().to_integer())
            })
            .collect()
    }

    fn scan_slab(&self, first: BigInt, ranges: &[(BigInt, BigInt)]) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        let mut point = vec![BigInt::zero(); self.dim];
        point[0] = first;
        self.scan_rec(1, ranges, &mut point, &mut out);
        out
    }

    fn scan_rec(
        &self,
        axis: usize,
        ranges: &[(BigInt, BigInt)],
        point: &mut Vec<BigInt>,
        out: &mut Vec<LatticePoint>,
    ) {
        if axis == self.dim {
            if self.facets.iter().all(|f| f.strictly_inside_int(point)) {
                out.push(LatticePoint { coords: point.clone(), interior: true });
            }
            return;
        }
        let (lo, hi) = &ranges[axis];
        let mut x = lo.clone();
        while &x <= hi {
            point[axis] = x.clone();
            self.scan_rec(axis + 1, ranges, point, out);
            x += 1;
        }
    }

    /// Interior lattice points in lexicographic order, sequentially.
    pub fn interior_lattice_points_seq(&self) -> Vec<LatticePoint> {
        let ranges = self.axis_ranges();
        let (lo, hi) = &ranges[0];
        let mut out = Vec::new();
        let mut x = lo.clone();
        while &x <= hi {
            out.extend(self.scan_slab(x.clone(), &ranges));
            x += 1;
        }
        out
    }

    /// Interior lattice points, scanning first-axis slabs in parallel;
    /// the slab order is preserved, so the output matches the
    /// sequential variant exactly.
    #[cfg(feature = "parallel")]
    pub fn interior_lattice_points_par(&self) -> Vec<LatticePoint> {
        use rayon::prelude::*;
        let ranges = self.axis_ranges();
        let (lo, hi) = &ranges[0];
        let mut firsts = Vec::new();
        let mut x = lo.clone();
        while &x <= hi {
            firsts.push(x.clone());
            x += 1;
        }
        firsts
            .into_par_iter()
            .map(|first| self.scan_slab(first, &ranges))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }

    /// Interior lattice points; parallel when the feature is enabled.
    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        #[cfg(feature = "parallel")]
        {
            self.interior_lattice_points_par()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.interior_lattice_points_seq()
        }
    }

    /// The orbit `basepoint + Z^n` intersected with the strict interior,
    /// in lexicographic order. With an integral basepoint this is the
    /// interior lattice-point set.
    pub fn discrete_cotangent_orbit(
        &self,
        action: &DiscreteAction,
    ) -> Result<Vec<Vec<BigRational>>, PolytopeError> {
        let b = action.basepoint();
        if b.len() != self.dim {
            return Err(PolytopeError::DimensionMismatch { expected: self.dim, found: b.len() });
        }
        let mut out = Vec::new();
        let mut shifts = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let lo = self.vertices.iter().map(|v| v[i].clone()).min().unwrap();
            let hi = self.vertices.iter().map(|v| v[i].clone()).max().unwrap();
            shifts.push(((lo - &b[i]).ceil().to_integer(), (hi - &b[i]).floor().to_integer()));
        }
        let mut point = vec![BigRational::zero(); self.dim];
        self.orbit_rec(0, b, &shifts, &mut point, &mut out);
        Ok(out)
    }

    fn orbit_rec(
        &self,
        axis: usize,
        base: &[BigRational],
        shifts: &[(BigInt, BigInt)],
        point: &mut Vec<BigRational>,
        out: &mut Vec<Vec<BigRational>>,
    ) {
        if axis == self.dim {
            if self.facets.iter().all(|f| f.strictly_inside(point)) {
                out.push(point.clone());
            }
            return;
        }
        let (lo, hi) = &shifts[axis];
        let mut m = lo.clone();
        while &m <= hi {
            point[axis] = &base[axis] + BigRational::from_integer(m.clone());
            self.orbit_rec(axis + 1, base, shifts, point, out);
            m += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcalc::{PolyFn, PolyForm, PolyMap};

    fn rp(coords: &[(i64, i64)]) -> Vec<BigRational> {
        coords.iter().map(|(n, d)| BigRational::new((*n).into(), (*d).into())).collect()
    }

    fn ip(coords: &[i64]) -> Vec<BigRational> {
        coords.iter().map(|&n| BigRational::from_integer(n.into())).collect()
    }

    fn poly(points: &[&[i64]]) -> DelzantPolytope {
        DelzantPolytope::from_vertices(points.iter().map(|p| ip(p)).collect()).unwrap()
    }

    #[test]
    fn segment_hull_and_interior() {
        let p = poly(&[&[0], &[3]]);
        assert_eq!(p.facets().len(), 2);
        let pts = p.interior_lattice_points();
        let coords: Vec<i64> = pts.iter().map(|q| i64::try_from(&q.coords[0]).unwrap()).collect();
        assert_eq!(coords, vec![1, 2]);
        assert!(p.validate_delzant().is_ok());
    }

    #[test]
    fn square_hull_from_messy_input() {
        // Duplicates and an interior point are dropped by the hull.
        let mut points: Vec<Vec<BigRational>> =
            [[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]].iter().map(|p| ip(&p[..])).collect();
        points.push(rp(&[(1, 2), (1, 2)]));
        let p = DelzantPolytope::from_vertices(points).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        assert!(p.validate_delzant().is_ok());
        assert!(p.interior_lattice_points().is_empty());
        assert!(p.strictly_contains(&rp(&[(1, 2), (1, 2)])));
        assert!(p.contains(&ip(&[1, 1])));
        assert!(!p.contains(&ip(&[2, 0])));
    }

    #[test]
    fn simplex_is_smooth_but_stretched_triangle_is_not() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(p.validate_delzant().is_ok());
        let q = poly(&[&[0, 0], &[2, 0], &[0, 1]]);
        let verdict = q.validate_delzant();
        assert_eq!(verdict.violations.len(), 1);
        let v = &verdict.violations[0];
        assert_eq!(v.vertex, ip(&[0, 1]));
        match &v.kind {
            ViolationKind::NonUnimodular { det } => assert_eq!(det.abs(), BigInt::from(2)),
            other => panic!("unexpected violation {:?}", other),
        }
    }

    #[test]
    fn side_eight_triangle_has_21_interior_points() {
        let p = poly(&[&[0, 0], &[8, 0], &[0, 8]]);
        assert!(p.validate_delzant().is_ok());
        let pts = p.interior_lattice_points();
        assert_eq!(pts.len(), 21);
        assert!(pts.iter().all(|q| q.interior));
        // Oracle: direct enumeration of x > 0, y > 0, x + y < 8.
        let mut expected = Vec::new();
        for x in 1i64..8 {
            for y in 1i64..8 {
                if x + y < 8 {
                    expected.push(vec![BigInt::from(x), BigInt::from(y)]);
                }
            }
        }
        expected.sort();
        let got: Vec<Vec<BigInt>> = pts.into_iter().map(|q| q.coords).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn cube_and_octahedron() {
        let corners: Vec<&[i64]> = vec![
            &[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2],
            &[2, 2, 0], &[2, 0, 2], &[0, 2, 2], &[2, 2, 2],
        ];
        let cube = poly(&corners);
        assert_eq!(cube.facets().len(), 6);
        assert!(cube.validate_delzant().is_ok());
        let pts = cube.interior_lattice_points();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].coords, vec![BigInt::one(), BigInt::one(), BigInt::one()]);

        let octa = poly(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
        assert_eq!(octa.facets().len(), 8);
        let verdict = octa.validate_delzant();
        assert!(!verdict.is_ok());
        assert!(verdict
            .violations
            .iter()
            .all(|v| matches!(v.kind, ViolationKind::NonSimple { active_facets: 4 })));
    }

    #[test]
    fn product_counts_multiply() {
        let seg = poly(&[&[0], &[4]]);
        let square = seg.product(&seg);
        assert_eq!(square.dim(), 2);
        assert_eq!(square.facets().len(), 4);
        assert_eq!(square.vertices().len(), 4);
        let a = seg.interior_lattice_points().len();
        let b = square.interior_lattice_points().len();
        assert_eq!(b, a * a);
        assert!(square.validate_delzant().is_ok());
    }

    #[test]
    fn four_dimensional_with_explicit_facets() {
        // The hypercube [0, 3]^4 described by its 8 half-spaces.
        let mut vertices = Vec::new();
        for mask in 0..16u32 {
            let v: Vec<i64> = (0..4).map(|i| if mask >> i & 1 == 1 { 3 } else { 0 }).collect();
            vertices.push(ip(&v));
        }
        let mut facets = Vec::new();
        for i in 0..4 {
            let mut n = vec![BigInt::zero(); 4];
            n[i] = BigInt::one();
            facets.push(Facet::new(n, BigRational::zero()).unwrap());
            let mut n = vec![BigInt::zero(); 4];
            n[i] = -BigInt::one();
            facets.push(Facet::new(n, BigRational::from_integer((-3).into())).unwrap());
        }
        let p = DelzantPolytope::from_vertices_and_facets(vertices, facets).unwrap();
        assert_eq!(p.vertices().len(), 16);
        assert!(p.validate_delzant().is_ok());
        assert_eq!(p.interior_lattice_points().len(), 16);
        // Vertex-only input in dimension 4 is refused.
        let err = DelzantPolytope::from_vertices(p.vertices().to_vec());
        assert!(matches!(err, Err(PolytopeError::FacetsRequired { dim: 4 })));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let collinear = DelzantPolytope::from_vertices(vec![ip(&[0, 0]), ip(&[1, 1]), ip(&[2, 2])]);
        assert!(matches!(collinear, Err(PolytopeError::NotFullDimensional { dim: 2, rank: 1 })));
        let none = DelzantPolytope::from_vertices(Vec::new());
        assert!(matches!(none, Err(PolytopeError::NoVertices)));
        let ragged = DelzantPolytope::from_vertices(vec![ip(&[0, 0]), ip(&[1])]);
        assert!(matches!(ragged, Err(PolytopeError::DimensionMismatch { .. })));
    }

    #[test]
    fn orbit_with_integral_basepoint_matches_lattice() {
        let p = poly(&[&[0, 0], &[8, 0], &[0, 8]]);
        let orbit = p.discrete_cotangent_orbit(&DiscreteAction::new(ip(&[0, 0]))).unwrap();
        let lattice: Vec<Vec<BigRational>> = p
            .interior_lattice_points()
            .into_iter()
            .map(|q| q.coords.into_iter().map(BigRational::from_integer).collect())
            .collect();
        assert_eq!(orbit, lattice);
    }

    #[test]
    fn orbit_with_fractional_basepoint() {
        let square = poly(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        let orbit =
            square.discrete_cotangent_orbit(&DiscreteAction::new(rp(&[(1, 2), (1, 2)]))).unwrap();
        assert_eq!(orbit, vec![rp(&[(1, 2), (1, 2)])]);
        // An integral basepoint finds no interior translate in the unit
        // square, however far away it starts.
        let empty =
            square.discrete_cotangent_orbit(&DiscreteAction::new(ip(&[100, -100]))).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        let shapes = [
            poly(&[&[0, 0], &[8, 0], &[0, 8]]),
            poly(&[&[0, 0], &[12, 0], &[12, 7], &[0, 7]]),
        ];
        for p in &shapes {
            assert_eq!(p.interior_lattice_points(), p.interior_lattice_points_seq());
        }
    }

    #[test]
    fn unimodular_image_preserves_count_and_verdict() {
        // x -> Ux + c with U = [[1, 1], [0, 1]], c = (3, -2).
        let p = poly(&[&[0, 0], &[8, 0], &[0, 8]]);
        let image: Vec<Vec<BigRational>> = p
            .vertices()
            .iter()
            .map(|v| {
                vec![
                    &v[0] + &v[1] + BigRational::from_integer(3.into()),
                    &v[1] + BigRational::from_integer((-2).into()),
                ]
            })
            .collect();
        let q = DelzantPolytope::from_vertices(image).unwrap();
        assert_eq!(q.interior_lattice_points().len(), 21);
        assert!(q.validate_delzant().is_ok());
    }

    #[test]
    fn translation_lift_preserves_liouville() {
        // The cotangent lift of a base translation fixes p and shifts q;
        // the tautological form p1 dq1 + p2 dq2 pulls back to itself.
        let v: &[&str] = &["q1", "q2", "p1", "p2"];
        let q1 = PolyFn::var(v, 0);
        let q2 = PolyFn::var(v, 1);
        let p1 = PolyFn::var(v, 2);
        let p2 = PolyFn::var(v, 3);
        let phi = PolyMap::new(
            v,
            v,
            vec![&q1 + &PolyFn::int(v, 1), &q2 + &PolyFn::int(v, 2), p1.clone(), p2.clone()],
        )
        .unwrap();
        let mut tautological = PolyForm::zero(v, 1);
        tautological.add_component(vec![0], p1.clone());
        tautological.add_component(vec![1], p2.clone());
        assert_eq!(phi.pullback(&tautological).unwrap(), tautological);
    }
}
