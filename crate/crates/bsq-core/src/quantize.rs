//! Quantization models over fiber inventories: the toric count, the
//! older models with infinite-dimensional summands, and the finite
//! model that counts every Bohr-Sommerfeld fiber once.
//!
//! An inventory records the count-level data of an integrable system:
//! regular Bohr-Sommerfeld fiber count, focus-focus fibers with their
//! node counts and flags, hyperbolic point data, and remaining
//! elliptic-elliptic corners (the currency of nodal trades). The models
//! map inventories to reports concentrated in degree `n`.

use crate::polytope::{DelzantPolytope, DelzantViolation};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from inventory construction and the quantization models.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuantizeError {
    #[error("polytope fails the smoothness condition at {} vertices", violations.len())]
    NotDelzant { violations: Vec<DelzantViolation> },
    #[error("inventory invalid: {0}")]
    InvalidInventory(&'static str),
    #[error("model defined for half-dimension 1 or 2, got {n}")]
    UnsupportedHalfDimension { n: usize },
    #[error("model requires a compact inventory")]
    NonCompact,
    #[error(
        "refusing hyperbolic multiplicity {k_h}: the finite model accepts at most one \
         hyperbolic block per point"
    )]
    UnsupportedHyperbolicMultiplicity { k_h: usize },
    #[error("cannot trade {requested} corners, only {available} remain")]
    InsufficientCorners { available: usize, requested: usize },
    #[error("Chern-square input must be even and nonnegative, got {c1_squared}")]
    InvalidChernSquare { c1_squared: i64 },
}

/// One focus-focus fiber: its node count, Bohr-Sommerfeld status, and
/// whether the fiber itself is compact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FocusFiber {
    pub nodes: usize,
    pub is_bs: bool,
    pub compact_fiber: bool,
}

/// Count-level inventory of the fibers of an integrable system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberInventory {
    n: usize,
    compact: bool,
    regular_bs_count: usize,
    focus_fibers: Vec<FocusFiber>,
    hyperbolic_point_count: usize,
    max_hyperbolic_multiplicity: usize,
    elliptic_corners: usize,
}

impl FiberInventory {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: usize,
        compact: bool,
        regular_bs_count: usize,
        focus_fibers: Vec<FocusFiber>,
        hyperbolic_point_count: usize,
        max_hyperbolic_multiplicity: usize,
        elliptic_corners: usize,
    ) -> Result<Self, QuantizeError> {
        if n == 0 {
            return Err(QuantizeError::InvalidInventory("half-dimension must be positive"));
        }
        if !focus_fibers.is_empty() && n < 2 {
            return Err(QuantizeError::InvalidInventory(
                "focus-focus fibers need half-dimension at least 2",
            ));
        }
        if focus_fibers.iter().any(|f| f.nodes == 0) {
            return Err(QuantizeError::InvalidInventory("every focus-focus fiber has a node"));
        }
        if hyperbolic_point_count > 0 && n != 1 {
            return Err(QuantizeError::InvalidInventory(
                "hyperbolic point counts are tracked only in half-dimension 1",
            ));
        }
        if hyperbolic_point_count > 0 && max_hyperbolic_multiplicity == 0 {
            return Err(QuantizeError::InvalidInventory(
                "hyperbolic points present but multiplicity zero",
            ));
        }
        Ok(FiberInventory {
            n,
            compact,
            regular_bs_count,
            focus_fibers,
            hyperbolic_point_count,
            max_hyperbolic_multiplicity,
            elliptic_corners,
        })
    }

    /// Inventory of a closed toric system: the regular count is the
    /// interior lattice count of its polytope and every vertex is an
    /// elliptic corner.
    pub fn from_polytope(p: &DelzantPolytope) -> Result<Self, QuantizeError> {
        let verdict = p.validate_delzant();
        if !verdict.is_ok() {
            return Err(QuantizeError::NotDelzant { violations: verdict.violations });
        }
        FiberInventory::new(
            p.dim(),
            true,
            p.interior_lattice_points().len(),
            Vec::new(),
            0,
            0,
            p.vertices().len(),
        )
    }

    pub fn half_dimension(&self) -> usize {
        self.n
    }

    pub fn is_compact(&self) -> bool {
        self.compact
    }

    pub fn regular_bs_count(&self) -> usize {
        self.regular_bs_count
    }

    pub fn focus_fibers(&self) -> &[FocusFiber] {
        &self.focus_fibers
    }

    pub fn hyperbolic_point_count(&self) -> usize {
        self.hyperbolic_point_count
    }

    pub fn max_hyperbolic_multiplicity(&self) -> usize {
        self.max_hyperbolic_multiplicity
    }

    pub fn elliptic_corners(&self) -> usize {
        self.elliptic_corners
    }

    pub fn bs_focus_count(&self) -> usize {
        self.focus_fibers.iter().filter(|f| f.is_bs).count()
    }
}

/// Which quantization model produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelTag {
    Toric,
    Old,
    New,
}

/// The two infinite-dimensional summand kinds of the older models:
/// Taylor-series spaces and smooth complex line functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfiniteSummandKind {
    TaylorSeries,
    SmoothLineFunctions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfiniteSummand {
    pub kind: InfiniteSummandKind,
    pub mult: usize,
}

/// Quantization output: everything sits in cohomology degree `n`, split
/// into a finite part and optional infinite-dimensional summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantizationReport {
    pub model: ModelTag,
    pub degree: usize,
    pub finite_dim: usize,
    pub infinite: Vec<InfiniteSummand>,
}

impl fmt::Display for QuantizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.finite_dim > 0 {
            parts.push(format!("\u{2102}^{}", self.finite_dim));
        }
        for s in &self.infinite {
            if s.mult == 0 {
                continue;
            }
            let base = match s.kind {
                InfiniteSummandKind::TaylorSeries => "(\u{2102}^\u{2115})",
                InfiniteSummandKind::SmoothLineFunctions => "(C^\u{221e}(\u{211d};\u{2102}))",
            };
            parts.push(format!("{}^{}", base, s.mult));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" \u{2295} "))
    }
}

/// Toric model: one dimension per interior lattice point, concentrated
/// in degree `n`, no infinite summands. Requires a smooth polytope.
pub fn quantize_toric(p: &DelzantPolytope) -> Result<QuantizationReport, QuantizeError> {
    let verdict = p.validate_delzant();
    if !verdict.is_ok() {
        return Err(QuantizeError::NotDelzant { violations: verdict.violations });
    }
    Ok(QuantizationReport {
        model: ModelTag::Toric,
        degree: p.dim(),
        finite_dim: p.interior_lattice_points().len(),
        infinite: Vec::new(),
    })
}

/// Older models. Half-dimension 1 (compact): one Taylor-series pair per
/// hyperbolic point on top of the regular count. Half-dimension 2: each
/// Bohr-Sommerfeld focus-focus fiber contributes smooth-line summands,
/// one per node, less one when the fiber is non-compact; non-BS fibers
/// contribute nothing.
pub fn quantize_old(inv: &FiberInventory) -> Result<QuantizationReport, QuantizeError> {
    match inv.half_dimension() {
        1 => {
            if !inv.is_compact() {
                return Err(QuantizeError::NonCompact);
            }
            let mult = 2 * inv.hyperbolic_point_count();
            let infinite = if mult > 0 {
                vec![InfiniteSummand { kind: InfiniteSummandKind::TaylorSeries, mult }]
            } else {
                Vec::new()
            };
            Ok(QuantizationReport {
                model: ModelTag::Old,
                degree: 1,
                finite_dim: inv.regular_bs_count(),
                infinite,
            })
        }
        2 => {
            let mult: usize = inv
                .focus_fibers()
                .iter()
                .filter(|f| f.is_bs)
                .map(|f| if f.compact_fiber { f.nodes } else { f.nodes - 1 })
                .sum();
            let infinite = if mult > 0 {
                vec![InfiniteSummand { kind: InfiniteSummandKind::SmoothLineFunctions, mult }]
            } else {
                Vec::new()
            };
            Ok(QuantizationReport {
                model: ModelTag::Old,
                degree: 2,
                finite_dim: inv.regular_bs_count(),
                infinite,
            })
        }
        n => Err(QuantizeError::UnsupportedHalfDimension { n }),
    }
}

/// Finite model: every Bohr-Sommerfeld fiber, regular or focus-focus,
/// contributes one dimension, independent of node counts; hyperbolic
/// points contribute nothing. Refuses hyperbolic multiplicity 2 or
/// higher, where the result is only conjectured.
pub fn quantize_new(inv: &FiberInventory) -> Result<QuantizationReport, QuantizeError> {
    if inv.max_hyperbolic_multiplicity() >= 2 {
        return Err(QuantizeError::UnsupportedHyperbolicMultiplicity {
            k_h: inv.max_hyperbolic_multiplicity(),
        });
    }
    if !inv.is_compact() {
        return Err(QuantizeError::NonCompact);
    }
    Ok(QuantizationReport {
        model: ModelTag::New,
        degree: inv.half_dimension(),
        finite_dim: inv.regular_bs_count() + inv.bs_focus_count(),
        infinite: Vec::new(),
    })
}

/// Trade elliptic corners for focus-focus fibers: each trade consumes
/// one corner and adds one single-node fiber whose Bohr-Sommerfeld flag
/// the caller supplies.
pub fn nodal_trade(
    inv: &FiberInventory,
    new_fiber_bs: &[bool],
) -> Result<FiberInventory, QuantizeError> {
    let requested = new_fiber_bs.len();
    if requested > inv.elliptic_corners() {
        return Err(QuantizeError::InsufficientCorners {
            available: inv.elliptic_corners(),
            requested,
        });
    }
    let mut focus = inv.focus_fibers().to_vec();
    for &is_bs in new_fiber_bs {
        focus.push(FocusFiber { nodes: 1, is_bs, compact_fiber: true });
    }
    FiberInventory::new(
        inv.half_dimension(),
        inv.is_compact(),
        inv.regular_bs_count(),
        focus,
        inv.hyperbolic_point_count(),
        inv.max_hyperbolic_multiplicity(),
        inv.elliptic_corners() - requested,
    )
}

/// The K3 inventory: compact, half-dimension 2, 26 regular
/// Bohr-Sommerfeld fibers and 24 single-node Bohr-Sommerfeld
/// focus-focus fibers, no corners left.
pub fn build_k3_inventory() -> FiberInventory {
    let focus =
        vec![FocusFiber { nodes: 1, is_bs: true, compact_fiber: true }; 24];
    FiberInventory::new(2, true, 26, focus, 0, 0, 0).expect("K3 inventory is valid")
}

/// Kähler dimension count for a K3 surface: half the Chern square plus
/// two. The input must be even and nonnegative.
pub fn kahler_dimension_k3(c1_squared: i64) -> Result<i64, QuantizeError> {
    if c1_squared < 0 || c1_squared % 2 != 0 {
        return Err(QuantizeError::InvalidChernSquare { c1_squared });
    }
    Ok(c1_squared / 2 + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn triangle(side: i64) -> DelzantPolytope {
        let v = |x: i64, y: i64| {
            vec![BigRational::from_integer(x.into()), BigRational::from_integer(y.into())]
        };
        DelzantPolytope::from_vertices(vec![v(0, 0), v(side, 0), v(0, side)]).unwrap()
    }

    fn segment(len: i64) -> DelzantPolytope {
        let v = |x: i64| vec![BigRational::from_integer(x.into())];
        DelzantPolytope::from_vertices(vec![v(0), v(len)]).unwrap()
    }

    #[test]
    fn k3_headline_agreement() {
        let inv = build_k3_inventory();
        let new = quantize_new(&inv).unwrap();
        assert_eq!(new.finite_dim, 50);
        assert!(new.infinite.is_empty());
        assert_eq!(new.degree, 2);
        assert_eq!(kahler_dimension_k3(96).unwrap(), 50);
        assert_eq!(new.finite_dim as i64, kahler_dimension_k3(96).unwrap());
        assert_eq!(format!("{}", new), "ℂ^50");
    }

    #[test]
    fn k3_old_model() {
        let old = quantize_old(&build_k3_inventory()).unwrap();
        assert_eq!(old.finite_dim, 26);
        assert_eq!(
            old.infinite,
            vec![InfiniteSummand { kind: InfiniteSummandKind::SmoothLineFunctions, mult: 24 }]
        );
        assert_eq!(format!("{}", old), "ℂ^26 ⊕ (C^∞(ℝ;ℂ))^24");
        // Conservation: finite part plus summand indices matches the
        // finite model's dimension.
        assert_eq!(old.finite_dim + old.infinite[0].mult, 50);
    }

    #[test]
    fn surface_model_with_hyperbolic_points() {
        let inv = FiberInventory::new(1, true, 5, Vec::new(), 2, 1, 0).unwrap();
        let old = quantize_old(&inv).unwrap();
        assert_eq!(old.finite_dim, 5);
        assert_eq!(
            old.infinite,
            vec![InfiniteSummand { kind: InfiniteSummandKind::TaylorSeries, mult: 4 }]
        );
        assert_eq!(format!("{}", old), "ℂ^5 ⊕ (ℂ^ℕ)^4");
        let new = quantize_new(&inv).unwrap();
        assert_eq!(new.finite_dim, 5);
        assert!(new.infinite.is_empty());
    }

    #[test]
    fn non_bs_neighborhood_is_zero() {
        let fiber = FocusFiber { nodes: 1, is_bs: false, compact_fiber: true };
        let inv = FiberInventory::new(2, false, 0, vec![fiber], 0, 0, 0).unwrap();
        let old = quantize_old(&inv).unwrap();
        assert_eq!(old.finite_dim, 0);
        assert!(old.infinite.is_empty());
        assert_eq!(format!("{}", old), "0");
    }

    #[test]
    fn noncompact_fiber_drops_one_node() {
        let make = |compact_fiber| {
            let fiber = FocusFiber { nodes: 3, is_bs: true, compact_fiber };
            FiberInventory::new(2, false, 0, vec![fiber], 0, 0, 0).unwrap()
        };
        let compact = quantize_old(&make(true)).unwrap();
        assert_eq!(compact.infinite[0].mult, 3);
        let open = quantize_old(&make(false)).unwrap();
        assert_eq!(open.infinite[0].mult, 2);
    }

    #[test]
    fn node_count_independence() {
        for nodes in 1..=5 {
            let fiber = FocusFiber { nodes, is_bs: true, compact_fiber: true };
            let inv = FiberInventory::new(2, true, 0, vec![fiber], 0, 0, 0).unwrap();
            let new = quantize_new(&inv).unwrap();
            assert_eq!(new.finite_dim, 1);
        }
    }

    #[test]
    fn hyperbolic_multiplicity_refusal() {
        let inv = FiberInventory::new(1, true, 3, Vec::new(), 1, 2, 0).unwrap();
        match quantize_new(&inv) {
            Err(QuantizeError::UnsupportedHyperbolicMultiplicity { k_h: 2 }) => {}
            other => panic!("expected refusal, got {:?}", other),
        }
        // Multiplicity 1 stays in scope.
        let inv = FiberInventory::new(1, true, 3, Vec::new(), 1, 1, 0).unwrap();
        assert_eq!(quantize_new(&inv).unwrap().finite_dim, 3);
    }

    #[test]
    fn compactness_requirements() {
        let open = FiberInventory::new(2, false, 1, Vec::new(), 0, 0, 0).unwrap();
        assert!(matches!(quantize_new(&open), Err(QuantizeError::NonCompact)));
        let open1 = FiberInventory::new(1, false, 1, Vec::new(), 0, 0, 0).unwrap();
        assert!(matches!(quantize_old(&open1), Err(QuantizeError::NonCompact)));
        let deep = FiberInventory::new(3, true, 1, Vec::new(), 0, 0, 0).unwrap();
        assert!(matches!(
            quantize_old(&deep),
            Err(QuantizeError::UnsupportedHalfDimension { n: 3 })
        ));
    }

    #[test]
    fn nodal_trades() {
        // A twelve-corner piece trades all corners into fibers.
        let piece = FiberInventory::new(2, true, 13, Vec::new(), 0, 0, 12).unwrap();
        let traded = nodal_trade(&piece, &[true; 12]).unwrap();
        assert_eq!(traded.focus_fibers().len(), 12);
        assert_eq!(traded.elliptic_corners(), 0);
        assert!(traded.focus_fibers().iter().all(|f| f.nodes == 1 && f.is_bs));
        let same = nodal_trade(&piece, &[]).unwrap();
        assert_eq!(same, piece);
        match nodal_trade(&traded, &[false]) {
            Err(QuantizeError::InsufficientCorners { available: 0, requested: 1 }) => {}
            other => panic!("expected corner exhaustion, got {:?}", other),
        }
    }

    #[test]
    fn toric_counts() {
        let t = quantize_toric(&triangle(8)).unwrap();
        assert_eq!((t.finite_dim, t.degree), (21, 2));
        assert!(t.infinite.is_empty());
        let sq = DelzantPolytope::from_vertices(
            [[0, 0], [1, 0], [1, 1], [0, 1]]
                .iter()
                .map(|p| p.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(quantize_toric(&sq).unwrap().finite_dim, 0);
        let seg = quantize_toric(&segment(3)).unwrap();
        assert_eq!((seg.finite_dim, seg.degree), (2, 1));
        // Non-smooth input is rejected.
        let bad = DelzantPolytope::from_vertices(
            [[0, 0], [2, 0], [0, 1]]
                .iter()
                .map(|p| p.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
        .unwrap();
        assert!(matches!(quantize_toric(&bad), Err(QuantizeError::NotDelzant { .. })));
    }

    #[test]
    fn path_consistency_toric_vs_new() {
        for p in [triangle(8), triangle(5), segment(7)] {
            let toric = quantize_toric(&p).unwrap();
            let inv = FiberInventory::from_polytope(&p).unwrap();
            let new = quantize_new(&inv).unwrap();
            assert_eq!(new.finite_dim, toric.finite_dim);
        }
    }

    #[test]
    fn kunneth_products_multiply() {
        let a = segment(5);
        let b = triangle(6);
        let prod = a.product(&b);
        let fa = quantize_toric(&a).unwrap().finite_dim;
        let fb = quantize_toric(&b).unwrap().finite_dim;
        let fp = quantize_toric(&prod).unwrap().finite_dim;
        assert_eq!(fp, fa * fb);
        assert_eq!(quantize_toric(&prod).unwrap().degree, 3);
    }

    #[test]
    fn kahler_count_inputs() {
        assert_eq!(kahler_dimension_k3(0).unwrap(), 2);
        assert_eq!(kahler_dimension_k3(4).unwrap(), 4);
        assert!(matches!(
            kahler_dimension_k3(97),
            Err(QuantizeError::InvalidChernSquare { c1_squared: 97 })
        ));
        assert!(matches!(kahler_dimension_k3(-2), Err(QuantizeError::InvalidChernSquare { .. })));
    }

    #[test]
    fn report_json_round_trip() {
        let new = quantize_new(&build_k3_inventory()).unwrap();
        let text = serde_json::to_string(&new).unwrap();
        let back: QuantizationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, new);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            value,
            serde_json::json!({"model": "new", "degree": 2, "finite_dim": 50, "infinite": []})
        );
        let old = quantize_old(&build_k3_inventory()).unwrap();
        let value = serde_json::to_value(&old).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "model": "old",
                "degree": 2,
                "finite_dim": 26,
                "infinite": [{"kind": "SmoothLineFunctions", "mult": 24}]
            })
        );
    }

    #[test]
    fn invalid_inventories_rejected() {
        let focus = vec![FocusFiber { nodes: 1, is_bs: true, compact_fiber: true }];
        assert!(FiberInventory::new(1, true, 0, focus.clone(), 0, 0, 0).is_err());
        let nodeless = vec![FocusFiber { nodes: 0, is_bs: true, compact_fiber: true }];
        assert!(FiberInventory::new(2, true, 0, nodeless, 0, 0, 0).is_err());
        assert!(FiberInventory::new(2, true, 0, Vec::new(), 1, 1, 0).is_err());
        assert!(FiberInventory::new(1, true, 0, Vec::new(), 1, 0, 0).is_err());
        assert!(FiberInventory::new(0, true, 0, Vec::new(), 0, 0, 0).is_err());
    }
}
