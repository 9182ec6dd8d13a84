//! JSON input schema: a system description holds exactly one of a
//! polytope (vertex lists), a fiber inventory, or a cylinder band.
//! Rationals travel as strings ("p/q" or integer literals) and are
//! parsed exactly; floats are never accepted.

use bsq_core::cech::{Band, CechBandComplex};
use bsq_core::polytope::DelzantPolytope;
use bsq_core::quantize::{FiberInventory, FocusFiber};
use num_rational::BigRational;
use serde::Deserialize;
use std::path::Path;
use std::str::FromStr;

/// Input-layer failure: anything wrong with acquiring or decoding a
/// system description.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
    #[error("malformed rational at {path}: {value:?}")]
    Rational { path: String, value: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDescription {
    #[serde(default)]
    polytope: Option<PolytopeInput>,
    #[serde(default)]
    inventory: Option<InventoryInput>,
    #[serde(default)]
    band: Option<BandInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeInput {
    vertices: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InventoryInput {
    n: usize,
    compact: bool,
    n_r: usize,
    focus: Vec<FocusInput>,
    hyperbolic_points: usize,
    k_h: usize,
    #[serde(default)]
    elliptic_corners: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FocusInput {
    nodes: usize,
    bs: bool,
    compact_fiber: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BandInput {
    interval: [String; 2],
    cover_size: usize,
}

fn parse_rational(path: String, text: &str) -> Result<BigRational, InputError> {
    BigRational::from_str(text.trim())
        .map_err(|_| InputError::Rational { path, value: text.to_string() })
}

impl SystemDescription {
    pub fn load(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let desc: SystemDescription = serde_json::from_str(&text)?;
        let present = [
            desc.polytope.is_some(),
            desc.inventory.is_some(),
            desc.band.is_some(),
        ]
        .iter()
        .filter(|p| **p)
        .count();
        if present != 1 {
            return Err(InputError::Shape(format!(
                "expected exactly one of polytope, inventory, band; found {}",
                present
            )));
        }
        Ok(desc)
    }

    pub fn as_polytope(&self) -> Result<DelzantPolytope, InputError> {
        let input = self
            .polytope
            .as_ref()
            .ok_or_else(|| InputError::Shape("input is not a polytope description".into()))?;
        let mut vertices = Vec::with_capacity(input.vertices.len());
        for (i, row) in input.vertices.iter().enumerate() {
            let mut v = Vec::with_capacity(row.len());
            for (j, entry) in row.iter().enumerate() {
                v.push(parse_rational(format!("polytope.vertices[{}][{}]", i, j), entry)?);
            }
            vertices.push(v);
        }
        DelzantPolytope::from_vertices(vertices).map_err(|e| InputError::Shape(e.to_string()))
    }

    pub fn as_inventory(&self) -> Result<FiberInventory, InputError> {
        let input = self
            .inventory
            .as_ref()
            .ok_or_else(|| InputError::Shape("input is not an inventory description".into()))?;
        let focus = input
            .focus
            .iter()
            .map(|f| FocusFiber { nodes: f.nodes, is_bs: f.bs, compact_fiber: f.compact_fiber })
            .collect();
        FiberInventory::new(
            input.n,
            input.compact,
            input.n_r,
            focus,
            input.hyperbolic_points,
            input.k_h,
            input.elliptic_corners,
        )
        .map_err(|e| InputError::Shape(e.to_string()))
    }

    pub fn as_band_complex(&self) -> Result<CechBandComplex, InputError> {
        let input = self
            .band
            .as_ref()
            .ok_or_else(|| InputError::Shape("input is not a band description".into()))?;
        let lo = parse_rational("band.interval[0]".into(), &input.interval[0])?;
        let hi = parse_rational("band.interval[1]".into(), &input.interval[1])?;
        let band = Band::new(lo, hi).map_err(|e| InputError::Shape(e.to_string()))?;
        CechBandComplex::new(band, input.cover_size).map_err(|e| InputError::Shape(e.to_string()))
    }
}
