//! Williamson block data: model moment maps, block composition, cotangent
//! lifts, classification, and connection one-forms.

mod classify;
mod lift;

pub use classify::williamson_classify;
pub use lift::{
    cotangent_lift, infinitesimal_generator, FormalScalar, LiftParam, LiftedFamily, ModelAction,
};

use crate::symcalc::{poisson_bracket, PolyForm, PolyFn, SymError};
use std::fmt;

/// Errors from the normal-form layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalFormError {
    #[error("block counts ({k},{elliptic},{hyperbolic},{focus}) do not fill half-dimension {n}")]
    InconsistentType { n: usize, k: usize, elliptic: usize, hyperbolic: usize, focus: usize },
    #[error("input is not a homogeneous quadratic with rational coefficients")]
    NotHomogeneousQuadratic,
    #[error("symplectic form must be constant, rational and nondegenerate")]
    InvalidSymplecticForm,
    #[error("linearization is not infinitesimally symplectic")]
    NotInfinitesimallySymplectic,
    #[error("quadratic is degenerate")]
    Degenerate,
    #[error("functions do not Poisson-commute")]
    NonCommuting,
    #[error("commuting pair does not decompose as a focus-focus block")]
    NotFocusFocus,
    #[error("classification expects dimension 2 with 1 function or 4 with 2, got {dim} with {functions}")]
    UnsupportedClassificationInput { dim: usize, functions: usize },
    #[error("unsupported action name: {0}")]
    UnsupportedAction(String),
    #[error("family does not depend on the requested parameter")]
    UnknownParameter,
    #[error("no connection one-form in the supported table for {0:?}")]
    NoConnectionForm(BlockKind),
    #[error(transparent)]
    Symbolic(#[from] SymError),
}

/// The four Williamson block kinds.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BlockKind {
    Regular,
    Elliptic,
    Hyperbolic,
    FocusFocus,
}

impl BlockKind {
    /// Real dimension of the block's phase space.
    pub fn dim(self) -> usize {
        match self {
            BlockKind::FocusFocus => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BlockKind::Regular => "regular",
            BlockKind::Elliptic => "elliptic",
            BlockKind::Hyperbolic => "hyperbolic",
            BlockKind::FocusFocus => "focus-focus",
        };
        write!(f, "{}", s)
    }
}

/// Williamson type of a singular point on `M^{2n}`: the rank `k` together
/// with the elliptic, hyperbolic and focus-focus block counts, subject to
/// `k + k_e + k_h + 2 k_f = n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WilliamsonType {
    n: usize,
    k: usize,
    elliptic: usize,
    hyperbolic: usize,
    focus: usize,
}

impl WilliamsonType {
    pub fn new(
        n: usize,
        k: usize,
        elliptic: usize,
        hyperbolic: usize,
        focus: usize,
    ) -> Result<Self, NormalFormError> {
        if k + elliptic + hyperbolic + 2 * focus != n {
            return Err(NormalFormError::InconsistentType { n, k, elliptic, hyperbolic, focus });
        }
        Ok(WilliamsonType { n, k, elliptic, hyperbolic, focus })
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn elliptic(&self) -> usize {
        self.elliptic
    }

    pub fn hyperbolic(&self) -> usize {
        self.hyperbolic
    }

    pub fn focus(&self) -> usize {
        self.focus
    }

    /// Block kinds in composition order.
    pub fn blocks(&self) -> Vec<BlockKind> {
        let mut v = Vec::new();
        v.extend(std::iter::repeat(BlockKind::Regular).take(self.k));
        v.extend(std::iter::repeat(BlockKind::Elliptic).take(self.elliptic));
        v.extend(std::iter::repeat(BlockKind::Hyperbolic).take(self.hyperbolic));
        v.extend(std::iter::repeat(BlockKind::FocusFocus).take(self.focus));
        v
    }
}

/// A product of model blocks: coordinates, moment map and symplectic form.
#[derive(Clone, Debug)]
pub struct ProductSystem {
    wtype: WilliamsonType,
    coords: Vec<String>,
    moment_map: Vec<PolyFn>,
    symplectic: PolyForm,
}

impl ProductSystem {
    pub fn wtype(&self) -> &WilliamsonType {
        &self.wtype
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn moment_map(&self) -> &[PolyFn] {
        &self.moment_map
    }

    pub fn symplectic_form(&self) -> &PolyForm {
        &self.symplectic
    }

    /// All pairwise Poisson brackets of the moment map components vanish.
    pub fn is_involutive(&self) -> Result<bool, SymError> {
        for i in 0..self.moment_map.len() {
            for j in i + 1..self.moment_map.len() {
                let b = poisson_bracket(&self.moment_map[i], &self.moment_map[j], &self.symplectic)?;
                if !b.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Moment map of a single model block in its own coordinates.
pub fn block_moment_map(kind: BlockKind) -> ProductSystem {
    let wt = match kind {
        BlockKind::Regular => WilliamsonType::new(1, 1, 0, 0, 0),
        BlockKind::Elliptic => WilliamsonType::new(1, 0, 1, 0, 0),
        BlockKind::Hyperbolic => WilliamsonType::new(1, 0, 0, 1, 0),
        BlockKind::FocusFocus => WilliamsonType::new(2, 0, 0, 0, 1),
    }
    .expect("single block type is consistent");
    compose_blocks(&wt).expect("single block composes")
}

/// Assemble the product system of a Williamson type: one block per entry,
/// coordinates `x_i, y_i` paired by `omega = sum dx_i /\ dy_i`.
pub fn compose_blocks(wt: &WilliamsonType) -> Result<ProductSystem, NormalFormError> {
    let n = wt.half_dim();
    let mut names: Vec<String> = Vec::with_capacity(2 * n);
    // Coordinate layout: each block contributes its x-names then y-names,
    // with a global running pair index.
    struct BlockSlot {
        kind: BlockKind,
        xs: Vec<usize>,
        ys: Vec<usize>,
    }
    let mut slots: Vec<BlockSlot> = Vec::new();
    let mut pair = 0usize;
    for kind in wt.blocks() {
        let pairs = kind.dim() / 2;
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for _ in 0..pairs {
            pair += 1;
            xs.push(names.len());
            names.push(format!("x{}", pair));
            ys.push(names.len());
            names.push(format!("y{}", pair));
        }
        slots.push(BlockSlot { kind, xs, ys });
    }
    debug_assert_eq!(pair, n);
    let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let pairs: Vec<(usize, usize)> = slots
        .iter()
        .flat_map(|s| s.xs.iter().copied().zip(s.ys.iter().copied()))
        .collect();
    let symplectic = PolyForm::darboux(&vars, &pairs);
    let mut moment_map = Vec::new();
    for slot in &slots {
        match slot.kind {
            BlockKind::Regular => {
                moment_map.push(PolyFn::var(&vars, slot.xs[0]));
            }
            BlockKind::Elliptic => {
                let x = PolyFn::var(&vars, slot.xs[0]);
                let y = PolyFn::var(&vars, slot.ys[0]);
                moment_map.push(&(&x * &x) + &(&y * &y));
            }
            BlockKind::Hyperbolic => {
                let x = PolyFn::var(&vars, slot.xs[0]);
                let y = PolyFn::var(&vars, slot.ys[0]);
                moment_map.push(&x * &y);
            }
            BlockKind::FocusFocus => {
                let x1 = PolyFn::var(&vars, slot.xs[0]);
                let x2 = PolyFn::var(&vars, slot.xs[1]);
                let y1 = PolyFn::var(&vars, slot.ys[0]);
                let y2 = PolyFn::var(&vars, slot.ys[1]);
                moment_map.push(&(&x1 * &y2) - &(&x2 * &y1));
                moment_map.push(&(&x1 * &y1) + &(&x2 * &y2));
            }
        }
    }
    let system = ProductSystem { wtype: *wt, coords: names, moment_map, symplectic };
    debug_assert!(system.is_involutive().unwrap_or(false));
    Ok(system)
}

/// Connection one-form of a block in distinguished coordinates, satisfying
/// `d Theta = omega`, `i_{d/dp} Theta = 0` and `i_{d/dq} Theta = p` where
/// `p` is the moment coordinate.
#[derive(Clone, Debug)]
pub struct ConnectionForm {
    kind: BlockKind,
    coords: [String; 2],
    form: PolyForm,
    omega: PolyForm,
    moment: PolyFn,
}

impl ConnectionForm {
    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn coords(&self) -> &[String; 2] {
        &self.coords
    }

    pub fn form(&self) -> &PolyForm {
        &self.form
    }

    pub fn omega(&self) -> &PolyForm {
        &self.omega
    }

    pub fn moment_coordinate(&self) -> &PolyFn {
        &self.moment
    }

    /// Check the three defining conditions exactly.
    pub fn verify(&self) -> Result<[bool; 3], SymError> {
        let vars: Vec<&str> = self.coords.iter().map(|s| s.as_str()).collect();
        let d_theta_is_omega = self.form.exterior_derivative() == self.omega;
        let dp = [PolyFn::int(&vars, 1), PolyFn::zero(&vars)];
        let dq = [PolyFn::zero(&vars), PolyFn::int(&vars, 1)];
        let vertical = self.form.interior_product(&dp)?.component(&[]).is_zero();
        let moment = self.form.interior_product(&dq)?.component(&[]) == self.moment;
        Ok([d_theta_is_omega, vertical, moment])
    }
}

/// The connection one-form of a 2-dimensional block; focus-focus has no
/// entry in the supported table.
pub fn connection_one_form(kind: BlockKind) -> Result<ConnectionForm, NormalFormError> {
    let (p, q) = match kind {
        BlockKind::Regular => ("x", "y"),
        BlockKind::Elliptic => ("s", "theta"),
        BlockKind::Hyperbolic => ("h", "b"),
        BlockKind::FocusFocus => return Err(NormalFormError::NoConnectionForm(kind)),
    };
    let vars = [p, q];
    let moment = PolyFn::var(&vars, 0);
    let mut form = PolyForm::zero(&vars, 1);
    form.add_component(vec![1], moment.clone());
    let omega = PolyForm::darboux(&vars, &[(0, 1)]);
    Ok(ConnectionForm {
        kind,
        coords: [p.to_string(), q.to_string()],
        form,
        omega,
        moment,
    })
}
