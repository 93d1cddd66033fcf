//! Curvature engine for the two geometries in play: multiply warped products
//! over an interval base, and rotationally symmetric weighted manifolds.
//! A finite-difference coordinate oracle cross-validates the frame formulas.

mod bounds;
mod oracle;
mod profile;
mod warped;
mod weighted;

pub use bounds::{interior_grid, ricci_lower_bound, CurvatureBound, CurvatureTarget};
pub use oracle::{fd_ricci, fd_ricci_extrapolated, MetricSampler};
pub use profile::WarpProfile;
pub use warped::{ricci_frame, FiberSpec, MultiplyWarpedMetric, RicciFrame};
pub use weighted::{bakry_emery_frame, BakryEmeryFrame, RadialWeightedManifold};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("point {point} outside the open interior ({lo}, {hi})")]
    OutsideInterior { point: f64, lo: f64, hi: f64 },
    #[error("warp profile vanishes at {point}")]
    DegenerateWarp { point: f64 },
    #[error("empty evaluation grid")]
    EmptyGrid,
    #[error("finite-difference point within {margin} of a chart degeneracy")]
    TooCloseToDegeneracy { margin: f64 },
}
