//! Pipeline for the weighted torpedo-cylinder: a spherical cap glued to a
//! round cylinder of radius `sqrt(d-2)` carrying a Gaussian weight along the
//! axis. The cross-section supplies `d` low-energy modes and the axis one
//! more, pushing the `(d+2)`-nd eigenvalue below the Gaussian benchmark 2
//! while the Bakry-Emery curvature stays at or above 1.

mod angular;
mod measures;
mod potential;
mod rayleigh;
mod smoothstep;
mod torpedo;
mod verify;

pub use angular::SphereQuadrature;
pub use measures::{
    b_profile, b_profile_d1, c_eps_and_z, density_error_check, j0, model_constants, model_radial_integral,
    model_rho, model_v, model_weight, oracles, radial_integral, ModelConstants, Normalization,
};
pub use potential::{cutoff_q, PotentialCache};
pub use rayleigh::{model_r_u, rayleigh_tests, RayleighTests};
pub use smoothstep::SmoothStep;
pub use torpedo::{theta_eps, torpedo_profile, TorpedoError, TorpedoParams};
pub use verify::{verify_gaussian, GaussError, GaussMode, GaussReport, GaussSettings};
