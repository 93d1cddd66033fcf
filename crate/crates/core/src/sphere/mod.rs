//! Pipeline for the perturbed round sphere: a circle-direction perturbation
//! of the round metric keeps the Ricci lower bound close to `d - 1` while a
//! high circle-frequency test function drops one eigenvalue below the
//! matching constant-curvature model, at an explicitly computed index.

mod curvature;
mod harmonics;
mod moments;
mod ortho;
mod rayleigh;
mod verify;

pub use curvature::{
    a_eps_profile, chart_sampler, f_curvature, perturbed_sphere_metric, ricci_closed_form,
    sos_residual_coeffs,
};
pub use harmonics::{harmonic_dim, harmonic_dim_oracle, k_index, lambda_can};
pub use moments::{
    beta_eta, choose_eps, choose_k, eps_zero, low_harmonic_inequality_holds, phi,
    phi_prime_at_zero, rho_eps_rational, BetaEta, SelectError,
};
pub use ortho::{orthogonality_check, witness_monomials, Monomial, OrthogonalityReport};
pub use rayleigh::rayleigh_fk;
pub use verify::{
    verify_sphere, SphereError, SphereMode, SphereParams, SphereReport, SphereSettings, StageCheck,
};
