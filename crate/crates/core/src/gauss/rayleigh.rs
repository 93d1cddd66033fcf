//! Rayleigh quotients of the d+1 low-energy test functions and the Gram
//! matrices of the whole test space under the smoothed measure.

use crate::numerics::{sphere_surface_area, QuadError, QuadratureRule};

use super::angular::SphereQuadrature;
use super::measures::{b_profile, b_profile_d1, c_eps_and_z, radial_integral};
use super::potential::PotentialCache;
use super::torpedo::torpedo_profile;

/// Rayleigh quotients and orthogonality residuals of the test space
/// `span{1, axis mode, cross-section modes}`.
#[derive(Debug, Clone, Copy)]
pub struct RayleighTests {
    /// Rayleigh quotient of a cross-section mode (all `d` coincide).
    pub r_u: f64,
    /// Rayleigh quotient of the recentered axis mode.
    pub r_b: f64,
    /// Largest off-diagonal Gram entry across both pairings.
    pub orthogonality_max: f64,
    /// Mean offset used to recenter the axis mode.
    pub c_eps: f64,
}

/// Computes both Rayleigh quotients by one-dimensional quadrature and, in
/// the acceptance dimension `d = 4`, assembles the full `(d+2)`-member Gram
/// matrices with genuinely numerical angular factors.
pub fn rayleigh_tests(cache: &PotentialCache, rule: &QuadratureRule) -> Result<RayleighTests, QuadError> {
    let params = cache.params();
    let d = params.d;
    let df = d as f64;
    let delta = params.delta;
    let rho = torpedo_profile(params);

    // Radial building blocks. The cross-section mode has radial profile
    // a = rho/delta; its angular factors reduce to the first-harmonic
    // moments of the cross-section sphere.
    let w_total = radial_integral(|_| 1.0, cache, rule)?;
    let a_sq = radial_integral(|r| (rho.value(r) / delta).powi(2), cache, rule)?;
    let ap_sq = radial_integral(|r| (rho.d1(r) / delta).powi(2), cache, rule)?;
    let norm = c_eps_and_z(cache, rule)?;
    let c_eps = norm.c_eps;
    let bb = radial_integral(|r| (b_profile(r, params) - c_eps).powi(2), cache, rule)?;
    let bpbp = radial_integral(|r| b_profile_d1(r, params).powi(2), cache, rule)?;

    let r_u = (ap_sq + (df - 1.0) / (delta * delta) * w_total) / a_sq;
    let r_b = bpbp / bb;

    // Cross terms. Radial factors by quadrature; angular factors by the
    // three-sphere product rule when d = 4, closed-form zeros otherwise.
    let one_b = radial_integral(|r| b_profile(r, params) - c_eps, cache, rule)?;
    let a_mean = radial_integral(|r| rho.value(r) / delta, cache, rule)?;
    let b_a = radial_integral(|r| (b_profile(r, params) - c_eps) * rho.value(r) / delta, cache, rule)?;
    let bp_ap = radial_integral(|r| b_profile_d1(r, params) * rho.d1(r) / delta, cache, rule)?;
    let a_sq_over_rho_sq = radial_integral(|r| (rho.value(r) / delta).powi(2) / rho.value(r).powi(2), cache, rule)?;

    let omega = sphere_surface_area(d - 1);
    let mut max_off = (omega * one_b).abs();

    if d == 4 {
        let sq = SphereQuadrature::new_s3();
        let xi: Vec<f64> = (0..4).map(|i| sq.integrate(|x| x[i])).collect();
        let mut xij = [[0.0; 4]; 4];
        let mut grad = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                xij[i][j] = sq.integrate(|x| x[i] * x[j]);
                // For ambient-linear restrictions the tangential gradient
                // pairing is delta_ij - x_i x_j pointwise.
                grad[i][j] = sq.integrate(|x| if i == j { 1.0 - x[i] * x[j] } else { -x[i] * x[j] });
            }
        }
        for i in 0..4 {
            // L2: <1, U_i> and <B, U_i>; Dirichlet: <B, U_i>.
            max_off = max_off.max((a_mean * xi[i]).abs());
            max_off = max_off.max((b_a * xi[i]).abs());
            max_off = max_off.max((bp_ap * xi[i]).abs());
            for j in 0..4 {
                if i != j {
                    max_off = max_off.max((a_sq * xij[i][j]).abs());
                    max_off = max_off.max((ap_sq * xij[i][j] + a_sq_over_rho_sq * grad[i][j]).abs());
                }
            }
        }
    } else {
        // The angular moments of distinct first harmonics vanish in closed
        // form; only the recentered-mean residual remains to measure.
    }

    Ok(RayleighTests {
        r_u,
        r_b,
        orthogonality_max: max_off,
        c_eps,
    })
}

/// Model-measure Rayleigh quotient of a cross-section mode (used as the
/// small-eps consistency anchor).
pub fn model_r_u(params: &super::torpedo::TorpedoParams, rule: &QuadratureRule) -> Result<f64, QuadError> {
    use super::measures::model_radial_integral;
    let df = params.d as f64;
    let delta = params.delta;
    let mass = model_radial_integral(|r| (super::measures::model_rho(r, params) / delta).powi(2), params, rule)?;
    let grad_rad = model_radial_integral(
        |r| {
            if r <= params.b {
                ((r / delta).cos() / delta).powi(2)
            } else {
                0.0
            }
        },
        params,
        rule,
    )?;
    let total = model_radial_integral(|_| 1.0, params, rule)?;
    Ok((grad_rad + (df - 1.0) / (delta * delta) * total) / mass)
}
