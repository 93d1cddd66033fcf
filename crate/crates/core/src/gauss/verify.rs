//! End-to-end verification for the weighted torpedo-cylinder: curvature
//! condition on a grid, density-error certificate, test-function Rayleigh
//! quotients with their Gram matrices, and (optionally) the assembled
//! spectrum at index `d + 2`.

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{
    interior_grid, ricci_lower_bound, CurvatureTarget, GeometryError, RadialWeightedManifold,
};
use crate::numerics::{QuadError, QuadratureRule};
use crate::spectral::{compute_spectrum, Geometry, SpectralError};
use crate::sphere::StageCheck;

use super::measures::{c_eps_and_z, density_error_check, model_constants};
use super::potential::PotentialCache;
use super::rayleigh::rayleigh_tests;
use super::torpedo::{torpedo_profile, TorpedoError, TorpedoParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaussMode {
    Certificate,
    FullSpectrum,
}

/// Settings mirroring the sphere pipeline defaults.
#[derive(Debug, Clone)]
pub struct GaussSettings {
    pub curvature_grid: usize,
    pub endpoint_margin: f64,
    pub quadrature: QuadratureRule,
    pub sector_grid: usize,
}

impl Default for GaussSettings {
    fn default() -> Self {
        Self {
            curvature_grid: 10_000,
            endpoint_margin: 1e-4,
            quadrature: QuadratureRule::default(),
            sector_grid: 2_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GaussReport {
    pub d: u32,
    pub eps: f64,
    pub delta: f64,
    pub b: f64,
    pub rmax: f64,
    pub cd_min: f64,
    pub cd_radial_min_on_cap: f64,
    pub rayleigh_u: f64,
    pub rayleigh_b: f64,
    pub c_eps: f64,
    pub z_eps: f64,
    pub delta_u: f64,
    pub delta_b: f64,
    pub density_error_ratio: f64,
    pub orthogonality_max: f64,
    /// Variational bound for the `(d+2)`-nd eigenvalue: the worst test
    /// quotient (the constant function contributes zero).
    pub lambda_d_plus_2_bound: f64,
    pub spectrum_lambda_d_plus_2: Option<f64>,
    pub truncation_tail_mass: f64,
    pub stages: Vec<StageCheck>,
    pub passed: bool,
    pub failing_stage: Option<String>,
}

#[derive(Debug, Error)]
pub enum GaussError {
    #[error(transparent)]
    Params(#[from] TorpedoError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

fn check_at_least(name: &str, value: f64, threshold: f64, tolerance: f64) -> StageCheck {
    StageCheck {
        name: name.into(),
        value,
        threshold,
        tolerance,
        margin: value - (threshold - tolerance),
        pass: value - (threshold - tolerance) > 0.0,
    }
}

fn check_strictly_below(name: &str, value: f64, threshold: f64) -> StageCheck {
    StageCheck::strictly_below(name, value, threshold)
}

/// Runs every stage of the torpedo-cylinder verification.
pub fn verify_gaussian(
    params: &TorpedoParams,
    mode: GaussMode,
    settings: &GaussSettings,
) -> Result<GaussReport, GaussError> {
    let cache = PotentialCache::build(params);
    let mut stages = Vec::new();

    // Curvature condition over the grid, plus the stronger cap-region bound
    // for the radial direction.
    let man = RadialWeightedManifold::new(params.d, torpedo_profile(params), cache.as_profile());
    let grid = interior_grid(0.0, params.b + 10.0, settings.curvature_grid, settings.endpoint_margin);
    let bound = ricci_lower_bound(&CurvatureTarget::Weighted(&man), &grid)?;
    stages.push(check_at_least("cd-condition", bound.rho_star, 1.0, 1e-9));

    let cap_grid: Vec<f64> = grid
        .iter()
        .copied()
        .filter(|r| *r <= params.b - params.eps)
        .collect();
    let cap_bound = ricci_lower_bound(&CurvatureTarget::Weighted(&man), &cap_grid)?;
    let cap_radial = cap_bound.per_direction_min[0];
    let cap_target = (params.d as f64 - 1.0) / (params.d as f64 - 2.0);
    stages.push(check_at_least(
        "cd-radial-on-cap",
        cap_radial,
        cap_target,
        1e-9,
    ));

    // Density error certificate on the cylinder.
    let density_ratio = density_error_check(&cache, 1_000);
    stages.push(check_at_least(
        "density-error-certificate",
        1.0,
        density_ratio,
        1e-12,
    ));

    // Model constants stay positive (closed forms cross-checked in tests).
    let consts = model_constants(params.d);
    stages.push(check_strictly_below("model-gap-positive", 0.0, consts.delta_u.min(consts.delta_b)));

    // Test-function quotients and the Gram matrices.
    let tests = rayleigh_tests(&cache, &settings.quadrature)?;
    stages.push(check_strictly_below("rayleigh-cross-section", tests.r_u, 2.0));
    stages.push(check_strictly_below("rayleigh-axis", tests.r_b, 2.0));
    stages.push(check_strictly_below(
        "gram-diagonal",
        tests.orthogonality_max,
        1e-10,
    ));

    let norm = c_eps_and_z(&cache, &settings.quadrature)?;
    let lambda_bound = tests.r_u.max(tests.r_b);
    let tail = (-0.5 * (params.rmax - params.b).powi(2)).exp();

    let spectrum_lambda = if mode == GaussMode::FullSpectrum {
        let (spectrum, _) = compute_spectrum(
            &Geometry::TorpedoCylinder(cache.clone()),
            4.0,
            params.d as u64 + 2,
            settings.sector_grid,
            true,
        )?;
        let lam = spectrum
            .value_at_index(params.d as u64 + 2)
            .expect("certified index present");
        stages.push(check_strictly_below("spectrum-index-strict", lam, 2.0));
        Some(lam)
    } else {
        None
    };

    let failing_stage = stages.iter().find(|s| !s.pass).map(|s| s.name.clone());
    Ok(GaussReport {
        d: params.d,
        eps: params.eps,
        delta: params.delta,
        b: params.b,
        rmax: params.rmax,
        cd_min: bound.rho_star,
        cd_radial_min_on_cap: cap_radial,
        rayleigh_u: tests.r_u,
        rayleigh_b: tests.r_b,
        c_eps: tests.c_eps,
        z_eps: norm.z_eps,
        delta_u: consts.delta_u,
        delta_b: consts.delta_b,
        density_error_ratio: density_ratio,
        orthogonality_max: tests.orthogonality_max,
        lambda_d_plus_2_bound: lambda_bound,
        spectrum_lambda_d_plus_2: spectrum_lambda,
        truncation_tail_mass: tail,
        stages,
        passed: failing_stage.is_none(),
        failing_stage,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_passes_at_default_eps() {
        let params = TorpedoParams::new(4, 0.05).unwrap();
        let mut settings = GaussSettings::default();
        settings.curvature_grid = 2_000;
        let report = verify_gaussian(&params, GaussMode::Certificate, &settings).unwrap();
        assert!(report.passed, "failing stage {:?}", report.failing_stage);
        assert!(report.lambda_d_plus_2_bound < 2.0);
        for s in &report.stages {
            assert!(s.margin > 0.0, "stage {} margin {}", s.name, s.margin);
        }
    }
}
