//! End-to-end verification for the perturbed sphere: curvature certificate,
//! Rayleigh-quotient inequality, exact low-harmonic comparison,
//! orthogonality witnesses, and (optionally) the assembled spectrum at the
//! critical index.

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{interior_grid, ricci_lower_bound, CurvatureTarget, GeometryError};
use crate::numerics::{QuadError, QuadratureRule, Rational};
use crate::spectral::{compute_spectrum, Geometry, SpectralError};

use super::curvature::perturbed_sphere_metric;
use super::harmonics::{k_index, lambda_can};
use super::moments::{
    beta_eta, choose_eps, choose_k, low_harmonic_inequality_holds, phi, rho_eps_rational,
    SelectError,
};
use super::ortho::{orthogonality_check, witness_monomials};
use super::rayleigh::rayleigh_fk;

/// Verified-pipeline parameters. The perturbation size is kept exact so the
/// low-harmonic comparison can run in rational arithmetic.
#[derive(Debug, Clone)]
pub struct SphereParams {
    pub d: u32,
    pub k: u32,
    pub eps: Rational,
}

impl SphereParams {
    /// Chooses the minimal harmonic degree and the largest verified rung of
    /// the dyadic perturbation ladder.
    pub fn auto(d: u32, rule: &QuadratureRule) -> Result<Self, SphereError> {
        let k = choose_k(d)?;
        let (eps, _) = choose_eps(d, k, rule)?;
        Ok(Self { d, k, eps })
    }

    pub fn with_eps(d: u32, k: u32, eps: Rational) -> Self {
        Self { d, k, eps }
    }

    pub fn eps_f64(&self) -> f64 {
        self.eps.to_f64()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphereMode {
    /// Curvature bound plus variational certificate only.
    Certificate,
    /// Certificate plus the assembled spectrum at the critical index.
    FullSpectrum,
}

/// Settings with the grid defaults used by the acceptance runs.
#[derive(Debug, Clone)]
pub struct SphereSettings {
    pub curvature_grid: usize,
    pub endpoint_margin: f64,
    pub quadrature: QuadratureRule,
    pub sector_grid: usize,
    pub seed: u64,
}

impl Default for SphereSettings {
    fn default() -> Self {
        Self {
            curvature_grid: 10_000,
            endpoint_margin: 1e-4,
            quadrature: QuadratureRule::default(),
            sector_grid: 2_000,
            seed: 0,
        }
    }
}

/// One checked inequality with its margin. A pass always has a strictly
/// positive margin.
#[derive(Debug, Clone, Serialize)]
pub struct StageCheck {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub tolerance: f64,
    pub margin: f64,
    pub pass: bool,
}

impl StageCheck {
    /// `value` must stay at or above `threshold - tolerance`.
    fn at_least(name: &str, value: f64, threshold: f64, tolerance: f64) -> Self {
        let margin = value - (threshold - tolerance);
        Self {
            name: name.into(),
            value,
            threshold,
            tolerance,
            margin,
            pass: margin > 0.0,
        }
    }

    /// `value` must stay strictly below `threshold`, clearing a relative
    /// roundoff floor so equality cases read as failures rather than noise.
    pub(crate) fn strictly_below(name: &str, value: f64, threshold: f64) -> Self {
        let floor = 1e-9 * threshold.abs();
        let margin = threshold - value;
        Self {
            name: name.into(),
            value,
            threshold,
            tolerance: floor,
            margin,
            pass: margin > floor,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SphereReport {
    pub d: u32,
    pub k: u32,
    pub eps: f64,
    pub eps_exact: String,
    pub rho_eps: f64,
    pub index_k: u64,
    pub lambda_k_can: f64,
    pub rayleigh_fk: f64,
    pub phi_bound: f64,
    pub ricci_min: f64,
    pub ricci_argmin: f64,
    pub orthogonality_max: f64,
    pub eta: f64,
    pub spectrum_lambda_k: Option<f64>,
    pub stages: Vec<StageCheck>,
    pub passed: bool,
    pub failing_stage: Option<String>,
}

#[derive(Debug, Error)]
pub enum SphereError {
    #[error(transparent)]
    Select(#[from] SelectError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("eps must be nonnegative (got {0})")]
    NegativeEps(f64),
}

/// Runs every certificate stage and assembles the report. A failed
/// inequality is not an execution error: it lands in the report with its
/// failing stage named.
pub fn verify_sphere(
    params: &SphereParams,
    mode: SphereMode,
    settings: &SphereSettings,
) -> Result<SphereReport, SphereError> {
    if params.eps.is_negative() {
        return Err(SphereError::NegativeEps(params.eps_f64()));
    }
    let (d, k) = (params.d, params.k);
    let eps = params.eps_f64();
    let rho = rho_eps_rational(d, &params.eps).to_f64();
    let index_k = k_index(d, k);
    let (lambda_k_can, _) = lambda_can(d, rho, k);
    let mut stages = Vec::new();

    // Exact selection data.
    let eta = beta_eta(d, k).eta;
    stages.push(StageCheck::strictly_below(
        "eta-positive",
        0.0,
        eta.to_f64(),
    ));

    // Stage a: grid curvature certificate.
    let metric = perturbed_sphere_metric(d, eps);
    let grid = interior_grid(
        0.0,
        std::f64::consts::FRAC_PI_2,
        settings.curvature_grid,
        settings.endpoint_margin,
    );
    let bound = ricci_lower_bound(&CurvatureTarget::Metric(&metric), &grid)?;
    stages.push(StageCheck::at_least(
        "ricci-lower-bound",
        bound.rho_star,
        rho,
        1e-9,
    ));

    // Stage b: Rayleigh quotient of the circle mode, strict.
    let r_fk = rayleigh_fk(d, k, eps, &settings.quadrature)?;
    stages.push(StageCheck::strictly_below(
        "rayleigh-strict",
        r_fk,
        lambda_k_can,
    ));
    let phi_bound = phi(d, k, eps).unwrap_or(f64::INFINITY);
    stages.push(StageCheck::at_least(
        "rayleigh-below-moment-bound",
        phi_bound,
        r_fk,
        1e-9,
    ));

    // Stage c: the exact rational low-harmonic comparison.
    let low_ok = low_harmonic_inequality_holds(d, k, &params.eps);
    let lhs = (Rational::one() + params.eps.clone() / Rational::from_int(2)).to_f64()
        * ((k as f64 - 1.0) * (k as f64 + d as f64 - 2.0));
    stages.push(StageCheck {
        name: "low-harmonic-rational".into(),
        value: lhs,
        threshold: lambda_k_can,
        tolerance: 0.0,
        margin: lambda_k_can - lhs,
        pass: low_ok,
    });

    // Stage d: orthogonality witnesses.
    let witnesses = witness_monomials(d, k, settings.seed);
    let ortho = orthogonality_check(d, k, eps, &witnesses, &settings.quadrature)?;
    stages.push(StageCheck::strictly_below(
        "orthogonality-witnesses",
        ortho.max_abs(),
        1e-10,
    ));

    // Full-spectrum stage: the assembled eigenvalue at the critical index.
    let spectrum_lambda_k = if mode == SphereMode::FullSpectrum {
        let lambda_max = lambda_k_can * 1.05 + 1.0;
        let (spectrum, _) = compute_spectrum(
            &Geometry::PerturbedSphere { d, eps },
            lambda_max,
            index_k,
            settings.sector_grid,
            true,
        )?;
        let lam = spectrum
            .value_at_index(index_k)
            .expect("certified index present");
        stages.push(StageCheck::strictly_below(
            "spectrum-index-strict",
            lam,
            lambda_k_can,
        ));
        Some(lam)
    } else {
        None
    };

    let failing_stage = stages.iter().find(|s| !s.pass).map(|s| s.name.clone());
    Ok(SphereReport {
        d,
        k,
        eps,
        eps_exact: params.eps.to_string(),
        rho_eps: rho,
        index_k,
        lambda_k_can,
        rayleigh_fk: r_fk,
        phi_bound,
        ricci_min: bound.rho_star,
        ricci_argmin: bound.argmin,
        orthogonality_max: ortho.max_abs(),
        eta: eta.to_f64(),
        spectrum_lambda_k,
        passed: failing_stage.is_none(),
        failing_stage,
        stages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_eps_is_the_equality_case() {
        let params = SphereParams::with_eps(4, 11, Rational::zero());
        let report = verify_sphere(&params, SphereMode::Certificate, &SphereSettings::default()).unwrap();
        assert!(!report.passed);
        // The strict Rayleigh inequality degenerates to equality.
        let rayleigh = report.stages.iter().find(|s| s.name == "rayleigh-strict").unwrap();
        assert!(!rayleigh.pass);
        assert!((report.rayleigh_fk - 154.0).abs() < 1e-8);
    }

    #[test]
    fn certificate_passes_at_selected_eps() {
        let rule = QuadratureRule::default();
        let params = SphereParams::auto(4, &rule).unwrap();
        assert_eq!(params.k, 11);
        let mut settings = SphereSettings::default();
        settings.curvature_grid = 2_000;
        let report = verify_sphere(&params, SphereMode::Certificate, &settings).unwrap();
        assert!(report.passed, "failing stage {:?}", report.failing_stage);
        assert_eq!(report.index_k, 1717);
        for s in &report.stages {
            assert!(s.pass && s.margin > 0.0, "stage {} margin {}", s.name, s.margin);
        }
    }
}
