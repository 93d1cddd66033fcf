//! The spectrum comparator behind the contraction principle: an L-Lipschitz
//! measure-transporting map from source to target forces
//! `lambda_k(target) >= lambda_k(source) / L^2` for every index. The
//! comparator checks that chain and reports the first violation.

use serde::Serialize;

use super::assemble::Spectrum;
use super::SpectralError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Dominates,
    Violated,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonResult {
    pub verdict: Verdict,
    pub first_violation_index: Option<u64>,
    pub gap_at_violation: Option<f64>,
    /// Number of indices actually compared.
    pub horizon: u64,
}

/// Checks `target_k >= source_k / L^2` for all indices both spectra cover.
pub fn compare_spectra(
    source: &Spectrum,
    target: &Spectrum,
    lipschitz: f64,
) -> Result<ComparisonResult, SpectralError> {
    assert!(lipschitz > 0.0);
    let horizon = source.total_multiplicity().min(target.total_multiplicity());
    if horizon == 0 {
        return Err(SpectralError::EmptyHorizon);
    }
    let scale = 1.0 / (lipschitz * lipschitz);
    let src = source.indexed(horizon);
    let tgt = target.indexed(horizon);
    for ((_, s, _), (k, t, _)) in src.iter().zip(&tgt) {
        let bound = s * scale;
        // Roundoff guard so exact ties (equal eigenvalues reached along
        // different arithmetic routes) do not read as violations.
        if *t < bound - 1e-9 * (1.0 + bound.abs()) {
            return Ok(ComparisonResult {
                verdict: Verdict::Violated,
                first_violation_index: Some(*k),
                gap_at_violation: Some(bound - t),
                horizon,
            });
        }
    }
    Ok(ComparisonResult {
        verdict: Verdict::Dominates,
        first_violation_index: None,
        gap_at_violation: None,
        horizon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::reference::{reference_spectrum, ReferenceKind};

    #[test]
    fn torus_violates_sphere_domination_at_five() {
        let sphere = reference_spectrum(ReferenceKind::RoundSphere { d: 2, rho: 1.0 }, 12);
        let r = 0.5_f64.sqrt();
        let torus = reference_spectrum(ReferenceKind::ProductTorus { r1: r, r2: r }, 12);
        let cmp = compare_spectra(&sphere, &torus, 1.0).unwrap();
        assert_eq!(cmp.verdict, Verdict::Violated);
        assert_eq!(cmp.first_violation_index, Some(5));
        assert!((cmp.gap_at_violation.unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn self_comparison_dominates() {
        let s = reference_spectrum(ReferenceKind::OrnsteinUhlenbeck { d: 4 }, 30);
        for l in [1.0, 1.5, 3.0] {
            let cmp = compare_spectra(&s, &s, l).unwrap();
            assert_eq!(cmp.verdict, Verdict::Dominates, "L = {l}");
        }
    }

    #[test]
    fn looser_lipschitz_recovers_domination() {
        let sphere = reference_spectrum(ReferenceKind::RoundSphere { d: 2, rho: 1.0 }, 12);
        let r = 0.5_f64.sqrt();
        let torus = reference_spectrum(ReferenceKind::ProductTorus { r1: r, r2: r }, 12);
        // With L^2 = 16 the rescaled sphere spectrum fits under the torus.
        let cmp = compare_spectra(&sphere, &torus, 4.0).unwrap();
        assert_eq!(cmp.verdict, Verdict::Dominates);
    }
}
