//! Cross-module pipeline checks beyond the acceptance criteria: the second
//! dimension of the sphere construction, the comparator at the critical
//! index, and the sector error-estimate self-consistency.

use warpspec::numerics::QuadratureRule;
use warpspec::spectral::{
    compare_spectra, compute_spectrum, reference_spectrum, sector_eigs, Geometry, ReferenceKind,
    SectorSpec, Verdict,
};
use warpspec::sphere::{
    choose_eps, choose_k, k_index, rho_eps_rational, verify_sphere, SphereMode, SphereParams,
    SphereSettings,
};

#[test]
fn sphere_counterexample_in_dimension_five() {
    let rule = QuadratureRule::default();
    let k = choose_k(5).unwrap();
    assert_eq!(k, 7);
    let (eps, _) = choose_eps(5, k, &rule).unwrap();
    let params = SphereParams::with_eps(5, k, eps);
    let settings = SphereSettings {
        curvature_grid: 2_000,
        ..SphereSettings::default()
    };
    let report = verify_sphere(&params, SphereMode::Certificate, &settings).unwrap();
    assert!(report.passed, "failing stage {:?}", report.failing_stage);
    assert_eq!(report.index_k, k_index(5, 7));
}

#[test]
fn comparator_flags_the_sphere_counterexample_at_the_critical_index() {
    // Spectral route to the same conclusion as the variational certificate:
    // the rescaled round model must dominate the perturbed sphere up to the
    // critical index, and fails there first.
    let rule = QuadratureRule::default();
    let (eps_rat, eps) = choose_eps(4, 11, &rule).unwrap();
    let rho = rho_eps_rational(4, &eps_rat).to_f64();
    let index_k = k_index(4, 11);
    let lambda_can = rho / 3.0 * 154.0;

    let (computed, _) = compute_spectrum(
        &Geometry::PerturbedSphere { d: 4, eps },
        lambda_can * 1.05 + 1.0,
        index_k,
        1_000,
        true,
    )
    .unwrap();
    let model = reference_spectrum(ReferenceKind::RoundSphere { d: 4, rho }, index_k + 30);
    let cmp = compare_spectra(&model, &computed, 1.0).unwrap();
    assert_eq!(cmp.verdict, Verdict::Violated);
    assert_eq!(cmp.first_violation_index, Some(index_k));
    assert!(cmp.gap_at_violation.unwrap() > 0.0);
}

#[test]
fn sector_error_estimates_cover_finer_runs() {
    // Twenty spot checks: the attached Richardson estimate at grid n must
    // cover the drift to the grid-2n extrapolation.
    use std::sync::Arc;
    let mut checked = 0;
    for l in 0..5u32 {
        let sector = SectorSpec {
            interval: (0.0, 12.0),
            weight: Arc::new(|r: f64| (-r * r / 2.0).exp() * r.powi(3)),
            potential: Arc::new(move |r: f64| (l * (l + 2)) as f64 / (r * r).max(1e-300)),
            multiplicity: 1,
            label: format!("probe(l={l})"),
            bc_left: if l == 0 {
                warpspec::spectral::Bc::Natural
            } else {
                warpspec::spectral::Bc::Dirichlet
            },
            bc_right: warpspec::spectral::Bc::Dirichlet,
            breakpoints: vec![],
        };
        let coarse = sector_eigs(&sector, 400, 4, true).unwrap();
        let fine = sector_eigs(&sector, 800, 4, true).unwrap();
        let est = coarse.error_estimates.unwrap();
        for ((c, f), e) in coarse.values.iter().zip(&fine.values).zip(&est) {
            assert!((c - f).abs() <= *e, "{c} vs {f} with estimate {e}");
            checked += 1;
        }
    }
    assert_eq!(checked, 20);
}
