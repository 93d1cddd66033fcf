//! Slower cross-checks of the sector solver against closed-form spectra and
//! of the domain-truncation policy.

use warpspec::gauss::{PotentialCache, TorpedoParams};
use warpspec::spectral::{compute_spectrum, Geometry};
use warpspec::sphere::harmonic_dim;

#[test]
fn round_sphere_d5_first_forty_distinct_eigenvalues() {
    // d = 5: eigenvalues l(l+4) with the d = 5 harmonic multiplicities.
    let lam40 = 39.0 * 43.0;
    let (spectrum, _) = compute_spectrum(
        &Geometry::PerturbedSphere { d: 5, eps: 0.0 },
        lam40 * 1.02 + 2.0,
        1,
        2000,
        true,
    )
    .unwrap();
    let mut worst_rel: f64 = 0.0;
    for l in 0..40u32 {
        let lam = (l * (l + 4)) as f64;
        let group: Vec<_> = spectrum
            .entries
            .iter()
            .filter(|e| (e.lambda - lam).abs() <= 1.5)
            .collect();
        let mult: u64 = group.iter().map(|e| e.multiplicity).sum();
        assert_eq!(mult, harmonic_dim(5, l), "multiplicity at l = {l}");
        for e in &group {
            worst_rel = worst_rel.max((e.lambda - lam).abs() / (1.0 + lam));
        }
    }
    assert!(worst_rel <= 1e-4, "worst relative error {worst_rel:.3e}");
}

#[test]
fn merged_multiplicity_matches_harmonic_count_below_thirty() {
    let (spectrum, _) = compute_spectrum(
        &Geometry::PerturbedSphere { d: 4, eps: 0.0 },
        40.0,
        1,
        1000,
        true,
    )
    .unwrap();
    let merged = spectrum.multiplicity_below(30.5);
    let expected: u64 = (0..)
        .map(|l| (l, (l * (l + 3)) as f64))
        .take_while(|(_, lam)| *lam <= 30.0)
        .map(|(l, _)| harmonic_dim(4, l))
        .sum();
    assert_eq!(merged, expected);
}

#[test]
fn truncation_point_does_not_move_low_eigenvalues() {
    // Same run at rmax = B + 8 and B + 12: every eigenvalue below 4 must
    // agree to 1e-8 (the weight at the cut is below 1e-13 of its peak).
    let b_len = TorpedoParams::new(4, 0.05).unwrap().b;
    let low_eigs = |rmax_offset: f64, n: usize| -> Vec<f64> {
        let params = TorpedoParams::with_rmax(4, 0.05, b_len + rmax_offset).unwrap();
        let cache = PotentialCache::build(&params);
        let (spectrum, _) = compute_spectrum(&Geometry::TorpedoCylinder(cache), 4.0, 6, n, true).unwrap();
        (1..=8).map(|k| spectrum.value_at_index(k).unwrap()).collect()
    };
    // Grid sizes proportional to the domain keep the mesh width comparable.
    let a = low_eigs(8.0, 2500);
    let b = low_eigs(12.0, 3480);
    for (x, y) in a.iter().zip(&b) {
        assert!(*x < 4.0 && (x - y).abs() <= 1e-8, "{x} vs {y}");
    }
}

#[test]
fn perturbed_sphere_first_band_tracks_the_perturbation() {
    // At small eps the low spectrum stays near the round values.
    let (spectrum, _) = compute_spectrum(
        &Geometry::PerturbedSphere { d: 4, eps: 0.01 },
        12.0,
        6,
        1000,
        true,
    )
    .unwrap();
    let l1 = spectrum.value_at_index(1).unwrap();
    assert!(l1.abs() < 1e-9, "bottom of the spectrum {l1}");
    for k in 2..=6 {
        let v = spectrum.value_at_index(k).unwrap();
        assert!((v - 4.0).abs() < 0.05, "index {k}: {v}");
    }
}
