//! Closed-form reference spectra.

use crate::sphere::harmonic_dim;

use super::assemble::{Spectrum, SpectrumEntry};

/// Geometries with exactly known spectra.
#[derive(Debug, Clone, Copy)]
pub enum ReferenceKind {
    /// Round `d`-sphere rescaled to Einstein constant `rho`:
    /// `(rho/(d-1)) l (l+d-1)` with the harmonic multiplicities.
    RoundSphere { d: u32, rho: f64 },
    /// Gaussian-weighted flat space: the nonnegative integers with
    /// multiplicity `C(n+d-1, d-1)`.
    OrnsteinUhlenbeck { d: u32 },
    /// Flat product torus of circle radii `r1`, `r2`:
    /// `(p/r1)^2 + (q/r2)^2` with sign multiplicities.
    ProductTorus { r1: f64, r2: f64 },
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(r).expect("binomial fits u64")
}

/// First `count` (by index, with multiplicity) eigenvalues of the reference
/// geometry.
pub fn reference_spectrum(kind: ReferenceKind, count: u64) -> Spectrum {
    assert!(count >= 1);
    let mut entries: Vec<SpectrumEntry> = Vec::new();
    match kind {
        ReferenceKind::RoundSphere { d, rho } => {
            let mut total = 0;
            let mut l = 0u32;
            while total < count {
                let mult = harmonic_dim(d, l);
                entries.push(SpectrumEntry {
                    lambda: rho / (d as f64 - 1.0) * l as f64 * (l as f64 + d as f64 - 1.0),
                    multiplicity: mult,
                    label: format!("l={l}"),
                });
                total += mult;
                l += 1;
            }
        }
        ReferenceKind::OrnsteinUhlenbeck { d } => {
            let mut total = 0;
            let mut n = 0u64;
            while total < count {
                let mult = binomial(n + d as u64 - 1, d as u64 - 1);
                entries.push(SpectrumEntry {
                    lambda: n as f64,
                    multiplicity: mult,
                    label: format!("n={n}"),
                });
                total += mult;
                n += 1;
            }
        }
        ReferenceKind::ProductTorus { r1, r2 } => {
            // Grow the frequency box until the requested index is safely
            // inside the completed part of the spectrum.
            let mut cap = 4.0f64;
            loop {
                entries.clear();
                let pmax = (cap.sqrt() * r1).ceil() as i64 + 1;
                let qmax = (cap.sqrt() * r2).ceil() as i64 + 1;
                for p in 0..=pmax {
                    for q in 0..=qmax {
                        let lam = (p as f64 / r1).powi(2) + (q as f64 / r2).powi(2);
                        if lam > cap {
                            continue;
                        }
                        let mult = if p > 0 { 2 } else { 1 } * if q > 0 { 2 } else { 1 };
                        entries.push(SpectrumEntry {
                            lambda: lam,
                            multiplicity: mult,
                            label: format!("(p,q)=({p},{q})"),
                        });
                    }
                }
                let total: u64 = entries.iter().map(|e| e.multiplicity).sum();
                if total >= count {
                    break;
                }
                cap *= 2.0;
            }
        }
    }
    entries.sort_by(|a, b| {
        let ka = (a.lambda * 1e12).round() as i128;
        let kb = (b.lambda * 1e12).round() as i128;
        ka.cmp(&kb).then_with(|| a.label.cmp(&b.label))
    });
    let truncation_lambda = entries.last().map(|e| e.lambda).unwrap_or(0.0);
    Spectrum {
        entries,
        truncation_lambda,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_multiplicities() {
        let s = reference_spectrum(ReferenceKind::OrnsteinUhlenbeck { d: 4 }, 10);
        // 0 once, 1 four times, 2 ten times: index 6 is the first 2.
        assert_eq!(s.value_at_index(1), Some(0.0));
        assert_eq!(s.value_at_index(2), Some(1.0));
        assert_eq!(s.value_at_index(5), Some(1.0));
        assert_eq!(s.value_at_index(6), Some(2.0));
        assert_eq!(s.entries[2].multiplicity, 10);
    }

    #[test]
    fn clifford_torus_fifth_eigenvalue() {
        let r = 0.5_f64.sqrt();
        let s = reference_spectrum(ReferenceKind::ProductTorus { r1: r, r2: r }, 8);
        assert_eq!(s.value_at_index(1), Some(0.0));
        for k in 2..=5 {
            assert!((s.value_at_index(k).unwrap() - 2.0).abs() < 1e-12);
        }
        assert!(s.value_at_index(6).unwrap() > 2.0);
    }

    #[test]
    fn two_sphere_fifth_eigenvalue() {
        let s = reference_spectrum(ReferenceKind::RoundSphere { d: 2, rho: 1.0 }, 10);
        assert_eq!(s.value_at_index(5), Some(6.0));
        assert_eq!(s.value_at_index(4), Some(2.0));
    }

    #[test]
    fn rescaled_sphere_values() {
        let s = reference_spectrum(ReferenceKind::RoundSphere { d: 4, rho: 3.0 }, 20);
        assert_eq!(s.value_at_index(2), Some(4.0));
        let s2 = reference_spectrum(ReferenceKind::RoundSphere { d: 4, rho: 1.5 }, 20);
        assert_eq!(s2.value_at_index(2), Some(2.0));
    }
}
