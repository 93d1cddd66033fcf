//! Exact moment ratios of the squared first-coordinate-pair length on the
//! round sphere. With `q` beta-distributed, consecutive moments satisfy
//! `Q_j / Q_{j-1} = 2j / (2j + d - 1)`, so every ratio of moments is an exact
//! small rational.

use super::rational::Rational;

/// `Q_j / Q_{j-1} = 2j / (2j + d - 1)` for the dimension-`d` sphere.
pub fn beta_moment_ratio(d: u32, j: u32) -> Rational {
    assert!(d >= 2, "dimension must be at least 2");
    assert!(j >= 1, "moment index must be at least 1");
    Rational::new(2 * j as i64, 2 * j as i64 + d as i64 - 1)
}

/// `Q_hi / Q_lo` as a product of consecutive one-step ratios (`hi >= lo`).
pub fn q_ratio(d: u32, lo: u32, hi: u32) -> Rational {
    assert!(hi >= lo);
    let mut r = Rational::one();
    for j in (lo + 1)..=hi {
        r = r * beta_moment_ratio(d, j);
    }
    r
}

/// Normalized moment `Q_j` with `Q_0 = 1`.
pub fn q_moment(d: u32, j: u32) -> Rational {
    q_ratio(d, 0, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::QuadratureRule;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn single_ratio() {
        assert_eq!(beta_moment_ratio(4, 1), Rational::new(2, 5));
    }

    #[test]
    fn two_step_ratio_matches_quadrature_oracle() {
        // Q_13 / Q_11 for d = 4 equals (24/27)(26/29); the unnormalized
        // moments are integrals of sin^(2j+1) cos^(d-2) over a quarter period.
        let exact = q_ratio(4, 11, 13);
        assert_eq!(exact, Rational::new(24, 27) * Rational::new(26, 29));
        let rule = QuadratureRule::default();
        let moment = |j: u32| {
            rule.integrate(|t: f64| t.sin().powi(2 * j as i32 + 1) * t.cos().powi(2), 0.0, FRAC_PI_2)
                .unwrap()
                .value
        };
        let quad = moment(13) / moment(11);
        assert!((exact.to_f64() - quad).abs() < 1e-12, "{} vs {}", exact.to_f64(), quad);
    }

    #[test]
    fn ratio_tends_to_one() {
        let r = beta_moment_ratio(4, 1_000_000);
        assert!((r.to_f64() - 1.0).abs() < 2e-6);
    }
}
