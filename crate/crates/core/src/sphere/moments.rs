//! Exact moment-ratio selection: the quantities `beta`, `eta`, the threshold
//! `eps_zero`, and the dyadic ladder that picks a working perturbation size.
//! Everything sign-critical stays rational until the float boundary.

use thiserror::Error;

use crate::geometry::{interior_grid, ricci_lower_bound, CurvatureTarget};
use crate::numerics::{q_ratio, QuadratureRule, Rational};

use super::curvature::perturbed_sphere_metric;
use super::rayleigh::rayleigh_fk;

/// `beta = (2k + d - 1) / (2(k + d - 1)) * Q_{k+2}/Q_k` and
/// `eta = beta - 25 / (12 (d - 1))`, both exact.
#[derive(Debug, Clone)]
pub struct BetaEta {
    pub beta: Rational,
    pub eta: Rational,
}

pub fn beta_eta(d: u32, k: u32) -> BetaEta {
    assert!(d >= 2 && k >= 1);
    let prefactor = Rational::new(2 * k as i64 + d as i64 - 1, 2 * (k as i64 + d as i64 - 1));
    let beta = prefactor * q_ratio(d, k, k + 2);
    let eta = &beta - &Rational::new(25, 12 * (d as i64 - 1));
    BetaEta { beta, eta }
}

/// Minimal `k` with `eta > 0`. The limit of `beta` in `k` is 1, which
/// exceeds `25/(12(d-1))` exactly when `d >= 4`, so the scan terminates.
pub fn choose_k(d: u32) -> Result<u32, SelectError> {
    if d < 4 {
        return Err(SelectError::DimensionTooSmall { d });
    }
    let mut k = 1;
    loop {
        if beta_eta(d, k).eta.is_positive() {
            return Ok(k);
        }
        k += 1;
    }
}

/// Threshold `eps_zero = (2k + d - 2) / [ (k-1)(k+d-2)/2 + 25 k(k+d-1) / (12(d-1)) ]`;
/// below it, the low-harmonic bound beats the rescaled model eigenvalue.
pub fn eps_zero(d: u32, k: u32) -> Rational {
    let (df, kf) = (d as i64, k as i64);
    let num = Rational::from_int(2 * kf + df - 2);
    let den = Rational::new((kf - 1) * (kf + df - 2), 2)
        + Rational::new(25 * kf * (kf + df - 1), 12 * (df - 1));
    num / den
}

/// The eps-quadratic upper bound for the Rayleigh quotient of the degree-`k`
/// circle mode, as a ratio of two moment polynomials. Errors when the
/// denominator is not positive.
pub fn phi(d: u32, k: u32, eps: f64) -> Result<f64, SelectError> {
    let q_k = 1.0; // moments normalized relative to Q_k
    let q2 = q_ratio(d, k, k + 2).to_f64();
    let q3 = q_ratio(d, k, k + 3).to_f64();
    let q4 = q_ratio(d, k, k + 4).to_f64();
    let (kf, df) = (k as f64, d as f64);
    let num = 0.5 * kf * (kf + df - 1.0) * q_k - 0.25 * eps * kf * kf * q2
        + 3.0 / 16.0 * eps * eps * kf * kf * q3;
    let den = 0.5 * q_k + 0.25 * eps * q2 - eps * eps * q4 / 16.0;
    if den <= 0.0 {
        return Err(SelectError::PhiDenominator { eps });
    }
    Ok(num / den)
}

/// Exact derivative of `phi` at `eps = 0`: `-k(k + d - 1) beta`.
pub fn phi_prime_at_zero(d: u32, k: u32) -> f64 {
    let b = beta_eta(d, k).beta;
    -(k as f64) * (k as f64 + d as f64 - 1.0) * b.to_f64()
}

#[derive(Debug, Error)]
pub enum SelectError {
    #[error("the moment mechanism needs d >= 4 (got {d})")]
    DimensionTooSmall { d: u32 },
    #[error("phi denominator nonpositive at eps = {eps}")]
    PhiDenominator { eps: f64 },
    #[error("dyadic ladder exhausted below eps = {floor}; last failure: {last_failure}")]
    LadderExhausted { floor: f64, last_failure: String },
}

/// Largest `eps` on the dyadic ladder `eps_zero/2, eps_zero/4, ...` whose
/// full certificate verifies: grid Ricci bound at `rho_eps`, strict Rayleigh
/// inequality for the circle mode, and the exact low-harmonic comparison.
/// Returns the exact rational and its float value.
pub fn choose_eps(d: u32, k: u32, rule: &QuadratureRule) -> Result<(Rational, f64), SelectError> {
    let e0 = eps_zero(d, k);
    let mut eps = &e0 / &Rational::from_int(2);
    let floor = 1e-8;
    let mut last_failure = String::new();
    while eps.to_f64() >= floor {
        match certificate_holds(d, k, &eps, rule) {
            Ok(()) => return Ok((eps.clone(), eps.to_f64())),
            Err(msg) => last_failure = msg,
        }
        eps = &eps / &Rational::from_int(2);
    }
    Err(SelectError::LadderExhausted { floor, last_failure })
}

/// `rho_eps = d - 1 - 25 eps / 12`, exact in `eps`.
pub fn rho_eps_rational(d: u32, eps: &Rational) -> Rational {
    Rational::from_int(d as i64 - 1) - Rational::new(25, 12) * eps.clone()
}

/// The exact low-harmonic comparison
/// `(1 + eps/2)(k-1)(k+d-2) < (rho_eps/(d-1)) k(k+d-1)`.
pub fn low_harmonic_inequality_holds(d: u32, k: u32, eps: &Rational) -> bool {
    let (df, kf) = (d as i64, k as i64);
    let lhs = (Rational::one() + eps.clone() / Rational::from_int(2))
        * Rational::from_int((kf - 1) * (kf + df - 2));
    let rhs = rho_eps_rational(d, eps) / Rational::from_int(df - 1)
        * Rational::from_int(kf * (kf + df - 1));
    lhs < rhs
}

fn certificate_holds(d: u32, k: u32, eps: &Rational, rule: &QuadratureRule) -> Result<(), String> {
    let eps_f = eps.to_f64();
    let rho = rho_eps_rational(d, eps).to_f64();
    let metric = perturbed_sphere_metric(d, eps_f);
    let grid = interior_grid(0.0, std::f64::consts::FRAC_PI_2, 2_000, 1e-4);
    let bound = ricci_lower_bound(&CurvatureTarget::Metric(&metric), &grid)
        .map_err(|e| e.to_string())?;
    if !(bound.rho_star >= rho - 1e-9) {
        return Err(format!("grid Ricci minimum {} below rho_eps {}", bound.rho_star, rho));
    }
    let target = rho / (d as f64 - 1.0) * k as f64 * (k as f64 + d as f64 - 1.0);
    let r = rayleigh_fk(d, k, eps_f, rule).map_err(|e| e.to_string())?;
    if !(r < target) {
        return Err(format!("Rayleigh value {r} not below model eigenvalue {target}"));
    }
    if !low_harmonic_inequality_holds(d, k, eps) {
        return Err("low-harmonic rational inequality fails".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_changes_sign_between_ten_and_eleven() {
        assert!(beta_eta(4, 10).eta.is_negative());
        assert!(beta_eta(4, 11).eta.is_positive());
    }

    #[test]
    fn beta_matches_direct_product_formula() {
        // Oracle: the displayed product, assembled digit by digit.
        let b = beta_eta(4, 11).beta;
        let expect = Rational::new(25, 28) * Rational::new(24, 27) * Rational::new(26, 29);
        assert_eq!(b, expect);
    }

    #[test]
    fn beta_tends_to_one() {
        let b = beta_eta(4, 10_000).beta;
        assert!((b.to_f64() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn beta_strictly_inside_unit_interval() {
        for d in 2..10 {
            for k in 1..40 {
                let b = beta_eta(d, k).beta;
                assert!(b.is_positive() && b < 1, "d={d} k={k} beta={b}");
            }
        }
    }

    #[test]
    fn minimal_degree_selection() {
        assert_eq!(choose_k(4).unwrap(), 11);
        assert_eq!(choose_k(5).unwrap(), 7);
        assert!(choose_k(3).is_err());
        for d in 4..8 {
            let k = choose_k(d).unwrap();
            assert!(beta_eta(d, k).eta.is_positive());
            assert!(!beta_eta(d, k - 1).eta.is_positive());
        }
    }

    #[test]
    fn eps_zero_closed_value() {
        // d = 4, k = 11: 24 / (65 + (25/36) * 154)
        let e = eps_zero(4, 11);
        let expect = Rational::from_int(24)
            / (Rational::from_int(65) + Rational::new(25, 36) * Rational::from_int(154));
        assert_eq!(e, expect);
        assert!((e.to_f64() - 0.1396).abs() < 1e-4);
        // d = 5, k = 7: 17 / (30 + 1925/48) = 816/3365.
        assert_eq!(eps_zero(5, 7), Rational::new(816, 3365));
        for (d, k) in [(4, 11), (5, 7), (6, 6)] {
            assert!(eps_zero(d, k).is_positive());
        }
    }

    #[test]
    fn phi_at_zero_and_slope() {
        let (d, k) = (4u32, 11u32);
        let v0 = phi(d, k, 0.0).unwrap();
        assert!((v0 - 154.0).abs() < 1e-12);
        let exact = phi_prime_at_zero(d, k);
        let h = 1e-6;
        let fd = (phi(d, k, h).unwrap() - phi(d, k, -h).unwrap()) / (2.0 * h);
        assert!(((fd - exact) / exact).abs() < 1e-4, "fd {fd} exact {exact}");
        // First-order decay: phi drops below phi(0) for small positive eps.
        assert!(phi(d, k, 1e-3).unwrap() < v0);
    }
}
