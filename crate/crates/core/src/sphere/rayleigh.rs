//! Rayleigh quotient of the degree-`k` circle mode `Re(z^k)` on the
//! perturbed sphere, reduced to one-dimensional moment integrals.
//!
//! With `q = sin^2 t` beta-distributed under the round measure, the quotient
//! is
//!
//! ```text
//! R(f_k) = k^2 [ E(q^{k-1}(1-q) sqrt(1+eps q^2)) + E(q^{k-1}/sqrt(1+eps q^2)) ]
//!          / E(q^k sqrt(1+eps q^2))
//! ```
//!
//! The integrals are evaluated in the `t` variable, where the beta density
//! becomes the smooth weight `sin t cos^{d-2} t` (the normalization cancels).

use std::f64::consts::FRAC_PI_2;

use crate::numerics::{QuadError, QuadratureRule};

fn moment<F: Fn(f64) -> f64>(d: u32, rule: &QuadratureRule, f: F) -> Result<f64, QuadError> {
    rule.integrate(
        |t: f64| {
            let w = t.sin() * t.cos().powi(d as i32 - 2);
            f(t.sin() * t.sin()) * w
        },
        0.0,
        FRAC_PI_2,
    )
    .map(|r| r.value)
}

/// `R_eps(f_k)` by quadrature.
pub fn rayleigh_fk(d: u32, k: u32, eps: f64, rule: &QuadratureRule) -> Result<f64, QuadError> {
    assert!(d >= 2 && k >= 1 && eps >= 0.0);
    let kf = k as f64;
    let ki = k as i32;
    let grad_t = moment(d, rule, |q| q.powi(ki - 1) * (1.0 - q) * (1.0 + eps * q * q).sqrt())?;
    let grad_theta = moment(d, rule, |q| q.powi(ki - 1) / (1.0 + eps * q * q).sqrt())?;
    let mass = moment(d, rule, |q| q.powi(ki) * (1.0 + eps * q * q).sqrt())?;
    Ok(kf * kf * (grad_t + grad_theta) / mass)
}
