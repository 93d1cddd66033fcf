//! Radial measures of the torpedo-cylinder and its sharp-cornered model,
//! the closed-form model constants, and the density-error certificate that
//! controls how far the smoothed measure drifts from the model.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::numerics::{sphere_surface_area, wallis, QuadError, QuadratureRule};

use super::potential::PotentialCache;
use super::torpedo::{torpedo_profile, TorpedoParams};

/// Hardcoded one-sided Gaussian mass; cross-checked by quadrature whenever
/// the model constants are computed.
pub fn j0() -> f64 {
    (PI / 2.0).sqrt()
}

/// Sharp model profile: `delta sin(r/delta)` on the cap, constant beyond.
pub fn model_rho(r: f64, params: &TorpedoParams) -> f64 {
    if r <= params.b {
        params.delta * (r / params.delta).sin()
    } else {
        params.delta
    }
}

/// Sharp model potential: zero on the cap, `(r - B)^2 / 2` beyond.
pub fn model_v(r: f64, params: &TorpedoParams) -> f64 {
    if r <= params.b {
        0.0
    } else {
        0.5 * (r - params.b) * (r - params.b)
    }
}

/// Radial density of the model measure (without the sphere area factor).
pub fn model_weight(r: f64, params: &TorpedoParams) -> f64 {
    (-model_v(r, params)).exp() * model_rho(r, params).powi(params.d as i32 - 1)
}

/// The axis test profile: `cos(r/delta)` on the cap, then the linear ramp
/// `-A (r - B)` whose slope makes the model mean vanish.
pub fn b_profile(r: f64, params: &TorpedoParams) -> f64 {
    if r <= params.b {
        (r / params.delta).cos()
    } else {
        -(params.delta / params.d as f64) * (r - params.b)
    }
}

/// Weak derivative of [`b_profile`] (one-sided at the corner).
pub fn b_profile_d1(r: f64, params: &TorpedoParams) -> f64 {
    if r <= params.b {
        -(r / params.delta).sin() / params.delta
    } else {
        -params.delta / params.d as f64
    }
}

/// Closed-form model constants.
#[derive(Debug, Clone, Copy)]
pub struct ModelConstants {
    /// Ramp slope of the axis test function: `delta / d`.
    pub a: f64,
    /// Spectral-gap surplus of the cross-section modes: `2 D - N` for the
    /// model measure.
    pub delta_u: f64,
    /// Spectral-gap surplus of the axis mode.
    pub delta_b: f64,
    /// Lower bound for the model mass of the axis mode.
    pub m_d: f64,
}

/// Model constants in closed form (Wallis integrals and the Gaussian mass).
/// Panics if the hardcoded Gaussian mass disagrees with quadrature.
pub fn model_constants(d: u32) -> ModelConstants {
    assert!(d >= 4);
    let quad_j0 = QuadratureRule::default()
        .integrate(|t: f64| (-t * t / 2.0).exp(), 0.0, 40.0)
        .expect("Gaussian tail integral")
        .value;
    assert!(
        (quad_j0 - j0()).abs() < 1e-12,
        "Gaussian mass cross-check failed: {quad_j0}"
    );
    let df = d as f64;
    let delta = (df - 2.0).sqrt();
    let omega = sphere_surface_area(d - 1);
    let i_dm1 = wallis(d - 1).to_f64();
    let i_dp1 = wallis(d + 1).to_f64();
    let a = delta / df;
    let delta_u = omega / df
        * (delta.powi(d as i32 - 2) * df * (df - 4.0) / (df + 1.0) * i_dm1
            + delta.powi(d as i32 - 3) * (df - 3.0) * j0());
    let delta_b = omega
        * (delta.powi(d as i32 - 2) * (df - 4.0) / (df + 1.0) * i_dm1
            + delta.powi(d as i32 + 1) / (df * df) * j0());
    let m_d = omega * delta.powi(d as i32) * (i_dm1 - i_dp1);
    ModelConstants { a, delta_u, delta_b, m_d }
}

/// Integral of `f` against the radial density of the smoothed measure
/// (no sphere area factor), split at the construction breakpoints.
pub fn radial_integral<F: Fn(f64) -> f64>(
    f: F,
    cache: &PotentialCache,
    rule: &QuadratureRule,
) -> Result<f64, QuadError> {
    let params = cache.params();
    let rho = torpedo_profile(params);
    let d = params.d as i32;
    rule.integrate_piecewise(
        |r: f64| f(r) * (-cache.eval(r).0).exp() * rho.value(r).powi(d - 1),
        0.0,
        params.rmax,
        &params.breakpoints(),
    )
    .map(|r| r.value)
}

/// Integral of `f` against the radial density of the model measure.
pub fn model_radial_integral<F: Fn(f64) -> f64>(
    f: F,
    params: &TorpedoParams,
    rule: &QuadratureRule,
) -> Result<f64, QuadError> {
    rule.integrate_piecewise(
        |r: f64| f(r) * model_weight(r, params),
        0.0,
        params.rmax,
        &[params.b],
    )
    .map(|r| r.value)
}

/// Normalization data of the smoothed measure.
#[derive(Debug, Clone, Copy)]
pub struct Normalization {
    /// Mean of the axis profile under the smoothed (unnormalized) measure,
    /// divided by the total mass.
    pub c_eps: f64,
    /// Total mass of the smoothed measure.
    pub z_eps: f64,
    /// Closed lower bound for the mass: the cap contribution alone.
    pub z_lower_bound: f64,
    /// Model-measure mean of the axis profile; vanishes by the choice of
    /// ramp slope and anchors the quadrature.
    pub model_b_mean_residual: f64,
}

pub fn c_eps_and_z(cache: &PotentialCache, rule: &QuadratureRule) -> Result<Normalization, QuadError> {
    let params = cache.params();
    let omega = sphere_surface_area(params.d - 1);
    let z_eps = omega * radial_integral(|_| 1.0, cache, rule)?;
    let b_mean = omega * radial_integral(|r| b_profile(r, params), cache, rule)?;
    let model_b_mean = omega * model_radial_integral(|r| b_profile(r, params), params, rule)?;
    let cap = rule
        .integrate(
            |r: f64| (params.delta * (r / params.delta).sin()).powi(params.d as i32 - 1),
            0.0,
            params.b / 2.0,
        )?
        .value;
    Ok(Normalization {
        c_eps: b_mean / z_eps,
        z_eps,
        z_lower_bound: omega * cap,
        model_b_mean_residual: model_b_mean,
    })
}

/// Max over the grid of the measured density error against its certificate
/// `2 eps (1 + r - B) exp(-(r-B)^2/2)` on the cylinder; at most 1 when the
/// construction is right.
pub fn density_error_check(cache: &PotentialCache, grid_points: usize) -> f64 {
    let params = cache.params();
    let mut worst: f64 = 0.0;
    for i in 0..grid_points {
        let r = params.b + (params.rmax - params.b) * i as f64 / (grid_points - 1).max(1) as f64;
        let diff = ((-cache.eval(r).0).exp() - (-model_v(r, params)).exp()).abs();
        let bound = 2.0 * params.eps * (1.0 + r - params.b) * (-0.5 * (r - params.b).powi(2)).exp();
        worst = worst.max(diff / bound);
    }
    worst
}

/// Defining-integral oracles for the closed-form constants; each returns the
/// quadrature value that the closed form must reproduce.
pub mod oracles {
    use super::*;

    /// `A` from its defining cap integral.
    pub fn ramp_slope(params: &TorpedoParams, rule: &QuadratureRule) -> Result<f64, QuadError> {
        let d = params.d as i32;
        let delta = params.delta;
        let v = rule
            .integrate(
                |r: f64| (r / delta).cos() * (delta * (r / delta).sin()).powi(d - 1),
                0.0,
                params.b,
            )?
            .value;
        Ok(v / delta.powi(d - 1))
    }

    /// `2 D - N` for a cross-section mode under the model measure.
    pub fn delta_u(params: &TorpedoParams, rule: &QuadratureRule) -> Result<f64, QuadError> {
        let omega = sphere_surface_area(params.d - 1);
        let df = params.d as f64;
        let delta = params.delta;
        let a0 = |r: f64| model_rho(r, params) / delta;
        let a0p = |r: f64| {
            if r <= params.b {
                (r / delta).cos() / delta
            } else {
                0.0
            }
        };
        let mass = model_radial_integral(|r| a0(r) * a0(r), params, rule)?;
        let grad_radial = model_radial_integral(|r| a0p(r) * a0p(r), params, rule)?;
        let grad_angular = model_radial_integral(|_| 1.0, params, rule)?;
        let d_u = omega / df * mass;
        let n_u = omega / df * grad_radial + (df - 1.0) * omega / df / (delta * delta) * grad_angular;
        Ok(2.0 * d_u - n_u)
    }

    /// `2 D - N` for the axis mode under the model measure.
    pub fn delta_b(params: &TorpedoParams, rule: &QuadratureRule) -> Result<f64, QuadError> {
        let omega = sphere_surface_area(params.d - 1);
        let mass = model_radial_integral(|r| b_profile(r, params).powi(2), params, rule)?;
        let grad = model_radial_integral(|r| b_profile_d1(r, params).powi(2), params, rule)?;
        Ok(omega * (2.0 * mass - grad))
    }

    /// The cap mass lower bound for the axis mode.
    pub fn m_d(params: &TorpedoParams, rule: &QuadratureRule) -> Result<f64, QuadError> {
        let omega = sphere_surface_area(params.d - 1);
        let delta = params.delta;
        let d = params.d as i32;
        let v = rule
            .integrate(|t: f64| t.cos().powi(2) * t.sin().powi(d - 1), 0.0, FRAC_PI_2)?
            .value;
        Ok(omega * delta.powi(d) * v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(eps: f64) -> (TorpedoParams, PotentialCache) {
        let p = TorpedoParams::new(4, eps).unwrap();
        let cache = PotentialCache::build(&p);
        (p, cache)
    }

    #[test]
    fn model_constants_d4_closed_values() {
        let c = model_constants(4);
        assert!((c.a - 2.0_f64.sqrt() / 4.0).abs() < 1e-15);
        let expect = PI * PI / 2.0 * PI.sqrt();
        assert!((c.delta_u - expect).abs() < 1e-12, "{} vs {expect}", c.delta_u);
        // The cap term vanishes at d = 4, so both constants coincide there.
        assert!((c.delta_b - expect).abs() < 1e-12, "{} vs {expect}", c.delta_b);
    }

    #[test]
    fn ramp_slope_closed_form_up_to_dimension_eight() {
        let rule = QuadratureRule::default();
        for d in 4u32..=8 {
            let params = TorpedoParams::new(d, 0.05).unwrap();
            let quad = oracles::ramp_slope(&params, &rule).unwrap();
            let closed = params.delta / d as f64;
            assert!((closed - quad).abs() < 1e-12, "d={d}: {closed} vs {quad}");
        }
    }

    #[test]
    fn closed_forms_match_quadrature_oracles() {
        let rule = QuadratureRule::default();
        for d in [4u32, 5, 6] {
            let params = TorpedoParams::new(d, 0.05).unwrap();
            let c = model_constants(d);
            let a_q = oracles::ramp_slope(&params, &rule).unwrap();
            let du_q = oracles::delta_u(&params, &rule).unwrap();
            let db_q = oracles::delta_b(&params, &rule).unwrap();
            let md_q = oracles::m_d(&params, &rule).unwrap();
            assert!((c.a - a_q).abs() < 1e-10 * a_q.abs(), "d={d} A: {} vs {a_q}", c.a);
            assert!((c.delta_u - du_q).abs() < 1e-10 * du_q.abs(), "d={d} delta_u: {} vs {du_q}", c.delta_u);
            assert!((c.delta_b - db_q).abs() < 1e-10 * db_q.abs(), "d={d} delta_b: {} vs {db_q}", c.delta_b);
            assert!((c.m_d - md_q).abs() < 1e-10 * md_q.abs(), "d={d} m_d: {} vs {md_q}", c.m_d);
            assert!(c.delta_u > 0.0 && c.delta_b > 0.0 && c.m_d > 0.0);
        }
    }

    #[test]
    fn model_mean_of_axis_profile_vanishes() {
        let rule = QuadratureRule::default();
        let (_, cache) = setup(0.05);
        let n = c_eps_and_z(&cache, &rule).unwrap();
        assert!(n.model_b_mean_residual.abs() < 1e-10, "{}", n.model_b_mean_residual);
        assert!(n.z_eps >= n.z_lower_bound && n.z_lower_bound > 0.0);
    }

    #[test]
    fn smoothed_mean_decays_linearly_in_eps() {
        let rule = QuadratureRule::default();
        let mut values = Vec::new();
        for eps in [0.1, 0.05, 0.025] {
            let (_, cache) = setup(eps);
            let n = c_eps_and_z(&cache, &rule).unwrap();
            values.push((eps, n.c_eps.abs()));
        }
        // |c_eps| decreasing, and the decay is no slower than linear-ish.
        assert!(values[0].1 > values[1].1 && values[1].1 > values[2].1, "{values:?}");
        for (eps, c) in &values {
            assert!(*c <= 1.0 * eps, "c_eps = {c} at eps = {eps}");
        }
    }

    #[test]
    fn density_error_within_certificate() {
        let (_, cache) = setup(0.05);
        let worst = density_error_check(&cache, 1000);
        assert!(worst <= 1.0, "ratio {worst}");
        // At the corner, the numerator is at most 2 eps^2 against a 2 eps bound.
        let (p, cache) = setup(0.05);
        let diff = ((-cache.eval(p.b).0).exp() - 1.0_f64).abs();
        assert!(diff <= 2.0 * p.eps * p.eps);
    }

    #[test]
    fn density_error_shrinks_with_eps() {
        let (p, cache) = setup(1e-3);
        let mut max_abs: f64 = 0.0;
        for i in 0..1000 {
            let r = p.b + (p.rmax - p.b) * i as f64 / 999.0;
            let diff = ((-cache.eval(r).0).exp() - (-model_v(r, &p)).exp()).abs();
            max_abs = max_abs.max(diff);
        }
        assert!(max_abs <= 2e-3, "max difference {max_abs}");
    }
}
