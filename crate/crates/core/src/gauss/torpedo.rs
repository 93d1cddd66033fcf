//! The torpedo geometry: smoothed angle function, radial profile, and the
//! parameter set tying the cap radius to the dimension.

use std::f64::consts::PI;

use thiserror::Error;

use crate::geometry::WarpProfile;

use super::smoothstep::SmoothStep;

/// Parameters of the torpedo-cylinder: cylinder radius `delta = sqrt(d-2)`,
/// cap length `B = pi delta / 2`, smoothing scale `eps`, and the domain
/// truncation `rmax` for all quadrature and spectra.
#[derive(Debug, Clone, Copy)]
pub struct TorpedoParams {
    pub d: u32,
    pub delta: f64,
    pub b: f64,
    pub eps: f64,
    pub rmax: f64,
}

#[derive(Debug, Error)]
pub enum TorpedoError {
    #[error("dimension {d} below 4")]
    DimensionTooSmall { d: u32 },
    #[error("eps {eps} outside (0, B/4] with B = {b}")]
    BadEps { eps: f64, b: f64 },
    #[error("rmax {rmax} below B + 8 = {min}")]
    BadRmax { rmax: f64, min: f64 },
}

impl TorpedoParams {
    pub fn new(d: u32, eps: f64) -> Result<Self, TorpedoError> {
        Self::with_rmax(d, eps, f64::NAN)
    }

    pub fn with_rmax(d: u32, eps: f64, rmax: f64) -> Result<Self, TorpedoError> {
        if d < 4 {
            return Err(TorpedoError::DimensionTooSmall { d });
        }
        let delta = (d as f64 - 2.0).sqrt();
        let b = PI * delta / 2.0;
        if !(eps > 0.0 && eps <= b / 4.0) {
            return Err(TorpedoError::BadEps { eps, b });
        }
        let rmax = if rmax.is_nan() { b + 10.0 } else { rmax };
        if rmax < b + 8.0 {
            return Err(TorpedoError::BadRmax { rmax, min: b + 8.0 });
        }
        Ok(Self { d, delta, b, eps, rmax })
    }

    /// Breakpoints of every piecewise-defined radial quantity.
    pub fn breakpoints(&self) -> Vec<f64> {
        vec![
            self.b - 2.0 * self.eps,
            self.b - self.eps,
            self.b,
            self.b + self.eps,
        ]
    }
}

/// Smoothed angle `theta_eps`: equals `r/delta` until `B - eps`, caps at
/// `pi/2` beyond `B + eps`, with `0 <= theta' <= 1/delta` and `theta'' <= 0`.
/// Returns `(theta, theta', theta'')`.
pub fn theta_eps(r: f64, params: &TorpedoParams) -> (f64, f64, f64) {
    let step = SmoothStep::new();
    let (b, delta, eps) = (params.b, params.delta, params.eps);
    if r <= b - eps {
        (r / delta, 1.0 / delta, 0.0)
    } else if r >= b + eps {
        (PI / 2.0, 0.0, 0.0)
    } else {
        let s = (r - b) / eps;
        let theta = (b - eps) / delta + eps / delta * step.eta_integral(s);
        let d1 = step.eta(s) / delta;
        let d2 = step.eta_derivative(s) / (delta * eps);
        (theta, d1, d2)
    }
}

/// The torpedo radial profile `rho = delta sin(theta_eps)` as a warp profile
/// on `[0, rmax]`, carrying its derivative chain and breakpoints.
pub fn torpedo_profile(params: &TorpedoParams) -> WarpProfile {
    let p = *params;
    let value = move |r: f64| {
        let (theta, _, _) = theta_eps(r, &p);
        p.delta * theta.sin()
    };
    let d1 = move |r: f64| {
        let (theta, t1, _) = theta_eps(r, &p);
        p.delta * theta.cos() * t1
    };
    let d2 = move |r: f64| {
        let (theta, t1, t2) = theta_eps(r, &p);
        p.delta * (theta.cos() * t2 - theta.sin() * t1 * t1)
    };
    WarpProfile::new((0.0, params.rmax), value, d1, d2).with_breakpoints(params.breakpoints())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> TorpedoParams {
        TorpedoParams::new(4, 0.05).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(TorpedoParams::new(3, 0.05).is_err());
        assert!(TorpedoParams::new(4, 3.0).is_err());
        assert!(TorpedoParams::new(4, 0.0).is_err());
        let p = params();
        assert!((p.delta - 2f64.sqrt()).abs() < 1e-15);
        assert!((p.b - PI * p.delta / 2.0).abs() < 1e-15);
    }

    #[test]
    fn angle_plateaus() {
        let p = params();
        let (v, _, _) = theta_eps(p.b - 2.0 * p.eps, &p);
        assert!((v - (p.b - 2.0 * p.eps) / p.delta).abs() < 1e-15);
        let (v, d1, d2) = theta_eps(p.b + 2.0 * p.eps, &p);
        assert_eq!(v, PI / 2.0);
        assert_eq!(d1, 0.0);
        assert_eq!(d2, 0.0);
    }

    #[test]
    fn angle_monotone_bounded_concave() {
        let p = params();
        for i in 0..10_000 {
            let r = (p.b + 2.0 * p.eps) * (i as f64 + 0.5) / 10_000.0;
            let (_, d1, d2) = theta_eps(r, &p);
            assert!((-1e-15..=1.0 / p.delta + 1e-15).contains(&d1), "theta' = {d1} at {r}");
            assert!(d2 <= 1e-15, "theta'' = {d2} at {r}");
        }
    }

    #[test]
    fn angle_continuity_at_gluing() {
        let p = params();
        for anchor in [p.b - p.eps, p.b + p.eps] {
            let h = 1e-9;
            let (lo, lo1, _) = theta_eps(anchor - h, &p);
            let (hi, hi1, _) = theta_eps(anchor + h, &p);
            assert!((lo - hi).abs() < 1e-8);
            assert!((lo1 - hi1).abs() < 1e-6);
        }
    }

    #[test]
    fn profile_taylor_near_origin() {
        let p = params();
        let rho = torpedo_profile(&p);
        let r = 1e-2f64;
        let taylor = r - r.powi(3) / (6.0 * p.delta * p.delta);
        assert!((rho.value(r) - taylor).abs() < 1e-9, "difference {}", rho.value(r) - taylor);
    }

    #[test]
    fn profile_constant_past_gluing() {
        let p = params();
        let rho = torpedo_profile(&p);
        assert!((rho.value(p.b + p.eps) - p.delta).abs() < 1e-14);
        assert!((rho.value(p.rmax - 1.0) - p.delta).abs() < 1e-14);
    }

    #[test]
    fn profile_concave_and_slope_bounded() {
        let p = params();
        let rho = torpedo_profile(&p);
        for i in 0..10_000 {
            let r = p.rmax * (i as f64 + 0.5) / 10_000.0;
            assert!(rho.d2(r) <= 1e-12, "rho'' = {} at {r}", rho.d2(r));
            let v = rho.value(r);
            let s = rho.d1(r);
            assert!(s * s <= 1.0 - v * v / (p.delta * p.delta) + 1e-12, "slope bound at {r}");
        }
    }

    #[test]
    fn profile_validates() {
        let p = params();
        let rho = torpedo_profile(&p);
        // Positive on the open interior; C^1 across all four breakpoints.
        assert!(rho.validate(2000, 1e-10).is_ok());
    }
}
