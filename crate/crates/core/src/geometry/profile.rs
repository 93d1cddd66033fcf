//! Scalar warp/potential profiles with two analytic derivatives.

use std::fmt;
use std::sync::Arc;

pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A scalar function of one variable on a closed interval, with first and
/// second derivatives and an optional list of interior breakpoints where the
/// definition switches pieces (the profile stays C^1 there; the second
/// derivative may jump).
#[derive(Clone)]
pub struct WarpProfile {
    pub domain: (f64, f64),
    value: ScalarFn,
    first: ScalarFn,
    second: ScalarFn,
    breakpoints: Vec<f64>,
}

impl fmt::Debug for WarpProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WarpProfile")
            .field("domain", &self.domain)
            .field("breakpoints", &self.breakpoints)
            .finish()
    }
}

impl WarpProfile {
    pub fn new<F, G, H>(domain: (f64, f64), value: F, first: G, second: H) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
        H: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        assert!(domain.0 < domain.1, "empty domain");
        Self {
            domain,
            value: Arc::new(value),
            first: Arc::new(first),
            second: Arc::new(second),
            breakpoints: Vec::new(),
        }
    }

    pub fn with_breakpoints(mut self, mut breakpoints: Vec<f64>) -> Self {
        breakpoints.retain(|b| *b > self.domain.0 && *b < self.domain.1);
        breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
        self.breakpoints = breakpoints;
        self
    }

    pub fn value(&self, t: f64) -> f64 {
        (self.value)(t)
    }

    pub fn d1(&self, t: f64) -> f64 {
        (self.first)(t)
    }

    pub fn d2(&self, t: f64) -> f64 {
        (self.second)(t)
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// sin(t) on the given domain.
    pub fn sine(domain: (f64, f64)) -> Self {
        Self::new(domain, f64::sin, f64::cos, |t| -t.sin())
    }

    /// cos(t) on the given domain.
    pub fn cosine(domain: (f64, f64)) -> Self {
        Self::new(domain, f64::cos, |t| -t.sin(), |t| -t.cos())
    }

    pub fn constant(domain: (f64, f64), c: f64) -> Self {
        Self::new(domain, move |_| c, |_| 0.0, |_| 0.0)
    }

    /// Identity profile r -> r (the flat radial warp).
    pub fn identity(domain: (f64, f64)) -> Self {
        Self::new(domain, |r| r, |_| 1.0, |_| 0.0)
    }

    /// Checks positivity on the open interior and C^1 matching at the
    /// breakpoints on a sample grid; used by constructors of the concrete
    /// profiles and in tests.
    pub fn validate(&self, samples: usize, c1_tol: f64) -> Result<(), String> {
        let (a, b) = self.domain;
        let margin = 1e-9 * (b - a);
        for i in 0..samples {
            let t = a + margin + (b - a - 2.0 * margin) * (i as f64 + 0.5) / samples as f64;
            if !(self.value(t) > 0.0) {
                return Err(format!("profile not positive at {t}: {}", self.value(t)));
            }
        }
        for &bp in &self.breakpoints {
            // Straddle the breakpoint tightly: the measured difference is the
            // piece-to-piece jump plus O(h) drift from the local slope.
            let h = 1e-12 * (b - a).max(bp.abs()).max(1.0);
            let jump_v = (self.value(bp + h) - self.value(bp - h)).abs();
            let jump_d = (self.d1(bp + h) - self.d1(bp - h)).abs();
            let slack_v = c1_tol * (1.0 + self.value(bp).abs()) + 4.0 * h * (1.0 + self.d1(bp).abs());
            let slack_d = c1_tol * (1.0 + self.d1(bp).abs()) + 4.0 * h * (1.0 + self.d2(bp).abs());
            if jump_v > slack_v {
                return Err(format!("value jump {jump_v} at breakpoint {bp}"));
            }
            if jump_d > slack_d {
                return Err(format!("derivative jump {jump_d} at breakpoint {bp}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sine_profile_derivatives() {
        let p = WarpProfile::sine((0.0, PI));
        let t = 0.7;
        assert!((p.value(t) - t.sin()).abs() < 1e-15);
        assert!((p.d1(t) - t.cos()).abs() < 1e-15);
        assert!((p.d2(t) + t.sin()).abs() < 1e-15);
        assert!(p.validate(1000, 1e-10).is_ok());
    }

    #[test]
    fn validate_rejects_sign_change() {
        let p = WarpProfile::cosine((0.0, PI));
        assert!(p.validate(1000, 1e-10).is_err());
    }
}
