//! The smoothing kernel behind every gluing in the torpedo construction:
//! a compactly supported bump and its normalized decreasing step.

use std::sync::OnceLock;

/// Bump `psi(s) = exp(-1/(1 - 4 s^2))` on `|s| < 1/2`, zero outside.
pub fn psi(s: f64) -> f64 {
    if s.abs() >= 0.5 {
        return 0.0;
    }
    let w = 1.0 - 4.0 * s * s;
    (-1.0 / w).exp()
}

/// Normalized decreasing step `eta(s) = (1/D) * integral of psi over [s, 1]`
/// with `D` the total mass of `psi`. Plateaus: 1 for `s <= -1/2`, 0 for
/// `s >= 1/2`; odd symmetry around `(0, 1/2)`; unit integral over `[-1, 1]`.
#[derive(Debug, Clone, Copy)]
pub struct SmoothStep {
    /// Total mass of the bump.
    pub d_const: f64,
}

impl SmoothStep {
    pub fn new() -> Self {
        static D: OnceLock<f64> = OnceLock::new();
        let d_const = *D.get_or_init(|| panel_integral(psi, -0.5, 0.5, 16));
        Self { d_const }
    }

    pub fn eta(&self, s: f64) -> f64 {
        if s <= -0.5 {
            return 1.0;
        }
        if s >= 0.5 {
            return 0.0;
        }
        (panel_integral(psi, s, 0.5, 8) / self.d_const).clamp(0.0, 1.0)
    }

    pub fn eta_derivative(&self, s: f64) -> f64 {
        -psi(s) / self.d_const
    }

    /// Antiderivative `integral of eta over [-1, x]`, clamped to the exact
    /// plateau values outside the transition zone (the kernel symmetry makes
    /// the full integral exactly 1).
    pub fn eta_integral(&self, x: f64) -> f64 {
        if x <= -0.5 {
            return (x + 1.0).max(0.0);
        }
        if x >= 0.5 {
            return 1.0;
        }
        0.5 + panel_integral(|s| self.eta(s), -0.5, x, 8)
    }
}

impl Default for SmoothStep {
    fn default() -> Self {
        Self::new()
    }
}

/// Fixed composite Gauss-Legendre integration: `panels` equal panels of the
/// shared 32-point rule. Enough for the (smooth, flat-ended) kernel family
/// at full double precision.
fn panel_integral<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    if a >= b {
        return if a > b { -panel_integral(f, b, a, panels) } else { 0.0 };
    }
    let rule = crate::numerics::gl32();
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for i in 0..panels {
        sum += rule.integrate(&f, a + i as f64 * h, a + (i + 1) as f64 * h);
    }
    sum
}
