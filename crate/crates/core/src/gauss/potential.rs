//! The radial potential: a smooth cutoff ramps the second derivative from 0
//! to 1 across `[B - 2 eps, B - eps]`, making the potential vanish on the cap
//! and become exactly quadratic on the cylinder.

use crate::geometry::WarpProfile;
use crate::numerics::gl32;

use super::smoothstep::SmoothStep;
use super::torpedo::TorpedoParams;

/// Cutoff `q(r) = 1 - eta((r - (B - 3 eps/2)) / eps)`: zero until
/// `B - 2 eps`, one from `B - eps` on, smooth and nondecreasing.
pub fn cutoff_q(r: f64, params: &TorpedoParams) -> f64 {
    let step = SmoothStep::new();
    let center = params.b - 1.5 * params.eps;
    1.0 - step.eta((r - center) / params.eps)
}

/// Cached transition data for the potential
/// `V(r) = integral of (r - u) q(u) over [0, r]`:
/// exact zero before the cutoff starts, quadrature across the transition,
/// and an exact quadratic continuation past it.
#[derive(Debug, Clone)]
pub struct PotentialCache {
    params: TorpedoParams,
    /// `V(B - eps)` and `V'(B - eps)`, the quadratic-continuation anchors.
    anchor_value: f64,
    anchor_slope: f64,
}

impl PotentialCache {
    pub fn build(params: &TorpedoParams) -> Self {
        let rule = gl32();
        let lo = params.b - 2.0 * params.eps;
        let hi = params.b - params.eps;
        // 64-node composite on the transition: two 32-point panels.
        let mid = 0.5 * (lo + hi);
        let q = |u: f64| cutoff_q(u, params);
        let anchor_slope =
            rule.integrate(&q, lo, mid) + rule.integrate(&q, mid, hi);
        let moment = |u: f64| (hi - u) * cutoff_q(u, params);
        let anchor_value =
            rule.integrate(&moment, lo, mid) + rule.integrate(&moment, mid, hi);
        Self {
            params: *params,
            anchor_value,
            anchor_slope,
        }
    }

    pub fn params(&self) -> &TorpedoParams {
        &self.params
    }

    /// `(V, V', V'')` at `r >= 0`.
    pub fn eval(&self, r: f64) -> (f64, f64, f64) {
        let lo = self.params.b - 2.0 * self.params.eps;
        let hi = self.params.b - self.params.eps;
        if r <= lo {
            (0.0, 0.0, 0.0)
        } else if r >= hi {
            let t = r - hi;
            (
                self.anchor_value + self.anchor_slope * t + 0.5 * t * t,
                self.anchor_slope + t,
                1.0,
            )
        } else {
            let rule = gl32();
            let q = |u: f64| cutoff_q(u, &self.params);
            let mid = 0.5 * (lo + r);
            let slope = rule.integrate(&q, lo, mid) + rule.integrate(&q, mid, r);
            let moment = |u: f64| (r - u) * cutoff_q(u, &self.params);
            let value = rule.integrate(&moment, lo, mid) + rule.integrate(&moment, mid, r);
            (value, slope, cutoff_q(r, &self.params))
        }
    }

    /// The potential as a profile on `[0, rmax]` for the curvature engine.
    pub fn as_profile(&self) -> WarpProfile {
        let cache = self.clone();
        let c1 = cache.clone();
        let c2 = cache.clone();
        WarpProfile::new(
            (0.0, self.params.rmax),
            move |r| cache.eval(r).0,
            move |r| c1.eval(r).1,
            move |r| c2.eval(r).2,
        )
        .with_breakpoints(self.params.breakpoints())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (TorpedoParams, PotentialCache) {
        let p = TorpedoParams::new(4, 0.05).unwrap();
        let cache = PotentialCache::build(&p);
        (p, cache)
    }

    #[test]
    fn cutoff_plateaus_and_midpoint() {
        let (p, _) = setup();
        assert_eq!(cutoff_q(p.b - 3.0 * p.eps, &p), 0.0);
        assert_eq!(cutoff_q(p.b - 0.5 * p.eps, &p), 1.0);
        assert!((cutoff_q(p.b - 1.5 * p.eps, &p) - 0.5).abs() < 1e-13);
        for i in 0..2000 {
            let r = (p.b + p.eps) * i as f64 / 1999.0;
            let v = cutoff_q(r, &p);
            assert!((-1e-15..=1.0 + 1e-15).contains(&v));
        }
    }

    #[test]
    fn potential_zero_on_cap() {
        let (p, cache) = setup();
        let (v, s, q) = cache.eval(p.b - 3.0 * p.eps);
        assert_eq!((v, s, q), (0.0, 0.0, 0.0));
        let (v, _, _) = cache.eval(0.5);
        assert_eq!(v, 0.0);
    }

    #[test]
    fn boundary_values_bounded_by_eps() {
        let (p, cache) = setup();
        let (v, s, _) = cache.eval(p.b);
        assert!(v > 0.0 && v <= 2.0 * p.eps * p.eps, "V(B) = {v}");
        assert!(s > 0.0 && s <= 2.0 * p.eps, "V'(B) = {s}");
    }

    #[test]
    fn second_derivative_is_the_cutoff() {
        let (p, cache) = setup();
        let h = 1e-4;
        for &r in &[p.b - 1.7 * p.eps, p.b - 1.2 * p.eps, p.b - 0.5 * p.eps, p.b + 1.0] {
            let fd = (cache.eval(r + h).0 - 2.0 * cache.eval(r).0 + cache.eval(r - h).0) / (h * h);
            assert!((fd - cutoff_q(r, &p)).abs() < 1e-5, "r = {r}: {fd}");
        }
        // Past the transition the second derivative is exactly 1 up to the
        // central-difference roundoff floor.
        for &r in &[p.b - 0.5 * p.eps, p.b, p.b + 2.0] {
            let fd = (cache.eval(r + h).0 - 2.0 * cache.eval(r).0 + cache.eval(r - h).0) / (h * h);
            assert!((fd - 1.0).abs() < 1e-7, "r = {r}: {fd}");
        }
    }

    #[test]
    fn tail_is_exactly_quadratic_from_the_anchors() {
        let (p, cache) = setup();
        let (vb, sb, _) = cache.eval(p.b);
        for &t in &[0.5, 1.0, 3.0] {
            let (v, s, q) = cache.eval(p.b + t);
            assert!((v - (vb + sb * t + 0.5 * t * t)).abs() < 1e-13);
            assert!((s - (sb + t)).abs() < 1e-13);
            assert_eq!(q, 1.0);
        }
    }

    #[test]
    fn potential_monotone_quantities() {
        let (p, cache) = setup();
        for i in 0..2000 {
            let r = p.rmax * i as f64 / 1999.0;
            let (v, s, q) = cache.eval(r);
            assert!(v >= 0.0 && s >= 0.0, "monotone data at {r}");
            assert!((-1e-15..=1.0 + 1e-15).contains(&q));
        }
    }
}
