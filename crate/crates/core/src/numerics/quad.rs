//! Composite Gauss-Legendre quadrature with dyadic adaptive bisection.
//!
//! All integrands handled here are smooth on panels; callers truncate
//! exponential tails and split at breakpoints of piecewise definitions, so a
//! fixed-order rule plus bisection-on-disagreement is enough to reach
//! near-machine accuracy.

use std::f64::consts::PI;
use std::sync::OnceLock;

use thiserror::Error;

/// Nodes and weights of an `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the rule by Newton iteration on the Legendre polynomial,
    /// starting from the Chebyshev-like initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_deriv(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_deriv(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    /// Integrates `f` over `[a, b]` with this fixed rule (no refinement).
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        half * sum
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes and weights on the reference interval `[-1, 1]`.
    pub fn nodes_weights(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }
}

fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Shared 32-point rule; the default workhorse for all adaptive panels.
pub(crate) fn gl32() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(32))
}

/// Adaptive quadrature configuration.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureRule {
    pub node_count: usize,
    pub tolerance: f64,
    pub max_refinement_depth: usize,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self {
            node_count: 32,
            tolerance: 1e-12,
            max_refinement_depth: 48,
        }
    }
}

impl QuadratureRule {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            tolerance,
            ..Self::default()
        }
    }
}

/// Value plus achieved error estimate of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
}

#[derive(Debug, Error)]
pub enum QuadError {
    #[error("adaptive refinement hit depth {depth} (best {best:.17e}, residual {residual:.3e})")]
    MaxDepth {
        depth: usize,
        best: f64,
        residual: f64,
    },
    #[error("invalid interval [{a}, {b}]")]
    BadInterval { a: f64, b: f64 },
}

impl QuadratureRule {
    /// Integrates `f` over `[a, b]`, bisecting panels until the coarse and
    /// refined values agree within the (scaled) tolerance. The reported
    /// estimate is the accumulated panel disagreement.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<QuadResult, QuadError> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(QuadError::BadInterval { a, b });
        }
        let rule = GaussLegendre::new(self.node_count);
        let rough = rule.integrate(&f, a, b);
        let abs_tol = self.tolerance * (1.0 + rough.abs());
        let mut value = 0.0;
        let mut err = 0.0;
        let mut residual = 0.0;
        self.panel(&f, &rule, a, b, abs_tol, 0, &mut value, &mut err, &mut residual);
        if residual > 0.0 {
            return Err(QuadError::MaxDepth {
                depth: self.max_refinement_depth,
                best: value,
                residual,
            });
        }
        Ok(QuadResult {
            value,
            error_estimate: err,
        })
    }

    /// Integrates over `[a, b]` split at the interior `breakpoints`, so each
    /// adaptive run sees a smooth piece. Breakpoints outside `(a, b)` are
    /// ignored.
    pub fn integrate_piecewise<F: Fn(f64) -> f64>(
        &self,
        f: F,
        a: f64,
        b: f64,
        breakpoints: &[f64],
    ) -> Result<QuadResult, QuadError> {
        if !(a < b) {
            return Err(QuadError::BadInterval { a, b });
        }
        let mut cuts = vec![a];
        let mut inner: Vec<f64> = breakpoints.iter().copied().filter(|t| *t > a && *t < b).collect();
        inner.sort_by(|x, y| x.partial_cmp(y).unwrap());
        inner.dedup();
        cuts.extend(inner);
        cuts.push(b);
        let mut value = 0.0;
        let mut err = 0.0;
        for pair in cuts.windows(2) {
            let r = self.integrate(&f, pair[0], pair[1])?;
            value += r.value;
            err += r.error_estimate;
        }
        Ok(QuadResult {
            value,
            error_estimate: err,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn panel<F: Fn(f64) -> f64>(
        &self,
        f: &F,
        rule: &GaussLegendre,
        a: f64,
        b: f64,
        tol: f64,
        depth: usize,
        value: &mut f64,
        err: &mut f64,
        residual: &mut f64,
    ) {
        let coarse = rule.integrate(f, a, b);
        let mid = 0.5 * (a + b);
        let fine = rule.integrate(f, a, mid) + rule.integrate(f, mid, b);
        let disagreement = (fine - coarse).abs();
        if disagreement <= tol || b - a < 1e-15 * (1.0 + a.abs()) {
            *value += fine;
            *err += disagreement;
            return;
        }
        if depth >= self.max_refinement_depth {
            *value += fine;
            *err += disagreement;
            *residual += disagreement;
            return;
        }
        self.panel(f, rule, a, mid, 0.5 * tol, depth + 1, value, err, residual);
        self.panel(f, rule, mid, b, 0.5 * tol, depth + 1, value, err, residual);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_on_unit_interval() {
        let r = QuadratureRule::default().integrate(|_| 1.0, 0.0, 1.0).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn sine_cubed_wallis() {
        let r = QuadratureRule::default()
            .integrate(|t| t.sin().powi(3), 0.0, PI / 2.0)
            .unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-13, "got {}", r.value);
    }

    #[test]
    fn truncated_gaussian_tail() {
        // One-sided Gaussian integral; T = 40 puts the truncation error far
        // below the tolerance.
        let r = QuadratureRule::default()
            .integrate(|t| (-t * t / 2.0).exp(), 0.0, 40.0)
            .unwrap();
        let exact = (PI / 2.0).sqrt();
        assert!((r.value - exact).abs() < 1e-12, "got {} want {}", r.value, exact);
        assert!(r.error_estimate < 1e-10);
    }

    #[test]
    fn single_panel_exact_for_low_degree_polynomials() {
        // Degree <= 2n-1 must be exact on one panel up to roundoff.
        let rule = GaussLegendre::new(8);
        let f = |x: f64| {
            let mut p = 0.0;
            for (i, c) in [1.0, -2.0, 3.0, 0.5, -1.5, 2.5, -0.25, 1.25, 0.75, -0.125, 0.5, 1.0, -1.0, 0.25, 2.0, -0.5]
                .iter()
                .enumerate()
            {
                p += c * x.powi(i as i32);
            }
            p
        };
        let got = rule.integrate(&f, -1.0, 1.0);
        // Exact value of the even-power terms over [-1, 1].
        let coeffs = [1.0, -2.0, 3.0, 0.5, -1.5, 2.5, -0.25, 1.25, 0.75, -0.125, 0.5, 1.0, -1.0, 0.25, 2.0, -0.5];
        let mut exact = 0.0;
        for (i, c) in coeffs.iter().enumerate() {
            if i % 2 == 0 {
                exact += 2.0 * c / (i as f64 + 1.0);
            }
        }
        assert!((got - exact).abs() <= 10.0 * f64::EPSILON * (1.0 + exact.abs()), "got {got} want {exact}");
    }

    #[test]
    fn reports_non_convergence_with_best_estimate() {
        // |x|^0.1 near 0 refines forever at depth 3.
        let rule = QuadratureRule {
            node_count: 4,
            tolerance: 1e-15,
            max_refinement_depth: 3,
        };
        let err = rule.integrate(|x: f64| x.abs().powf(0.1), 0.0, 1.0).unwrap_err();
        match err {
            QuadError::MaxDepth { best, residual, .. } => {
                assert!((best - 1.0 / 1.1).abs() < 1e-2);
                assert!(residual > 0.0);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn piecewise_splits_at_kinks() {
        let r = QuadratureRule::default()
            .integrate_piecewise(|x: f64| x.abs(), -1.0, 1.0, &[0.0])
            .unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
    }
}
