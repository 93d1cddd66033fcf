//! Ricci curvature of a multiply warped product over a one-dimensional base.
//!
//! For an interval base the Hessian, Laplacian, and gradient of each warp
//! function reduce to plain derivatives (`Hess b = b'' dt^2`, `Delta b = b''`,
//! `|grad b|^2 = (b')^2`), so the frame Ricci eigenvalues close up into the
//! formulas below. The general-base version of the underlying tensor
//! identity carries an extra `Ric_base` term that is identically zero here
//! and has no runtime home.

use super::profile::WarpProfile;
use super::GeometryError;

/// A fiber of the warped product: dimension and Einstein constant, meaning
/// `Ric_fiber = einstein_constant * g_fiber`.
#[derive(Debug, Clone, Copy)]
pub struct FiberSpec {
    pub dim: u32,
    pub einstein_constant: f64,
}

impl FiberSpec {
    /// The unit round sphere of dimension `m` (`kappa = m - 1`; zero for the
    /// circle).
    pub fn unit_sphere(m: u32) -> Self {
        assert!(m >= 1);
        Self {
            dim: m,
            einstein_constant: (m - 1) as f64,
        }
    }
}

/// Interval base plus warped Einstein fibers: `g = dt^2 + sum b_i^2 g_i`.
#[derive(Debug, Clone)]
pub struct MultiplyWarpedMetric {
    pub base_interval: (f64, f64),
    pub fibers: Vec<(FiberSpec, WarpProfile)>,
}

impl MultiplyWarpedMetric {
    pub fn new(base_interval: (f64, f64), fibers: Vec<(FiberSpec, WarpProfile)>) -> Self {
        assert!(!fibers.is_empty(), "need at least one fiber");
        for (_, profile) in &fibers {
            assert_eq!(
                profile.domain, base_interval,
                "all warp profiles must share the base interval"
            );
        }
        // A coordinate singularity can close at most one fiber per endpoint.
        for endpoint in [base_interval.0, base_interval.1] {
            let vanishing = fibers
                .iter()
                .filter(|(_, p)| p.value(endpoint).abs() < 1e-12)
                .count();
            assert!(
                vanishing <= 1,
                "more than one warp profile vanishes at {endpoint}"
            );
        }
        Self { base_interval, fibers }
    }

    pub fn total_dim(&self) -> u32 {
        1 + self.fibers.iter().map(|(f, _)| f.dim).sum::<u32>()
    }
}

/// Orthonormal-frame Ricci eigenvalues: the base direction, then one value
/// per fiber (all frame directions within a fiber share it).
#[derive(Debug, Clone, PartialEq)]
pub struct RicciFrame {
    pub base: f64,
    pub fibers: Vec<f64>,
}

impl RicciFrame {
    pub fn min(&self) -> f64 {
        self.fibers.iter().fold(self.base, |m, v| m.min(*v))
    }

    pub fn directions(&self) -> impl Iterator<Item = f64> + '_ {
        std::iter::once(self.base).chain(self.fibers.iter().copied())
    }
}

/// Frame Ricci eigenvalues of the warped product at an interior base point:
///
/// ```text
/// R_base    = - sum_i s_i b_i''/b_i
/// R_fiber_i = kappa_i/b_i^2
///             - [ b_i''/b_i + (s_i - 1)(b_i'/b_i)^2
///                 + sum_{k != i} s_k b_i' b_k' / (b_i b_k) ]
/// ```
pub fn ricci_frame(metric: &MultiplyWarpedMetric, t: f64) -> Result<RicciFrame, GeometryError> {
    let (lo, hi) = metric.base_interval;
    if !(t > lo && t < hi) {
        return Err(GeometryError::OutsideInterior { point: t, lo, hi });
    }
    let vals: Vec<(f64, f64, f64, u32, f64)> = metric
        .fibers
        .iter()
        .map(|(spec, b)| (b.value(t), b.d1(t), b.d2(t), spec.dim, spec.einstein_constant))
        .collect();
    for (v, ..) in &vals {
        if !(*v > 0.0) {
            return Err(GeometryError::DegenerateWarp { point: t });
        }
    }
    let base = -vals
        .iter()
        .map(|(v, _, dd, s, _)| *s as f64 * dd / v)
        .sum::<f64>();
    let fibers = vals
        .iter()
        .enumerate()
        .map(|(i, (v, d, dd, s, kappa))| {
            let mut bracket = dd / v + (*s as f64 - 1.0) * (d / v) * (d / v);
            for (k, (vk, dk, _, sk, _)) in vals.iter().enumerate() {
                if k != i {
                    bracket += *sk as f64 * d * dk / (v * vk);
                }
            }
            kappa / (v * v) - bracket
        })
        .collect();
    Ok(RicciFrame { base, fibers })
}
