//! Grid certification of curvature lower bounds.

use super::warped::{ricci_frame, MultiplyWarpedMetric};
use super::weighted::{bakry_emery_frame, RadialWeightedManifold};
use super::GeometryError;

/// What to scan: a pure warped-product metric (frame Ricci) or a weighted
/// manifold (frame Bakry-Emery).
pub enum CurvatureTarget<'a> {
    Metric(&'a MultiplyWarpedMetric),
    Weighted(&'a RadialWeightedManifold),
}

/// Result of a grid scan: the overall minimum, where it was attained, and
/// the per-direction minima (base then fibers, or radial then tangential).
#[derive(Debug, Clone)]
pub struct CurvatureBound {
    pub rho_star: f64,
    pub argmin: f64,
    pub per_direction_min: Vec<f64>,
}

/// Minimum frame curvature eigenvalue over the grid. Refining the grid can
/// only lower the result (it is a minimum over more points).
pub fn ricci_lower_bound(target: &CurvatureTarget, grid: &[f64]) -> Result<CurvatureBound, GeometryError> {
    if grid.is_empty() {
        return Err(GeometryError::EmptyGrid);
    }
    let mut rho_star = f64::INFINITY;
    let mut argmin = grid[0];
    let mut per_dir: Vec<f64> = Vec::new();
    for &t in grid {
        let values: Vec<f64> = match target {
            CurvatureTarget::Metric(m) => {
                let f = ricci_frame(m, t)?;
                f.directions().collect()
            }
            CurvatureTarget::Weighted(w) => {
                let f = bakry_emery_frame(w, t)?;
                vec![f.radial, f.tangential]
            }
        };
        if per_dir.is_empty() {
            per_dir = vec![f64::INFINITY; values.len()];
        }
        for (slot, v) in per_dir.iter_mut().zip(&values) {
            *slot = slot.min(*v);
        }
        let local = values.iter().copied().fold(f64::INFINITY, f64::min);
        if local < rho_star {
            rho_star = local;
            argmin = t;
        }
    }
    Ok(CurvatureBound {
        rho_star,
        argmin,
        per_direction_min: per_dir,
    })
}

/// Uniform grid on the open interior of `(lo, hi)` with an endpoint margin,
/// the default way every certification grid is built.
pub fn interior_grid(lo: f64, hi: f64, n: usize, margin: f64) -> Vec<f64> {
    assert!(n >= 1);
    let a = lo + margin;
    let b = hi - margin;
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1).max(1) as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{FiberSpec, WarpProfile};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn round_sphere_bound_is_d_minus_one() {
        let dom = (0.0, FRAC_PI_2);
        let m = MultiplyWarpedMetric::new(
            dom,
            vec![
                (FiberSpec::unit_sphere(1), WarpProfile::sine(dom)),
                (FiberSpec::unit_sphere(2), WarpProfile::cosine(dom)),
            ],
        );
        let grid = interior_grid(0.0, FRAC_PI_2, 1000, 1e-4);
        let b = ricci_lower_bound(&CurvatureTarget::Metric(&m), &grid).unwrap();
        assert!((b.rho_star - 3.0).abs() < 1e-11, "{}", b.rho_star);
        assert_eq!(b.per_direction_min.len(), 3);
    }

    #[test]
    fn refinement_is_nonincreasing() {
        let dom = (0.0, FRAC_PI_2);
        let m = MultiplyWarpedMetric::new(
            dom,
            vec![
                (FiberSpec::unit_sphere(1), WarpProfile::sine(dom)),
                (FiberSpec::unit_sphere(2), WarpProfile::cosine(dom)),
            ],
        );
        // Dyadic grids: the refined grid contains the coarse one.
        let coarse: Vec<f64> = (1..16).map(|i| FRAC_PI_2 * i as f64 / 16.0).collect();
        let fine: Vec<f64> = (1..32).map(|i| FRAC_PI_2 * i as f64 / 32.0).collect();
        let bc = ricci_lower_bound(&CurvatureTarget::Metric(&m), &coarse).unwrap();
        let bf = ricci_lower_bound(&CurvatureTarget::Metric(&m), &fine).unwrap();
        assert!(bf.rho_star <= bc.rho_star + 1e-15);
    }

    #[test]
    fn empty_grid_errors() {
        let dom = (0.0, FRAC_PI_2);
        let m = MultiplyWarpedMetric::new(
            dom,
            vec![(FiberSpec::unit_sphere(3), WarpProfile::sine(dom))],
        );
        assert!(ricci_lower_bound(&CurvatureTarget::Metric(&m), &[]).is_err());
    }
}
