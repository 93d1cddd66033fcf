//! One-dimensional weighted sector problems and their mass-lumped
//! piecewise-linear discretization.
//!
//! The quadratic form is `int w (u')^2 + int w q u^2` over `int w u^2` on a
//! uniform grid. Where the weight vanishes at a geometric endpoint the
//! eigenfunction either stays free (angular index zero: natural condition,
//! keep the node) or vanishes identically (positive angular index: the node
//! is dropped, which is exact for the continuum eigenfunction). Artificial
//! truncation endpoints always drop the node.

use std::sync::Arc;

use std::sync::OnceLock;

use crate::numerics::{eig_sym_tridiag_below, sturm_count_below, GaussLegendre, SymTridiag};

use super::SpectralError;

/// Element-level coefficient rule: four points integrate the smooth
/// coefficients to O(h^8) per element, far below the scheme error.
fn gl4() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(4))
}

pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Boundary treatment at one end of the sector interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bc {
    /// Keep the endpoint degree of freedom (do-nothing condition).
    Natural,
    /// Drop the endpoint degree of freedom.
    Dirichlet,
}

/// One separated eigenvalue problem.
#[derive(Clone)]
pub struct SectorSpec {
    pub interval: (f64, f64),
    pub weight: ScalarFn,
    pub potential: ScalarFn,
    pub multiplicity: u64,
    pub label: String,
    pub bc_left: Bc,
    pub bc_right: Bc,
    /// Interior points where the coefficient definitions switch pieces.
    pub breakpoints: Vec<f64>,
}

impl std::fmt::Debug for SectorSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SectorSpec")
            .field("interval", &self.interval)
            .field("multiplicity", &self.multiplicity)
            .field("label", &self.label)
            .field("bc", &(self.bc_left, self.bc_right))
            .finish()
    }
}

fn element_integrals(sector: &SectorSpec, n: usize) -> (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>) {
    let (a, b) = sector.interval;
    let h = (b - a) / n as f64;
    let rule = gl4();
    // Per element e: sw[e] = int_e w; mass/potential split between the two
    // endpoint hats.
    let mut sw = vec![0.0; n];
    let mut mass_lo = vec![0.0; n];
    let mut mass_hi = vec![0.0; n];
    let mut pot = vec![0.0; 2 * n]; // (lo, hi) pairs
    for e in 0..n {
        let x0 = a + e as f64 * h;
        let x1 = x0 + h;
        let mut s = 0.0;
        let mut m0 = 0.0;
        let mut m1 = 0.0;
        let mut p0 = 0.0;
        let mut p1 = 0.0;
        let half = 0.5 * h;
        let mid = 0.5 * (x0 + x1);
        for (xr, wr) in rule.nodes_weights() {
            let x = mid + half * xr;
            let wq = half * wr;
            let w = (sector.weight)(x);
            let q = (sector.potential)(x);
            let hat_hi = (x - x0) / h;
            let hat_lo = 1.0 - hat_hi;
            s += wq * w;
            m0 += wq * w * hat_lo;
            m1 += wq * w * hat_hi;
            p0 += wq * w * q * hat_lo;
            p1 += wq * w * q * hat_hi;
        }
        sw[e] = s;
        mass_lo[e] = m0;
        mass_hi[e] = m1;
        pot[2 * e] = p0;
        pot[2 * e + 1] = p1;
    }
    (sw, mass_lo, mass_hi, pot)
}

/// Assembles the generalized problem and reduces it to a standard symmetric
/// tridiagonal matrix via the lumped-mass scaling.
pub fn discretize_sector(sector: &SectorSpec, n: usize) -> Result<SymTridiag, SpectralError> {
    if n < 16 {
        return Err(SpectralError::GridTooSmall { n });
    }
    let (a, b) = sector.interval;
    let h = (b - a) / n as f64;
    let (sw, mass_lo, mass_hi, pot) = element_integrals(sector, n);

    // Nodal accumulation over all n+1 nodes.
    let nodes = n + 1;
    let mut mass = vec![0.0; nodes];
    let mut diag = vec![0.0; nodes];
    let mut off = vec![0.0; nodes - 1];
    for e in 0..n {
        let k = sw[e] / (h * h);
        diag[e] += k + pot[2 * e];
        diag[e + 1] += k + pot[2 * e + 1];
        off[e] -= k;
        mass[e] += mass_lo[e];
        mass[e + 1] += mass_hi[e];
    }

    let lo = if sector.bc_left == Bc::Dirichlet { 1 } else { 0 };
    let hi = if sector.bc_right == Bc::Dirichlet { nodes - 1 } else { nodes };
    let dofs = hi - lo;
    let mut sd = Vec::with_capacity(dofs);
    let mut so = Vec::with_capacity(dofs - 1);
    for i in lo..hi {
        if !(mass[i] > 0.0) {
            return Err(SpectralError::NonpositiveWeight { at: a + i as f64 * h });
        }
        sd.push(diag[i] / mass[i]);
        if i + 1 < hi {
            so.push(off[i] / (mass[i] * mass[i + 1]).sqrt());
        }
    }
    Ok(SymTridiag::new(sd, so))
}

/// Lowest sector eigenvalues, optionally Richardson-extrapolated over grids
/// `n` and `2n` with the attached error estimate.
#[derive(Debug, Clone)]
pub struct SectorEigs {
    pub values: Vec<f64>,
    /// Present when extrapolation ran: one estimate per value.
    pub error_estimates: Option<Vec<f64>>,
}

pub fn sector_eigs(
    sector: &SectorSpec,
    n: usize,
    count: usize,
    extrapolate: bool,
) -> Result<SectorEigs, SpectralError> {
    sector_eigs_impl(sector, n, count, f64::INFINITY, extrapolate)
}

/// All sector eigenvalues at most `lambda_max` (after extrapolation), in
/// ascending order.
pub fn sector_eigs_below(
    sector: &SectorSpec,
    n: usize,
    lambda_max: f64,
    extrapolate: bool,
) -> Result<SectorEigs, SpectralError> {
    let upper = lambda_max * 1.02 + 1.0;
    let fine_mat = discretize_sector(sector, if extrapolate { 2 * n } else { n })?;
    let count = sturm_count_below(&fine_mat, upper);
    let mut eigs = if count == 0 {
        SectorEigs {
            values: Vec::new(),
            error_estimates: if extrapolate { Some(Vec::new()) } else { None },
        }
    } else if !extrapolate {
        SectorEigs {
            values: eig_sym_tridiag_below(&fine_mat, count, upper)?,
            error_estimates: None,
        }
    } else {
        let fine = eig_sym_tridiag_below(&fine_mat, count, upper)?;
        let coarse_mat = discretize_sector(sector, n)?;
        let coarse = eig_sym_tridiag_below(&coarse_mat, count.min(coarse_mat.dim()), upper)?;
        combine_richardson(&coarse, &fine, fine_mat.norm_inf())
    };
    let keep = eigs.values.iter().take_while(|v| **v <= lambda_max).count();
    eigs.values.truncate(keep);
    if let Some(est) = &mut eigs.error_estimates {
        est.truncate(keep);
    }
    Ok(eigs)
}

fn sector_eigs_impl(
    sector: &SectorSpec,
    n: usize,
    count: usize,
    upper: f64,
    extrapolate: bool,
) -> Result<SectorEigs, SpectralError> {
    if count == 0 {
        return Ok(SectorEigs {
            values: Vec::new(),
            error_estimates: if extrapolate { Some(Vec::new()) } else { None },
        });
    }
    let coarse_mat = discretize_sector(sector, n)?;
    let coarse = eig_sym_tridiag_below(&coarse_mat, count.min(coarse_mat.dim()), upper)?;
    if !extrapolate {
        return Ok(SectorEigs {
            values: coarse,
            error_estimates: None,
        });
    }
    let fine_mat = discretize_sector(sector, 2 * n)?;
    let fine = eig_sym_tridiag_below(&fine_mat, count.min(fine_mat.dim()), upper)?;
    let norm = fine_mat.norm_inf();
    Ok(combine_richardson(&coarse, &fine, norm))
}

fn combine_richardson(coarse: &[f64], fine: &[f64], fine_norm: f64) -> SectorEigs {
    // The estimate is the cancelled h^2 term plus the floating-point floor
    // of the discrete problem (near-zero eigenvalues of stiff matrices sit
    // in noise proportional to the matrix norm).
    let floor = 16.0 * f64::EPSILON * fine_norm.max(1.0);
    let mut values = Vec::with_capacity(fine.len());
    let mut est = Vec::with_capacity(fine.len());
    for (c, f) in coarse.iter().zip(fine) {
        values.push((4.0 * f - c) / 3.0);
        est.push((f - c).abs() / 3.0 + floor + 1e-13 * f.abs());
    }
    SectorEigs {
        values,
        error_estimates: Some(est),
    }
}
