//! Separation-of-variables eigensolver: each spherical-harmonic sector of a
//! rotationally symmetric geometry is a one-dimensional weighted
//! Sturm-Liouville problem; solved sectors merge into a full spectrum with
//! multiplicities, to be compared against closed-form reference spectra.

mod assemble;
mod compare;
mod enumerate;
mod reference;
mod sector;

pub use assemble::{assemble_spectrum, SolvedSector, Spectrum, SpectrumEntry};
pub use compare::{compare_spectra, ComparisonResult, Verdict};
pub use enumerate::{enumerate_sectors, CompletenessCertificate, Geometry};
pub use reference::{reference_spectrum, ReferenceKind};
pub use sector::{discretize_sector, sector_eigs, sector_eigs_below, Bc, SectorEigs, SectorSpec};

use thiserror::Error;

/// Full pipeline for one geometry: enumerate sectors complete up to
/// `lambda_max`, solve each on the `n`-grid (with Richardson extrapolation
/// when `extrapolate` is set), and assemble a spectrum certified through
/// index `k_needed`.
pub fn compute_spectrum(
    geometry: &Geometry,
    lambda_max: f64,
    k_needed: u64,
    n: usize,
    extrapolate: bool,
) -> Result<(Spectrum, CompletenessCertificate), SpectralError> {
    let (sectors, cert) = enumerate_sectors(geometry, lambda_max, (n / 4).max(64))?;
    let mut solved = Vec::with_capacity(sectors.len());
    for sector in &sectors {
        let eigs = sector_eigs_below(sector, n, lambda_max, extrapolate)?;
        solved.push(SolvedSector {
            label: sector.label.clone(),
            multiplicity: sector.multiplicity,
            eigenvalues: eigs.values,
        });
    }
    let spectrum = assemble_spectrum(solved, lambda_max, k_needed)?;
    Ok((spectrum, cert))
}

/// Like [`compute_spectrum`] but raises `lambda_max` geometrically until the
/// requested index count is certified (or the attempt cap is hit).
pub fn compute_spectrum_with_count(
    geometry: &Geometry,
    count: u64,
    mut lambda_max: f64,
    n: usize,
    extrapolate: bool,
) -> Result<(Spectrum, CompletenessCertificate), SpectralError> {
    let mut last_err = None;
    for _ in 0..8 {
        match compute_spectrum(geometry, lambda_max, count, n, extrapolate) {
            Ok(out) => return Ok(out),
            Err(SpectralError::InsufficientCertificate { required, .. }) => {
                lambda_max = required.max(lambda_max * 1.5);
                last_err = Some(SpectralError::InsufficientCertificate {
                    lambda_max,
                    index: count as usize,
                    required,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or(SpectralError::EmptyHorizon))
}

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("weight not positive at interior node {at}")]
    NonpositiveWeight { at: f64 },
    #[error("grid size {n} too small (need at least 16)")]
    GridTooSmall { n: usize },
    #[error(
        "completeness certificate at lambda_max = {lambda_max} cannot pin index {index}; \
         rerun with lambda_max above {required}"
    )]
    InsufficientCertificate {
        lambda_max: f64,
        index: usize,
        required: f64,
    },
    #[error("spectra share no indices to compare")]
    EmptyHorizon,
    #[error(transparent)]
    Eig(#[from] crate::numerics::EigError),
}
