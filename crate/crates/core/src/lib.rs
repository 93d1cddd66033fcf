//! Numerical verification toolkit for two families of weighted manifolds:
//! a perturbed round sphere and a weighted torpedo-cylinder. The library
//! constructs both geometries, certifies their curvature lower bounds, and
//! checks the eigenvalue inequalities that separate them from the matching
//! constant-curvature and Gaussian model spaces.
//!
//! Layout:
//! - [`numerics`]: quadrature, exact rationals, Wallis integrals, and a
//!   symmetric tridiagonal eigensolver.
//! - [`geometry`]: Ricci curvature of multiply warped products, the
//!   Bakry-Emery tensor of radial weighted manifolds, and a finite-difference
//!   curvature oracle.
//! - [`sphere`]: the perturbed-sphere pipeline (curvature certificate,
//!   moment-ratio selection of the harmonic degree, Rayleigh-quotient tests).
//! - [`gauss`]: the torpedo-cylinder pipeline (smoothing kernel, torpedo
//!   profile, quadratic end potential, CD(1,inf) check, low-energy test
//!   functions).
//! - [`spectral`]: separation-of-variables eigensolver, reference spectra,
//!   and the Lipschitz-contraction spectrum comparator.

pub mod gauss;
pub mod geometry;
pub mod numerics;
pub mod spectral;
pub mod sphere;
