//! Foundation kernels shared by every pipeline: adaptive Gauss-Legendre
//! quadrature, exact rational arithmetic, Wallis sine-power integrals, and a
//! Sturm-bisection eigensolver for symmetric tridiagonal matrices.

mod moments;
mod quad;
mod rational;
mod special;
mod tridiag;
mod wallis;

pub use moments::{beta_moment_ratio, q_moment, q_ratio};
pub use special::{gamma_half, sphere_surface_area};
pub(crate) use quad::gl32;
pub use quad::{GaussLegendre, QuadError, QuadResult, QuadratureRule};
pub use rational::Rational;
pub use tridiag::{eig_sym_tridiag, eig_sym_tridiag_below, sturm_count_below, EigError, SymTridiag};
pub use wallis::{wallis, WallisValue};
