//! Bakry-Emery curvature of rotationally symmetric weighted manifolds
//! `dr^2 + rho(r)^2 g_{S^{d-1}}` with a radial potential `V`.

use super::profile::WarpProfile;
use super::GeometryError;

/// Rotationally symmetric metric profile plus radial potential. The weighted
/// measure is `e^{-V} dvol_g`; the normalization constant is left to the
/// measure-level code since curvature does not see it.
#[derive(Debug, Clone)]
pub struct RadialWeightedManifold {
    pub dim: u32,
    pub profile: WarpProfile,
    pub potential: WarpProfile,
}

impl RadialWeightedManifold {
    pub fn new(dim: u32, profile: WarpProfile, potential: WarpProfile) -> Self {
        assert!(dim >= 2, "need dimension at least 2");
        Self { dim, profile, potential }
    }
}

/// The two distinct frame eigenvalues of `Ric_g + Hess V` on a rotationally
/// symmetric weighted manifold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BakryEmeryFrame {
    pub radial: f64,
    pub tangential: f64,
}

impl BakryEmeryFrame {
    pub fn min(&self) -> f64 {
        self.radial.min(self.tangential)
    }
}

/// Frame Bakry-Emery eigenvalues at radius `r > 0`:
///
/// ```text
/// radial     = -(d-1) rho''/rho + V''
/// tangential = -rho''/rho + (d-2)(1 - (rho')^2)/rho^2 + V' rho'/rho
/// ```
pub fn bakry_emery_frame(man: &RadialWeightedManifold, r: f64) -> Result<BakryEmeryFrame, GeometryError> {
    let (lo, hi) = man.profile.domain;
    if !(r > lo.max(0.0) && r < hi) {
        return Err(GeometryError::OutsideInterior { point: r, lo: lo.max(0.0), hi });
    }
    let rho = man.profile.value(r);
    if !(rho > 0.0) {
        return Err(GeometryError::DegenerateWarp { point: r });
    }
    let rho1 = man.profile.d1(r);
    let rho2 = man.profile.d2(r);
    let v1 = man.potential.d1(r);
    let v2 = man.potential.d2(r);
    let d = man.dim as f64;
    Ok(BakryEmeryFrame {
        radial: -(d - 1.0) * rho2 / rho + v2,
        tangential: -rho2 / rho + (d - 2.0) * (1.0 - rho1 * rho1) / (rho * rho) + v1 * rho1 / rho,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat(dim: u32, potential: WarpProfile) -> RadialWeightedManifold {
        RadialWeightedManifold::new(dim, WarpProfile::identity((0.0, 100.0)), potential)
    }

    #[test]
    fn euclidean_space_is_flat() {
        let man = flat(4, WarpProfile::constant((0.0, 100.0), 0.0));
        let f = bakry_emery_frame(&man, 1.0).unwrap();
        assert!(f.radial.abs() < 1e-14);
        assert!(f.tangential.abs() < 1e-14);
    }

    #[test]
    fn gaussian_space_has_unit_curvature() {
        let man = flat(4, WarpProfile::new((0.0, 100.0), |r| r * r / 2.0, |r| r, |_| 1.0));
        let f = bakry_emery_frame(&man, 1.0).unwrap();
        assert!((f.radial - 1.0).abs() < 1e-14);
        assert!((f.tangential - 1.0).abs() < 1e-14);
        let g = bakry_emery_frame(&man, 7.5).unwrap();
        assert!((g.radial - 1.0).abs() < 1e-14);
        assert!((g.tangential - 1.0).abs() < 1e-14);
    }

    #[test]
    fn weighted_cylinder() {
        // rho = sqrt(2), V = (r-B)^2/2, d = 4 at r = B+1: radial 1 from V'',
        // tangential (d-2)/delta^2 = 1 plus the vanishing rho' terms.
        let b = std::f64::consts::FRAC_PI_2 * 2.0_f64.sqrt();
        let man = RadialWeightedManifold::new(
            4,
            WarpProfile::constant((0.0, 100.0), 2.0_f64.sqrt()),
            WarpProfile::new(
                (0.0, 100.0),
                move |r| (r - b) * (r - b) / 2.0,
                move |r| r - b,
                |_| 1.0,
            ),
        );
        let f = bakry_emery_frame(&man, b + 1.0).unwrap();
        assert!((f.radial - 1.0).abs() < 1e-14);
        assert!((f.tangential - 1.0).abs() < 1e-14);
    }

    #[test]
    fn origin_rejected() {
        let man = flat(4, WarpProfile::constant((0.0, 100.0), 0.0));
        assert!(bakry_emery_frame(&man, 0.0).is_err());
    }
}
