//! The perturbed sphere metric, its warp profiles, closed-form frame Ricci
//! values, and the exact polynomial identity behind the 25/12 curvature
//! bound.

use std::f64::consts::FRAC_PI_2;

use crate::geometry::{FiberSpec, MultiplyWarpedMetric, WarpProfile};
use crate::numerics::Rational;

/// `f(q) = [q(10 - 12q) + 2 eps q^3 (3 - 4q)] / (1 + eps q^2)^2`, the
/// curvature deficit density: the base-direction Ricci value of the
/// perturbed sphere is `(d - 1) - eps * f(sin^2 t)`.
pub fn f_curvature(q: f64, eps: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&q));
    debug_assert!(eps >= 0.0);
    let w = 1.0 + eps * q * q;
    (q * (10.0 - 12.0 * q) + 2.0 * eps * q.powi(3) * (3.0 - 4.0 * q)) / (w * w)
}

/// Exact coefficient table (powers of `q` by powers of `eps`) of
///
/// ```text
/// 25/12 (1 + eps q^2)^2 - [q(10-12q) + 2 eps q^3(3-4q)]
///   - [ 12 (q - 5/12)^2 + eps q^2 (8q^2 - 6q + 25/6) + 25/12 eps^2 q^4 ]
/// ```
///
/// which certifies `f <= 25/12`: the sum-of-squares decomposition matches
/// the defining expression identically, so the table must be all zeros.
pub fn sos_residual_coeffs() -> Vec<Vec<Rational>> {
    // coeffs[i][j] multiplies q^i eps^j ; degrees: q up to 4, eps up to 2.
    let mut c = vec![vec![Rational::zero(); 3]; 5];
    let r = |n: i64, d: i64| Rational::new(n, d);

    // 25/12 (1 + eps q^2)^2 = 25/12 + 25/6 eps q^2 + 25/12 eps^2 q^4
    c[0][0] = &c[0][0] + &r(25, 12);
    c[2][1] = &c[2][1] + &r(25, 6);
    c[4][2] = &c[4][2] + &r(25, 12);

    // - q(10 - 12q) = -10 q + 12 q^2
    c[1][0] = &c[1][0] + &r(-10, 1);
    c[2][0] = &c[2][0] + &r(12, 1);

    // - 2 eps q^3 (3 - 4q) = -6 eps q^3 + 8 eps q^4
    c[3][1] = &c[3][1] + &r(-6, 1);
    c[4][1] = &c[4][1] + &r(8, 1);

    // - 12 (q - 5/12)^2 = -12 q^2 + 10 q - 25/12
    c[2][0] = &c[2][0] + &r(-12, 1);
    c[1][0] = &c[1][0] + &r(10, 1);
    c[0][0] = &c[0][0] + &r(-25, 12);

    // - eps q^2 (8 q^2 - 6 q + 25/6) = -8 eps q^4 + 6 eps q^3 - 25/6 eps q^2
    c[4][1] = &c[4][1] + &r(-8, 1);
    c[3][1] = &c[3][1] + &r(6, 1);
    c[2][1] = &c[2][1] + &r(-25, 6);

    // - 25/12 eps^2 q^4
    c[4][2] = &c[4][2] + &r(-25, 12);

    c
}

/// The perturbed warp of the circle direction:
/// `a_eps(t) = sin(t) sqrt(1 + eps sin^4 t)`.
pub fn a_eps_profile(eps: f64, domain: (f64, f64)) -> WarpProfile {
    let value = move |t: f64| t.sin() * (1.0 + eps * t.sin().powi(4)).sqrt();
    let d1 = move |t: f64| {
        let (s, c) = t.sin_cos();
        let u = 1.0 + eps * s.powi(4);
        let du = 4.0 * eps * s.powi(3) * c;
        c * u.sqrt() + s * du / (2.0 * u.sqrt())
    };
    let d2 = move |t: f64| {
        let (s, c) = t.sin_cos();
        let u = 1.0 + eps * s.powi(4);
        let du = 4.0 * eps * s.powi(3) * c;
        let ddu = 12.0 * eps * s * s * c * c - 4.0 * eps * s.powi(4);
        -s * u.sqrt() + c * du / u.sqrt() + s * ddu / (2.0 * u.sqrt()) - s * du * du / (4.0 * u.powf(1.5))
    };
    WarpProfile::new(domain, value, d1, d2)
}

/// The perturbed sphere metric on its polar chart:
/// `dt^2 + a_eps^2 dtheta^2 + cos^2 t g_{S^{d-2}}` over `t` in `(0, pi/2)`.
pub fn perturbed_sphere_metric(d: u32, eps: f64) -> MultiplyWarpedMetric {
    assert!(d >= 3, "the chart needs a sphere factor of dimension >= 1");
    let dom = (0.0, FRAC_PI_2);
    MultiplyWarpedMetric::new(
        dom,
        vec![
            (FiberSpec::unit_sphere(1), a_eps_profile(eps, dom)),
            (FiberSpec::unit_sphere(d - 2), WarpProfile::cosine(dom)),
        ],
    )
}

/// Closed-form frame Ricci values `(R_t, R_theta, R_S)` of the perturbed
/// sphere, evaluated directly from the displayed expressions rather than the
/// warped-product engine; used to cross-check `ricci_frame`.
pub fn ricci_closed_form(d: u32, eps: f64, t: f64) -> (f64, f64, f64) {
    let q = t.sin().powi(2);
    let s4 = q * q;
    let f = f_curvature(q, eps);
    let bump = 2.0 * eps * s4 / (1.0 + eps * s4);
    let dm2 = (d - 2) as f64;
    let r_t = 1.0 - eps * f + dm2;
    let r_theta = dm2 + dm2 * bump + 1.0 - eps * f;
    let r_s = dm2 + 1.0 + bump;
    (r_t, r_theta, r_s)
}

/// Coordinate metric sampler for the `d = 4` chart `(t, theta, psi, phi)`
/// with the fiber two-sphere in spherical coordinates:
/// `diag(1, a_eps(t)^2, cos^2 t, cos^2 t sin^2 psi)`.
pub fn chart_sampler(eps: f64) -> impl Fn(&[f64]) -> Vec<Vec<f64>> + Sync {
    move |p: &[f64]| {
        let (t, psi) = (p[0], p[2]);
        let s = t.sin();
        let a2 = s * s * (1.0 + eps * s.powi(4));
        let c2 = t.cos().powi(2);
        let mut g = vec![vec![0.0; 4]; 4];
        g[0][0] = 1.0;
        g[1][1] = a2;
        g[2][2] = c2;
        g[3][3] = c2 * psi.sin().powi(2);
        g
    }
}
