//! Orthogonality of the degree-`k` circle mode against low-degree monomials,
//! checked by genuine quadrature: the inner products separate into a
//! `t`-integral, a circle integral, and a fiber-sphere moment, and the circle
//! factor kills every cross term because the frequencies cannot cancel.

use std::f64::consts::{FRAC_PI_2, PI};

use num::complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::numerics::{gamma_half, QuadError, QuadratureRule};

/// Monomial data `z^alpha zbar^beta y^gamma` (restricted to the sphere).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.alpha + self.beta + self.gamma.iter().sum::<u32>()
    }

    fn gamma_total(&self) -> u32 {
        self.gamma.iter().sum()
    }
}

/// Largest absolute inner products seen over the witness set.
#[derive(Debug, Clone, Copy)]
pub struct OrthogonalityReport {
    pub max_l2: f64,
    pub max_dirichlet: f64,
}

impl OrthogonalityReport {
    pub fn max_abs(&self) -> f64 {
        self.max_l2.max(self.max_dirichlet)
    }
}

/// Moment of `omega^gamma` over the round unit sphere `S^{m}` embedded in
/// `R^{m+1}`: zero unless all exponents are even, else the classical
/// Gamma-function product.
fn sphere_monomial_moment(gamma: &[u32]) -> f64 {
    if gamma.iter().any(|g| g % 2 == 1) {
        return 0.0;
    }
    let mut num = 2.0;
    let mut total = 0;
    for &g in gamma {
        num *= gamma_half(g + 1);
        total += g + 1;
    }
    num / gamma_half(total)
}

/// Periodic trapezoid sum of a complex integrand over `[0, 2 pi)`; exact for
/// trigonometric polynomials of frequency below `n/2`.
fn circle_integral<F: Fn(f64) -> Complex64>(f: F, n: usize) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..n {
        sum += f(2.0 * PI * j as f64 / n as f64);
    }
    sum * (2.0 * PI / n as f64)
}

/// Default witness set: every monomial of degree up to `min(k-1, 4)` with the
/// fiber exponent split over at most two slots, plus ten random monomials of
/// higher degree below `k`.
pub fn witness_monomials(d: u32, k: u32, seed: u64) -> Vec<Monomial> {
    let slots = (d as usize - 1).min(2);
    let mut out = Vec::new();
    let max_low = k.saturating_sub(1).min(4);
    for deg in 0..=max_low {
        for alpha in 0..=deg {
            for beta in 0..=(deg - alpha) {
                let g_total = deg - alpha - beta;
                for g1 in 0..=g_total {
                    let g2 = g_total - g1;
                    if slots < 2 && g2 > 0 {
                        continue;
                    }
                    let mut gamma = vec![0u32; d as usize - 1];
                    gamma[0] = g1;
                    if slots >= 2 {
                        gamma[1] = g2;
                    }
                    out.push(Monomial { alpha, beta, gamma });
                }
            }
        }
    }
    if k >= 7 {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..10 {
            let deg = rng.random_range(5..k);
            let alpha = rng.random_range(0..=deg);
            let beta = rng.random_range(0..=(deg - alpha));
            let g_total = deg - alpha - beta;
            let g1 = rng.random_range(0..=g_total);
            let mut gamma = vec![0u32; d as usize - 1];
            gamma[0] = g1;
            if gamma.len() >= 2 {
                gamma[1] = g_total - g1;
            } else {
                gamma[0] = g_total;
            }
            out.push(Monomial { alpha, beta, gamma });
        }
    }
    out
}

/// `sin^{a} cos^{g}` t-profile derivative, written so the `a = 0` and
/// `g = 0` branches never form `0 * inf`.
fn profile_d1(a: u32, g: u32, t: f64) -> f64 {
    let (s, c) = t.sin_cos();
    let mut v = 0.0;
    if a > 0 {
        v += a as f64 * s.powi(a as i32 - 1) * c.powi(g as i32 + 1);
    }
    if g > 0 {
        v -= g as f64 * s.powi(a as i32 + 1) * c.powi(g as i32 - 1);
    }
    v
}

/// Maximum absolute inner product (both pairings) between the witnesses and
/// the degree-`k` circle mode, each computed as a product of quadratures.
pub fn orthogonality_check(
    d: u32,
    k: u32,
    eps: f64,
    witnesses: &[Monomial],
    rule: &QuadratureRule,
) -> Result<OrthogonalityReport, QuadError> {
    let ki = k as i32;
    let kf = k as f64;
    let circle_nodes = (8 * k as usize + 64).next_power_of_two();
    let mut max_l2 = 0.0f64;
    let mut max_dir = 0.0f64;
    for mono in witnesses {
        let a = mono.alpha + mono.beta;
        let g = mono.gamma_total();
        let m = mono.alpha as i32 - mono.beta as i32;
        let omega = sphere_monomial_moment(&mono.gamma);

        // Circle factors. The mass factor pairs e^{im theta} against
        // cos(k theta); the gradient factor pairs the theta-derivatives.
        let theta_mass = circle_integral(
            |th| Complex64::new(0.0, m as f64 * th).exp() * Complex64::new((kf * th).cos(), 0.0),
            circle_nodes,
        );
        let theta_grad = circle_integral(
            |th| {
                let dh = Complex64::new(0.0, m as f64) * Complex64::new(0.0, m as f64 * th).exp();
                dh * Complex64::new(-kf * (kf * th).sin(), 0.0)
            },
            circle_nodes,
        );

        // t factors against the perturbed volume weight
        // sqrt(1 + eps q^2) sin t cos^{d-2} t with q = sin^2 t.
        let weight = move |t: f64| {
            let q = t.sin() * t.sin();
            (1.0 + eps * q * q).sqrt() * t.sin() * t.cos().powi(d as i32 - 2)
        };
        let t_mass = rule
            .integrate(
                |t: f64| {
                    let s = t.sin().powi(a as i32) * t.cos().powi(g as i32);
                    s * t.sin().powi(ki) * weight(t)
                },
                0.0,
                FRAC_PI_2,
            )?
            .value;
        let t_grad_t = rule
            .integrate(
                |t: f64| {
                    let ds = profile_d1(a, g, t);
                    let dfk = kf * t.sin().powi(ki - 1) * t.cos();
                    ds * dfk * weight(t)
                },
                0.0,
                FRAC_PI_2,
            )?
            .value;
        // The theta-gradient term carries 1/a_eps^2, which cancels part of
        // the volume weight.
        let t_grad_theta = rule
            .integrate(
                |t: f64| {
                    let q = t.sin() * t.sin();
                    let s = t.sin().powi(a as i32) * t.cos().powi(g as i32);
                    s * t.sin().powi(ki - 1) * t.cos().powi(d as i32 - 2)
                        / (1.0 + eps * q * q).sqrt()
                },
                0.0,
                FRAC_PI_2,
            )?
            .value;

        let l2 = (theta_mass * t_mass * omega).norm();
        let dir = (theta_mass * t_grad_t * omega + theta_grad * t_grad_theta * omega).norm();
        max_l2 = max_l2.max(l2);
        max_dir = max_dir.max(dir);
    }
    Ok(OrthogonalityReport {
        max_l2,
        max_dirichlet: max_dir,
    })
}
