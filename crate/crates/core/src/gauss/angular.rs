//! Product quadrature on the round three-sphere, used to make the Gram
//! checks genuinely numerical in the acceptance dimension instead of wiring
//! in the closed-form angular moments.

use std::f64::consts::PI;

use crate::numerics::GaussLegendre;

/// Gauss-Legendre x Gauss-Legendre x uniform-angle product rule on the unit
/// three-sphere in coordinates `(psi, phi, theta)` with density
/// `sin^2 psi sin phi`.
pub struct SphereQuadrature {
    psi_nodes: Vec<(f64, f64)>,
    phi_nodes: Vec<(f64, f64)>,
    theta_count: usize,
}

impl SphereQuadrature {
    pub fn new_s3() -> Self {
        let build = |rule: &GaussLegendre, a: f64, b: f64| -> Vec<(f64, f64)> {
            // Map the [-1, 1] rule onto [a, b].
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            rule.nodes_weights()
                .map(|(x, w)| (mid + half * x, half * w))
                .collect()
        };
        let rule = GaussLegendre::new(24);
        Self {
            psi_nodes: build(&rule, 0.0, PI),
            phi_nodes: build(&rule, 0.0, PI),
            theta_count: 32,
        }
    }

    /// Integrates `f` of the ambient coordinates over the three-sphere.
    pub fn integrate<F: Fn([f64; 4]) -> f64>(&self, f: F) -> f64 {
        let dtheta = 2.0 * PI / self.theta_count as f64;
        let mut sum = 0.0;
        for &(psi, wpsi) in &self.psi_nodes {
            let (spsi, cpsi) = psi.sin_cos();
            for &(phi, wphi) in &self.phi_nodes {
                let (sphi, cphi) = phi.sin_cos();
                for k in 0..self.theta_count {
                    let theta = dtheta * k as f64;
                    let x = [
                        cpsi,
                        spsi * cphi,
                        spsi * sphi * theta.cos(),
                        spsi * sphi * theta.sin(),
                    ];
                    sum += wpsi * wphi * dtheta * spsi * spsi * sphi * f(x);
                }
            }
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surface_area() {
        let q = SphereQuadrature::new_s3();
        let area = q.integrate(|_| 1.0);
        assert!((area - 2.0 * PI * PI).abs() < 1e-10, "{area}");
    }

    #[test]
    fn first_and_second_moments() {
        let q = SphereQuadrature::new_s3();
        let area = 2.0 * PI * PI;
        for i in 0..4 {
            let m1 = q.integrate(|x| x[i]);
            assert!(m1.abs() < 1e-12, "x_{i} moment {m1}");
            let m2 = q.integrate(|x| x[i] * x[i]);
            assert!((m2 - area / 4.0).abs() < 1e-10, "x_{i}^2 moment {m2}");
        }
        let cross = q.integrate(|x| x[0] * x[1]);
        assert!(cross.abs() < 1e-12);
    }

    #[test]
    fn tangential_gradient_pairing() {
        // For ambient-linear functions, the sphere gradient pairing is
        // delta_ij - x_i x_j pointwise.
        let q = SphereQuadrature::new_s3();
        let area = 2.0 * PI * PI;
        let g01 = q.integrate(|x| -x[0] * x[1]);
        assert!(g01.abs() < 1e-12);
        let g00 = q.integrate(|x| 1.0 - x[0] * x[0]);
        assert!((g00 - 3.0 * area / 4.0).abs() < 1e-9);
    }
}
