//! Small closed-form special values: half-integer Gamma and round-sphere
//! surface areas.

use std::f64::consts::PI;

/// `Gamma(n/2)` for positive integer `n`.
pub fn gamma_half(n: u32) -> f64 {
    match n {
        0 => f64::INFINITY,
        1 => PI.sqrt(),
        2 => 1.0,
        _ => (n as f64 / 2.0 - 1.0) * gamma_half(n - 2),
    }
}

/// Surface area of the unit `m`-sphere: `2 pi^{(m+1)/2} / Gamma((m+1)/2)`.
pub fn sphere_surface_area(m: u32) -> f64 {
    2.0 * PI.powf((m as f64 + 1.0) / 2.0) / gamma_half(m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        assert!((sphere_surface_area(1) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_surface_area(2) - 4.0 * PI).abs() < 1e-13);
        assert!((sphere_surface_area(3) - 2.0 * PI * PI).abs() < 1e-13);
    }
}
