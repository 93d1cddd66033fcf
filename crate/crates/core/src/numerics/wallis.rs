//! Wallis integrals of sine powers over a quarter period, kept exact: odd
//! orders are rational, even orders are a rational multiple of pi/2.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use super::rational::Rational;

/// Exact value of a Wallis integral: `coeff` when odd order, `coeff * pi/2`
/// when even order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallisValue {
    pub coeff: Rational,
    pub has_pi_over_two: bool,
}

impl WallisValue {
    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64();
        if self.has_pi_over_two {
            c * FRAC_PI_2
        } else {
            c
        }
    }
}

impl fmt::Display for WallisValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_pi_over_two {
            write!(f, "{} * pi/2", self.coeff)
        } else {
            write!(f, "{}", self.coeff)
        }
    }
}

/// Integral of `sin^m` over `[0, pi/2]` via the two-step recurrence
/// `I_m = (m-1)/m * I_{m-2}` from `I_0 = pi/2`, `I_1 = 1`.
pub fn wallis(m: u32) -> WallisValue {
    let mut coeff = Rational::one();
    let mut k = m;
    while k >= 2 {
        coeff = coeff * Rational::new(k as i64 - 1, k as i64);
        k -= 2;
    }
    WallisValue {
        coeff,
        has_pi_over_two: m % 2 == 0,
    }
}
