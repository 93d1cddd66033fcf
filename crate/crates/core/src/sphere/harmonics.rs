//! Spherical-harmonic dimensions, the eigenvalue index of the test space,
//! and the closed-form spectrum of the rescaled round sphere.

/// Dimension of the degree-`l` spherical harmonics on the `d`-sphere:
/// `(2l + d - 1) C(l + d - 2, l) / (d - 1)` for `l >= 1`, `1` for `l = 0`.
/// The circle (`d = 1`) is special-cased to 2.
pub fn harmonic_dim(d: u32, l: u32) -> u64 {
    if l == 0 {
        return 1;
    }
    if d == 1 {
        return 2;
    }
    let num = (2 * l as u64 + d as u64 - 1) * binomial(l as u64 + d as u64 - 2, l as u64);
    debug_assert_eq!(num % (d as u64 - 1), 0);
    num / (d as u64 - 1)
}

/// Independent route: harmonics of degree `l` are homogeneous degree-`l`
/// polynomials in `d + 1` variables modulo multiples of the radius squared.
pub fn harmonic_dim_oracle(d: u32, l: u32) -> u64 {
    let vars = d as u64 + 1;
    let homog = |deg: u64| binomial(deg + vars - 1, vars - 1);
    if l < 2 {
        homog(l as u64)
    } else {
        homog(l as u64) - homog(l as u64 - 2)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(r).expect("binomial fits u64")
}

/// Index of the first eigenvalue coming from degree-`k` harmonics:
/// one past the dimension of all harmonics of degree below `k`.
pub fn k_index(d: u32, k: u32) -> u64 {
    (0..k).map(|l| harmonic_dim(d, l)).sum::<u64>() + 1
}

/// Eigenvalue `(rho / (d-1)) l (l + d - 1)` of the round sphere rescaled to
/// Einstein constant `rho`, with its multiplicity.
pub fn lambda_can(d: u32, rho: f64, l: u32) -> (f64, u64) {
    assert!(rho > 0.0);
    let lam = rho / (d as f64 - 1.0) * (l as f64) * (l as f64 + d as f64 - 1.0);
    (lam, harmonic_dim(d, l))
}
