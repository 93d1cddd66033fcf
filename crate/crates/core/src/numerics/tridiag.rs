//! Symmetric tridiagonal eigensolver: LDLT pivot counting (Sturm sequence)
//! plus per-index bisection. Deterministic and targeted at the lowest few
//! eigenvalues, which is all the sector solver ever needs.

use thiserror::Error;

/// Symmetric tridiagonal matrix given by its diagonal and off-diagonal.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diagonal: Vec<f64>, off_diagonal: Vec<f64>) -> Self {
        assert!(!diagonal.is_empty(), "matrix must have at least one row");
        assert_eq!(off_diagonal.len() + 1, diagonal.len(), "off-diagonal length mismatch");
        Self { diagonal, off_diagonal }
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    /// Infinity norm, also used as the scale for eigenvalue tolerances.
    pub fn norm_inf(&self) -> f64 {
        let n = self.dim();
        let mut norm: f64 = 0.0;
        for i in 0..n {
            let left = if i > 0 { self.off_diagonal[i - 1].abs() } else { 0.0 };
            let right = if i < n - 1 { self.off_diagonal[i].abs() } else { 0.0 };
            norm = norm.max(self.diagonal[i].abs() + left + right);
        }
        norm
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off_diagonal[i - 1].abs() } else { 0.0 };
            let right = if i < n - 1 { self.off_diagonal[i].abs() } else { 0.0 };
            lo = lo.min(self.diagonal[i] - left - right);
            hi = hi.max(self.diagonal[i] + left + right);
        }
        (lo, hi)
    }
}

#[derive(Debug, Error)]
pub enum EigError {
    #[error("requested {count} eigenvalues from a {dim}-dimensional matrix")]
    CountExceedsDim { count: usize, dim: usize },
}

/// Number of eigenvalues strictly below `lambda`, by counting negative LDLT
/// pivots of `T - lambda I`.
pub fn sturm_count_below(m: &SymTridiag, lambda: f64) -> usize {
    let n = m.dim();
    let guard = 1e-300;
    let mut count = 0;
    let mut pivot = m.diagonal[0] - lambda;
    if pivot < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let safe = if pivot.abs() < guard {
            if pivot >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            pivot
        };
        let e = m.off_diagonal[i - 1];
        pivot = (m.diagonal[i] - lambda) - e * e / safe;
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `count` smallest eigenvalues in nondecreasing order, each bisected to
/// `~1e-13 * norm`.
pub fn eig_sym_tridiag(m: &SymTridiag, count: usize) -> Result<Vec<f64>, EigError> {
    eig_sym_tridiag_below(m, count, f64::INFINITY)
}

/// Same as [`eig_sym_tridiag`] but with a known upper bracket: when the
/// caller only needs eigenvalues below `upper`, the bisection interval
/// shrinks accordingly. Values above `upper` are still returned correctly
/// (the bracket falls back to the Gershgorin bound).
pub fn eig_sym_tridiag_below(m: &SymTridiag, count: usize, upper: f64) -> Result<Vec<f64>, EigError> {
    let n = m.dim();
    if count > n {
        return Err(EigError::CountExceedsDim { count, dim: n });
    }
    let (glo, ghi) = m.gershgorin();
    let scale = m.norm_inf().max(1.0);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut a = glo;
        let mut b = if upper.is_finite() && sturm_count_below(m, upper) > k {
            upper
        } else {
            ghi + 1e-13 * scale
        };
        // Stop relative to the bracket, not the matrix norm: small
        // eigenvalues of stiff matrices come out near machine precision.
        while b - a > 1e-13 * a.abs().max(b.abs()).max(1.0) {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count_below(m, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn diagonal_matrix() {
        let m = SymTridiag::new(vec![1.0, 2.0, 3.0], vec![0.0, 0.0]);
        let eigs = eig_sym_tridiag(&m, 3).unwrap();
        for (e, x) in eigs.iter().zip([1.0, 2.0, 3.0]) {
            assert!((e - x).abs() < 1e-12 * m.norm_inf(), "{e} vs {x}");
        }
    }

    #[test]
    fn discrete_dirichlet_laplacian() {
        let m = SymTridiag::new(vec![2.0, 2.0, 2.0], vec![-1.0, -1.0]);
        let eigs = eig_sym_tridiag(&m, 3).unwrap();
        let exact = [2.0 - 2.0_f64.sqrt(), 2.0, 2.0 + 2.0_f64.sqrt()];
        for (e, x) in eigs.iter().zip(exact) {
            assert!((e - x).abs() < 1e-12, "{e} vs {x}");
        }
    }

    #[test]
    fn count_exceeding_dimension_errors() {
        let m = SymTridiag::new(vec![1.0], vec![]);
        assert!(eig_sym_tridiag(&m, 2).is_err());
    }

    /// Independent oracle: characteristic-polynomial Sturm chain. Counts
    /// eigenvalues below lambda by sign agreements in the leading principal
    /// minor recurrence, a different route than the LDLT pivots.
    fn charpoly_count_below(m: &SymTridiag, lambda: f64) -> usize {
        let n = m.dim();
        let mut p_prev = 1.0f64;
        let mut p = m.diagonal[0] - lambda;
        let mut count = if p < 0.0 { 1 } else { 0 };
        let mut last_sign = p >= 0.0;
        for i in 1..n {
            let e = m.off_diagonal[i - 1];
            let p_next = (m.diagonal[i] - lambda) * p - e * e * p_prev;
            p_prev = p;
            p = p_next;
            let sign = if p == 0.0 { !last_sign } else { p > 0.0 };
            // Sign change in the chain = one more eigenvalue below lambda.
            if sign != last_sign {
                count += 1;
            }
            last_sign = sign;
        }
        count
    }

    fn charpoly_eigs(m: &SymTridiag, count: usize) -> Vec<f64> {
        let (mut glo, mut ghi) = (f64::INFINITY, f64::NEG_INFINITY);
        let n = m.dim();
        for i in 0..n {
            let l = if i > 0 { m.off_diagonal[i - 1].abs() } else { 0.0 };
            let r = if i < n - 1 { m.off_diagonal[i].abs() } else { 0.0 };
            glo = glo.min(m.diagonal[i] - l - r);
            ghi = ghi.max(m.diagonal[i] + l + r);
        }
        (0..count)
            .map(|k| {
                let (mut a, mut b) = (glo, ghi);
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    if charpoly_count_below(m, mid) <= k {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                0.5 * (a + b)
            })
            .collect()
    }

    #[test]
    fn random_matrix_matches_charpoly_oracle() {
        let mut rng = StdRng::seed_from_u64(7);
        let n = 50;
        let diag: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let off: Vec<f64> = (0..n - 1).map(|_| rng.random_range(-1.0..1.0)).collect();
        let m = SymTridiag::new(diag, off);
        let mine = eig_sym_tridiag(&m, n).unwrap();
        let oracle = charpoly_eigs(&m, n);
        let norm = m.norm_inf();
        for (a, b) in mine.iter().zip(&oracle) {
            assert!((a - b).abs() <= 1e-10 * norm, "{a} vs {b}");
        }
    }

    #[test]
    fn deterministic_and_nondecreasing() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.random_range(2..40);
            let diag: Vec<f64> = (0..n).map(|_| rng.random_range(-5.0..5.0)).collect();
            let off: Vec<f64> = (0..n - 1).map(|_| rng.random_range(-2.0..2.0)).collect();
            let m = SymTridiag::new(diag, off);
            let a = eig_sym_tridiag(&m, n).unwrap();
            let b = eig_sym_tridiag(&m, n).unwrap();
            assert_eq!(a, b);
            for w in a.windows(2) {
                assert!(w[0] <= w[1] + 1e-13 * m.norm_inf());
            }
        }
    }

    #[test]
    fn bracketed_solve_agrees_with_full_solve() {
        let mut rng = StdRng::seed_from_u64(3);
        let n = 80;
        let diag: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..10.0)).collect();
        let off: Vec<f64> = (0..n - 1).map(|_| rng.random_range(-1.0..1.0)).collect();
        let m = SymTridiag::new(diag, off);
        let full = eig_sym_tridiag(&m, 10).unwrap();
        let bracketed = eig_sym_tridiag_below(&m, 10, full[9] + 0.5).unwrap();
        for (a, b) in full.iter().zip(&bracketed) {
            assert!((a - b).abs() <= 1e-11 * m.norm_inf());
        }
    }
}
