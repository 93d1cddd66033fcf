//! Finite-difference curvature oracle: central-difference Christoffel
//! symbols and Ricci contraction straight from raw coordinate metric
//! components. Independent of the frame formulas, so the two paths
//! cross-validate each other.

use super::GeometryError;

/// Samples the full coordinate metric matrix at a chart point.
pub type MetricSampler<'a> = &'a (dyn Fn(&[f64]) -> Vec<Vec<f64>> + Sync);

fn invert(mat: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = mat.len();
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for col in 0..n {
        let mut pivot = col;
        for row in (col + 1)..n {
            if a[row][col].abs() > a[pivot][col].abs() {
                pivot = row;
            }
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        assert!(p.abs() > 1e-300, "singular metric at sampled point");
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for row in 0..n {
            if row != col {
                let factor = a[row][col];
                for j in 0..n {
                    a[row][j] -= factor * a[col][j];
                    inv[row][j] -= factor * inv[col][j];
                }
            }
        }
    }
    inv
}

/// Christoffel symbols at `point` with metric derivatives by central
/// differences of step `h`.
fn christoffel(sample: MetricSampler, point: &[f64], h: f64) -> Vec<Vec<Vec<f64>>> {
    let n = point.len();
    let g = sample(point);
    let ginv = invert(&g);
    // dg[k][i][j] = d g_ij / d x^k
    let mut dg = vec![vec![vec![0.0; n]; n]; n];
    for k in 0..n {
        let mut plus = point.to_vec();
        let mut minus = point.to_vec();
        plus[k] += h;
        minus[k] -= h;
        let gp = sample(&plus);
        let gm = sample(&minus);
        for i in 0..n {
            for j in 0..n {
                dg[k][i][j] = (gp[i][j] - gm[i][j]) / (2.0 * h);
            }
        }
    }
    let mut gamma = vec![vec![vec![0.0; n]; n]; n];
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for l in 0..n {
                    s += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
                }
                gamma[k][i][j] = 0.5 * s;
            }
        }
    }
    gamma
}

/// Coordinate Ricci tensor at `point` via
/// `R_ij = d_k Gamma^k_ij - d_j Gamma^k_ik + Gamma^k_kl Gamma^l_ij - Gamma^k_jl Gamma^l_ik`,
/// with all derivatives central differences of step `h`. Error is `O(h^2)`.
pub fn fd_ricci(sample: MetricSampler, point: &[f64], h: f64) -> Result<Vec<Vec<f64>>, GeometryError> {
    if !(h > 0.0) {
        return Err(GeometryError::TooCloseToDegeneracy { margin: h });
    }
    let n = point.len();
    let gamma0 = christoffel(sample, point, h);
    // dgamma[k][a][i][j] = d Gamma^a_ij / d x^k
    let mut dgamma = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for k in 0..n {
        let mut plus = point.to_vec();
        let mut minus = point.to_vec();
        plus[k] += h;
        minus[k] -= h;
        let gp = christoffel(sample, &plus, h);
        let gm = christoffel(sample, &minus, h);
        for a in 0..n {
            for i in 0..n {
                for j in 0..n {
                    dgamma[k][a][i][j] = (gp[a][i][j] - gm[a][i][j]) / (2.0 * h);
                }
            }
        }
    }
    let mut ricci = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut r = 0.0;
            for k in 0..n {
                r += dgamma[k][k][i][j] - dgamma[j][k][i][k];
            }
            for k in 0..n {
                for l in 0..n {
                    r += gamma0[k][k][l] * gamma0[l][i][j] - gamma0[k][j][l] * gamma0[l][i][k];
                }
            }
            ricci[i][j] = r;
        }
    }
    Ok(ricci)
}

/// Richardson extrapolation over steps `h` and `h/2`, cancelling the leading
/// `O(h^2)` term.
pub fn fd_ricci_extrapolated(
    sample: MetricSampler,
    point: &[f64],
    h: f64,
) -> Result<Vec<Vec<f64>>, GeometryError> {
    let coarse = fd_ricci(sample, point, h)?;
    let fine = fd_ricci(sample, point, h / 2.0)?;
    let n = point.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (4.0 * fine[i][j] - coarse[i][j]) / 3.0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_metric_has_zero_ricci() {
        let sample = |p: &[f64]| {
            let n = p.len();
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
                .collect()
        };
        let r = fd_ricci(&sample, &[0.3, -0.2, 1.1, 0.5], 1e-3).unwrap();
        for row in &r {
            for v in row {
                assert!(v.abs() < 1e-9, "{v}");
            }
        }
    }

    #[test]
    fn two_sphere_chart() {
        // Unit S^2 in (theta, phi): diag(1, sin^2 theta); Ricci = g.
        let sample = |p: &[f64]| {
            let s = p[0].sin();
            vec![vec![1.0, 0.0], vec![0.0, s * s]]
        };
        let point = [1.1, 0.4];
        let r = fd_ricci_extrapolated(&sample, &point, 1e-3).unwrap();
        let g = sample(&point);
        for i in 0..2 {
            for j in 0..2 {
                assert!((r[i][j] - g[i][j]).abs() < 1e-9, "{} vs {}", r[i][j], g[i][j]);
            }
        }
    }

    #[test]
    fn matrix_inverse() {
        let m = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let inv = invert(&m);
        assert!((inv[0][0] - 0.6).abs() < 1e-14);
        assert!((inv[0][1] + 0.2).abs() < 1e-14);
        assert!((inv[1][1] - 0.4).abs() < 1e-14);
    }
}
