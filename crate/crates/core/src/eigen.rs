//! Smallest eigenvalue of small dense symmetric matrices.

/// Row-major dense symmetric matrix.
pub type Dense = Vec<Vec<f64>>;

/// Largest absolute row sum, an upper bound on the spectral radius.
pub fn inf_norm(a: &Dense) -> f64 {
    a.iter()
        .map(|row| row.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// All eigenvalues by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(a: &Dense) -> Vec<f64> {
    let n = a.len();
    let mut m = a.clone();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        let diag: f64 = (0..n).map(|i| m[i][i] * m[i][i]).sum();
        if off <= 1e-30 * diag.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q] == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in m.iter_mut() {
                    let (mkp, mkq) = (row[p], row[q]);
                    row[p] = c * mkp - s * mkq;
                    row[q] = s * mkp + c * mkq;
                }
                let (top, bottom) = m.split_at_mut(q);
                for (mpk, mqk) in top[p].iter_mut().zip(bottom[0].iter_mut()) {
                    let (a, b) = (*mpk, *mqk);
                    *mpk = c * a - s * b;
                    *mqk = s * a + c * b;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Whether `a − shift·I` is positive definite, by an unpivoted `LDLᵀ`
/// factorization whose pivots must all be positive.
pub fn shifted_pivots_positive(a: &Dense, shift: f64) -> bool {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    let mut d = vec![0.0; n];
    for j in 0..n {
        let mut dj = a[j][j] - shift;
        for k in 0..j {
            dj -= l[j][k] * l[j][k] * d[k];
        }
        if dj.is_nan() || dj <= 0.0 {
            return false;
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut v = a[i][j];
            for k in 0..j {
                v -= l[i][k] * l[j][k] * d[k];
            }
            l[i][j] = v / dj;
        }
    }
    true
}

/// Smallest eigenvalue bracketed by bisection on the shift of
/// [`shifted_pivots_positive`]; returns the lower end of a bracket of width
/// `rel · ‖a‖`.
pub fn min_eigenvalue_pivots(a: &Dense, rel: f64) -> f64 {
    let norm = inf_norm(a).max(f64::MIN_POSITIVE);
    let (mut lo, mut hi) = (-norm * 1.01, norm * 1.01);
    while hi - lo > rel * norm {
        let mid = 0.5 * (lo + hi);
        if shifted_pivots_positive(a, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        let ev = jacobi_eigenvalues(&a);
        assert!((ev[0] - 1.0).abs() < 1e-14);
        assert!((ev[1] - 3.0).abs() < 1e-14);
        assert!((min_eigenvalue_pivots(&a, 1e-12) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn indefinite_detected() {
        let a = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
        assert!(!shifted_pivots_positive(&a, 0.0));
        assert!((jacobi_eigenvalues(&a)[0] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn methods_agree_on_tridiagonal() {
        let n: usize = 12;
        let a: Dense = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2.0,
                        1 => -1.0,
                        _ => 0.0,
                    })
                    .collect()
            })
            .collect();
        let exact = 2.0 - 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((jacobi_eigenvalues(&a)[0] - exact).abs() < 1e-13);
        assert!((min_eigenvalue_pivots(&a, 1e-13) - exact).abs() < 1e-11);
    }
}
