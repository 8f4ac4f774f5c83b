//! Hermite and Laguerre polynomials, their zeros, and the electrostatic
//! (Stieltjes) systems those zeros satisfy.

use crate::eigen::{self, Dense};
use crate::error::{invalid, Result};
use crate::kernel::{self, Recurrence};
use crate::scaled::ScaledValue;
use crate::zeros::{zeros, FamilyParams, ZeroSet};
use serde::Serialize;

/// `H_{m+1} = 2x H_m − 2m H_{m−1}`, `H_1 = 2x`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HermiteRecurrence;

impl Recurrence for HermiteRecurrence {
    #[inline]
    fn first(&self, x: f64, inv_s: f64) -> [f64; 3] {
        [2.0 * x * inv_s, 2.0 * inv_s, 0.0]
    }

    #[inline]
    fn step(&self, m: usize, x: f64, inv_s: f64) -> ([f64; 3], [f64; 3]) {
        (
            [2.0 * x * inv_s, 2.0 * inv_s, 0.0],
            [2.0 * m as f64 * inv_s * inv_s, 0.0, 0.0],
        )
    }
}

/// `L_{m+1} = (2 + (α−1−x)/(m+1)) L_m − (1 + (α−1)/(m+1)) L_{m−1}`, `L_1 = α+1−x`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LaguerreRecurrence {
    alpha: f64,
}

impl LaguerreRecurrence {
    pub fn new(alpha: f64) -> Self {
        Self { alpha }
    }
}

impl Recurrence for LaguerreRecurrence {
    #[inline]
    fn first(&self, x: f64, inv_s: f64) -> [f64; 3] {
        [(self.alpha + 1.0 - x) * inv_s, -inv_s, 0.0]
    }

    #[inline]
    fn step(&self, m: usize, x: f64, inv_s: f64) -> ([f64; 3], [f64; 3]) {
        let r = 1.0 / (m as f64 + 1.0);
        let a = 2.0 + (self.alpha - 1.0 - x) * r;
        let b = 1.0 + (self.alpha - 1.0) * r;
        ([a * inv_s, -r * inv_s, 0.0], [b * inv_s * inv_s, 0.0, 0.0])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Classical {
    Hermite,
    Laguerre { alpha: f64 },
}

impl Classical {
    fn params(self) -> Result<FamilyParams> {
        match self {
            Classical::Hermite => Ok(FamilyParams::Hermite),
            Classical::Laguerre { alpha } => FamilyParams::laguerre(alpha),
        }
    }
}

pub fn classical_eval(family: Classical, n: usize, x: f64) -> Result<ScaledValue> {
    let pass = match family.params()? {
        FamilyParams::Laguerre { alpha } => kernel::run(&LaguerreRecurrence::new(alpha), n, x, false),
        _ => kernel::run(&HermiteRecurrence, n, x, false),
    };
    Ok(pass.p())
}

pub fn classical_zeros(family: Classical, n: usize) -> Result<ZeroSet> {
    zeros(family.params()?, n, 0)
}

/// Which electrostatic system: Hermite zeros, or Laguerre zeros with
/// `α = 2λ − 1` in the reciprocal (Bessel-type) form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ElectrostaticKind {
    Hermite,
    Laguerre,
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(invalid("n", n as f64, "electrostatic systems need n >= 2"));
    }
    Ok(())
}

fn laguerre_alpha(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(invalid("lambda", lambda, "must be finite and > 0"));
    }
    Ok(2.0 * lambda - 1.0)
}

/// Largest violation over `k` of the Stieltjes equations
/// `Σ_{i≠k} 1/(h_k − h_i) = h_k` (Hermite) or
/// `Σ_{i≠k} l_i/(l_i − l_k) = (n+λ−1) − l_k/2` (Laguerre, `α = 2λ−1`).
/// `lambda` is ignored for Hermite.
pub fn stieltjes_residual(kind: ElectrostaticKind, n: usize, lambda: f64) -> Result<f64> {
    check_n(n)?;
    let worst = match kind {
        ElectrostaticKind::Hermite => {
            let h = classical_zeros(Classical::Hermite, n)?.zeros;
            (0..n)
                .map(|k| {
                    let s: f64 = (0..n).filter(|&i| i != k).map(|i| 1.0 / (h[k] - h[i])).sum();
                    (s - h[k]).abs()
                })
                .fold(0.0, f64::max)
        }
        ElectrostaticKind::Laguerre => {
            let alpha = laguerre_alpha(lambda)?;
            let l = classical_zeros(Classical::Laguerre { alpha }, n)?.zeros;
            let target = n as f64 + lambda - 1.0;
            (0..n)
                .map(|k| {
                    let s: f64 = (0..n).filter(|&i| i != k).map(|i| l[i] / (l[i] - l[k])).sum();
                    (s - target + 0.5 * l[k]).abs()
                })
                .fold(0.0, f64::max)
        }
    };
    Ok(worst)
}

/// Symmetric matrix of one of the linearized electrostatic systems.
///
/// For Hermite: diagonal `Σ_{i≠k} 1/(h_k − h_i)²`, off-diagonal
/// `−1/(h_k − h_j)²`. For Laguerre the weighted matrix with diagonal
/// `Σ_{i≠k} l_i/(l_i − l_k)²` and off-diagonal `−l_i/(l_i − l_k)²` is not
/// symmetric; it is conjugated by `diag(√l)` into the symmetric matrix with
/// off-diagonal `−√(l_k l_i)/(l_i − l_k)²`, which has the same spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ElectrostaticMatrix {
    pub n: usize,
    pub kind: ElectrostaticKind,
    pub entries: Dense,
}

impl ElectrostaticMatrix {
    pub fn build(kind: ElectrostaticKind, n: usize, lambda: f64) -> Result<Self> {
        check_n(n)?;
        let entries = match kind {
            ElectrostaticKind::Hermite => {
                let h = classical_zeros(Classical::Hermite, n)?.zeros;
                gap_matrix(&h, |_, _| 1.0, |_| 1.0)
            }
            ElectrostaticKind::Laguerre => {
                let alpha = laguerre_alpha(lambda)?;
                let l = classical_zeros(Classical::Laguerre { alpha }, n)?.zeros;
                gap_matrix(&l, |k, i| (l[k] * l[i]).sqrt(), |i| l[i])
            }
        };
        Ok(Self { n, kind, entries })
    }

    pub fn norm(&self) -> f64 {
        eigen::inf_norm(&self.entries)
    }
}

/// `M_kk = Σ_{i≠k} diag_w(i)/(z_k − z_i)²`, `M_ki = −off_w(k, i)/(z_k − z_i)²`.
fn gap_matrix(z: &[f64], off_w: impl Fn(usize, usize) -> f64, diag_w: impl Fn(usize) -> f64) -> Dense {
    let n = z.len();
    let mut m = vec![vec![0.0; n]; n];
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            let g2 = (z[k] - z[i]).powi(2);
            m[k][i] = -off_w(k, i) / g2;
            m[k][k] += diag_w(i) / g2;
        }
    }
    m
}

/// Largest size diagonalized outright; above it only a pivot-sign bracket
/// of the smallest eigenvalue is computed.
const JACOBI_MAX: usize = 32;

/// Estimate of the smallest eigenvalue of the electrostatic matrix.
pub fn electrostatic_psd(kind: ElectrostaticKind, n: usize, lambda: f64) -> Result<f64> {
    let m = ElectrostaticMatrix::build(kind, n, lambda)?;
    Ok(min_eigenvalue(&m))
}

pub fn min_eigenvalue(m: &ElectrostaticMatrix) -> f64 {
    if m.n <= JACOBI_MAX {
        eigen::jacobi_eigenvalues(&m.entries)[0]
    } else {
        eigen::min_eigenvalue_pivots(&m.entries, 1e-12)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        assert_eq!(classical_eval(Classical::Hermite, 2, 0.0).unwrap().to_f64(), -2.0);
        assert_eq!(
            classical_eval(Classical::Laguerre { alpha: 2.0 }, 1, 1.0).unwrap().to_f64(),
            2.0
        );
        let v = classical_eval(Classical::Hermite, 3, 1.5f64.sqrt()).unwrap().to_f64();
        assert!(v.abs() < 1e-13);
        assert!(classical_eval(Classical::Laguerre { alpha: -1.0 }, 2, 0.0).is_err());
    }

    #[test]
    fn laguerre_matches_explicit_quadratic() {
        // L_2^{(α)} = ((α+1)(α+2) − 2(α+2)x + x²)/2
        let a = 0.7;
        for x in [-1.0, 0.3, 4.0] {
            let exact = ((a + 1.0) * (a + 2.0) - 2.0 * (a + 2.0) * x + x * x) / 2.0;
            let v = classical_eval(Classical::Laguerre { alpha: a }, 2, x).unwrap().to_f64();
            assert!((v - exact).abs() < 1e-14 * exact.abs().max(1.0));
        }
    }

    #[test]
    fn zero_examples() {
        let h = classical_zeros(Classical::Hermite, 2).unwrap().zeros;
        assert!((h[1] - 0.5f64.sqrt()).abs() < 1e-15 && (h[0] + h[1]).abs() < 1e-16);
        let h = classical_zeros(Classical::Hermite, 3).unwrap().zeros;
        assert!(h[1].abs() < 1e-15 && (h[2] - 1.5f64.sqrt()).abs() < 1e-15);
        let l = classical_zeros(Classical::Laguerre { alpha: 2.5 }, 1).unwrap().zeros;
        assert_eq!(l, vec![3.5]);
    }

    #[test]
    fn stieltjes_examples() {
        assert!(stieltjes_residual(ElectrostaticKind::Hermite, 2, 0.0).unwrap() < 1e-15);
        assert!(stieltjes_residual(ElectrostaticKind::Hermite, 10, 0.0).unwrap() < 1e-8);
        assert!(stieltjes_residual(ElectrostaticKind::Laguerre, 2, 1.5).unwrap() < 1e-10);
        assert!(stieltjes_residual(ElectrostaticKind::Hermite, 1, 0.0).is_err());
    }

    #[test]
    fn stieltjes_small_up_to_twenty() {
        for n in 2..=20 {
            assert!(stieltjes_residual(ElectrostaticKind::Hermite, n, 0.0).unwrap() < 1e-8, "{n}");
            for lambda in [0.6, 1.0, 2.0, 7.5] {
                let r = stieltjes_residual(ElectrostaticKind::Laguerre, n, lambda).unwrap();
                assert!(r < 1e-8, "n={n} λ={lambda} r={r}");
            }
        }
    }

    #[test]
    fn psd_examples() {
        let m = ElectrostaticMatrix::build(ElectrostaticKind::Hermite, 2, 0.0).unwrap();
        let h = classical_zeros(Classical::Hermite, 2).unwrap().zeros;
        let ev = eigen::jacobi_eigenvalues(&m.entries);
        assert!(ev[0].abs() < 1e-15);
        assert!((ev[1] - 2.0 / (h[1] - h[0]).powi(2)).abs() < 1e-14);
        for (kind, n, lambda) in [(ElectrostaticKind::Hermite, 8, 0.0), (ElectrostaticKind::Laguerre, 6, 2.0)] {
            let m = ElectrostaticMatrix::build(kind, n, lambda).unwrap();
            assert!(min_eigenvalue(&m) >= -1e-10 * m.norm());
        }
    }

    #[test]
    fn hermite_rows_sum_to_zero() {
        let m = ElectrostaticMatrix::build(ElectrostaticKind::Hermite, 9, 0.0).unwrap();
        for row in &m.entries {
            let s: f64 = row.iter().sum();
            assert!(s.abs() <= 1e-12 * m.norm());
        }
    }

    #[test]
    fn laguerre_form_is_similar_to_weighted_form() {
        let l = classical_zeros(Classical::Laguerre { alpha: 3.0 }, 5).unwrap().zeros;
        let m = ElectrostaticMatrix::build(ElectrostaticKind::Laguerre, 5, 2.0).unwrap();
        for k in 0..5 {
            for i in 0..5 {
                if i != k {
                    let weighted = -l[i] / (l[i] - l[k]).powi(2);
                    let back = m.entries[k][i] * (l[i] / l[k]).sqrt();
                    assert!((weighted - back).abs() < 1e-14 * weighted.abs());
                    assert_eq!(m.entries[k][i], m.entries[i][k]);
                }
            }
        }
    }

    #[test]
    fn large_matrices_use_pivot_certificate() {
        for kind in [ElectrostaticKind::Hermite, ElectrostaticKind::Laguerre] {
            let m = ElectrostaticMatrix::build(kind, 40, 1.5).unwrap();
            assert!(min_eigenvalue(&m) >= -1e-10 * m.norm());
        }
    }
}
