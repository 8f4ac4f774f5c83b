//! Comparison with Hermite zeros as `λ → ∞` and with reciprocal Laguerre
//! zeros as `η → ∞`, at the level of zeros and of the rescaled polynomials.

use crate::classical::{classical_eval, classical_zeros, Classical};
use crate::crr::eval_crr;
use crate::error::{invalid, CrrError, Result};
use crate::param::ParamB;
use crate::zeros::{zeros, FamilyParams};
use serde::Serialize;

/// Which parameter grows; the other one is held fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Branch {
    Lambda { eta: f64 },
    Eta { lambda: f64 },
}

impl Branch {
    /// Expected log-log slope of the zero error against the growing parameter.
    pub fn expected_slope(&self) -> f64 {
        match self {
            Branch::Lambda { .. } => -1.5,
            Branch::Eta { .. } => -1.0,
        }
    }

    fn param(&self, t: f64) -> Result<ParamB> {
        match *self {
            Branch::Lambda { eta } => ParamB::new(t, eta),
            Branch::Eta { lambda } => ParamB::new(lambda, t),
        }
    }
}

pub const MIN_GRID: usize = 4;

/// Probe points for the rescaled-polynomial comparison.
pub const HERMITE_PROBES: [f64; 9] = [-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0];
pub const LAGUERRE_PROBES: [f64; 8] = [0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 12.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticPoint {
    /// Value of the growing parameter.
    pub param: f64,
    /// Largest deviation of a zero from its asymptotic prediction.
    pub zero_error: f64,
    /// `zero_error · λ^{3/2}` or `zero_error · η`.
    pub scaled_zero_error: f64,
    /// Largest deviation of the rescaled polynomial from its limit
    /// expansion over the probe points.
    pub function_error: f64,
    /// `function_error · λ` or `function_error · η²`.
    pub scaled_function_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticsReport {
    pub n: usize,
    pub branch: Branch,
    pub points: Vec<AsymptoticPoint>,
    /// Least-squares slope of `ln zero_error` against `ln param`, without
    /// the smallest grid value.
    pub slope: f64,
    pub expected_slope: f64,
    /// Largest ratio of consecutive scaled zero errors.
    pub zero_ratio_max: f64,
    /// Largest ratio of consecutive scaled function errors.
    pub function_ratio_max: f64,
}

/// Least-squares slope of `y` on `x`.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

fn max_ratio(v: &[f64]) -> f64 {
    v.windows(2).map(|w| w[1] / w[0]).fold(0.0, f64::max)
}

fn lambda_point(n: usize, b: &ParamB, hermite: &[f64]) -> Result<AsymptoticPoint> {
    let (l, e) = (b.lambda(), b.eta());
    let x = zeros(FamilyParams::Crr(*b), n, 0)?.zeros;
    let sq = l.sqrt();
    let zero_error = x
        .iter()
        .zip(hermite)
        .map(|(x, h)| (x - h / sq - e / l).abs())
        .fold(0.0, f64::max);
    // Û_n(x) = 2^n (λ)_n λ^{−n/2} P_n(x/√λ)
    let mut function_error = 0.0f64;
    for &t in &HERMITE_PROBES {
        let p = eval_crr(n, 0, b, t / sq, false).p;
        let u = (0..n).fold(p, |acc, j| acc.scale(2.0 * (l + j as f64) / sq)).to_f64();
        let h_n = classical_eval(Classical::Hermite, n, t)?.to_f64();
        let h_prev = classical_eval(Classical::Hermite, n - 1, t)?.to_f64();
        let expansion = h_n - 2.0 * e * n as f64 * h_prev / sq;
        function_error = function_error.max((u - expansion).abs());
    }
    Ok(AsymptoticPoint {
        param: l,
        zero_error,
        scaled_zero_error: zero_error * l.powf(1.5),
        function_error,
        scaled_function_error: function_error * l,
    })
}

fn eta_point(n: usize, b: &ParamB) -> Result<AsymptoticPoint> {
    let (l, e) = (b.lambda(), b.eta());
    let alpha = 2.0 * l - 1.0;
    let lag = classical_zeros(Classical::Laguerre { alpha }, n)?.zeros;
    let x = zeros(FamilyParams::Crr(*b), n, 0)?.zeros;
    // the k-th zero pairs with the (n+1−k)-th Laguerre zero
    let zero_error = x
        .iter()
        .zip(lag.iter().rev())
        .map(|(x, l)| (x - 2.0 * e / l).abs())
        .fold(0.0, f64::max);
    // Ũ_n(x) = (λ)_n / (η^n n!) · x^n P_n(2η/x)
    let mut function_error = 0.0f64;
    for &t in &LAGUERRE_PROBES {
        let p = eval_crr(n, 0, b, 2.0 * e / t, false).p;
        let u = (0..n)
            .fold(p, |acc, j| acc.scale((l + j as f64) * t / (e * (j + 1) as f64)))
            .to_f64();
        let target = classical_eval(Classical::Laguerre { alpha }, n, t)?.to_f64();
        function_error = function_error.max((u - target).abs());
    }
    Ok(AsymptoticPoint {
        param: e,
        zero_error,
        scaled_zero_error: zero_error * e,
        function_error,
        scaled_function_error: function_error * e * e,
    })
}

/// Zero and function-level asymptotic errors along `grid`, with the fitted slope.
pub fn asymptotics_report(n: usize, branch: Branch, grid: &[f64]) -> Result<AsymptoticsReport> {
    if n == 0 {
        return Err(invalid("n", 0.0, "degree must be >= 1"));
    }
    if grid.len() < MIN_GRID {
        return Err(CrrError::IllConditionedFit(grid.len()));
    }
    let mut grid = grid.to_vec();
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    if grid.len() < MIN_GRID {
        return Err(CrrError::IllConditionedFit(grid.len()));
    }
    if let Some(&bad) = grid.iter().find(|t| !(t.is_finite() && **t > 0.0)) {
        return Err(invalid("grid", bad, "values must be positive and finite"));
    }
    let hermite = classical_zeros(Classical::Hermite, n)?.zeros;
    let points = grid
        .iter()
        .map(|&t| {
            let b = branch.param(t)?;
            match branch {
                Branch::Lambda { .. } => lambda_point(n, &b, &hermite),
                Branch::Eta { .. } => eta_point(n, &b),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let usable: Vec<&AsymptoticPoint> = points[1..].iter().filter(|p| p.zero_error > 0.0).collect();
    if usable.len() < MIN_GRID - 1 {
        return Err(CrrError::IllConditionedFit(usable.len()));
    }
    let lx: Vec<f64> = usable.iter().map(|p| p.param.ln()).collect();
    let ly: Vec<f64> = usable.iter().map(|p| p.zero_error.ln()).collect();
    let scaled_zero: Vec<f64> = points.iter().map(|p| p.scaled_zero_error).collect();
    let scaled_fn: Vec<f64> = points.iter().map(|p| p.scaled_function_error).collect();
    Ok(AsymptoticsReport {
        n,
        branch,
        slope: fit_slope(&lx, &ly),
        expected_slope: branch.expected_slope(),
        zero_ratio_max: max_ratio(&scaled_zero),
        function_ratio_max: max_ratio(&scaled_fn),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_degree_two() {
        // zeros ±1/√(2λ+1) against ±1/√(2λ)
        let r = asymptotics_report(2, Branch::Lambda { eta: 0.0 }, &[1e2, 4e2, 1.6e3, 6.4e3]).unwrap();
        for (p, q) in r.points.iter().zip(&r.points[1..]) {
            let exact = |l: f64| 1.0 / (2.0 * l).sqrt() - 1.0 / (2.0 * l + 1.0).sqrt();
            assert!((p.zero_error - exact(p.param)).abs() < 1e-12);
            assert!((p.zero_error / q.zero_error - 8.0).abs() < 0.05);
        }
    }

    #[test]
    fn lambda_branch_slope() {
        let r = asymptotics_report(6, Branch::Lambda { eta: 1.0 }, &[1e2, 1e3, 1e4, 1e5]).unwrap();
        assert!((r.slope + 1.5).abs() <= 0.1, "slope {}", r.slope);
        assert!(r.function_ratio_max <= 1.25, "{:?}", r.points);
    }

    #[test]
    fn eta_branch_slope() {
        let r = asymptotics_report(6, Branch::Eta { lambda: 1.5 }, &[1e2, 1e3, 1e4, 1e5]).unwrap();
        assert!((r.slope + 1.0).abs() <= 0.15, "slope {}", r.slope);
        assert!(r.zero_ratio_max <= 1.25, "{:?}", r.points);
        assert!(r.function_ratio_max <= 1.25, "{:?}", r.points);
    }

    #[test]
    fn short_grid_rejected() {
        assert!(matches!(
            asymptotics_report(3, Branch::Eta { lambda: 1.0 }, &[10.0, 20.0, 40.0]),
            Err(CrrError::IllConditionedFit(3))
        ));
        assert!(asymptotics_report(3, Branch::Eta { lambda: 1.0 }, &[10.0, 20.0, 20.0, 40.0]).is_err());
    }

    #[test]
    fn slope_fit_exact_on_power_law() {
        let x: Vec<f64> = [1.0f64, 2.0, 3.0].iter().map(|v| v.ln()).collect();
        let y: Vec<f64> = [1.0f64, 2.0, 3.0].iter().map(|v| (5.0 * v.powf(-1.5)).ln()).collect();
        assert!((fit_slope(&x, &y) + 1.5).abs() < 1e-14);
    }
}
