//! Quadrature checks of the orthogonality relation and of the integral
//! representation of the associated polynomials, both for `k = 0`.

use super::chain::maximal_term;
use super::quadrature::{integrate_theta, Angle};
use super::weight::WeightK0;
use crate::crr::{coeff_c, coeff_d, eval_crr};
use crate::error::{invalid, Result};
use crate::param::ParamB;

pub const ORTHOGONALITY_MAX_DEGREE: usize = 8;
pub const ASSOCIATED_MAX_DEGREE: usize = 6;
pub const PROBE_POINTS: [f64; 5] = [-2.0, -0.5, 0.0, 1.0, 3.5];

/// `P_n(tan θ) cos^n θ`, which stays bounded on the whole interval.
fn homogeneous(n: usize, b: &ParamB, a: &Angle) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut q = 1.0;
    let mut p = a.sin - coeff_c(1, b) * a.cos;
    for m in 1..n {
        let next = (a.sin - coeff_c(m + 1, b) * a.cos) * p - coeff_d(m + 1, b.lambda()) * q;
        q = p;
        p = next;
    }
    p
}

/// `γ_n = ∏_{j=1}^{n} (1 − M_j)`.
fn gamma_n(n: usize, lambda: f64) -> f64 {
    (1..=n).map(|j| 1.0 - maximal_term(lambda, 0, j)).product()
}

/// Largest relative deviation over `j = 0..=n` of
/// `∫ x^j P_n(x) / (1+x²)^n dφ(x)` from `γ_n δ_{nj}`.
pub fn orthogonality_check(n: usize, b: &ParamB) -> Result<f64> {
    if n > ORTHOGONALITY_MAX_DEGREE {
        return Err(invalid("n", n as f64, "orthogonality check supports n <= 8"));
    }
    let w = WeightK0::new(*b)?;
    let gamma = gamma_n(n, b.lambda());
    let mut worst = 0.0f64;
    for j in 0..=n {
        // x^j P_n / (1+x²)^n dφ = sin^j cos^{n−j} · [P_n cos^n] · w_θ dθ
        let v = integrate_theta(|a| {
            let q = homogeneous(n, b, a);
            if q == 0.0 {
                return 0.0;
            }
            q * a.sin.powi(j as i32) * w.ln_theta_weight(a, (n - j) as f64).exp()
        })?;
        let target = if j == n { gamma } else { 0.0 };
        worst = worst.max((v - target).abs() / gamma);
    }
    Ok(worst)
}

/// Right side of the integral representation at `x`:
/// `(1+x²)^n / M_1 · ∫ [R(t) − R(x)] / (t − x) dφ(t)` with `R(t) = P_n(t)/(1+t²)^n`.
pub fn associated_integral(n: usize, b: &ParamB, x: f64) -> Result<f64> {
    if n == 0 || n > ASSOCIATED_MAX_DEGREE {
        return Err(invalid("n", n as f64, "associated check supports 1 <= n <= 6"));
    }
    if !x.is_finite() {
        return Err(invalid("x", x, "must be finite"));
    }
    let w = WeightK0::new(*b)?;
    let m1 = maximal_term(b.lambda(), 0, 1);
    let wx = x.mul_add(x, 1.0);
    let ev = eval_crr(n, 0, b, x, true);
    let (p, dp) = (ev.p.to_f64(), ev.dp.to_f64());
    let r_x = p / wx.powi(n as i32);
    let dr_x = (dp * wx - 2.0 * n as f64 * x * p) / wx.powi(n as i32 + 1);
    let near = 1e-7 * (1.0 + x.abs());
    let integral = integrate_theta(|a| {
        let gap = (a.sin - x * a.cos) / a.cos;
        let quotient = if gap.abs() < near {
            dr_x
        } else {
            let r_t = homogeneous(n, b, a) * a.cos.powi(n as i32);
            (r_t - r_x) / gap
        };
        quotient * w.ln_theta_weight(a, 0.0).exp()
    })?;
    Ok(wx.powi(n as i32) * integral / m1)
}

/// Largest `|P_{n−1}^{(1)}(x) − RHS(x)| / max(1, |P_{n−1}^{(1)}(x)|)` over the
/// probe points, where RHS is [`associated_integral`].
pub fn associated_integral_check(n: usize, b: &ParamB) -> Result<f64> {
    let mut worst = 0.0f64;
    for &x in &PROBE_POINTS {
        worst = worst.max(associated_residual_at(n, b, x)?);
    }
    Ok(worst)
}

pub fn associated_residual_at(n: usize, b: &ParamB, x: f64) -> Result<f64> {
    let rhs = associated_integral(n, b, x)?;
    let lhs = eval_crr(n - 1, 1, b, x, false).p.to_f64();
    Ok((lhs - rhs).abs() / lhs.abs().max(1.0))
}
