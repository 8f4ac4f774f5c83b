use super::gamma::{ln_gamma_abs_sq, ln_gamma_real};
use super::quadrature::{integrate_theta, Angle};
use crate::error::{CrrError, Result};
use crate::param::ParamB;
use serde::Serialize;
use std::f64::consts::{LN_2, PI};

/// Probability weight of the `k = 0` family, available for `λ > 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeightK0 {
    pub b: ParamB,
    /// `ln(2^{2λ−1} |Γ(b)|² e^{ηπ} / (Γ(2λ−1) · 2π))`
    pub log_norm_const: f64,
}

impl WeightK0 {
    pub fn new(b: ParamB) -> Result<Self> {
        let (l, e) = (b.lambda(), b.eta());
        if l <= 0.5 {
            return Err(CrrError::Hypothesis(format!(
                "the explicit weight needs lambda > 1/2, got {l}"
            )));
        }
        let log_norm_const = (2.0 * l - 1.0) * LN_2 + ln_gamma_abs_sq(l, e) + e * PI
            - ln_gamma_real(2.0 * l - 1.0)
            - (2.0 * PI).ln();
        Ok(Self { b, log_norm_const })
    }

    /// `ln` of the density in `θ` (including the `sec² θ` Jacobian) times
    /// `cos^{extra} θ`.
    pub fn ln_theta_weight(&self, a: &Angle, extra_cos_power: f64) -> f64 {
        let l = self.b.lambda();
        self.log_norm_const - 2.0 * self.b.eta() * a.arccot
            + (2.0 * l - 2.0 + extra_cos_power) * a.cos.ln()
    }
}

/// `dφ/dx = e^{C} e^{−2η arccot x} (1 + x²)^{−λ}`, `arccot x = π/2 − arctan x`.
pub fn weight_density(w: &WeightK0, x: f64) -> f64 {
    let arccot = std::f64::consts::FRAC_PI_2 - x.atan();
    let ln = w.log_norm_const - 2.0 * w.b.eta() * arccot - w.b.lambda() * x.mul_add(x, 1.0).ln();
    ln.exp()
}

/// `∫ f(x) dφ(x)` through `x = tan θ`.
pub fn integrate<F: Fn(f64) -> f64>(w: &WeightK0, f: F) -> Result<f64> {
    integrate_theta(|a| {
        let fx = f(a.tan());
        if fx == 0.0 {
            0.0
        } else {
            fx * w.ln_theta_weight(a, 0.0).exp()
        }
    })
}
