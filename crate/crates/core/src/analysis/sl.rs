//! `v_n(θ) = e^{ηθ} cos^{n+λ}θ · P_n(tan θ)` solves `v″ + Λ_n(θ) v = 0`.

use crate::crr::eval_crr;
use crate::param::ParamB;
use crate::scaled::ScaledValue;
use std::f64::consts::LOG2_E;

/// `Λ_n(θ) = λ(1−λ) tan²θ + 2η(n+λ) tanθ + n² + 2nλ + λ − η²`.
pub fn sl_potential(n: usize, b: &ParamB, theta: f64) -> f64 {
    let (l, e) = (b.lambda(), b.eta());
    let nf = n as f64;
    let t = theta.tan();
    l * (1.0 - l) * t * t + 2.0 * e * (nf + l) * t + nf * nf + 2.0 * nf * l + l - e * e
}

/// `dΛ_n/dθ = (2 / cos²θ) [η(n+λ) − λ(λ−1) tanθ]`.
pub fn sl_potential_slope(n: usize, b: &ParamB, theta: f64) -> f64 {
    let (l, e) = (b.lambda(), b.eta());
    let c = theta.cos();
    2.0 / (c * c) * (e * (n as f64 + l) - l * (l - 1.0) * theta.tan())
}

/// `η(n+λ) / (λ(λ−1))`, where `dΛ_n/dθ` vanishes; `None` for `λ = 1`.
pub fn critical_tan(n: usize, b: &ParamB) -> Option<f64> {
    let l = b.lambda();
    (l != 1.0).then(|| b.eta() * (n as f64 + l) / (l * (l - 1.0)))
}

/// `(Λ_n(θ), v_n(θ))` for `θ ∈ (−π/2, π/2)`.
pub fn sl_eval(n: usize, b: &ParamB, theta: f64) -> (f64, ScaledValue) {
    let p = eval_crr(n, 0, b, theta.tan(), false).p;
    let log2_factor = (b.eta() * theta + (n as f64 + b.lambda()) * theta.cos().ln()) * LOG2_E;
    let v = ScaledValue::from_log2(p.signum(), p.log2_abs() + log2_factor);
    (sl_potential(n, b, theta), v)
}
