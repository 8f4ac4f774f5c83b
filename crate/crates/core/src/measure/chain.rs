use crate::error::{invalid, Result};
use serde::Serialize;

/// Minimal and maximal parameter sequences of the chain sequence `{d_{k+n+1}}`.
/// Entry `n − 1` holds the `n`-th term.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainParams {
    pub lambda: f64,
    pub k: usize,
    /// Only available for `k = 0`.
    pub minimal: Option<Vec<f64>>,
    pub maximal: Vec<f64>,
}

impl ChainParams {
    /// `M_n`, 1-based.
    pub fn max_at(&self, n: usize) -> f64 {
        self.maximal[n - 1]
    }
}

/// `M_n` for the `k`-associated family.
pub fn maximal_term(lambda: f64, k: usize, n: usize) -> f64 {
    let kn = (k + n) as f64;
    if lambda <= 0.5 {
        0.5 * (kn - 1.0) / (lambda + kn - 1.0)
    } else {
        0.5 * (2.0 * lambda + kn - 2.0) / (lambda + kn - 1.0)
    }
}

/// `m_n` for `k = 0`.
pub fn minimal_term(lambda: f64, n: usize) -> f64 {
    let n = n as f64;
    0.5 * (n - 1.0) / (lambda + n - 1.0)
}

pub fn chain_params(lambda: f64, k: usize, n_max: usize) -> Result<ChainParams> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(invalid("lambda", lambda, "must be finite and > 0"));
    }
    let maximal = (1..=n_max).map(|n| maximal_term(lambda, k, n)).collect();
    let minimal = (k == 0).then(|| (1..=n_max).map(|n| minimal_term(lambda, n)).collect());
    Ok(ChainParams {
        lambda,
        k,
        minimal,
        maximal,
    })
}
