use crate::error::{invalid, Result};
use serde::Serialize;

/// The parameter `b = λ + iη` of the family, with `λ > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamB {
    lambda: f64,
    eta: f64,
}

impl ParamB {
    pub fn new(lambda: f64, eta: f64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(invalid("lambda", lambda, "must be finite"));
        }
        if lambda <= 0.0 {
            return Err(invalid("lambda", lambda, "must be positive"));
        }
        if !eta.is_finite() {
            return Err(invalid("eta", eta, "must be finite"));
        }
        Ok(Self { lambda, eta })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// `b̄ = λ − iη`.
    pub fn conj(&self) -> Self {
        Self {
            lambda: self.lambda,
            eta: -self.eta,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_lambda() {
        assert!(ParamB::new(0.0, 1.0).is_err());
        assert!(ParamB::new(-1.0, 1.0).is_err());
        assert!(ParamB::new(f64::NAN, 1.0).is_err());
        assert!(ParamB::new(1.0, f64::INFINITY).is_err());
        assert!(ParamB::new(1e-300, -5.0).is_ok());
    }

    #[test]
    fn conj_flips_eta() {
        let b = ParamB::new(1.5, 0.5).unwrap();
        assert_eq!(b.conj().eta(), -0.5);
        assert_eq!(b.conj().lambda(), 1.5);
    }
}
