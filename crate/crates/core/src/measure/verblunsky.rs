use super::chain::maximal_term;
use crate::crr::coeff_c;
use crate::error::{CrrError, Result};
use crate::param::ParamB;
use num_complex::Complex64;

/// Verblunsky data of the measure on the unit circle attached to the
/// `k`-associated family. `tau[n] = τ_n`, `beta[n] = β_n`, `gamma[n] = γ_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerblunskySeq {
    pub b: ParamB,
    pub k: usize,
    pub tau: Vec<Complex64>,
    pub beta: Vec<Complex64>,
    pub gamma: Vec<f64>,
}

pub fn verblunsky_seq(b: ParamB, k: usize, n_max: usize) -> Result<VerblunskySeq> {
    if k == 0 && b.lambda() <= 0.5 {
        return Err(CrrError::Hypothesis(format!(
            "k = 0 needs lambda > 1/2, got {}",
            b.lambda()
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let mut tau = vec![one];
    let mut beta = Vec::with_capacity(n_max);
    let mut gamma = vec![1.0];
    for n in 1..=n_max {
        let c = coeff_c(k + n, &b);
        let m = maximal_term(b.lambda(), k, n);
        let ic = Complex64::new(0.0, c);
        let prev = tau[n - 1];
        beta.push((one - m - ic) / ((one - ic) * prev));
        tau.push(prev * (one - ic) / (one + ic));
        gamma.push((1.0 - m) * gamma[n - 1]);
    }
    Ok(VerblunskySeq {
        b,
        k,
        tau,
        beta,
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unit_lambda_zero_eta() {
        let v = verblunsky_seq(ParamB::new(1.0, 0.0).unwrap(), 0, 30).unwrap();
        for n in 0..30 {
            assert_eq!(v.beta[n], Complex64::new(0.5, 0.0));
            assert_eq!(v.tau[n + 1], Complex64::new(1.0, 0.0));
            assert_eq!(v.gamma[n + 1], 0.5f64.powi(n as i32 + 1));
        }
    }

    #[test]
    fn hypothesis_enforced() {
        assert!(verblunsky_seq(ParamB::new(0.5, 1.0).unwrap(), 0, 5).is_err());
        assert!(verblunsky_seq(ParamB::new(0.2, 1.0).unwrap(), 1, 5).is_ok());
    }

    proptest! {
        #[test]
        fn structural_bounds(lambda in 0.01f64..40.0, eta in -50.0f64..50.0, k in 0usize..=5) {
            prop_assume!(k >= 1 || lambda > 0.5);
            let v = verblunsky_seq(ParamB::new(lambda, eta).unwrap(), k, 100).unwrap();
            for t in &v.tau {
                prop_assert!((t.norm() - 1.0).abs() <= 1e-12);
            }
            for b in &v.beta {
                prop_assert!(b.norm() < 1.0);
            }
            let mut log_sum = 0.0;
            for n in 1..v.gamma.len() {
                prop_assert!(v.gamma[n] > 0.0 && v.gamma[n] < v.gamma[n - 1]);
                log_sum += (1.0 - maximal_term(lambda, k, n)).ln();
                prop_assert!((v.gamma[n].ln() - log_sum).abs() <= 1e-12 * log_sum.abs().max(1.0));
            }
        }
    }
}
