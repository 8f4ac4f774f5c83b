//! Closed-form interval containing every zero of `P_n(b; x)` for `n ≥ 4`.

use crate::error::{CrrError, Result};
use crate::param::ParamB;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremeBounds {
    pub n: usize,
    pub lower: f64,
    pub upper: f64,
    /// Discriminant of the quadratic whose roots are the two bounds.
    pub delta_n: f64,
}

/// Discriminant `Δ_n`.
pub fn discriminant(n: usize, b: &ParamB) -> f64 {
    let (l, e) = (b.lambda(), b.eta());
    let n = n as f64;
    let e2 = e * e;
    (e2 + l * (l + 2.0)) * n * n
        + 2.0 * l * (e2 + l * l + 2.0 * l - 3.0) * n
        + 4.0 * l * (e2 + (l - 1.0) * (l - 1.0))
}

pub fn extreme_bounds(n: usize, b: &ParamB) -> Result<ExtremeBounds> {
    if n < 4 {
        return Err(CrrError::Hypothesis(format!(
            "extreme bounds need degree n >= 4, got {n}"
        )));
    }
    let (l, e) = (b.lambda(), b.eta());
    let nf = n as f64;
    let delta_n = discriminant(n, b);
    let centre = e * (nf * nf + 2.0 * l + nf * (l - 1.0));
    let spread = (nf - 1.0) * delta_n.sqrt();
    let denom = l * (2.0 * (nf - 1.0) + (nf + 2.0) * l);
    let (lower, upper) = if e == 0.0 {
        // keep the η = 0 interval exactly symmetric
        (-spread / denom, spread / denom)
    } else {
        ((centre - spread) / denom, (centre + spread) / denom)
    };
    Ok(ExtremeBounds {
        n,
        lower,
        upper,
        delta_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(l: f64, e: f64) -> ParamB {
        ParamB::new(l, e).unwrap()
    }

    /// Roots of `Q(x) = q2 x² + q1 x + q0` straight from its coefficients.
    fn q_roots(n: usize, b: &ParamB) -> (f64, f64) {
        let (l, e) = (b.lambda(), b.eta());
        let n = n as f64;
        let q2 = -l * ((n + 2.0) * l + 2.0 * (n - 1.0));
        let q1 = 2.0 * e * (n * (n + l - 1.0) + 2.0 * l);
        let q0 = n.powi(3) + 2.0 * (l - 2.0) * n * n - (e * e + 4.0 * l - 5.0) * n
            - 2.0 * (e * e - l + 1.0);
        let disc = (q1 * q1 - 4.0 * q2 * q0).sqrt();
        let r1 = (-q1 + disc) / (2.0 * q2);
        let r2 = (-q1 - disc) / (2.0 * q2);
        (r1.min(r2), r1.max(r2))
    }

    #[test]
    #[allow(clippy::approx_constant)] // printed five-decimal value
    fn published_values() {
        let eb = extreme_bounds(30, &pb(5.0, 2.0)).unwrap();
        assert!((eb.lower + 3.83491).abs() < 5e-5);
        assert!((eb.upper - 7.61473).abs() < 5e-5);
        let eb = extreme_bounds(4, &pb(1.5, 0.0)).unwrap();
        assert!((eb.lower + 1.41421).abs() < 5e-5);
        assert_eq!(eb.lower, -eb.upper);
    }

    #[test]
    fn eta_five_row_recomputed() {
        let eb = extreme_bounds(4, &pb(1.5, 5.0)).unwrap();
        assert!((eb.lower - 0.5301087846697145).abs() < 1e-12);
        assert!((eb.upper - 8.803224548663618).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_quadratic_roots() {
        for &(n, l, e) in &[(4, 1.5, 0.5), (10, 0.3, -2.0), (30, 25.0, 15.0), (200, 0.75, -5.0)] {
            let b = pb(l, e);
            let eb = extreme_bounds(n, &b).unwrap();
            let (r1, r2) = q_roots(n, &b);
            assert!((eb.lower - r1).abs() < 1e-9 * (1.0 + r1.abs()));
            assert!((eb.upper - r2).abs() < 1e-9 * (1.0 + r2.abs()));
            assert!(eb.delta_n > 0.0);
        }
    }

    #[test]
    fn rejects_small_degree() {
        assert!(extreme_bounds(3, &pb(1.0, 1.0)).is_err());
    }
}
