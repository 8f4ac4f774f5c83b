//! Logarithms of the gamma function via the Stirling series, with upward
//! recurrence shifts until `|z| ≥ 15`.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Stirling correction coefficients `B_{2j} / (2j (2j − 1))`.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const SHIFT_TO: f64 = 15.0;

/// `Re ln Γ(z)` for `Re z > 0`; the real part is branch independent.
fn re_ln_gamma(z: Complex64) -> f64 {
    let mut z = z;
    let mut shift = 0.0;
    while z.norm() < SHIFT_TO {
        shift += z.norm().ln();
        z += 1.0;
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    let main = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series;
    main.re - shift
}

/// `ln |Γ(λ + iη)|²`, `λ > 0`.
pub fn ln_gamma_abs_sq(lambda: f64, eta: f64) -> f64 {
    2.0 * re_ln_gamma(Complex64::new(lambda, eta))
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma_real(x: f64) -> f64 {
    re_ln_gamma(Complex64::new(x, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    #[test]
    fn integers_and_half() {
        assert!(ln_gamma_abs_sq(1.0, 0.0).abs() < 1e-14);
        assert!(ln_gamma_real(2.0).abs() < 1e-14);
        assert!(close(ln_gamma_real(5.0), 24f64.ln(), 1e-14));
        assert!(close(ln_gamma_real(0.5), 0.5 * PI.ln(), 1e-14));
        assert!(close(ln_gamma_real(171.5), 709.1431630309282, 1e-14));
        // Γ(1e-3) ≈ 999.4237724845955
        assert!(close(ln_gamma_real(1e-3), 999.4237724845955f64.ln(), 1e-13));
    }

    #[test]
    fn reflection_type_identities() {
        for eta in [0.1, 1.0, 2.0, 7.5, 30.0] {
            // |Γ(1 + iη)|² = πη / sinh(πη)
            let want = (PI * eta).ln() - (PI * eta).sinh().ln();
            assert!(close(ln_gamma_abs_sq(1.0, eta), want, 1e-12), "eta={eta}");
            // |Γ(1/2 + iη)|² = π / cosh(πη)
            let want = PI.ln() - (PI * eta).cosh().ln();
            assert!(close(ln_gamma_abs_sq(0.5, eta), want, 1e-12), "eta={eta}");
        }
    }
}
