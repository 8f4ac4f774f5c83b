//! Floating values with a detached base-2 exponent.
//!
//! Recurrence values grow like `(x² + 1)^{n/2}`, which leaves the `f64` range
//! long before the degrees the zero suites need. A [`ScaledValue`] keeps a
//! mantissa in `[0.5, 1)` and an unbounded power-of-two exponent; every
//! rescaling is by an exact power of two, so no rounding is introduced.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

/// `mantissa · 2^exp2`, with `0.5 ≤ |mantissa| < 1` or `mantissa = 0, exp2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaledValue {
    mantissa: f64,
    exp2: i64,
}

/// Splits a finite nonzero `v` into `(m, e)` with `v = m · 2^e`, `0.5 ≤ |m| < 1`.
/// Zero and non-finite inputs come back unchanged with `e = 0`.
pub(crate) fn frexp(v: f64) -> (f64, i64) {
    if v == 0.0 || !v.is_finite() {
        return (v, 0);
    }
    let bits = v.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    if biased == 0 {
        // subnormal: lift into the normal range first
        let (m, e) = frexp(v * f64::from_bits(0x43f0_0000_0000_0000)); // 2^64
        return (m, e - 64);
    }
    let m = f64::from_bits((bits & !(0x7ff << 52)) | (1022 << 52));
    (m, biased - 1022)
}

/// `2^e` for `e` in the normal exponent range.
#[inline]
pub(crate) fn pow2(e: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

/// `v · 2^e` without intermediate overflow; saturates to `±inf` / `±0`.
pub(crate) fn ldexp(mut v: f64, mut e: i64) -> f64 {
    while e > 1000 {
        v *= pow2(1000);
        e -= 1000;
        if v.is_infinite() {
            return v;
        }
    }
    while e < -1000 {
        v *= pow2(-1000);
        e += 1000;
        if v == 0.0 {
            return v;
        }
    }
    v * pow2(e)
}

impl ScaledValue {
    pub const ZERO: Self = Self {
        mantissa: 0.0,
        exp2: 0,
    };
    pub const ONE: Self = Self {
        mantissa: 0.5,
        exp2: 1,
    };

    /// Normalizes `value · 2^exp2`. Non-finite values are kept as-is.
    pub fn new(value: f64, exp2: i64) -> Self {
        let (m, e) = frexp(value);
        if m == 0.0 || !m.is_finite() {
            return Self {
                mantissa: m,
                exp2: 0,
            };
        }
        Self {
            mantissa: m,
            exp2: e + exp2,
        }
    }

    pub fn from_f64(value: f64) -> Self {
        Self::new(value, 0)
    }

    /// Builds `sign · 2^log2_abs`.
    pub fn from_log2(sign: f64, log2_abs: f64) -> Self {
        if sign == 0.0 || log2_abs == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let e = log2_abs.floor();
        let frac = log2_abs - e;
        Self::new(sign.signum() * frac.exp2(), e as i64)
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exp2(&self) -> i64 {
        self.exp2
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn signum(&self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    /// De-scaled value; saturates outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        ldexp(self.mantissa, self.exp2)
    }

    /// `log2 |value|`, `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.mantissa == 0.0 {
            return f64::NEG_INFINITY;
        }
        self.mantissa.abs().log2() + self.exp2 as f64
    }

    pub fn ln_abs(&self) -> f64 {
        self.log2_abs() * std::f64::consts::LN_2
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            exp2: self.exp2,
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn ldexp(&self, k: i64) -> Self {
        if self.mantissa == 0.0 {
            return *self;
        }
        Self {
            mantissa: self.mantissa,
            exp2: self.exp2 + k,
        }
    }

    /// Multiplies by a plain float.
    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.mantissa * factor, self.exp2)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.mantissa == 0.0 {
            return *other;
        }
        if other.mantissa == 0.0 {
            return *self;
        }
        let e = self.exp2.max(other.exp2);
        let a = ldexp(self.mantissa, self.exp2 - e);
        let b = ldexp(other.mantissa, other.exp2 - e);
        Self::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&-*other)
    }

    /// `|a − b| / max(|a|, |b|)`; zero when both vanish.
    pub fn rel_diff(&self, other: &Self) -> f64 {
        let diff = self.sub(other).abs();
        let scale = if self.cmp_abs(other) == Ordering::Less {
            other.abs()
        } else {
            self.abs()
        };
        if scale.is_zero() {
            return 0.0;
        }
        (diff.mantissa / scale.mantissa) * ldexp(1.0, diff.exp2 - scale.exp2)
    }

    /// Ratio `self / other` as a plain float (saturating).
    pub fn ratio(&self, other: &Self) -> f64 {
        ldexp(self.mantissa / other.mantissa, self.exp2 - other.exp2)
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        match (self.mantissa == 0.0, other.mantissa == 0.0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => self.exp2.cmp(&other.exp2).then(
                self.mantissa
                    .abs()
                    .partial_cmp(&other.mantissa.abs())
                    .unwrap_or(Ordering::Equal),
            ),
        }
    }
}

impl Mul for ScaledValue {
    type Output = ScaledValue;

    fn mul(self, rhs: Self) -> Self {
        if self.mantissa == 0.0 || rhs.mantissa == 0.0 {
            return Self::ZERO;
        }
        Self::new(self.mantissa * rhs.mantissa, self.exp2 + rhs.exp2)
    }
}

impl Neg for ScaledValue {
    type Output = ScaledValue;

    fn neg(self) -> Self {
        Self {
            mantissa: -self.mantissa,
            exp2: self.exp2,
        }
    }
}

impl fmt::Display for ScaledValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_f64();
        if v.is_finite() && (v == 0.0 || v.abs() > 1e-300) {
            write!(f, "{v:e}")
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exp2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn frexp_matches_definition() {
        assert_eq!(frexp(1.0), (0.5, 1));
        assert_eq!(frexp(-3.0), (-0.75, 2));
        assert_eq!(frexp(0.0), (0.0, 0));
        let tiny = f64::from_bits(1); // smallest subnormal
        let (m, e) = frexp(tiny);
        assert_eq!(m, 0.5);
        assert_eq!(e, -1073);
    }

    #[test]
    fn zero_has_zero_exponent() {
        let z = ScaledValue::new(0.0, 57);
        assert_eq!(z.exp2(), 0);
        assert!(z.is_zero());
    }

    #[test]
    fn huge_products_do_not_overflow() {
        let big = ScaledValue::from_f64(1e300);
        let p = big * big * big;
        assert!((p.log2_abs() - 3.0 * 1e300f64.log2()).abs() < 1e-9);
        assert_eq!(p.to_f64(), f64::INFINITY);
    }

    #[test]
    fn rel_diff_of_equal_values_is_zero() {
        let a = ScaledValue::new(0.75, 4000);
        assert_eq!(a.rel_diff(&a), 0.0);
        assert_eq!(ScaledValue::ZERO.rel_diff(&ScaledValue::ZERO), 0.0);
    }

    proptest! {
        #[test]
        fn normalized_and_roundtrips(v in -1e300f64..1e300, k in -2000i64..2000) {
            let s = ScaledValue::new(v, k);
            if v != 0.0 {
                prop_assert!(s.mantissa().abs() >= 0.5 && s.mantissa().abs() < 1.0);
            }
            prop_assert_eq!(s.ldexp(-k).to_f64(), v);
        }

        #[test]
        fn log2_roundtrip(sign in prop::bool::ANY, l in -5000.0f64..5000.0) {
            let s = ScaledValue::from_log2(if sign { 1.0 } else { -1.0 }, l);
            prop_assert!((s.log2_abs() - l).abs() <= 1e-12 * l.abs().max(1.0));
        }

        #[test]
        fn add_matches_float(a in -1e10f64..1e10, b in -1e10f64..1e10) {
            let s = ScaledValue::from_f64(a).add(&ScaledValue::from_f64(b));
            prop_assert_eq!(s.to_f64(), a + b);
        }
    }
}
