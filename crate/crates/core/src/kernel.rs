//! Shared three-term recurrence kernel.
//!
//! Every family in the crate (CRR, k-associated CRR, Hermite, Laguerre) is a
//! solution of `P_{m+1} = a_m(x) P_m − b_m(x) P_{m−1}`. The kernel runs that
//! recurrence together with its once- and twice-differentiated forms.
//!
//! Overflow control has two parts, both exact powers of two:
//! * the argument scale `s = 2^t ≥ |x|` is divided out of every step, so the
//!   recurrence runs on `P_m / s^m` and the step coefficients stay `O(1)`;
//! * after every step all carried values are renormalized by a common power
//!   of two, recorded in `exp2`.

use crate::scaled::{frexp, pow2, ScaledValue};

/// A three-term recurrence with coefficients pre-divided by the argument scale.
pub(crate) trait Recurrence {
    /// `P_1 / s` and its first two `x`-derivatives, also divided by `s`.
    fn first(&self, x: f64, inv_s: f64) -> [f64; 3];

    /// `(a_m / s, b_m / s²)` for the step producing `P_{m+1}` (`m ≥ 1`),
    /// each with its first two `x`-derivatives.
    fn step(&self, m: usize, x: f64, inv_s: f64) -> ([f64; 3], [f64; 3]);
}

/// Raw kernel output: `P_n = value · 2^exp2` and `P_{n−1} = prev · 2^{exp2 − t}`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Pass {
    pub value: [f64; 3],
    pub prev: [f64; 3],
    pub exp2: i64,
    pub t: i64,
}

impl Pass {
    pub fn p(&self) -> ScaledValue {
        ScaledValue::new(self.value[0], self.exp2)
    }

    pub fn dp(&self) -> ScaledValue {
        ScaledValue::new(self.value[1], self.exp2)
    }

    pub fn d2p(&self) -> ScaledValue {
        ScaledValue::new(self.value[2], self.exp2)
    }

    pub fn p_prev(&self) -> ScaledValue {
        ScaledValue::new(self.prev[0], self.exp2 - self.t)
    }

    /// Sign of `P_n`.
    pub fn sign(&self) -> f64 {
        if self.value[0] == 0.0 {
            0.0
        } else {
            self.value[0].signum()
        }
    }
}

/// Exponent `t ≥ 0` with `|x| ≤ 2^t`.
pub(crate) fn arg_scale(x: f64) -> i64 {
    if x.abs() <= 1.0 {
        0
    } else {
        frexp(x).1
    }
}

pub(crate) fn run<R: Recurrence + ?Sized>(rec: &R, n: usize, x: f64, derivs: bool) -> Pass {
    let t = arg_scale(x);
    let inv_s = pow2(-t);
    if n == 0 {
        return Pass {
            value: [1.0, 0.0, 0.0],
            prev: [0.0; 3],
            exp2: 0,
            t,
        };
    }
    let mut p = rec.first(x, inv_s);
    let mut q = [1.0, 0.0, 0.0];
    let mut exp2 = t;
    for m in 1..n {
        let (a, b) = rec.step(m, x, inv_s);
        let next = if derivs {
            [
                a[0] * p[0] - b[0] * q[0],
                a[1] * p[0] + a[0] * p[1] - b[1] * q[0] - b[0] * q[1],
                a[2] * p[0] + 2.0 * a[1] * p[1] + a[0] * p[2]
                    - b[2] * q[0]
                    - 2.0 * b[1] * q[1]
                    - b[0] * q[2],
            ]
        } else {
            [a[0] * p[0] - b[0] * q[0], 0.0, 0.0]
        };
        q = p;
        p = next;
        exp2 += t;

        let mut big = p[0].abs().max(q[0].abs());
        if derivs {
            big = big
                .max(p[1].abs())
                .max(p[2].abs())
                .max(q[1].abs())
                .max(q[2].abs());
        }
        if big > 0.0 && big.is_finite() {
            let e = frexp(big).1.clamp(-1000, 1000);
            if e != 0 {
                let f = pow2(-e);
                for v in p.iter_mut().chain(q.iter_mut()) {
                    *v *= f;
                }
                exp2 += e;
            }
        }
    }
    Pass {
        value: p,
        prev: q,
        exp2,
        t,
    }
}
