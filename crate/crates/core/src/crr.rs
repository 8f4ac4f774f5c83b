//! CRR polynomials `P_n^{(k)}(b; x)`: coefficients, evaluation, the
//! generalized-eigenvalue matrices and the algebraic identity checks.

use crate::dd::Dd;
use crate::kernel::{self, Recurrence};
use crate::param::ParamB;
use crate::scaled::{frexp, pow2, ScaledValue};
use num_complex::Complex64;
use serde::Serialize;

/// `c_n = η / (λ + n − 1)`, `n ≥ 1`.
pub fn coeff_c(n: usize, b: &ParamB) -> f64 {
    assert!(n >= 1, "c_n is defined for n >= 1");
    b.eta() / (b.lambda() + (n - 1) as f64)
}

/// `d_{n+1} = n(n + 2λ − 1) / (4 (n + λ − 1)(n + λ))`, addressed by `n_plus = n + 1 ≥ 2`.
pub fn coeff_d(n_plus: usize, lambda: f64) -> f64 {
    assert!(n_plus >= 2, "d_n is defined for n >= 2");
    let n = (n_plus - 1) as f64;
    0.25 * n * (n + 2.0 * lambda - 1.0) / ((n + lambda - 1.0) * (n + lambda))
}

/// Coefficient tables of the `k`-associated recurrence up to a fixed degree.
#[derive(Debug, Clone)]
pub(crate) struct CrrRecurrence {
    /// `c[j] = c_{k+1+j}`
    c: Vec<f64>,
    /// `d[j] = d_{k+2+j}`
    d: Vec<f64>,
}

impl CrrRecurrence {
    pub fn new(b: &ParamB, k: usize, max_degree: usize) -> Self {
        let top = max_degree.max(1);
        let c = (0..top).map(|j| coeff_c(k + 1 + j, b)).collect();
        let d = (0..top).map(|j| coeff_d(k + 2 + j, b.lambda())).collect();
        Self { c, d }
    }
}

impl Recurrence for CrrRecurrence {
    #[inline]
    fn first(&self, x: f64, inv_s: f64) -> [f64; 3] {
        [x * inv_s - self.c[0] * inv_s, inv_s, 0.0]
    }

    #[inline]
    fn step(&self, m: usize, x: f64, inv_s: f64) -> ([f64; 3], [f64; 3]) {
        let c = self.c[m];
        let d = self.d[m - 1];
        let xs = x * inv_s;
        (
            [xs - c * inv_s, inv_s, 0.0],
            [
                d * (xs * xs + inv_s * inv_s),
                2.0 * d * xs * inv_s,
                2.0 * d * inv_s * inv_s,
            ],
        )
    }
}

/// One evaluation of `P_n^{(k)}(b; x)` with its neighbour and derivatives.
///
/// The derivative fields are zero unless requested.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalRecord {
    pub n: usize,
    pub k: usize,
    pub x: f64,
    pub p: ScaledValue,
    pub p_prev: ScaledValue,
    pub dp: ScaledValue,
    pub d2p: ScaledValue,
}

pub fn eval_crr(n: usize, k: usize, b: &ParamB, x: f64, want_derivs: bool) -> EvalRecord {
    let rec = CrrRecurrence::new(b, k, n);
    let pass = kernel::run(&rec, n, x, want_derivs);
    EvalRecord {
        n,
        k,
        x,
        p: pass.p(),
        p_prev: pass.p_prev(),
        dp: pass.dp(),
        d2p: pass.d2p(),
    }
}

/// Tridiagonal pair `(A_n, B_n)` of the generalized eigenvalue problem
/// `A u = x B u`. Off-diagonals are stored as magnitudes: `A` carries
/// `±i√d_j`, `B` carries `√d_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GevpPair {
    pub n: usize,
    pub a_diag: Vec<f64>,
    pub a_off: Vec<f64>,
    pub b_diag: Vec<f64>,
    pub b_off: Vec<f64>,
}

pub fn gevp_matrices(n: usize, b: &ParamB) -> GevpPair {
    assert!(n >= 1);
    let a_diag = (1..=n).map(|j| coeff_c(j, b)).collect();
    let off: Vec<f64> = (2..=n).map(|j| coeff_d(j, b.lambda()).sqrt()).collect();
    GevpPair {
        n,
        a_diag,
        a_off: off.clone(),
        b_diag: vec![1.0; n],
        b_off: off,
    }
}

impl GevpPair {
    /// Entries of `x B − A` as (diagonal, super-diagonal, sub-diagonal).
    fn pencil(&self, x: f64) -> (Vec<Complex64>, Vec<Complex64>, Vec<Complex64>) {
        let diag = self
            .a_diag
            .iter()
            .zip(&self.b_diag)
            .map(|(a, b)| Complex64::new(x * b - a, 0.0))
            .collect();
        // A has +i√d above the diagonal and −i√d below it
        let sup = self
            .a_off
            .iter()
            .zip(&self.b_off)
            .map(|(a, b)| Complex64::new(x * b, -a))
            .collect();
        let sub = self
            .a_off
            .iter()
            .zip(&self.b_off)
            .map(|(a, b)| Complex64::new(x * b, *a))
            .collect();
        (diag, sup, sub)
    }
}

/// `det(x B_n − A_n)` by the tridiagonal determinant recurrence on the
/// complex pencil entries. The imaginary part cancels; the real part is returned.
pub fn char_poly_det(n: usize, b: &ParamB, x: f64) -> ScaledValue {
    let pair = gevp_matrices(n, b);
    let (diag, sup, sub) = pair.pencil(x);
    let mut prev = Complex64::new(1.0, 0.0);
    let mut cur = diag[0];
    let mut exp2 = 0i64;
    for j in 1..n {
        let next = diag[j] * cur - sup[j - 1] * sub[j - 1] * prev;
        prev = cur;
        cur = next;
        let big = cur.re.abs().max(cur.im.abs()).max(prev.re.abs()).max(prev.im.abs());
        if big > 0.0 && big.is_finite() {
            let e = frexp(big).1.clamp(-1000, 1000);
            let f = pow2(-e);
            cur *= f;
            prev *= f;
            exp2 += e;
        }
    }
    ScaledValue::new(cur.re, exp2)
}

/// Relative residual of
/// `(x²+1) P″ − 2((n+λ−1)x − η) P′ + n(n+2λ−1) P = 0`.
pub fn ode_residual(n: usize, b: &ParamB, x: f64) -> f64 {
    let rec = CrrRecurrence::new(b, 0, n);
    let pass = kernel::run(&rec, n, x, true);
    let [p, dp, d2p] = pass.value;
    let (lambda, eta) = (b.lambda(), b.eta());
    let nf = n as f64;
    let t1 = (x * x + 1.0) * d2p;
    let t2 = 2.0 * ((nf + lambda - 1.0) * x - eta) * dp;
    let t3 = nf * (nf + 2.0 * lambda - 1.0) * p;
    (t1 - t2 + t3).abs() / (t1.abs() + t2.abs() + t3.abs() + f64::MIN_POSITIVE)
}

/// `value · 2^exp2` in double-double precision.
#[derive(Clone, Copy)]
struct DdScaled {
    value: Dd,
    exp2: i64,
}

impl DdScaled {
    fn normalized(value: Dd, exp2: i64) -> Self {
        if value.hi == 0.0 || !value.hi.is_finite() {
            return Self { value, exp2: 0 };
        }
        let e = frexp(value.hi).1.clamp(-1000, 1000);
        Self {
            value: value.scale_pow2(pow2(-e)),
            exp2: exp2 + e,
        }
    }

    fn mul(self, o: Self) -> Self {
        Self::normalized(self.value * o.value, self.exp2 + o.exp2)
    }

    fn sub(self, o: Self) -> Self {
        let e = self.exp2.max(o.exp2);
        let align = |v: Self| {
            let shift = v.exp2 - e;
            if v.value.hi == 0.0 || shift < -1000 {
                Dd::ZERO
            } else {
                v.value.scale_pow2(pow2(shift))
            }
        };
        Self::normalized(align(self) - align(o), e)
    }

    fn to_scaled(self) -> ScaledValue {
        ScaledValue::new(self.value.hi, self.exp2)
    }
}

/// `(P_n^{(k)}, P_{n−1}^{(k)})` at `x` by the recurrence in double-double arithmetic.
fn eval_pair_dd(n: usize, k: usize, b: &ParamB, x: f64) -> (DdScaled, DdScaled) {
    let xd = Dd::from_f64(x);
    let w = xd * xd + Dd::from_f64(1.0);
    let mut q = Dd::from_f64(1.0);
    let mut p = xd - Dd::from_f64(coeff_c(k + 1, b));
    let mut exp2 = 0i64;
    for m in 1..n {
        let a = xd - Dd::from_f64(coeff_c(k + m + 1, b));
        let d = Dd::from_f64(coeff_d(k + m + 1, b.lambda()));
        let next = a * p - d * w * q;
        q = p;
        p = next;
        let big = p.hi.abs().max(q.hi.abs());
        if big > 0.0 && big.is_finite() {
            let e = frexp(big).1.clamp(-1000, 1000);
            let f = pow2(-e);
            p = p.scale_pow2(f);
            q = q.scale_pow2(f);
            exp2 += e;
        }
    }
    (
        DdScaled { value: p, exp2 },
        DdScaled { value: q, exp2 },
    )
}

/// Relative residual of
/// `P_n^{(k+1)} P_n^{(k)} − P_{n−1}^{(k+1)} P_{n+1}^{(k)} = (1+x²)^n ∏_{j=2}^{n+1} d_{k+j}`.
///
/// The two products on the left exceed the right side by roughly `4^n`, so
/// both sides are formed in double-double arithmetic.
pub fn wronskian_check(n: usize, k: usize, b: &ParamB, x: f64) -> f64 {
    assert!(n >= 1);
    let (up_n, up_prev) = eval_pair_dd(n, k + 1, b, x);
    let (low_next, low_n) = eval_pair_dd(n + 1, k, b, x);
    let lhs = up_n.mul(low_n).sub(up_prev.mul(low_next));
    let xd = Dd::from_f64(x);
    let w = DdScaled::normalized(xd * xd + Dd::from_f64(1.0), 0);
    let rhs = (2..=n + 1).fold(DdScaled::normalized(Dd::from_f64(1.0), 0), |acc, j| {
        acc.mul(w)
            .mul(DdScaled::normalized(Dd::from_f64(coeff_d(k + j, b.lambda())), 0))
    });
    let diff = lhs.sub(rhs).to_scaled().abs();
    diff.ratio(&rhs.to_scaled())
}
