//! Zero extraction by interlacing induction.
//!
//! The zeros of consecutive degrees of each family strictly interlace, so the
//! zeros of degree `m` bracket all but the two outermost zeros of degree
//! `m + 1`. The outer two are bracketed by the closed-form extreme bounds
//! (CRR, `k = 0`, degree ≥ 4) or by outward doubling from the extreme
//! degree-`m` zeros. Each bracket is bisected and then Newton-polished.

use crate::bounds::extreme_bounds;
use crate::classical::{HermiteRecurrence, LaguerreRecurrence};
use crate::crr::CrrRecurrence;
use crate::error::{invalid, CrrError, Result};
use crate::kernel::{self, Recurrence};
use crate::param::ParamB;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    Crr,
    Hermite,
    Laguerre,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum FamilyParams {
    Crr(ParamB),
    Hermite,
    Laguerre { alpha: f64 },
}

impl FamilyParams {
    pub fn laguerre(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -1.0 {
            return Err(invalid("alpha", alpha, "must be finite and > -1"));
        }
        Ok(Self::Laguerre { alpha })
    }

    pub fn family(&self) -> Family {
        match self {
            Self::Crr(_) => Family::Crr,
            Self::Hermite => Family::Hermite,
            Self::Laguerre { .. } => Family::Laguerre,
        }
    }
}

/// Increasing zeros of one polynomial, with where they came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroSet {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub params: FamilyParams,
    pub zeros: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaZeroSet {
    pub thetas: Vec<f64>,
}

/// `θ_j = arctan x_j`; order is preserved since `arctan` is increasing.
pub fn theta_transform(zs: &ZeroSet) -> ThetaZeroSet {
    ThetaZeroSet {
        thetas: zs.zeros.iter().map(|x| x.atan()).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Bisection stops once the bracket is narrower than
    /// `rel_tol · max(|x|, 1)`.
    pub rel_tol: f64,
    pub newton_steps: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-13,
            newton_steps: 3,
        }
    }
}

const MAX_DOUBLINGS: usize = 60;

/// Degree at which θ-domain Newton steps take over from `x`-domain ones.
const THETA_NEWTON_ABOVE: f64 = 10.0;

enum Poly {
    Crr(CrrRecurrence),
    Hermite(HermiteRecurrence),
    Laguerre(LaguerreRecurrence),
}

impl Recurrence for Poly {
    #[inline]
    fn first(&self, x: f64, inv_s: f64) -> [f64; 3] {
        match self {
            Poly::Crr(r) => r.first(x, inv_s),
            Poly::Hermite(r) => r.first(x, inv_s),
            Poly::Laguerre(r) => r.first(x, inv_s),
        }
    }

    #[inline]
    fn step(&self, m: usize, x: f64, inv_s: f64) -> ([f64; 3], [f64; 3]) {
        match self {
            Poly::Crr(r) => r.step(m, x, inv_s),
            Poly::Hermite(r) => r.step(m, x, inv_s),
            Poly::Laguerre(r) => r.step(m, x, inv_s),
        }
    }
}

fn poly_for(params: &FamilyParams, k: usize, n: usize) -> Poly {
    match params {
        FamilyParams::Crr(b) => Poly::Crr(CrrRecurrence::new(b, k, n)),
        FamilyParams::Hermite => Poly::Hermite(HermiteRecurrence),
        FamilyParams::Laguerre { alpha } => Poly::Laguerre(LaguerreRecurrence::new(*alpha)),
    }
}

fn check_params(params: &FamilyParams, n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("n", 0.0, "degree must be >= 1"));
    }
    if let FamilyParams::Laguerre { alpha } = params {
        FamilyParams::laguerre(*alpha)?;
    }
    Ok(())
}

pub fn zeros(params: FamilyParams, n: usize, k: usize) -> Result<ZeroSet> {
    zeros_with(params, n, k, &SolverOptions::default())
}

pub fn zeros_with(params: FamilyParams, n: usize, k: usize, opts: &SolverOptions) -> Result<ZeroSet> {
    let mut last = Vec::new();
    walk_ladder(&params, n, k, opts, |_, z| {
        last.clear();
        last.extend_from_slice(z);
        Ok(())
    })?;
    Ok(ZeroSet {
        family: params.family(),
        n,
        k,
        params,
        zeros: last,
    })
}

/// Zeros of every degree `1..=n`; entry `m − 1` holds the `m` zeros of degree `m`.
pub fn zero_ladder(params: FamilyParams, n: usize, k: usize, opts: &SolverOptions) -> Result<Vec<Vec<f64>>> {
    let mut out = Vec::with_capacity(n);
    walk_ladder(&params, n, k, opts, |_, z| {
        out.push(z.to_vec());
        Ok(())
    })?;
    Ok(out)
}

/// Runs the induction, handing each degree's zeros to `visit`.
pub fn walk_ladder<F>(params: &FamilyParams, n: usize, k: usize, opts: &SolverOptions, mut visit: F) -> Result<()>
where
    F: FnMut(usize, &[f64]) -> Result<()>,
{
    check_params(params, n)?;
    let poly = poly_for(params, k, n);
    let f = poly.first(0.0, 1.0);
    let mut prev = vec![-f[0] / f[1]];
    visit(1, &prev)?;

    let bound_of = |deg: usize| -> Option<(f64, f64)> {
        match params {
            FamilyParams::Crr(b) if k == 0 && deg >= 4 => {
                extreme_bounds(deg, b).ok().map(|e| (e.lower, e.upper))
            }
            _ => None,
        }
    };

    let mut cur = Vec::with_capacity(n);
    for deg in 2..=n {
        next_degree(&poly, deg, &prev, bound_of(deg), opts, &mut cur)?;
        visit(deg, &cur)?;
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(())
}

#[inline]
fn sign_at<R: Recurrence>(rec: &R, deg: usize, x: f64) -> f64 {
    kernel::run(rec, deg, x, false).sign()
}

/// Zeros of degree `deg` from the zeros `prev` of degree `deg − 1`.
fn next_degree<R: Recurrence>(
    rec: &R,
    deg: usize,
    prev: &[f64],
    bounds: Option<(f64, f64)>,
    opts: &SolverOptions,
    out: &mut Vec<f64>,
) -> Result<()> {
    out.clear();
    let m = prev.len();
    let signs: Vec<f64> = prev.iter().map(|&z| sign_at(rec, deg, z)).collect();

    let first = prev[0];
    let last = prev[m - 1];
    let (step_left, step_right) = if m >= 2 {
        (prev[1] - prev[0], prev[m - 1] - prev[m - 2])
    } else {
        let h = first.abs().max(1.0);
        (h, h)
    };

    let (lo, s_lo) = outer_point(rec, deg, first, signs[0], -1.0, step_left, bounds.map(|b| b.0), 0)?;
    out.push(solve_bracket(rec, deg, (lo, first), (s_lo, signs[0]), opts, 0)?);
    for i in 0..m - 1 {
        let (a, b) = (prev[i], prev[i + 1]);
        let (sa, sb) = (signs[i], signs[i + 1]);
        if sa == 0.0 || sb == 0.0 || sa == sb {
            return Err(CrrError::BracketFailure {
                degree: deg,
                index: i + 1,
                lo: a,
                hi: b,
            });
        }
        out.push(solve_bracket(rec, deg, (a, b), (sa, sb), opts, i + 1)?);
    }
    let (hi, s_hi) = outer_point(rec, deg, last, signs[m - 1], 1.0, step_right, bounds.map(|b| b.1), m)?;
    out.push(solve_bracket(rec, deg, (last, hi), (signs[m - 1], s_hi), opts, m)?);

    for (i, y) in out.iter().enumerate() {
        let above = i == 0 || prev[i - 1] < *y;
        let below = i == m || *y < prev[i];
        if !(above && below) {
            return Err(CrrError::InterlacingViolation { degree: deg, index: i });
        }
    }
    Ok(())
}

/// A point beyond `anchor` (in direction `dir`) where the sign differs from `s_anchor`.
#[allow(clippy::too_many_arguments)]
fn outer_point<R: Recurrence>(
    rec: &R,
    deg: usize,
    anchor: f64,
    s_anchor: f64,
    dir: f64,
    h0: f64,
    bound: Option<f64>,
    index: usize,
) -> Result<(f64, f64)> {
    let fail = |far: f64| CrrError::BracketFailure {
        degree: deg,
        index,
        lo: anchor.min(far),
        hi: anchor.max(far),
    };
    if s_anchor == 0.0 {
        return Err(fail(anchor));
    }
    if let Some(b) = bound {
        let s = sign_at(rec, deg, b);
        if (b - anchor) * dir <= 0.0 || s == s_anchor {
            return Err(fail(b));
        }
        return Ok((b, s));
    }
    let mut h = h0;
    for _ in 0..MAX_DOUBLINGS {
        let x = anchor + dir * h;
        let s = sign_at(rec, deg, x);
        if s != s_anchor {
            return Ok((x, s));
        }
        h *= 2.0;
    }
    Err(fail(anchor + dir * h))
}

/// Bisection to `rel_tol`, then at most `newton_steps` Newton steps kept
/// inside the final bracket.
pub(crate) fn solve_bracket<R: Recurrence>(
    rec: &R,
    deg: usize,
    (mut lo, mut hi): (f64, f64),
    (s_lo, s_hi): (f64, f64),
    opts: &SolverOptions,
    index: usize,
) -> Result<f64> {
    if s_lo == 0.0 {
        return Ok(lo);
    }
    if s_hi == 0.0 {
        return Ok(hi);
    }
    if s_lo == s_hi {
        return Err(CrrError::BracketFailure {
            degree: deg,
            index,
            lo,
            hi,
        });
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= opts.rel_tol * mid.abs().max(1.0) {
            break;
        }
        let s = sign_at(rec, deg, mid);
        if s == 0.0 {
            return Ok(mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..opts.newton_steps {
        let pass = kernel::run(rec, deg, x, true);
        let [p, dp, _] = pass.value;
        if p == 0.0 || dp == 0.0 {
            break;
        }
        let next = if x.abs() > THETA_NEWTON_ABOVE {
            let theta = x.atan();
            (theta - p / (dp * (1.0 + x * x))).tan()
        } else {
            x - p / dp
        };
        if !next.is_finite() || next < lo || next > hi {
            break;
        }
        if next == x {
            break;
        }
        x = next;
    }
    Ok(x)
}

/// Zeros of one degree of the `k`-associated CRR polynomial found by sampling
/// the sign of `P_n(tan θ)` on a uniform θ-grid until exactly `n` sign
/// changes are seen. Costs `O(n²)` rather than the ladder's `O(n³)`, for the
/// high degrees the density probe needs.
pub fn zeros_sampled(b: ParamB, n: usize, k: usize, opts: &SolverOptions) -> Result<ZeroSet> {
    if n == 0 {
        return Err(invalid("n", 0.0, "degree must be >= 1"));
    }
    let rec = CrrRecurrence::new(&b, k, n);
    let mut samples = 8 * (n + 1);
    for _ in 0..6 {
        let xs: Vec<f64> = (0..samples)
            .map(|i| {
                let th = -std::f64::consts::FRAC_PI_2 + std::f64::consts::PI * (i as f64 + 0.5) / samples as f64;
                th.tan()
            })
            .collect();
        let signs: Vec<f64> = xs.iter().map(|&x| sign_at(&rec, n, x)).collect();
        let mut brackets = Vec::with_capacity(n);
        for i in 0..samples - 1 {
            if signs[i] == 0.0 {
                brackets.push((i, i));
            } else if signs[i + 1] != 0.0 && signs[i] != signs[i + 1] {
                brackets.push((i, i + 1));
            }
        }
        if brackets.len() == n {
            let mut out = Vec::with_capacity(n);
            for (j, &(a, bi)) in brackets.iter().enumerate() {
                out.push(solve_bracket(&rec, n, (xs[a], xs[bi]), (signs[a], signs[bi]), opts, j)?);
            }
            return Ok(ZeroSet {
                family: Family::Crr,
                n,
                k,
                params: FamilyParams::Crr(b),
                zeros: out,
            });
        }
        if brackets.len() > n {
            break;
        }
        samples *= 2;
    }
    Err(CrrError::IncompleteSampling {
        degree: n,
        found: 0,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crr::eval_crr;

    fn crr(l: f64, e: f64) -> FamilyParams {
        FamilyParams::Crr(ParamB::new(l, e).unwrap())
    }

    #[test]
    fn degree_one_closed_form() {
        let z = zeros(crr(2.0, 1.0), 1, 0).unwrap();
        assert_eq!(z.zeros, vec![0.5]);
        let z = zeros(crr(2.0, 1.0), 1, 3).unwrap();
        assert_eq!(z.zeros, vec![1.0 / 5.0]);
    }

    #[test]
    fn degree_two_quadratic() {
        let z = zeros(crr(1.0, 0.0), 2, 0).unwrap();
        let r = (1.0f64 / 3.0).sqrt();
        assert!((z.zeros[0] + r).abs() < 1e-15);
        assert!((z.zeros[1] - r).abs() < 1e-15);
    }

    #[test]
    fn published_extremes() {
        let z = zeros(crr(10.0, 2.0), 30, 0).unwrap();
        assert!((z.zeros[0] + 2.24406).abs() < 5e-5);
        assert!((z.zeros[29] - 3.31253).abs() < 5e-5);
    }

    #[test]
    fn zero_degree_rejected() {
        assert!(zeros(crr(1.0, 0.0), 0, 0).is_err());
        assert!(zeros(FamilyParams::Laguerre { alpha: -1.5 }, 3, 0).is_err());
    }

    #[test]
    fn theta_examples() {
        let zs = ZeroSet {
            family: Family::Crr,
            n: 2,
            k: 0,
            params: crr(1.0, 0.0),
            zeros: vec![0.0, 1.0],
        };
        let th = theta_transform(&zs);
        assert_eq!(th.thetas[0], 0.0);
        assert!((th.thetas[1] - std::f64::consts::FRAC_PI_4).abs() < 1e-16);
    }

    #[test]
    fn residuals_small_relative_to_gap_midpoints() {
        let b = ParamB::new(1.5, -0.7).unwrap();
        let z = zeros(FamilyParams::Crr(b), 40, 0).unwrap().zeros;
        for j in 0..z.len() {
            let p = eval_crr(40, 0, &b, z[j], false).p;
            let left = if j > 0 { 0.5 * (z[j - 1] + z[j]) } else { z[j] - 1.0 };
            let right = if j + 1 < z.len() { 0.5 * (z[j] + z[j + 1]) } else { z[j] + 1.0 };
            let scale = eval_crr(40, 0, &b, left, false).p.abs();
            let scale2 = eval_crr(40, 0, &b, right, false).p.abs();
            let s = if scale.cmp_abs(&scale2).is_ge() { scale } else { scale2 };
            assert!(p.abs().ratio(&s) <= 1e-10, "zero {j}");
        }
    }

    #[test]
    fn sampled_matches_ladder() {
        let b = ParamB::new(2.0, 1.0).unwrap();
        for k in [0, 2] {
            let a = zeros(FamilyParams::Crr(b), 60, k).unwrap().zeros;
            let s = zeros_sampled(b, 60, k, &SolverOptions::default()).unwrap().zeros;
            for (x, y) in a.iter().zip(&s) {
                assert!((x - y).abs() <= 1e-11 * x.abs().max(1.0));
            }
        }
    }

    #[test]
    fn deterministic() {
        let a = zeros(crr(0.75, -5.0), 50, 0).unwrap();
        let b = zeros(crr(0.75, -5.0), 50, 0).unwrap();
        assert_eq!(a, b);
    }
}
