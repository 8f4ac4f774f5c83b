//! Integration over `θ ∈ (−π/2, π/2)` by globally adaptive composite
//! Gauss–Legendre panels.
//!
//! Each half of the interval is parametrized by the distance `u = π/2 − |θ|`
//! to its endpoint, so `cos θ = sin u` stays accurate where the weights of
//! interest have power-type endpoint behaviour. Panels are refined in order
//! of their error estimate (difference between one panel and its two halves).

use crate::error::{CrrError, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

/// A point of `(−π/2, π/2)` with accurately computed trigonometric data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    pub theta: f64,
    pub sin: f64,
    /// Always positive.
    pub cos: f64,
    /// `arccot(tan θ) = π/2 − θ`, in `(0, π)`.
    pub arccot: f64,
}

impl Angle {
    fn from_endpoint_distance(u: f64, upper: bool) -> Self {
        let (s, c) = u.sin_cos();
        if upper {
            Angle {
                theta: FRAC_PI_2 - u,
                sin: c,
                cos: s,
                arccot: u,
            }
        } else {
            Angle {
                theta: u - FRAC_PI_2,
                sin: -c,
                cos: s,
                arccot: std::f64::consts::PI - u,
            }
        }
    }

    pub fn tan(&self) -> f64 {
        self.sin / self.cos
    }
}

const ORDER: usize = 20;
const INITIAL_PANELS_PER_HALF: usize = 4;
const MAX_PANELS: usize = 1 << 14;
const REL_TOL: f64 = 1e-10;

/// Gauss–Legendre nodes and weights on `[−1, 1]`.
fn gauss_legendre() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut rule = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for m in 2..=n {
                    let p2 = ((2 * m - 1) as f64 * x * p1 - (m - 1) as f64 * p0) / m as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
        }
        rule
    })
}

struct Panel {
    lo: f64,
    hi: f64,
    upper: bool,
    value: f64,
    abs_value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// `(∫ g, ∫ |g|)` over `u ∈ [lo, hi]` on one half.
fn rule<G: Fn(&Angle) -> f64>(g: &G, lo: f64, hi: f64, upper: bool) -> (f64, f64) {
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    let (mut s, mut a) = (0.0, 0.0);
    for &(x, w) in gauss_legendre() {
        let v = g(&Angle::from_endpoint_distance(mid + half * x, upper));
        s += w * v;
        a += w * v.abs();
    }
    (s * half, a * half)
}

fn panel<G: Fn(&Angle) -> f64>(g: &G, lo: f64, hi: f64, upper: bool, coarse: f64) -> Panel {
    let mid = 0.5 * (lo + hi);
    let (l, la) = rule(g, lo, mid, upper);
    let (r, ra) = rule(g, mid, hi, upper);
    let value = l + r;
    Panel {
        lo,
        hi,
        upper,
        value,
        abs_value: la + ra,
        err: (value - coarse).abs(),
    }
}

/// `∫_{−π/2}^{π/2} g(θ) dθ` to relative accuracy `1e-10` of `∫ |g|`.
pub fn integrate_theta<G: Fn(&Angle) -> f64>(g: G) -> Result<f64> {
    let mut heap = BinaryHeap::new();
    let width = FRAC_PI_2 / INITIAL_PANELS_PER_HALF as f64;
    for upper in [false, true] {
        for i in 0..INITIAL_PANELS_PER_HALF {
            let (lo, hi) = (i as f64 * width, (i + 1) as f64 * width);
            let coarse = rule(&g, lo, hi, upper).0;
            heap.push(panel(&g, lo, hi, upper, coarse));
        }
    }
    let (mut value, mut abs, mut err) = heap
        .iter()
        .fold((0.0, 0.0, 0.0), |(v, a, e), p| (v + p.value, a + p.abs_value, e + p.err));
    let mut previous = value;
    while value.is_finite() {
        if err <= REL_TOL * abs || abs == 0.0 {
            return Ok(value);
        }
        if heap.len() >= MAX_PANELS {
            break;
        }
        previous = value;
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        let left_coarse = rule(&g, worst.lo, mid, worst.upper).0;
        let right_coarse = rule(&g, mid, worst.hi, worst.upper).0;
        let left = panel(&g, worst.lo, mid, worst.upper, left_coarse);
        let right = panel(&g, mid, worst.hi, worst.upper, right_coarse);
        value += left.value + right.value - worst.value;
        abs += left.abs_value + right.abs_value - worst.abs_value;
        err = (err + left.err + right.err - worst.err).max(0.0);
        heap.push(left);
        heap.push(right);
    }
    Err(CrrError::NonConvergence {
        panels: heap.len(),
        last: value,
        previous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rule_is_exact_for_polynomials() {
        let r = gauss_legendre();
        let s: f64 = r.iter().map(|(_, w)| w).sum();
        assert!((s - 2.0).abs() < 1e-14);
        let m: f64 = r.iter().map(|(x, w)| w * x.powi(38)).sum();
        assert!((m - 2.0 / 39.0).abs() < 1e-14);
    }

    #[test]
    fn angle_data_consistent() {
        let a = Angle::from_endpoint_distance(0.3, true);
        assert!((a.theta.sin() - a.sin).abs() < 1e-15 && (a.theta.cos() - a.cos).abs() < 1e-15);
        let b = Angle::from_endpoint_distance(0.3, false);
        assert!((b.theta.sin() - b.sin).abs() < 1e-15 && (b.theta.cos() - b.cos).abs() < 1e-15);
        assert!((b.arccot - (PI / 2.0 - b.theta)).abs() < 1e-15);
    }

    #[test]
    fn smooth_and_singular_integrands() {
        let v = integrate_theta(|a| a.cos * a.cos).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-12);
        // ∫ cos^{-1/2} θ dθ over (−π/2, π/2) = √π Γ(1/4) / Γ(3/4)
        let v = integrate_theta(|a| a.cos.powf(-0.5)).unwrap();
        let want = PI.sqrt() * 3.625_609_908_221_908 / 1.225_416_702_465_178;
        assert!((v - want).abs() < 1e-8 * want, "{v} vs {want}");
    }

    #[test]
    fn non_integrable_reports_non_convergence() {
        match integrate_theta(|a| 1.0 / a.cos) {
            Err(CrrError::NonConvergence { .. }) => {}
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
