//! Empirical density probe: how large must the degree be before the zeros
//! cover a window `(t1, t2)` with no gap of size `ε` or more.

use crate::error::{invalid, CrrError, Result};
use crate::param::ParamB;
use crate::zeros::{zeros_sampled, SolverOptions};
use serde::Serialize;

pub const START_DEGREE: usize = 8;
pub const DEGREE_CAP: usize = 2048;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityStep {
    pub n: usize,
    pub zeros_inside: usize,
    /// Largest of the gaps between `t1`, the zeros inside the window, and `t2`.
    pub max_gap: f64,
    /// The same covering gap measured in `θ = arctan x`.
    pub max_theta_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub b: ParamB,
    pub window: (f64, f64),
    pub epsilon: f64,
    /// Smallest tested degree meeting the gap target.
    pub n_found: Option<usize>,
    pub steps: Vec<DensityStep>,
    pub diagnostic: Option<String>,
}

/// Covering gaps of `points` (ascending, all inside the window) over `[lo, hi]`.
fn max_covering_gap(lo: f64, hi: f64, points: &[f64]) -> f64 {
    let mut prev = lo;
    let mut worst = 0.0f64;
    for &p in points.iter().chain(std::iter::once(&hi)) {
        worst = worst.max(p - prev);
        prev = p;
    }
    worst
}

/// Doubles the degree from 8 until every covering gap of the zeros in
/// `(t1, t2)` is below `epsilon`, stopping at degree 2048.
pub fn density_probe(b: ParamB, t1: f64, t2: f64, epsilon: f64) -> Result<DensityReport> {
    if b.lambda() < 1.0 {
        return Err(CrrError::Hypothesis(format!(
            "density needs lambda >= 1, got {}",
            b.lambda()
        )));
    }
    if !(t1.is_finite() && t2.is_finite() && t1 < t2) {
        return Err(invalid("t2", t2, "window must satisfy t1 < t2"));
    }
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(invalid("epsilon", epsilon, "must be positive"));
    }
    let opts = SolverOptions::default();
    let mut steps = Vec::new();
    let mut n = START_DEGREE;
    while n <= DEGREE_CAP {
        let z = zeros_sampled(b, n, 0, &opts)?.zeros;
        let inside: Vec<f64> = z.into_iter().filter(|&x| x > t1 && x < t2).collect();
        let thetas: Vec<f64> = inside.iter().map(|x| x.atan()).collect();
        let step = DensityStep {
            n,
            zeros_inside: inside.len(),
            max_gap: max_covering_gap(t1, t2, &inside),
            max_theta_gap: max_covering_gap(t1.atan(), t2.atan(), &thetas),
        };
        let done = step.max_gap < epsilon;
        steps.push(step);
        if done {
            return Ok(DensityReport {
                b,
                window: (t1, t2),
                epsilon,
                n_found: Some(n),
                steps,
                diagnostic: None,
            });
        }
        n *= 2;
    }
    let last = steps.last().map(|s| s.max_gap).unwrap_or(f64::NAN);
    Ok(DensityReport {
        b,
        window: (t1, t2),
        epsilon,
        n_found: None,
        steps,
        diagnostic: Some(format!(
            "gap target {epsilon} not met by degree {DEGREE_CAP}; last covering gap {last}"
        )),
    })
}
