//! Sturm-comparison bounds on the gaps between consecutive `θ`-zeros.

use crate::error::Result;
use crate::param::ParamB;
use crate::zeros::{theta_transform, zeros, FamilyParams};
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpacingBounds {
    /// Extreme value of the potential for `λ ≠ 1`.
    pub f_n: f64,
    /// Upper bound on the potential over the zero interval for `λ = 1`.
    pub g_n: f64,
}

/// `sign(η)` with `sign(0) = 1`.
fn sign(eta: f64) -> f64 {
    if eta >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

pub fn spacing_bounds(n: usize, b: &ParamB) -> SpacingBounds {
    let (l, e) = (b.lambda(), b.eta());
    let nf = n as f64;
    let e2 = e * e;
    let f_n = (nf * nf + l * (2.0 * nf + 1.0)) * (1.0 - e2 / (l * (1.0 - l)));
    let root = (e2 * (nf + 1.0).powi(2) + 3.0 * (e2 + nf * nf)).sqrt();
    let g_n = (nf + 1.0).powi(2)
        + (e2 * (nf * (nf + 1.0).powi(2) + nf.powi(3) + 4.0)
            + sign(e) * 2.0 * e * (nf * nf - 1.0) * root)
            / (3.0 * nf);
    SpacingBounds { f_n, g_n }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum SpacingCase {
    /// `0 < λ < 1`, `η² ≤ λ(1−λ)`: every gap is at most `π/√f_n`.
    UpperByF,
    /// `λ > 1`: every gap is at least `π/√f_n`.
    LowerByF,
    /// `λ = 1`, `n ≥ 4`: every gap exceeds `π/√g_n`.
    LowerByG,
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpacingReport {
    pub n: usize,
    pub b: ParamB,
    pub case: SpacingCase,
    pub bounds: SpacingBounds,
    /// The comparison gap `π/√f_n` or `π/√g_n`.
    pub reference_gap: Option<f64>,
    /// Smallest signed slack over all gaps; positive means the bound holds strictly.
    pub min_margin: Option<f64>,
}

impl SpacingReport {
    /// `None` when the bound does not apply.
    pub fn passes(&self) -> Option<bool> {
        self.min_margin.map(|m| m > 0.0)
    }
}

fn classify(n: usize, b: &ParamB, bounds: &SpacingBounds) -> SpacingCase {
    let (l, e) = (b.lambda(), b.eta());
    if l < 1.0 {
        if e * e > l * (1.0 - l) {
            return SpacingCase::NotApplicable(format!("eta^2 = {} exceeds lambda(1-lambda) = {}", e * e, l * (1.0 - l)));
        }
        if bounds.f_n <= 0.0 {
            return SpacingCase::NotApplicable("degenerate f_n <= 0".into());
        }
        SpacingCase::UpperByF
    } else if l > 1.0 {
        SpacingCase::LowerByF
    } else if n >= 4 {
        SpacingCase::LowerByG
    } else {
        SpacingCase::NotApplicable("lambda = 1 needs n >= 4".into())
    }
}

pub fn spacing_check(n: usize, b: &ParamB) -> Result<SpacingReport> {
    let bounds = spacing_bounds(n, b);
    let case = classify(n, b, &bounds);
    let reference_gap = match case {
        SpacingCase::UpperByF | SpacingCase::LowerByF => Some(PI / bounds.f_n.sqrt()),
        SpacingCase::LowerByG => Some(PI / bounds.g_n.sqrt()),
        SpacingCase::NotApplicable(_) => None,
    };
    let min_margin = match reference_gap {
        Some(reference) if n >= 2 => {
            let th = theta_transform(&zeros(FamilyParams::Crr(*b), n, 0)?).thetas;
            let upper = case == SpacingCase::UpperByF;
            th.windows(2)
                .map(|w| {
                    let gap = w[1] - w[0];
                    if upper {
                        reference - gap
                    } else {
                        gap - reference
                    }
                })
                .reduce(f64::min)
        }
        _ => None,
    };
    Ok(SpacingReport {
        n,
        b: *b,
        case,
        bounds,
        reference_gap,
        min_margin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(l: f64, e: f64) -> ParamB {
        ParamB::new(l, e).unwrap()
    }

    #[test]
    fn examples() {
        let r = spacing_check(10, &pb(1.5, 0.7)).unwrap();
        assert_eq!(r.case, SpacingCase::LowerByF);
        assert_eq!(r.passes(), Some(true));
        let r = spacing_check(10, &pb(0.5, 0.3)).unwrap();
        assert_eq!(r.case, SpacingCase::UpperByF);
        assert_eq!(r.passes(), Some(true));
        let r = spacing_check(5, &pb(1.0, 2.0)).unwrap();
        assert_eq!(r.case, SpacingCase::LowerByG);
        assert_eq!(r.passes(), Some(true));
    }

    #[test]
    fn not_applicable_cases() {
        assert!(matches!(spacing_check(6, &pb(0.5, 0.6)).unwrap().case, SpacingCase::NotApplicable(_)));
        assert!(matches!(spacing_check(3, &pb(1.0, 0.6)).unwrap().case, SpacingCase::NotApplicable(_)));
        // η² = λ(1−λ) exactly makes f_n vanish
        let r = spacing_check(6, &pb(0.5, 0.5)).unwrap();
        assert!(matches!(r.case, SpacingCase::NotApplicable(_)));
        assert_eq!(r.passes(), None);
    }

    #[test]
    fn bound_formulas() {
        let s = spacing_bounds(4, &pb(1.0, 0.0));
        assert_eq!(s.g_n, 25.0);
        let s = spacing_bounds(3, &pb(2.0, 1.0));
        assert!((s.f_n - (9.0 + 14.0) * 1.5).abs() < 1e-13);
    }

    #[test]
    fn grid_margins_positive() {
        for n in [4, 7, 15, 30] {
            for (l, e) in [(0.3, 0.0), (0.3, -0.4), (0.7, 0.2), (1.0, -3.0), (1.0, 5.0), (1.2, 0.0), (3.0, -2.0), (10.0, 8.0)] {
                let r = spacing_check(n, &pb(l, e)).unwrap();
                if let Some(ok) = r.passes() {
                    assert!(ok, "n={n} λ={l} η={e}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn unit_lambda_zero_eta_is_equality() {
        // constant potential (n+1)² = g_n: every θ-gap is exactly π/(n+1),
        // so the strict inequality degenerates to equality
        for n in [4, 9, 20] {
            let r = spacing_check(n, &pb(1.0, 0.0)).unwrap();
            assert_eq!(r.case, SpacingCase::LowerByG);
            assert!(r.min_margin.unwrap().abs() < 1e-13);
        }
    }
}
