//! Convexity of the zeros: on which ranges consecutive gaps must grow
//! (convex) or shrink (concave), checked against computed zeros.

use super::sl::critical_tan;
use crate::error::{invalid, Result};
use crate::param::ParamB;
use crate::zeros::{zeros, FamilyParams};
use serde::Serialize;

/// Gap differences smaller than this are reported as ties.
pub const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shape {
    Convex,
    Concave,
}

/// Which branch of the convexity statement applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConvexityCase {
    /// `λ > 1, η = 0`
    AboveOneSymmetric,
    /// `λ > 1, η > 0`
    AboveOnePositive,
    /// `λ > 1, η < 0`
    AboveOneNegative,
    /// `0 < λ < 1, η > 0`
    BelowOnePositive,
    /// `0 < λ < 1, η < 0`
    BelowOneNegative,
    /// `λ = 1, η > 0`
    UnitPositive,
    /// `λ = 1, η < 0`
    UnitNegative,
    /// `λ ≤ 1, η = 0`: nothing is claimed.
    NoClaim,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeVerdict {
    /// Open range `(lo, hi)` of `x`.
    pub lo: f64,
    pub hi: f64,
    pub claim: Shape,
    pub zeros_in_range: usize,
    /// Number of consecutive gap pairs compared.
    pub compared: usize,
    pub ties: usize,
    pub violations: usize,
}

impl RangeVerdict {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexityReport {
    pub n: usize,
    pub b: ParamB,
    pub case: ConvexityCase,
    /// `η(n+λ)/(λ(λ−1))`, absent for `λ = 1`.
    pub frak_m: Option<f64>,
    pub verdicts: Vec<RangeVerdict>,
    /// Zeros outside every claimed range.
    pub unclassified: usize,
}

impl ConvexityReport {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(RangeVerdict::holds)
    }
}

fn claims(n: usize, b: &ParamB) -> (ConvexityCase, Option<f64>, Vec<(f64, f64, Shape)>) {
    use ConvexityCase::*;
    use Shape::*;
    let (l, e) = (b.lambda(), b.eta());
    let m = critical_tan(n, b);
    let inf = f64::INFINITY;
    let (case, ranges) = if l > 1.0 {
        let m = m.expect("λ ≠ 1");
        if e == 0.0 {
            (AboveOneSymmetric, vec![(-inf, 0.0, Concave), (0.0, inf, Convex)])
        } else if e > 0.0 {
            (AboveOnePositive, vec![(-inf, 0.0, Concave), (m, inf, Convex)])
        } else {
            (AboveOneNegative, vec![(-inf, m, Concave), (0.0, inf, Convex)])
        }
    } else if l < 1.0 {
        let m = m.expect("λ ≠ 1");
        if e > 0.0 {
            (BelowOnePositive, vec![(m, 0.0, Concave)])
        } else if e < 0.0 {
            (BelowOneNegative, vec![(0.0, m, Convex)])
        } else {
            (NoClaim, vec![])
        }
    } else if e > 0.0 {
        (UnitPositive, vec![(-inf, 0.0, Concave)])
    } else if e < 0.0 {
        (UnitNegative, vec![(0.0, inf, Convex)])
    } else {
        (NoClaim, vec![])
    };
    (case, m, ranges)
}

/// Checks gap monotonicity among consecutive zeros lying in `(lo, hi)`.
pub fn judge(z: &[f64], lo: f64, hi: f64, claim: Shape) -> RangeVerdict {
    let inside: Vec<f64> = z.iter().copied().filter(|&x| x > lo && x < hi).collect();
    let gaps: Vec<f64> = inside.windows(2).map(|w| w[1] - w[0]).collect();
    let (mut ties, mut violations) = (0, 0);
    for w in gaps.windows(2) {
        let growth = w[1] - w[0];
        if growth.abs() <= TIE_TOL {
            ties += 1;
        } else if (growth > 0.0) != (claim == Shape::Convex) {
            violations += 1;
        }
    }
    RangeVerdict {
        lo,
        hi,
        claim,
        zeros_in_range: inside.len(),
        compared: gaps.len().saturating_sub(1),
        ties,
        violations,
    }
}

pub fn convexity_report(n: usize, b: &ParamB) -> Result<ConvexityReport> {
    if n < 3 {
        return Err(invalid("n", n as f64, "convexity needs n >= 3"));
    }
    let z = zeros(FamilyParams::Crr(*b), n, 0)?.zeros;
    let (case, frak_m, ranges) = claims(n, b);
    let verdicts: Vec<RangeVerdict> = ranges
        .iter()
        .map(|&(lo, hi, claim)| judge(&z, lo, hi, claim))
        .collect();
    let unclassified = z
        .iter()
        .filter(|&&x| !ranges.iter().any(|&(lo, hi, _)| x > lo && x < hi))
        .count();
    Ok(ConvexityReport {
        n,
        b: *b,
        case,
        frak_m,
        verdicts,
        unclassified,
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
        let r = convexity_report(8, &pb(2.0, 0.0)).unwrap();
        assert_eq!(r.case, ConvexityCase::AboveOneSymmetric);
        assert!(r.holds());
        assert_eq!(r.verdicts[0].zeros_in_range, 4);
        assert_eq!(r.verdicts[0].compared, 2);

        let r = convexity_report(8, &pb(2.0, 1.0)).unwrap();
        assert_eq!(r.case, ConvexityCase::AboveOnePositive);
        assert!((r.frak_m.unwrap() - 5.0).abs() < 1e-15);
        assert!(r.holds());

        let r = convexity_report(8, &pb(1.0, 2.0)).unwrap();
        assert_eq!(r.case, ConvexityCase::UnitPositive);
        assert!(r.holds());
    }

    #[test]
    fn judge_detects_violations() {
        let z = [0.0, 1.0, 3.0, 4.0];
        let v = judge(&z, -1.0, 5.0, Shape::Convex);
        assert_eq!((v.compared, v.violations), (2, 1));
        let v = judge(&[0.0, 1.0, 2.0], -1.0, 5.0, Shape::Concave);
        assert_eq!((v.ties, v.violations), (1, 0));
    }

    #[test]
    fn no_claim_when_eta_zero_and_small_lambda() {
        let r = convexity_report(6, &pb(0.5, 0.0)).unwrap();
        assert_eq!(r.case, ConvexityCase::NoClaim);
        assert!(r.verdicts.is_empty());
        assert_eq!(r.unclassified, 6);
        assert!(convexity_report(2, &pb(2.0, 0.0)).is_err());
    }

    #[test]
    fn claims_hold_on_grid() {
        for l in [0.5, 1.0, 2.0, 5.0] {
            for e in [-3.0, 0.0, 1.0, 4.0] {
                for n in [6, 12, 24] {
                    let r = convexity_report(n, &pb(l, e)).unwrap();
                    assert!(r.holds(), "λ={l} η={e} n={n}: {:?}", r.verdicts);
                }
            }
        }
    }
}
