use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CrrError {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("no sign change on bracket [{lo}, {hi}] for zero {index} of degree {degree}")]
    BracketFailure {
        degree: usize,
        index: usize,
        lo: f64,
        hi: f64,
    },
    #[error("interlacing violated at degree {degree}, zero {index}")]
    InterlacingViolation { degree: usize, index: usize },
    #[error("found {found} sign changes for degree {degree} after {samples} samples")]
    IncompleteSampling {
        degree: usize,
        found: usize,
        samples: usize,
    },
    #[error("quadrature did not converge with {panels} panels (last {last:e}, previous {previous:e})")]
    NonConvergence {
        panels: usize,
        last: f64,
        previous: f64,
    },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("ill-conditioned fit: {0} usable points")]
    IllConditionedFit(usize),
    #[error("fixture line {line}: {reason}")]
    Fixture { line: usize, reason: String },
    #[error("grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, CrrError>;

pub(crate) fn invalid(name: &'static str, value: f64, reason: &'static str) -> CrrError {
    CrrError::InvalidParameter {
        name,
        value,
        reason,
    }
}
