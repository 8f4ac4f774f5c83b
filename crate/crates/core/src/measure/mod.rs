//! The positive chain sequences behind the recurrence, the induced
//! Verblunsky coefficients on the unit circle, and the explicit weight of
//! the `k = 0` family with quadrature checks against it.

pub mod chain;
pub mod checks;
pub mod gamma;
pub mod quadrature;
pub mod verblunsky;
pub mod weight;

pub use chain::{chain_params, ChainParams};
pub use checks::{associated_integral_check, orthogonality_check};
pub use gamma::{ln_gamma_abs_sq, ln_gamma_real};
pub use quadrature::{integrate_theta, Angle};
pub use verblunsky::{verblunsky_seq, VerblunskySeq};
pub use weight::{integrate, weight_density, WeightK0};
