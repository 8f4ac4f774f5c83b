//! Romanovski-type orthogonal polynomials on the real line: evaluation,
//! zeros, bounds, measure, and the analytic properties of their zeros.

pub mod analysis;
pub mod bounds;
pub mod classical;
pub mod crr;
pub mod eigen;
pub mod error;
pub mod fixtures;
pub mod grid;
pub(crate) mod dd;
pub(crate) mod kernel;
pub mod measure;
pub mod param;
pub mod scaled;
pub mod zeros;

pub use bounds::{extreme_bounds, ExtremeBounds};
pub use crr::{char_poly_det, coeff_c, coeff_d, eval_crr, gevp_matrices, EvalRecord, GevpPair};
pub use error::{CrrError, Result};
pub use fixtures::{FixtureRow, Fixtures, RowStatus, TableSweep};
pub use grid::parse_grid;
pub use param::ParamB;
pub use scaled::ScaledValue;
pub use zeros::{theta_transform, zeros, zeros_with, Family, FamilyParams, SolverOptions, ThetaZeroSet, ZeroSet};
