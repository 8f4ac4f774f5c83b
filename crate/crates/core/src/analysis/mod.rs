//! Qualitative properties of the zeros: the Sturm–Liouville normal form,
//! convexity, spacing bounds, density, and large-parameter asymptotics.

pub mod asymptotics;
pub mod convexity;
pub mod density;
pub mod sl;
pub mod spacing;

pub use asymptotics::{asymptotics_report, AsymptoticsReport, Branch};
pub use convexity::{convexity_report, ConvexityReport};
pub use density::{density_probe, DensityReport};
pub use sl::{critical_tan, sl_eval, sl_potential, sl_potential_slope};
pub use spacing::{spacing_bounds, spacing_check, SpacingBounds, SpacingCase, SpacingReport};
