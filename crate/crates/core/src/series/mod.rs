//! Quiver input model and truncated series over `Q(y)`.

mod dimvec;
mod partition;
mod quiver;
mod structured;
mod truncated;

pub use dimvec::DimVector;
pub use partition::{build_partition_series, motivic_coefficient, partition_coefficient};
pub(crate) use quiver::next_permutation;
pub use quiver::{validate_and_decompose, QuiverMatrix};
pub use structured::{adams_cofactor, denominator_factors, denominator_poly, PochhammerSeries};
pub use truncated::{series_exp, series_log, series_mul, TruncatedSeries};
