//! Motivic Donaldson–Thomas invariants of symmetric quivers, computed in
//! exact arithmetic by factorizing the q-hypergeometric partition series.
//!
//! All values live in `Q(y)` with `y = -q^(1/2)`; there is no floating
//! point anywhere in the crate.

pub mod arith;
pub mod break_divisors;
pub mod coha;
pub mod dt;
mod error;
pub mod series;

pub use arith::{LaurentPoly, RationalFunction};
pub use dt::{extract_dt, DtEntry, DtTable};
pub use error::Error;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use series::{DimVector, QuiverMatrix, TruncatedSeries};
