//! Circular Pythagorean fuzzy sets and values.
//!
//! A circular Pythagorean fuzzy value (C-PFV) is a Pythagorean fuzzy pair
//! `⟨μ, ν⟩` with `μ² + ν² ≤ 1` together with a radius `r ∈ [0, 1]` that
//! describes how far the evaluations it summarises spread around the center.
//!
//! The crate is organised bottom-up:
//!
//! * [`model`]: validated value types and the set operations on C-PFSs.
//! * [`generators`]: additive generators, the t-norms they induce and their
//!   duals under the Pythagorean complement `N(a) = √(1 − a²)`.
//! * [`algebra`]: sums, products, scalar multiples and powers of C-PFVs.
//! * [`aggregation`]: weighted arithmetic and geometric aggregation.
//! * [`fusion`]: turning several experts' PFVs into a single C-PFV.
//! * [`similarity`]: radius-aware cosine similarity.
//! * [`mcdm`]: the group decision pipeline and its operation-count estimate.

pub mod aggregation;
pub mod algebra;
mod error;
pub mod fusion;
pub mod generators;
pub mod mcdm;
pub mod model;
pub mod similarity;

pub use aggregation::{cpwa, cpwg, AggregationKind, Operator, WeightVector};
pub use error::{Error, Result};
pub use generators::{Generator, GeneratorPair, RadiusGenerator};
pub use mcdm::{DecisionProblem, Polarity, Ranking, Solution};
pub use model::{Cpfs, Cpfv, Pfv, RadiusMode};

/// Rounds `x` to `digits` decimals, sending exact halves away from zero.
///
/// Values are nudged by a few ulps before flooring so that decimals such as
/// `0.145`, which are stored slightly below their written value, still round up.
pub fn round_half_up(x: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    let scaled = x.abs() * scale;
    let rounded = (scaled + 0.5 + scaled * 4.0 * f64::EPSILON).floor() / scale;
    rounded.copysign(x)
}
