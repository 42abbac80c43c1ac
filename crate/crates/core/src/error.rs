//! Error type shared by every module in this crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of model evaluation, segment construction, and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar model parameter violates its documented range.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter {
        /// Canonical parameter name (the config-file key).
        name: &'static str,
        /// Human-readable description of the violated constraint.
        reason: String,
    },

    /// A lot size must be strictly positive and finite.
    #[error("lot size must be positive and finite, got {0}")]
    NonPositiveLot(f64),

    /// A transport capacity must be strictly positive and finite.
    #[error("capacity must be positive and finite, got {0}")]
    NonPositiveCapacity(f64),

    /// No container combination can be formed (empty fleet description or
    /// every availability is zero).
    #[error("no container combination available: provide at least one container type with available >= 1")]
    EmptyFleet,

    /// Combinations handed to segment construction must be deduplicated and
    /// sorted by strictly increasing capacity.
    #[error("invalid combination list: {0}")]
    InvalidCombinations(String),

    /// A solver needs at least one segment to search.
    #[error("no segments to solve over")]
    NoSegments,

    /// The quadratic coefficient of the cost curve is zero, so no finite
    /// cost-minimizing lot exists (g*Ce + h + l*Ce must be positive).
    #[error("flat cost curve: g*Ce + h + l*Ce must be positive, got {0}")]
    ZeroEffectiveHoldingRate(f64),

    /// Integer mode found no segment containing a feasible integer lot.
    #[error("no feasible integer lot: every segment spans less than one whole unit")]
    NoFeasibleIntegerLot,

    /// Calibration received inconsistent or insufficient observations.
    #[error("calibration input error: {0}")]
    CalibrationInput(String),
}
