//! Sustainable lot-size optimization.
//!
//! This crate models a single-product inventory system whose total cost
//! rate combines the classical ordering/purchase/holding trade-off with
//! priced emissions (ordering, storage, and surplus storage of unsold
//! stock), transport emissions, waste disposal, and a container-based
//! transportation cost that jumps whenever the lot needs one more
//! container. The jumps split the lot axis into capacity segments; within
//! each segment every cost variant is strictly convex, so optimization
//! reduces to comparing one candidate per segment.
//!
//! The pieces:
//!
//! * [`ModelParameters`] and the cost functions ([`total_cost_exact`],
//!   [`total_cost_approx`], [`cycle_costs`], [`co2_rate`]) — the model
//!   itself.
//! * [`ContainerSpec`], [`enumerate_combinations`], [`build_segments`] —
//!   the capacity segments induced by a container fleet.
//! * [`solve_exact`], [`solve_continuous`], [`solve_integer`],
//!   [`solve_environmental`] — optimal lots under the exact rate, its
//!   closed-form expansion, whole-unit lots, and the environmental-only
//!   objective.
//! * [`sensitivity_table`], [`scenario_report`], [`sample_cost_curve`] —
//!   reporting utilities.
//! * [`calibrate`] and friends — recovering the surplus-storage shape
//!   parameters from observable behavior.
//!
//! # Example
//!
//! ```
//! use seoq_core::{build_segments, enumerate_combinations, solve_exact,
//!                 ContainerSpec, ModelParameters};
//!
//! let params = ModelParameters {
//!     ordering_cost: 1000.0,
//!     unit_cost: 25.0,
//!     holding_cost: 8.0,
//!     trip_cost: 80.0,
//!     freight_cost: 4.0,
//!     distance: 3000.0,
//!     return_fraction: 0.1,
//!     demand: 5000.0,
//!     transport_emission_rate: 30.0,
//!     speed: 50.0,
//!     disposal_unit_cost: 5.0,
//!     disposal_fixed_cost: 20.0,
//!     deterioration_fraction: 0.1,
//!     emissions_per_order: 200.0,
//!     holding_emission_rate: 3.0,
//!     emission_price: 10.0,
//!     capacity_price: 2.0,
//!     surplus_time_per_order: 0.004,
//!     surplus_emission_rate: 30.0,
//! };
//! let fleet = [
//!     ContainerSpec { capacity: 300.0, available: 2 },
//!     ContainerSpec { capacity: 600.0, available: 2 },
//! ];
//! let segments = build_segments(&enumerate_combinations(&fleet)?)?;
//! let solution = solve_exact(&params, &segments)?;
//! assert!((solution.optimum_lot - 486.08).abs() < 0.01);
//! # Ok::<(), seoq_core::Error>(())
//! ```

mod analysis;
mod calibration;
mod error;
mod model;
mod segments;
mod solver;

pub use analysis::{
    default_curve_grid, sample_cost_curve, scenario_report, sensitivity_table, CurveKind,
    CurvePoint, ScenarioEntry, ScenarioRow, SensitivityRow, SweepParameter,
};
pub use calibration::{
    asymptote_slope, calibrate, component_emissions, emission_residuals,
    estimate_emission_slope, CalibrationResult,
};
pub use error::{Error, Result};
pub use model::{
    co2_per_cycle, co2_rate, cycle_costs, derived_coefficients, total_cost_approx,
    total_cost_approx_derivative, total_cost_exact, total_cost_exact_derivative,
    CostBreakdown, DerivedCoefficients, ModelParameters,
};
pub use segments::{
    build_segments, enumerate_combinations, find_segment, Combination, ContainerSpec, Segment,
};
pub use solver::{
    closed_form_lot, environmental_rate, exact_segment_minimum, exact_stationary_lot,
    integer_lot, solve_continuous, solve_environmental, solve_exact, solve_integer,
    CostFunction, IntegerLot, IntegerSolution, SegmentCandidate, SolveOutcome, LOT_TOLERANCE,
};
