//! Cost model of a single-product inventory system whose replenishment
//! produces carbon emissions, waste returns, and stepwise transport costs.
//!
//! All quantities are rates per unit time unless a doc comment says
//! "per cycle". A cycle is one replenishment of `lot` units; with demand `D`
//! the cycle length is `lot / D`.

use crate::error::{Error, Result};

/// Scalar inputs of the cost model.
///
/// Each field documents its config-file key (the canonical short name used
/// in error messages) and its unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParameters {
    /// Fixed cost of placing one order (key `A`, currency/order).
    pub ordering_cost: f64,
    /// Purchase cost of one unit (key `c`, currency/unit).
    pub unit_cost: f64,
    /// Holding cost of one unit for one unit of time (key `h`,
    /// currency/unit/time).
    pub holding_cost: f64,
    /// Fixed cost of one transport trip; every cycle pays two trips —
    /// delivery and waste collection (key `a`, currency/trip).
    pub trip_cost: f64,
    /// Freight cost per unit carried and per unit of distance (key `b`).
    pub freight_cost: f64,
    /// One-way transport distance (key `d`, distance units).
    pub distance: f64,
    /// Fraction of each lot returned by customers as waste
    /// (key `alpha`, in [0, 1]).
    pub return_fraction: f64,
    /// Demand rate (key `D`, units/time). Must be positive.
    pub demand: f64,
    /// Cost of transport emissions per unit of time in transit
    /// (key `beta`, currency/time).
    pub transport_emission_rate: f64,
    /// Vehicle speed (key `v`, distance/time). Must be positive.
    pub speed: f64,
    /// Disposal cost per unit of waste (key `gamma`, currency/unit).
    pub disposal_unit_cost: f64,
    /// Fixed disposal cost per cycle (key `gamma0`, currency/order).
    pub disposal_fixed_cost: f64,
    /// Fraction of each lot that deteriorates into waste while stored
    /// (key `theta`, in [0, 1]).
    pub deterioration_fraction: f64,
    /// Direct emissions released by placing one order
    /// (key `epsilon`, kgCO2/order).
    pub emissions_per_order: f64,
    /// Emissions of holding one unit in stock per unit of time
    /// (key `g`, kgCO2/unit/time).
    pub holding_emission_rate: f64,
    /// Price charged per kilogram of CO2 emitted (key `Ce`, currency/kgCO2).
    pub emission_price: f64,
    /// Cost per unit of reserved container capacity (key `Cp`,
    /// currency/capacity-unit).
    pub capacity_price: f64,
    /// Time constant of the frequency-driven emission surplus: the surplus
    /// term is minimized at lot `r * D` (key `r`, time/order).
    pub surplus_time_per_order: f64,
    /// Scale of the frequency-driven emission surplus (key `l`,
    /// kgCO2/unit/time).
    pub surplus_emission_rate: f64,
}

/// Per-cycle cost components of one replenishment of `lot` units, plus the
/// cycle length and the container saturation level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostBreakdown {
    /// Priced direct emissions per cycle (ordering + holding + surplus).
    pub c1: f64,
    /// Priced transport emissions per cycle (two trips of `distance`
    /// at `speed`).
    pub c2: f64,
    /// Waste disposal cost per cycle (fixed + per returned/deteriorated
    /// unit).
    pub c3: f64,
    /// Container cost per cycle (price of the reserved capacity).
    pub c4: f64,
    /// Ordering, purchase, and holding cost per cycle.
    pub c5: f64,
    /// Transport cost per cycle (two trips plus freight, including the
    /// returned fraction).
    pub c6: f64,
    /// Time between replenishments, `lot / demand`.
    pub cycle_length: f64,
    /// Fraction of the reserved capacity filled by the lot, in (0, 1] when
    /// the lot lies within its segment.
    pub saturation: f64,
}

impl CostBreakdown {
    /// Sum of the six per-cycle cost components.
    pub fn total(&self) -> f64 {
        self.c1 + self.c2 + self.c3 + self.c4 + self.c5 + self.c6
    }
}

/// Coefficients of the closed-form total-cost rate
/// `k_prime * D / lot + h_prime * lot / 2 + w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedCoefficients {
    /// Effective fixed cost per order (currency/order).
    pub k_prime: f64,
    /// Effective holding cost per unit per time (currency/unit/time).
    pub h_prime: f64,
    /// Lot-independent cost rate (currency/time).
    pub w: f64,
}

impl ModelParameters {
    /// Checks every documented parameter range, naming the offending
    /// parameter by its config key.
    pub fn validate(&self) -> Result<()> {
        fn positive(name: &'static str, value: f64) -> Result<()> {
            if value.is_finite() && value > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    reason: format!("must be positive and finite, got {value}"),
                })
            }
        }
        fn nonnegative(name: &'static str, value: f64) -> Result<()> {
            if value.is_finite() && value >= 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    reason: format!("must be nonnegative and finite, got {value}"),
                })
            }
        }
        fn fraction(name: &'static str, value: f64) -> Result<()> {
            if value.is_finite() && (0.0..=1.0).contains(&value) {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    reason: format!("must lie in [0, 1], got {value}"),
                })
            }
        }

        positive("D", self.demand)?;
        positive("v", self.speed)?;
        nonnegative("A", self.ordering_cost)?;
        nonnegative("c", self.unit_cost)?;
        nonnegative("h", self.holding_cost)?;
        nonnegative("a", self.trip_cost)?;
        nonnegative("b", self.freight_cost)?;
        nonnegative("d", self.distance)?;
        nonnegative("beta", self.transport_emission_rate)?;
        nonnegative("gamma", self.disposal_unit_cost)?;
        nonnegative("gamma0", self.disposal_fixed_cost)?;
        nonnegative("epsilon", self.emissions_per_order)?;
        nonnegative("g", self.holding_emission_rate)?;
        nonnegative("Ce", self.emission_price)?;
        nonnegative("Cp", self.capacity_price)?;
        nonnegative("r", self.surplus_time_per_order)?;
        nonnegative("l", self.surplus_emission_rate)?;
        fraction("alpha", self.return_fraction)?;
        fraction("theta", self.deterioration_fraction)?;

        let curvature = self.effective_holding_rate();
        if curvature <= 0.0 {
            return Err(Error::ZeroEffectiveHoldingRate(curvature));
        }
        Ok(())
    }

    /// The quadratic coefficient `g*Ce + h + l*Ce` of the cost rate; it must
    /// be positive for a finite cost-minimizing lot to exist.
    pub fn effective_holding_rate(&self) -> f64 {
        self.holding_emission_rate * self.emission_price
            + self.holding_cost
            + self.surplus_emission_rate * self.emission_price
    }
}

fn ensure_lot(lot: f64) -> Result<()> {
    if lot.is_finite() && lot > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveLot(lot))
    }
}

fn ensure_capacity(capacity: f64) -> Result<()> {
    if capacity.is_finite() && capacity > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveCapacity(capacity))
    }
}

/// The frequency-driven surplus emission rate `l * (lot/2) * exp(r*D/lot)`,
/// without range checks (callers have validated `lot`).
#[inline]
pub(crate) fn surplus_rate_unchecked(p: &ModelParameters, lot: f64) -> f64 {
    if p.surplus_emission_rate == 0.0 {
        return 0.0;
    }
    p.surplus_emission_rate * (lot / 2.0) * (p.surplus_time_per_order * p.demand / lot).exp()
}

/// Exact surplus emissions of one cycle,
/// `l * (lot^2 / 2D) * exp(r*D/lot)`.
#[inline]
fn surplus_per_cycle_exact(p: &ModelParameters, lot: f64) -> f64 {
    if p.surplus_emission_rate == 0.0 {
        return 0.0;
    }
    p.surplus_emission_rate
        * (lot * lot / (2.0 * p.demand))
        * (p.surplus_time_per_order * p.demand / lot).exp()
}

/// Second-order expansion of the per-cycle surplus emissions around large
/// lots: `(l / 2D) * (lot^2 + r*D*lot + (r*D)^2 / 2)`.
#[inline]
fn surplus_per_cycle_expanded(p: &ModelParameters, lot: f64) -> f64 {
    if p.surplus_emission_rate == 0.0 {
        return 0.0;
    }
    let rd = p.surplus_time_per_order * p.demand;
    (p.surplus_emission_rate / (2.0 * p.demand)) * (lot * lot + rd * lot + rd * rd / 2.0)
}

/// Carbon emission rate (kgCO2/time) of running the system at lot size
/// `lot`: ordering emissions, holding emissions, and the frequency-driven
/// surplus that blows up when cycles become too short.
pub fn co2_rate(p: &ModelParameters, lot: f64) -> Result<f64> {
    ensure_lot(lot)?;
    Ok(p.emissions_per_order * p.demand / lot
        + p.holding_emission_rate * lot / 2.0
        + surplus_rate_unchecked(p, lot))
}

/// Carbon emissions of one full replenishment cycle (kgCO2/cycle); equals
/// `co2_rate * lot / demand` up to floating-point rounding.
pub fn co2_per_cycle(p: &ModelParameters, lot: f64) -> Result<f64> {
    ensure_lot(lot)?;
    let lot_sq_over_2d = lot * lot / (2.0 * p.demand);
    Ok(p.emissions_per_order
        + p.holding_emission_rate * lot_sq_over_2d
        + surplus_per_cycle_exact(p, lot))
}

/// The six per-cycle components with the surplus emissions of one cycle
/// supplied by the caller (exact or expanded).
fn cycle_costs_with_surplus(
    p: &ModelParameters,
    capacity: f64,
    lot: f64,
    surplus_per_cycle: f64,
) -> CostBreakdown {
    let lot_sq_over_2d = lot * lot / (2.0 * p.demand);
    let co2_cycle = p.emissions_per_order
        + p.holding_emission_rate * lot_sq_over_2d
        + surplus_per_cycle;
    CostBreakdown {
        c1: co2_cycle * p.emission_price,
        c2: 2.0 * p.transport_emission_rate * p.distance / p.speed,
        c3: p.disposal_fixed_cost
            + p.disposal_unit_cost
                * lot
                * (p.deterioration_fraction + p.return_fraction),
        c4: p.capacity_price * capacity,
        c5: p.ordering_cost + p.unit_cost * lot + p.holding_cost * lot_sq_over_2d,
        c6: 2.0 * p.trip_cost
            + p.freight_cost * p.distance * lot * (1.0 + p.return_fraction),
        cycle_length: lot / p.demand,
        saturation: lot / capacity,
    }
}

fn cycle_costs_unchecked(p: &ModelParameters, capacity: f64, lot: f64) -> CostBreakdown {
    cycle_costs_with_surplus(p, capacity, lot, surplus_per_cycle_exact(p, lot))
}

/// Per-cycle cost components of serving demand with lots of `lot` units
/// carried by a container combination of total `capacity`.
pub fn cycle_costs(p: &ModelParameters, capacity: f64, lot: f64) -> Result<CostBreakdown> {
    ensure_lot(lot)?;
    ensure_capacity(capacity)?;
    Ok(cycle_costs_unchecked(p, capacity, lot))
}

#[inline]
pub(crate) fn total_cost_exact_unchecked(p: &ModelParameters, capacity: f64, lot: f64) -> f64 {
    (p.demand / lot) * cycle_costs_unchecked(p, capacity, lot).total()
}

/// Total cost rate (currency/time): the six per-cycle components divided by
/// the cycle length, with the surplus emission term evaluated exactly.
pub fn total_cost_exact(p: &ModelParameters, capacity: f64, lot: f64) -> Result<f64> {
    ensure_lot(lot)?;
    ensure_capacity(capacity)?;
    Ok(total_cost_exact_unchecked(p, capacity, lot))
}

#[inline]
pub(crate) fn total_cost_approx_unchecked(p: &ModelParameters, capacity: f64, lot: f64) -> f64 {
    (p.demand / lot)
        * cycle_costs_with_surplus(p, capacity, lot, surplus_per_cycle_expanded(p, lot)).total()
}

/// Total cost rate with the exponential surplus term replaced by its
/// second-order expansion; algebraically equal to
/// `k_prime * D / lot + h_prime * lot / 2 + w` (see
/// [`derived_coefficients`]). With `l = 0` it equals [`total_cost_exact`]
/// bit for bit.
pub fn total_cost_approx(p: &ModelParameters, capacity: f64, lot: f64) -> Result<f64> {
    ensure_lot(lot)?;
    ensure_capacity(capacity)?;
    Ok(total_cost_approx_unchecked(p, capacity, lot))
}

/// Derivative of [`total_cost_approx`] with respect to the lot size,
/// written out term by term.
pub fn total_cost_approx_derivative(
    p: &ModelParameters,
    capacity: f64,
    lot: f64,
) -> Result<f64> {
    ensure_lot(lot)?;
    ensure_capacity(capacity)?;
    let d = p.demand;
    let inv_sq = 1.0 / (lot * lot);
    let rd = p.surplus_time_per_order * d;
    Ok(
        -p.emissions_per_order * d * p.emission_price * inv_sq
            + p.holding_emission_rate * p.emission_price / 2.0
            + p.surplus_emission_rate * p.emission_price / 2.0
            - p.surplus_emission_rate * p.emission_price * rd * rd / 4.0 * inv_sq
            - 2.0 * p.transport_emission_rate * p.distance * d / p.speed * inv_sq
            - p.disposal_fixed_cost * d * inv_sq
            - p.capacity_price * capacity * d * inv_sq
            - p.ordering_cost * d * inv_sq
            + p.holding_cost / 2.0
            - 2.0 * p.trip_cost * d * inv_sq,
    )
}

/// Derivative of [`total_cost_exact`] with respect to the lot size.
pub fn total_cost_exact_derivative(
    p: &ModelParameters,
    capacity: f64,
    lot: f64,
) -> Result<f64> {
    ensure_lot(lot)?;
    ensure_capacity(capacity)?;
    Ok(total_cost_exact_derivative_unchecked(p, capacity, lot))
}

#[inline]
pub(crate) fn total_cost_exact_derivative_unchecked(
    p: &ModelParameters,
    capacity: f64,
    lot: f64,
) -> f64 {
    let d = p.demand;
    let fixed_per_cycle = p.emissions_per_order * p.emission_price
        + 2.0 * p.transport_emission_rate * p.distance / p.speed
        + p.disposal_fixed_cost
        + p.capacity_price * capacity
        + p.ordering_cost
        + 2.0 * p.trip_cost;
    let x = p.surplus_time_per_order * d / lot;
    -fixed_per_cycle * d / (lot * lot)
        + (p.holding_emission_rate * p.emission_price + p.holding_cost) / 2.0
        + (p.surplus_emission_rate * p.emission_price / 2.0) * x.exp() * (1.0 - x)
}

/// Coefficients `(k_prime, h_prime, w)` such that the expanded total cost
/// rate equals `k_prime * D / lot + h_prime * lot / 2 + w` identically.
pub fn derived_coefficients(p: &ModelParameters, capacity: f64) -> Result<DerivedCoefficients> {
    ensure_capacity(capacity)?;
    let d = p.demand;
    let rd = p.surplus_time_per_order * d;
    Ok(DerivedCoefficients {
        k_prime: p.emissions_per_order * p.emission_price
            + p.surplus_emission_rate * p.surplus_time_per_order * rd * p.emission_price / 4.0
            + 2.0 * p.transport_emission_rate * p.distance / p.speed
            + p.disposal_fixed_cost
            + p.capacity_price * capacity
            + p.ordering_cost
            + 2.0 * p.trip_cost,
        h_prime: p.effective_holding_rate(),
        w: (p.surplus_emission_rate / 2.0) * rd * p.emission_price
            + p.disposal_unit_cost * (p.deterioration_fraction + p.return_fraction) * d
            + p.unit_cost * d
            + p.freight_cost * p.distance * ((1.0 + p.return_fraction) * d),
    })
}
