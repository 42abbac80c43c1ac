//! Sensitivity sweeps, surplus-scale scenario comparisons, and cost-curve
//! sampling built on top of the solvers.

use crate::error::{Error, Result};
use crate::model::{self, ModelParameters};
use crate::segments::{find_segment, Segment};
use crate::solver::{solve_continuous, solve_environmental, solve_exact, SolveOutcome};

/// Model input varied by [`sensitivity_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParameter {
    /// Unit purchase cost (configuration key `c`).
    UnitCost,
    /// Demand rate (configuration key `D`).
    Demand,
    /// Surplus-storage time per order (configuration key `r`).
    SurplusTime,
    /// Surplus-storage emission rate (configuration key `l`).
    SurplusRate,
}

impl SweepParameter {
    /// Sweep order used by [`sensitivity_table`].
    pub const ALL: [SweepParameter; 4] = [
        SweepParameter::UnitCost,
        SweepParameter::Demand,
        SweepParameter::SurplusTime,
        SweepParameter::SurplusRate,
    ];

    /// The configuration key of the swept input.
    pub fn label(self) -> &'static str {
        match self {
            SweepParameter::UnitCost => "c",
            SweepParameter::Demand => "D",
            SweepParameter::SurplusTime => "r",
            SweepParameter::SurplusRate => "l",
        }
    }

    fn apply(self, p: &ModelParameters, factor: f64) -> ModelParameters {
        let mut scaled = *p;
        match self {
            SweepParameter::UnitCost => scaled.unit_cost *= factor,
            SweepParameter::Demand => scaled.demand *= factor,
            SweepParameter::SurplusTime => scaled.surplus_time_per_order *= factor,
            SweepParameter::SurplusRate => scaled.surplus_emission_rate *= factor,
        }
        scaled
    }
}

/// One row of the sensitivity sweep: optima after scaling one input by
/// `1 + delta_pct / 100`, compared against the unscaled optimum and against
/// the expanded-rate shortcut.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensitivityRow {
    /// Which input this row scales.
    pub parameter: SweepParameter,
    /// Relative change applied to the input, in percent.
    pub delta_pct: f64,
    /// Optimal lot under the exact rate after scaling.
    pub q_opt: f64,
    /// Change of `q_opt` against the unscaled optimum, in percent.
    pub dq_pct: f64,
    /// Lot shortfall of the expanded-rate solution,
    /// `(q_opt - q_app) / q_opt * 100`.
    pub approx_q_pct: f64,
    /// Optimal exact cost rate after scaling.
    pub tc_opt: f64,
    /// Change of `tc_opt` against the unscaled optimum, in percent.
    pub dtc_pct: f64,
    /// Cost understatement of the expanded-rate solution,
    /// `(tc_opt - ac_app) / tc_opt * 100` with `ac_app` the expanded rate
    /// at its own optimum.
    pub approx_c_pct: f64,
}

/// Sweeps unit cost, demand, surplus time, and surplus emission rate by the
/// given percentage deltas, one row per (parameter, delta) pair in
/// [`SweepParameter::ALL`] x `deltas` order.
///
/// A delta that produces an invalid model yields an error in that row
/// alone; the remaining rows are unaffected. The unscaled model must solve,
/// otherwise the whole table fails.
pub fn sensitivity_table(
    p: &ModelParameters,
    segments: &[Segment],
    deltas: &[f64],
) -> Result<Vec<Result<SensitivityRow>>> {
    let base = solve_exact(p, segments)?;
    let mut rows = Vec::with_capacity(SweepParameter::ALL.len() * deltas.len());
    for parameter in SweepParameter::ALL {
        for &delta_pct in deltas {
            let scaled = parameter.apply(p, 1.0 + delta_pct / 100.0);
            rows.push(sweep_row(&scaled, segments, &base, parameter, delta_pct));
        }
    }
    Ok(rows)
}

fn sweep_row(
    scaled: &ModelParameters,
    segments: &[Segment],
    base: &SolveOutcome,
    parameter: SweepParameter,
    delta_pct: f64,
) -> Result<SensitivityRow> {
    let exact = solve_exact(scaled, segments)?;
    let expanded = solve_continuous(scaled, segments)?;
    let q_opt = exact.optimum_lot;
    let tc_opt = exact.optimum_cost;
    Ok(SensitivityRow {
        parameter,
        delta_pct,
        q_opt,
        dq_pct: (q_opt - base.optimum_lot) / base.optimum_lot * 100.0,
        approx_q_pct: (q_opt - expanded.optimum_lot) / q_opt * 100.0,
        tc_opt,
        dtc_pct: (tc_opt - base.optimum_cost) / base.optimum_cost * 100.0,
        approx_c_pct: (tc_opt - expanded.optimum_cost) / tc_opt * 100.0,
    })
}

/// Optimum of one solver variant within a scenario row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioEntry {
    /// Optimal lot size.
    pub lot: f64,
    /// Cost rate at the optimum under the variant's own metric.
    pub cost: f64,
    /// True when the optimum sits on a segment endpoint.
    pub at_boundary: bool,
}

/// Optima of the exact, expanded, and environmental objectives for one
/// surplus-time setting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioRow {
    /// The surplus-storage time per order used for this row.
    pub surplus_time_per_order: f64,
    /// Exact-rate optimum.
    pub exact: ScenarioEntry,
    /// Expanded-rate optimum.
    pub approximate: ScenarioEntry,
    /// Environmental-rate optimum.
    pub environmental: ScenarioEntry,
}

fn entry(outcome: &SolveOutcome) -> ScenarioEntry {
    ScenarioEntry {
        lot: outcome.optimum_lot,
        cost: outcome.optimum_cost,
        at_boundary: outcome.optimum.at_boundary,
    }
}

/// Re-solves the model under each given surplus-storage time and reports
/// the exact, expanded, and environmental optima side by side.
pub fn scenario_report(
    p: &ModelParameters,
    segments: &[Segment],
    surplus_times: &[f64],
) -> Result<Vec<ScenarioRow>> {
    let mut rows = Vec::with_capacity(surplus_times.len());
    for &surplus_time_per_order in surplus_times {
        let mut scenario = *p;
        scenario.surplus_time_per_order = surplus_time_per_order;
        rows.push(ScenarioRow {
            surplus_time_per_order,
            exact: entry(&solve_exact(&scenario, segments)?),
            approximate: entry(&solve_continuous(&scenario, segments)?),
            environmental: entry(&solve_environmental(&scenario, segments)?),
        });
    }
    Ok(rows)
}

/// Which function [`sample_cost_curve`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// Exact total cost rate.
    Exact,
    /// Expanded total cost rate.
    Approximate,
    /// Environmental cost rate.
    Environmental,
    /// Emission quantity per time unit (unpriced).
    Emissions,
}

impl CurveKind {
    /// Lowercase label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            CurveKind::Exact => "exact",
            CurveKind::Approximate => "approximate",
            CurveKind::Environmental => "environmental",
            CurveKind::Emissions => "emissions",
        }
    }
}

/// One sampled point of a cost curve. `value` is absent where the function
/// is undefined or the lot infeasible; `segment` is the index of the
/// segment serving the lot, when any does.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    /// The sampled lot size.
    pub lot: f64,
    /// Segment whose capacity priced this point.
    pub segment: Option<usize>,
    /// Function value, when defined at `lot`.
    pub value: Option<f64>,
}

/// Samples one cost function over the given lots.
///
/// The capacity-dependent kinds (`Exact`, `Approximate`) price each lot
/// with the capacity of its serving segment and yield no value outside all
/// segments. A lot exactly on a segment's upper bound is a discontinuity
/// of those kinds: the sample reports two points there, the value within
/// the serving segment followed by the right-limit value under the next
/// segment's capacity. The `Environmental` kind is capacity-independent
/// but still requires the lot to be feasible; `Emissions` is defined for
/// every positive lot.
pub fn sample_cost_curve(
    p: &ModelParameters,
    segments: &[Segment],
    grid: &[f64],
    kind: CurveKind,
) -> Result<Vec<CurvePoint>> {
    p.validate()?;
    if segments.is_empty() {
        return Err(Error::NoSegments);
    }
    let mut points = Vec::with_capacity(grid.len());
    for &lot in grid {
        if !(lot.is_finite() && lot > 0.0) {
            points.push(CurvePoint {
                lot,
                segment: None,
                value: None,
            });
            continue;
        }
        let segment = find_segment(segments, lot);
        match kind {
            CurveKind::Exact | CurveKind::Approximate => {
                let value = segment
                    .map(|i| priced_rate(p, segments[i].capacity(), lot, kind));
                points.push(CurvePoint { lot, segment, value });
                // Right-limit companion point at an internal discontinuity.
                if let Some(i) = segment {
                    if lot == segments[i].upper && i + 1 < segments.len() {
                        points.push(CurvePoint {
                            lot,
                            segment: Some(i + 1),
                            value: Some(priced_rate(
                                p,
                                segments[i + 1].capacity(),
                                lot,
                                kind,
                            )),
                        });
                    }
                }
            }
            CurveKind::Environmental => {
                let value =
                    segment.map(|_| crate::solver::environmental_rate_unchecked(p, lot));
                points.push(CurvePoint { lot, segment, value });
            }
            CurveKind::Emissions => {
                points.push(CurvePoint {
                    lot,
                    segment,
                    value: Some(model::co2_rate(p, lot)?),
                });
            }
        }
    }
    Ok(points)
}

fn priced_rate(p: &ModelParameters, capacity: f64, lot: f64, kind: CurveKind) -> f64 {
    match kind {
        CurveKind::Exact => model::total_cost_exact_unchecked(p, capacity, lot),
        _ => model::total_cost_approx_unchecked(p, capacity, lot),
    }
}

/// A sampling grid spanning all segments: `points` uniform steps up to the
/// largest capacity, merged with every segment boundary, strictly
/// increasing.
pub fn default_curve_grid(segments: &[Segment], points: usize) -> Vec<f64> {
    let Some(last) = segments.last() else {
        return Vec::new();
    };
    let span = last.upper;
    let steps = points.max(2);
    let mut grid: Vec<f64> = (1..=steps)
        .map(|i| span * i as f64 / steps as f64)
        .collect();
    for segment in segments {
        if segment.lower > 0.0 {
            grid.push(segment.lower);
        }
        grid.push(segment.upper);
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}
