//! CSV rendering of solver and analysis results.
//!
//! All reports share one dialect: `,` field separator, `.` decimal
//! separator, a mandatory header row, `\n` line endings, and fixed column
//! orders, so identical inputs always produce byte-identical files. Costs
//! carry three decimals, lots and percentages four (the approximation-gap
//! percentage eight, it needs them); `--full-precision` switches every
//! numeric field to the shortest digit string that parses back to the same
//! value.

use anyhow::{anyhow, Context};
use seoq_core::{
    calibrate, closed_form_lot, default_curve_grid, exact_stationary_lot, integer_lot,
    sample_cost_curve, scenario_report, sensitivity_table, solve_continuous, solve_exact,
    solve_integer, total_cost_approx, total_cost_exact, ContainerSpec, CurveKind,
    ModelParameters, ScenarioEntry, Segment, SolveOutcome, SweepParameter,
};

/// Numeric field formatting; `full` switches to shortest-round-trip output.
#[derive(Debug, Clone, Copy)]
pub struct Fmt {
    /// Emit full-precision values instead of the fixed decimal widths.
    pub full: bool,
}

impl Fmt {
    fn fixed(&self, value: f64, decimals: usize) -> String {
        if self.full {
            format!("{value}")
        } else {
            format!("{value:.decimals$}")
        }
    }

    /// Cost-rate fields: three decimals.
    pub fn cost(&self, value: f64) -> String {
        self.fixed(value, 3)
    }

    /// Lot-size fields: four decimals.
    pub fn lot(&self, value: f64) -> String {
        self.fixed(value, 4)
    }

    /// Percentage fields: four decimals.
    pub fn pct(&self, value: f64) -> String {
        self.fixed(value, 4)
    }

    /// The approximation-gap percentage: eight decimals.
    pub fn pct_fine(&self, value: f64) -> String {
        self.fixed(value, 8)
    }
}

fn flag(value: bool) -> String {
    if value { "T" } else { "F" }.to_string()
}

fn push_row(out: &mut String, fields: &[String]) {
    out.push_str(&fields.join(","));
    out.push('\n');
}

/// Header cells for the per-container-type count columns (`n_300`, ...).
fn count_headers(containers: &[ContainerSpec]) -> Vec<String> {
    containers
        .iter()
        .map(|spec| format!("n_{}", spec.capacity))
        .collect()
}

fn summary_row(label: &str, pad: usize, lot: String, cost: String) -> Vec<String> {
    let mut fields = vec![label.to_string(), "optimum".to_string()];
    fields.extend(std::iter::repeat_n(String::new(), pad));
    fields.push(lot);
    fields.push(cost);
    fields
}

/// The continuous solve report: per segment and per cost variant, the
/// unconstrained stationary lot, the cost at it when it is interior, the
/// costs at the segment's discontinuity points, and the selected candidate;
/// one summary row per variant carries the global optimum.
pub fn solve_csv(
    p: &ModelParameters,
    segments: &[Segment],
    containers: &[ContainerSpec],
    fmt: &Fmt,
) -> anyhow::Result<String> {
    let mut out = String::new();
    let mut header = vec!["function".to_string(), "segment".to_string()];
    header.extend(count_headers(containers));
    header.extend(
        [
            "dp_lower",
            "dp_upper",
            "stationary_lot",
            "cost_at_stationary",
            "cost_at_lower",
            "cost_at_upper",
            "interior",
            "selected_lot",
            "selected_cost",
        ]
        .map(String::from),
    );
    push_row(&mut out, &header);

    let exact = solve_exact(p, segments)?;
    solve_block(
        &mut out,
        "exact",
        segments,
        containers,
        &exact,
        fmt,
        &|capacity| exact_stationary_lot(p, capacity),
        &|capacity, lot| total_cost_exact(p, capacity, lot),
    )?;
    let approx = solve_continuous(p, segments)?;
    solve_block(
        &mut out,
        "approximate",
        segments,
        containers,
        &approx,
        fmt,
        &|capacity| closed_form_lot(p, capacity),
        &|capacity, lot| total_cost_approx(p, capacity, lot),
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn solve_block(
    out: &mut String,
    label: &str,
    segments: &[Segment],
    containers: &[ContainerSpec],
    outcome: &SolveOutcome,
    fmt: &Fmt,
    stationary: &dyn Fn(f64) -> seoq_core::Result<f64>,
    cost_at: &dyn Fn(f64, f64) -> seoq_core::Result<f64>,
) -> anyhow::Result<()> {
    for (segment, candidate) in segments.iter().zip(&outcome.candidates) {
        let capacity = segment.capacity();
        let interior = !candidate.at_boundary;
        let mut fields = vec![label.to_string(), (segment.index + 1).to_string()];
        for &count in &segment.combination.counts {
            fields.push(count.to_string());
        }
        fields.push(fmt.lot(segment.lower));
        fields.push(fmt.lot(segment.upper));
        fields.push(fmt.lot(stationary(capacity)?));
        fields.push(if interior {
            fmt.cost(candidate.cost)
        } else {
            String::new()
        });
        fields.push(if segment.lower > 0.0 {
            fmt.cost(cost_at(capacity, segment.lower)?)
        } else {
            String::new()
        });
        fields.push(fmt.cost(cost_at(capacity, segment.upper)?));
        fields.push(flag(interior));
        fields.push(fmt.lot(candidate.lot));
        fields.push(fmt.cost(candidate.cost));
        push_row(out, &fields);
    }
    push_row(
        out,
        &summary_row(
            label,
            containers.len() + 7,
            fmt.lot(outcome.optimum_lot),
            fmt.cost(outcome.optimum_cost),
        ),
    );
    Ok(())
}

/// The whole-unit solve report: per segment, the break-even point of the
/// marginal analysis, the resulting integer lot (plus its partner when two
/// lots are co-optimal), the costs at the discontinuity points, and the
/// selected candidate, under both cost variants.
pub fn solve_int_csv(
    p: &ModelParameters,
    segments: &[Segment],
    containers: &[ContainerSpec],
    fmt: &Fmt,
) -> anyhow::Result<String> {
    let mut out = String::new();
    let mut header = vec!["function".to_string(), "segment".to_string()];
    header.extend(count_headers(containers));
    header.extend(
        [
            "dp_lower",
            "dp_upper",
            "break_even",
            "marginal_lot",
            "tie_lot",
            "cost_at_marginal",
            "cost_at_lower",
            "cost_at_upper",
            "interior",
            "selected_lot",
            "selected_cost",
        ]
        .map(String::from),
    );
    push_row(&mut out, &header);

    type CostAt<'a> = &'a dyn Fn(f64, f64) -> seoq_core::Result<f64>;
    let solution = solve_integer(p, segments)?;
    let exact_cost = |capacity: f64, lot: f64| total_cost_exact(p, capacity, lot);
    let approx_cost = |capacity: f64, lot: f64| total_cost_approx(p, capacity, lot);
    let blocks: [(&str, &SolveOutcome, CostAt); 2] = [
        ("exact", &solution.exact, &exact_cost),
        ("approximate", &solution.approximate, &approx_cost),
    ];
    for (label, outcome, cost_at) in blocks {
        let mut candidates = outcome.candidates.iter().peekable();
        for segment in segments {
            let candidate = match candidates.peek() {
                Some(c) if c.segment_index == segment.index => candidates.next().unwrap(),
                // Segments spanning no whole unit contribute no candidate.
                _ => continue,
            };
            let capacity = segment.capacity();
            let analysis = integer_lot(p, capacity)?;
            let interior = !candidate.at_boundary;
            let mut fields = vec![label.to_string(), (segment.index + 1).to_string()];
            for &count in &segment.combination.counts {
                fields.push(count.to_string());
            }
            fields.push(fmt.lot(segment.lower));
            fields.push(fmt.lot(segment.upper));
            fields.push(fmt.lot(analysis.marginal));
            fields.push(analysis.lot.to_string());
            fields.push(
                analysis
                    .co_optimal
                    .map(|lot| lot.to_string())
                    .unwrap_or_default(),
            );
            fields.push(if interior {
                fmt.cost(candidate.cost)
            } else {
                String::new()
            });
            fields.push(if segment.lower > 0.0 {
                fmt.cost(cost_at(capacity, segment.lower)?)
            } else {
                String::new()
            });
            fields.push(fmt.cost(cost_at(capacity, segment.upper)?));
            fields.push(flag(interior));
            fields.push(fmt.lot(candidate.lot));
            fields.push(fmt.cost(candidate.cost));
            push_row(&mut out, &fields);
        }
        push_row(
            &mut out,
            &summary_row(
                label,
                containers.len() + 9,
                fmt.lot(outcome.optimum_lot),
                fmt.cost(outcome.optimum_cost),
            ),
        );
    }
    Ok(out)
}

/// The sensitivity report: one row per (parameter, delta) pair comparing
/// the re-solved optimum against the baseline and against the
/// expanded-rate shortcut.
pub fn sensitivity_csv(
    p: &ModelParameters,
    segments: &[Segment],
    deltas: &[f64],
    fmt: &Fmt,
) -> anyhow::Result<String> {
    if deltas.is_empty() {
        return Err(anyhow!("--deltas needs at least one value"));
    }
    let mut out = String::new();
    push_row(
        &mut out,
        &[
            "parameter",
            "delta_pct",
            "q_opt",
            "dq_pct",
            "approx_q_pct",
            "tc_opt",
            "dtc_pct",
            "approx_c_pct",
        ]
        .map(String::from),
    );
    let rows = sensitivity_table(p, segments, deltas)?;
    for (i, row) in rows.into_iter().enumerate() {
        let parameter = SweepParameter::ALL[i / deltas.len()];
        let delta = deltas[i % deltas.len()];
        let row = row.with_context(|| {
            format!("sweep of `{}` at {delta:+}%", parameter.label())
        })?;
        push_row(
            &mut out,
            &[
                parameter.label().to_string(),
                fmt.pct(row.delta_pct),
                fmt.lot(row.q_opt),
                fmt.pct(row.dq_pct),
                fmt.pct(row.approx_q_pct),
                fmt.cost(row.tc_opt),
                fmt.pct(row.dtc_pct),
                fmt.pct_fine(row.approx_c_pct),
            ],
        );
    }
    Ok(out)
}

fn scenario_fields(fields: &mut Vec<String>, entry: &ScenarioEntry, fmt: &Fmt) {
    fields.push(fmt.lot(entry.lot));
    fields.push(fmt.cost(entry.cost));
    fields.push(flag(entry.at_boundary));
}

/// The scenario report: for each surplus-time setting, the optimal lot,
/// its cost, and a boundary flag under the exact, expanded, and
/// environmental objectives.
pub fn scenarios_csv(
    p: &ModelParameters,
    segments: &[Segment],
    surplus_times: &[f64],
    fmt: &Fmt,
) -> anyhow::Result<String> {
    if surplus_times.is_empty() {
        return Err(anyhow!("--r-list needs at least one value"));
    }
    let mut out = String::new();
    push_row(
        &mut out,
        &[
            "surplus_time",
            "exact_lot",
            "exact_cost",
            "exact_boundary",
            "approx_lot",
            "approx_cost",
            "approx_boundary",
            "env_lot",
            "env_cost",
            "env_boundary",
        ]
        .map(String::from),
    );
    for row in scenario_report(p, segments, surplus_times)? {
        // The sweep value is an input: echo it at full precision.
        let mut fields = vec![format!("{}", row.surplus_time_per_order)];
        scenario_fields(&mut fields, &row.exact, fmt);
        scenario_fields(&mut fields, &row.approximate, fmt);
        scenario_fields(&mut fields, &row.environmental, fmt);
        push_row(&mut out, &fields);
    }
    Ok(out)
}

/// The curve report: the exact, expanded, environmental, and emission
/// functions sampled over a shared grid, one block per function. Lots at an
/// internal discontinuity appear twice for the capacity-priced functions,
/// once per adjacent segment; fields are empty where a function is
/// undefined.
pub fn curve_csv(
    p: &ModelParameters,
    segments: &[Segment],
    grid_points: usize,
    fmt: &Fmt,
) -> anyhow::Result<String> {
    if grid_points < 2 {
        return Err(anyhow!("--grid needs at least 2 points"));
    }
    let grid = default_curve_grid(segments, grid_points);
    let mut out = String::new();
    push_row(
        &mut out,
        &["function", "segment", "lot", "value"].map(String::from),
    );
    for kind in [
        CurveKind::Exact,
        CurveKind::Approximate,
        CurveKind::Environmental,
        CurveKind::Emissions,
    ] {
        for point in sample_cost_curve(p, segments, &grid, kind)? {
            push_row(
                &mut out,
                &[
                    kind.label().to_string(),
                    point
                        .segment
                        .map(|i| (i + 1).to_string())
                        .unwrap_or_default(),
                    fmt.lot(point.lot),
                    point.value.map(|v| fmt.cost(v)).unwrap_or_default(),
                ],
            );
        }
    }
    Ok(out)
}

/// The calibration report: identifies the surplus-storage shape from the
/// configured inputs — the critical order count `1/r`, the demand rate,
/// and the emission slope `l` — and emits the recovered parameters at full
/// precision regardless of `--full-precision`.
pub fn calibrate_csv(p: &ModelParameters) -> anyhow::Result<String> {
    if p.surplus_time_per_order <= 0.0 {
        return Err(anyhow!(
            "calibrate requires `r` > 0 in the configuration (the critical order count is 1/r)"
        ));
    }
    let result = calibrate(
        1.0 / p.surplus_time_per_order,
        p.demand,
        p.surplus_emission_rate,
    )?;
    let mut out = String::new();
    push_row(
        &mut out,
        &[
            "critical_orders",
            "critical_lot",
            "r",
            "l",
            "closeness_lot",
        ]
        .map(String::from),
    );
    push_row(
        &mut out,
        &[
            format!("{}", result.critical_orders),
            format!("{}", result.critical_lot),
            format!("{}", result.r),
            format!("{}", result.l),
            format!("{}", result.closeness_lot),
        ],
    );
    Ok(out)
}
