//! Lot-size optimization over the discontinuous cost landscape.
//!
//! Within one segment every cost variant is strictly convex in the lot, so
//! each segment contributes exactly one candidate: the interior stationary
//! point when it lies inside the segment, otherwise the cheaper segment
//! endpoint. The global optimum is the best candidate across segments.
//!
//! Four variants share that skeleton: the exact cost rate (minimized
//! numerically), its closed-form expansion (minimized algebraically), the
//! integer-lot problem (solved by marginal analysis), and the
//! environmental-only rate.

use crate::error::{Error, Result};
use crate::model::{
    self, derived_coefficients, surplus_rate_unchecked, ModelParameters,
};
use crate::segments::Segment;

/// Absolute lot-size tolerance of the numerical minimizer.
pub const LOT_TOLERANCE: f64 = 1e-6;

/// Which cost rate a candidate's `cost` field reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostFunction {
    /// The total cost rate with the exact exponential surplus term.
    Exact,
    /// The total cost rate with the expanded surplus term.
    Approximate,
    /// The environmental-only cost rate (emission, transport-emission, and
    /// waste-disposal components).
    Environmental,
}

impl CostFunction {
    /// Lowercase label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            CostFunction::Exact => "exact",
            CostFunction::Approximate => "approximate",
            CostFunction::Environmental => "environmental",
        }
    }
}

/// The best lot of one segment.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentCandidate {
    /// Index of the segment this candidate belongs to.
    pub segment_index: usize,
    /// Candidate lot size; interior stationary point or a segment endpoint.
    pub lot: f64,
    /// Cost rate at `lot` under `cost_function_used`, evaluated with this
    /// segment's capacity.
    pub cost: f64,
    /// True when the candidate sits on a segment endpoint rather than at an
    /// interior stationary point.
    pub at_boundary: bool,
    /// The cost rate reported in `cost`.
    pub cost_function_used: CostFunction,
}

/// Result of one solver run across all segments.
///
/// `optimum_cost` equals the optimum candidate's reported `cost`. For every
/// variant except [`solve_continuous`] the cross-segment comparison uses
/// that same reported cost, so `optimum_cost` is the minimum over the
/// candidates' costs. [`solve_continuous`] screens its candidates with the
/// exact cost rate (see its documentation); `optimum_selection_cost` always
/// records the metric value that won the comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    /// One candidate per searched segment, ordered by segment index.
    pub candidates: Vec<SegmentCandidate>,
    /// The winning candidate.
    pub optimum: SegmentCandidate,
    /// The winning lot size.
    pub optimum_lot: f64,
    /// The winning candidate's reported cost.
    pub optimum_cost: f64,
    /// Value of the cross-segment selection metric at the optimum.
    pub optimum_selection_cost: f64,
}

/// Integer-lot and exact+approximate outcome pair of [`solve_integer`].
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerSolution {
    /// Candidates and optimum selected and costed with the exact rate.
    pub exact: SolveOutcome,
    /// Candidates and optimum selected and costed with the expanded rate.
    pub approximate: SolveOutcome,
}

/// Result of the marginal analysis for one capacity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegerLot {
    /// The continuous break-even point `x = -0.5 + sqrt(0.25 + 2*K'*D/h')`.
    pub marginal: f64,
    /// The optimal integer lot (the smaller one when two are co-optimal).
    pub lot: u64,
    /// The second co-optimal lot when the break-even point is an integer.
    pub co_optimal: Option<u64>,
}

/// Locates the positive root of a strictly increasing function by
/// bisection, bracketing outward from `guess` first.
///
/// This pins down stationary points far more precisely than comparing cost
/// values would: near the minimum the cost is flat, so at double precision
/// its evaluation noise hides the true ordering within a window of about
/// `sqrt(eps) * lot`, while the derivative crosses zero with a healthy
/// slope and bisects cleanly.
fn increasing_root<F: Fn(f64) -> f64>(df: &F, guess: f64) -> f64 {
    let seed = if guess.is_finite() && guess > 0.0 {
        guess
    } else {
        1.0
    };
    let mut lo = seed;
    let mut hi = seed;
    let mut steps = 0;
    while df(lo) > 0.0 && lo > 1e-300 && steps < 600 {
        lo /= 4.0;
        steps += 1;
    }
    steps = 0;
    while df(hi) < 0.0 && hi < 1e300 && steps < 600 {
        hi *= 4.0;
        steps += 1;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-13 * mid {
            return mid;
        }
        let value = df(mid);
        if value < 0.0 {
            lo = mid;
        } else if value > 0.0 {
            hi = mid;
        } else {
            return mid;
        }
    }
    0.5 * (lo + hi)
}

/// The unique stationary point of the expanded total cost rate,
/// `sqrt(2 * D * k_prime / h_prime)`.
pub fn closed_form_lot(p: &ModelParameters, capacity: f64) -> Result<f64> {
    let dc = derived_coefficients(p, capacity)?;
    if dc.h_prime.is_nan() || dc.h_prime <= 0.0 {
        return Err(Error::ZeroEffectiveHoldingRate(dc.h_prime));
    }
    Ok((2.0 * p.demand * dc.k_prime / dc.h_prime).sqrt())
}

/// The unconstrained minimizer of the exact total cost rate for one
/// capacity: the root of its derivative, located numerically well within
/// [`LOT_TOLERANCE`].
pub fn exact_stationary_lot(p: &ModelParameters, capacity: f64) -> Result<f64> {
    let guess = closed_form_lot(p, capacity)?;
    let df = |lot: f64| model::total_cost_exact_derivative_unchecked(p, capacity, lot);
    Ok(increasing_root(&df, guess))
}

/// Builds the segment candidate from an unconstrained stationary lot:
/// interior when the stationary point falls inside the segment, otherwise
/// the cheaper endpoint under `eval` (ties prefer the lower endpoint; the
/// first segment has no usable lower endpoint).
fn pick_candidate<F: Fn(f64) -> f64>(
    segment: &Segment,
    stationary: f64,
    eval: &F,
    which: CostFunction,
) -> SegmentCandidate {
    if segment.contains(stationary) {
        return SegmentCandidate {
            segment_index: segment.index,
            lot: stationary,
            cost: eval(stationary),
            at_boundary: false,
            cost_function_used: which,
        };
    }
    let (lot, cost) = cheaper_endpoint(segment, eval);
    SegmentCandidate {
        segment_index: segment.index,
        lot,
        cost,
        at_boundary: true,
        cost_function_used: which,
    }
}

fn cheaper_endpoint<F: Fn(f64) -> f64>(segment: &Segment, eval: &F) -> (f64, f64) {
    let upper_cost = eval(segment.upper);
    if segment.lower > 0.0 {
        let lower_cost = eval(segment.lower);
        if lower_cost <= upper_cost {
            return (segment.lower, lower_cost);
        }
    }
    (segment.upper, upper_cost)
}

fn ensure_segments(segments: &[Segment]) -> Result<()> {
    if segments.is_empty() {
        Err(Error::NoSegments)
    } else {
        Ok(())
    }
}

/// Assembles the outcome from per-segment candidates and the parallel
/// selection-metric values; the lowest selection value wins, earlier
/// segments breaking ties.
fn assemble(candidates: Vec<SegmentCandidate>, selection: Vec<f64>) -> SolveOutcome {
    debug_assert_eq!(candidates.len(), selection.len());
    let mut best = 0;
    for i in 1..selection.len() {
        if selection[i] < selection[best] {
            best = i;
        }
    }
    let optimum = candidates[best].clone();
    SolveOutcome {
        optimum_lot: optimum.lot,
        optimum_cost: optimum.cost,
        optimum_selection_cost: selection[best],
        optimum,
        candidates,
    }
}

/// The candidate of one segment under the exact cost rate: the numerical
/// minimizer when interior, otherwise the cheaper endpoint.
pub fn exact_segment_minimum(p: &ModelParameters, segment: &Segment) -> Result<SegmentCandidate> {
    let capacity = segment.capacity();
    let stationary = exact_stationary_lot(p, capacity)?;
    let eval = |lot: f64| model::total_cost_exact_unchecked(p, capacity, lot);
    Ok(pick_candidate(segment, stationary, &eval, CostFunction::Exact))
}

/// Minimizes the exact total cost rate across all segments.
pub fn solve_exact(p: &ModelParameters, segments: &[Segment]) -> Result<SolveOutcome> {
    p.validate()?;
    ensure_segments(segments)?;
    let mut candidates = Vec::with_capacity(segments.len());
    for segment in segments {
        candidates.push(exact_segment_minimum(p, segment)?);
    }
    let selection = candidates.iter().map(|c| c.cost).collect();
    Ok(assemble(candidates, selection))
}

/// Minimizes the expanded (closed-form) total cost rate across all
/// segments.
///
/// Per segment, the candidate is the closed-form lot when it lies inside
/// the segment, otherwise the endpoint that is cheaper under the expanded
/// rate; candidate costs report the expanded rate. The cross-segment
/// comparison, however, evaluates each candidate under the **exact** rate:
/// the closed-form machinery only locates per-segment candidates, and
/// screening them with the true cost keeps the selected lot meaningful even
/// where the expansion error differs between segments. With a small
/// expansion error the two metrics order the candidates identically.
pub fn solve_continuous(p: &ModelParameters, segments: &[Segment]) -> Result<SolveOutcome> {
    p.validate()?;
    ensure_segments(segments)?;
    let mut candidates = Vec::with_capacity(segments.len());
    let mut selection = Vec::with_capacity(segments.len());
    for segment in segments {
        let capacity = segment.capacity();
        let stationary = closed_form_lot(p, capacity)?;
        let eval = |lot: f64| model::total_cost_approx_unchecked(p, capacity, lot);
        let candidate = pick_candidate(segment, stationary, &eval, CostFunction::Approximate);
        selection.push(model::total_cost_exact_unchecked(p, capacity, candidate.lot));
        candidates.push(candidate);
    }
    Ok(assemble(candidates, selection))
}

/// The environmental cost rate: priced emissions, transport emissions, and
/// waste disposal, ignoring ordering, purchase, holding, container, and
/// transport expenses.
pub fn environmental_rate(p: &ModelParameters, lot: f64) -> Result<f64> {
    if !(lot.is_finite() && lot > 0.0) {
        return Err(Error::NonPositiveLot(lot));
    }
    Ok(environmental_rate_unchecked(p, lot))
}

#[inline]
pub(crate) fn environmental_rate_unchecked(p: &ModelParameters, lot: f64) -> f64 {
    let fixed_per_cycle = p.emissions_per_order * p.emission_price
        + 2.0 * p.transport_emission_rate * p.distance / p.speed
        + p.disposal_fixed_cost;
    fixed_per_cycle * p.demand / lot
        + p.holding_emission_rate * p.emission_price * lot / 2.0
        + p.emission_price * surplus_rate_unchecked(p, lot)
        + p.disposal_unit_cost
            * (p.deterioration_fraction + p.return_fraction)
            * p.demand
}

/// Derivative of the environmental cost rate with respect to the lot size.
fn environmental_derivative_unchecked(p: &ModelParameters, lot: f64) -> f64 {
    let d = p.demand;
    let fixed_per_cycle = p.emissions_per_order * p.emission_price
        + 2.0 * p.transport_emission_rate * p.distance / p.speed
        + p.disposal_fixed_cost;
    let x = p.surplus_time_per_order * d / lot;
    -fixed_per_cycle * d / (lot * lot)
        + p.holding_emission_rate * p.emission_price / 2.0
        + (p.surplus_emission_rate * p.emission_price / 2.0) * x.exp() * (1.0 - x)
}

/// Minimizes the environmental cost rate across all segments. The rate does
/// not depend on capacity, so its stationary point is shared by every
/// segment; the segment structure still decides which lots are feasible.
pub fn solve_environmental(p: &ModelParameters, segments: &[Segment]) -> Result<SolveOutcome> {
    p.validate()?;
    ensure_segments(segments)?;
    let eval = |lot: f64| environmental_rate_unchecked(p, lot);
    let curvature = (p.holding_emission_rate + p.surplus_emission_rate) * p.emission_price;
    let stationary = if curvature > 0.0 {
        let fixed_per_cycle = p.emissions_per_order * p.emission_price
            + 2.0 * p.transport_emission_rate * p.distance / p.speed
            + p.disposal_fixed_cost;
        let guess = (2.0 * p.demand * fixed_per_cycle / curvature).sqrt();
        let df = |lot: f64| environmental_derivative_unchecked(p, lot);
        increasing_root(&df, guess)
    } else {
        // Strictly decreasing rate: no interior stationary point, every
        // segment resolves to its cheaper endpoint.
        f64::INFINITY
    };
    let mut candidates = Vec::with_capacity(segments.len());
    for segment in segments {
        candidates.push(pick_candidate(
            segment,
            stationary,
            &eval,
            CostFunction::Environmental,
        ));
    }
    let selection = candidates.iter().map(|c| c.cost).collect();
    Ok(assemble(candidates, selection))
}

/// Marginal analysis for one capacity: the integer lot(s) minimizing
/// `k_prime * D / q + h_prime * q / 2 + w` over positive integers.
///
/// The cost of `q + 1` first matches the cost of `q` at the break-even
/// point `x` solving `x * (x + 1) = 2 * K' * D / h'`. A non-integer `x`
/// makes `ceil(x)` the unique minimizer; an integer `x` makes `x` and
/// `x + 1` co-optimal.
pub fn integer_lot(p: &ModelParameters, capacity: f64) -> Result<IntegerLot> {
    let dc = derived_coefficients(p, capacity)?;
    if dc.h_prime.is_nan() || dc.h_prime <= 0.0 {
        return Err(Error::ZeroEffectiveHoldingRate(dc.h_prime));
    }
    let m = 2.0 * dc.k_prime * p.demand / dc.h_prime;
    let x = -0.5 + (0.25 + m).sqrt();
    let rounded = x.round();
    // Detect the integer break-even case through the defining polynomial,
    // which is exact where the square root is not.
    if rounded >= 1.0 && (rounded * (rounded + 1.0) - m).abs() <= m * 1e-12 {
        let lot = rounded as u64;
        return Ok(IntegerLot {
            marginal: x,
            lot,
            co_optimal: Some(lot + 1),
        });
    }
    Ok(IntegerLot {
        marginal: x,
        lot: x.ceil().max(1.0) as u64,
        co_optimal: None,
    })
}

/// Integer lots available inside `(lower, upper]`, or `None` when the
/// segment spans no whole unit.
fn integer_range(segment: &Segment) -> Option<(u64, u64)> {
    let lo = segment.lower.floor() as i64 + 1;
    let hi = segment.upper.floor() as i64;
    if hi < 1 || hi < lo {
        None
    } else {
        Some((lo.max(1) as u64, hi as u64))
    }
}

/// Minimizes cost over whole-unit lots across all segments, reporting the
/// search under both the exact and the expanded rate.
///
/// Per segment the candidate is the marginal-analysis lot when it lies
/// inside the segment (reporting the smaller lot when two are co-optimal),
/// otherwise the cheaper segment endpoint under the respective rate.
/// Segments spanning no whole unit are skipped.
pub fn solve_integer(p: &ModelParameters, segments: &[Segment]) -> Result<IntegerSolution> {
    p.validate()?;
    ensure_segments(segments)?;
    Ok(IntegerSolution {
        exact: solve_integer_with(p, segments, CostFunction::Exact)?,
        approximate: solve_integer_with(p, segments, CostFunction::Approximate)?,
    })
}

fn solve_integer_with(
    p: &ModelParameters,
    segments: &[Segment],
    which: CostFunction,
) -> Result<SolveOutcome> {
    let mut candidates = Vec::with_capacity(segments.len());
    for segment in segments {
        let Some((lo, hi)) = integer_range(segment) else {
            continue;
        };
        let capacity = segment.capacity();
        let analysis = integer_lot(p, capacity)?;
        let eval = |lot: f64| match which {
            CostFunction::Exact => model::total_cost_exact_unchecked(p, capacity, lot),
            _ => model::total_cost_approx_unchecked(p, capacity, lot),
        };
        let candidate = if (lo..=hi).contains(&analysis.lot) {
            let lot = analysis.lot as f64;
            SegmentCandidate {
                segment_index: segment.index,
                lot,
                cost: eval(lot),
                at_boundary: false,
                cost_function_used: which,
            }
        } else {
            let (lot, cost) = cheaper_endpoint(segment, &eval);
            SegmentCandidate {
                segment_index: segment.index,
                lot,
                cost,
                at_boundary: true,
                cost_function_used: which,
            }
        };
        candidates.push(candidate);
    }
    if candidates.is_empty() {
        return Err(Error::NoFeasibleIntegerLot);
    }
    let selection = candidates.iter().map(|c| c.cost).collect();
    Ok(assemble(candidates, selection))
}

#[cfg(test)]
// Reference values keep every computed digit, beyond f64 resolution.
#[allow(clippy::excessive_precision)]
pub(crate) mod tests {
    use super::*;
    use crate::model::tests::baseline;
    use crate::segments::{build_segments, enumerate_combinations, ContainerSpec};
    use approx::assert_relative_eq;

    pub(crate) fn baseline_segments() -> Vec<Segment> {
        let specs = [
            ContainerSpec {
                capacity: 300.0,
                available: 2,
            },
            ContainerSpec {
                capacity: 600.0,
                available: 2,
            },
        ];
        build_segments(&enumerate_combinations(&specs).unwrap()).unwrap()
    }

    /// Parameters with every sustainability mechanism switched off, leaving
    /// the classical square-root lot model.
    fn classical() -> ModelParameters {
        let mut p = baseline();
        p.emission_price = 0.0;
        p.transport_emission_rate = 0.0;
        p.disposal_unit_cost = 0.0;
        p.disposal_fixed_cost = 0.0;
        p.capacity_price = 0.0;
        p.trip_cost = 0.0;
        p.freight_cost = 0.0;
        p
    }

    fn wide_segment(upper: f64) -> Vec<Segment> {
        build_segments(&[crate::segments::Combination {
            counts: vec![1],
            total_capacity: upper,
        }])
        .unwrap()
    }

    #[test]
    fn closed_form_lots_per_capacity() {
        let p = baseline();
        let expected = [
            (300.0, 467.461_987_822_723_0),
            (600.0, 486.078_377_783_987_04),
            (900.0, 504.007_607_719_420_5),
            (1200.0, 521.320_580_764_843_9),
            (1500.0, 538.076_785_616_081_9),
            (1800.0, 554.326_714_590_660_6),
        ];
        for (capacity, lot) in expected {
            assert_relative_eq!(
                closed_form_lot(&p, capacity).unwrap(),
                lot,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn closed_form_reduces_to_classical_lot() {
        let p = classical();
        assert_relative_eq!(
            closed_form_lot(&p, 600.0).unwrap(),
            1_118.033_988_749_894_8,
            max_relative = 1e-9
        );
    }

    #[test]
    fn exact_stationary_lots_per_capacity() {
        let p = baseline();
        let expected = [
            (300.0, 467.467_491_265_121_0),
            (600.0, 486.083_464_607_232_2),
            (900.0, 504.012_336_464_244_9),
            (1200.0, 521.324_998_452_131_8),
            (1500.0, 538.080_930_582_103_9),
            (1800.0, 554.330_618_500_853_4),
        ];
        for (capacity, lot) in expected {
            let found = exact_stationary_lot(&p, capacity).unwrap();
            assert!(
                (found - lot).abs() < 2.0 * LOT_TOLERANCE,
                "capacity {capacity}: found {found}, expected {lot}"
            );
        }
    }

    #[test]
    fn interior_segment_minimum() {
        let p = baseline();
        let segments = baseline_segments();
        let candidate = exact_segment_minimum(&p, &segments[1]).unwrap();
        assert!(!candidate.at_boundary);
        assert!((candidate.lot - 486.083_464_607_232_2).abs() < 2.0 * LOT_TOLERANCE);
        assert_relative_eq!(
            candidate.cost,
            66_297_295.346_942_73,
            max_relative = 1e-12
        );
    }

    #[test]
    fn boundary_segment_minimum_prefers_cheaper_endpoint() {
        let p = baseline();
        let segments = baseline_segments();
        let candidate = exact_segment_minimum(&p, &segments[2]).unwrap();
        assert!(candidate.at_boundary);
        assert_eq!(candidate.lot, 600.0);
        assert_relative_eq!(
            candidate.cost,
            66_305_950.560_216_22,
            max_relative = 1e-12
        );
    }

    #[test]
    fn exact_stationary_lot_zeroes_the_derivative() {
        let p = baseline();
        for capacity in [300.0, 600.0, 1200.0, 1800.0] {
            let lot = exact_stationary_lot(&p, capacity).unwrap();
            let slope = model::total_cost_exact_derivative(&p, capacity, lot).unwrap();
            assert!(
                slope.abs() < 1e-3,
                "capacity {capacity}: derivative {slope} at lot {lot}"
            );
        }
    }

    #[test]
    fn exact_and_expanded_minimizers_coincide_without_surplus() {
        let mut p = baseline();
        p.surplus_emission_rate = 0.0;
        let exact = exact_stationary_lot(&p, 600.0).unwrap();
        let closed = closed_form_lot(&p, 600.0).unwrap();
        assert!((exact - closed).abs() < 2.0 * LOT_TOLERANCE);
    }

    #[test]
    fn exact_solution_over_baseline_segments() {
        let p = baseline();
        let segments = baseline_segments();
        let outcome = solve_exact(&p, &segments).unwrap();

        assert_eq!(outcome.optimum.segment_index, 1);
        assert!(!outcome.optimum.at_boundary);
        assert!((outcome.optimum_lot - 486.083_464_607_232_2).abs() < 2.0 * LOT_TOLERANCE);
        assert_relative_eq!(
            outcome.optimum_cost,
            66_297_295.346_942_73,
            max_relative = 1e-12
        );
        assert_eq!(outcome.optimum_cost, outcome.optimum_selection_cost);

        let expected = [
            (300.0, 66_306_802.259_758_63, true),
            (486.083_464_607_232_2, 66_297_295.346_942_73, false),
            (600.0, 66_305_950.560_216_22, true),
            (900.0, 66_336_133.581_624_77, true),
            (1200.0, 66_376_575.139_469_53, true),
            (1500.0, 66_421_120.089_185_98, true),
        ];
        assert_eq!(outcome.candidates.len(), expected.len());
        for (candidate, (lot, cost, at_boundary)) in outcome.candidates.iter().zip(expected) {
            assert!(
                (candidate.lot - lot).abs() < 2.0 * LOT_TOLERANCE,
                "segment {}: lot {} vs {}",
                candidate.segment_index,
                candidate.lot,
                lot
            );
            assert_relative_eq!(candidate.cost, cost, max_relative = 1e-12);
            assert_eq!(candidate.at_boundary, at_boundary);
            assert_eq!(candidate.cost_function_used, CostFunction::Exact);
        }
    }

    #[test]
    fn expanded_solution_over_baseline_segments() {
        let p = baseline();
        let segments = baseline_segments();
        let outcome = solve_continuous(&p, &segments).unwrap();

        assert_eq!(outcome.optimum.segment_index, 1);
        assert!(!outcome.optimum.at_boundary);
        assert_relative_eq!(
            outcome.optimum_lot,
            486.078_377_783_987_04,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            outcome.optimum_cost,
            66_297_294.491_690_99,
            max_relative = 1e-12
        );
        // The screening metric is the exact rate at the expanded lot.
        assert_relative_eq!(
            outcome.optimum_selection_cost,
            66_297_295.346_951_73,
            max_relative = 1e-12
        );

        let expected = [
            (300.0, 66_306_800.0, true),
            (486.078_377_783_987_04, 66_297_294.491_690_99, false),
            (600.0, 66_305_950.0, true),
            (900.0, 66_336_133.333_333_33, true),
            (1200.0, 66_376_575.0, true),
            (1500.0, 66_421_120.0, true),
        ];
        for (candidate, (lot, cost, at_boundary)) in outcome.candidates.iter().zip(expected) {
            assert_relative_eq!(candidate.lot, lot, max_relative = 1e-12);
            assert_relative_eq!(candidate.cost, cost, max_relative = 1e-12);
            assert_eq!(candidate.at_boundary, at_boundary);
        }
    }

    #[test]
    fn expanded_solver_recovers_classical_lot_in_wide_segment() {
        let p = classical();
        let segments = wide_segment(2000.0);
        let outcome = solve_continuous(&p, &segments).unwrap();
        assert!(!outcome.optimum.at_boundary);
        assert_relative_eq!(
            outcome.optimum_lot,
            1_118.033_988_749_894_8,
            max_relative = 1e-9
        );
    }

    #[test]
    fn integer_marginal_analysis_per_capacity() {
        let p = baseline();
        let expected = [
            (300.0, 466.962_255_224_067_9, 467),
            (600.0, 485.578_634_944_092_6, 486),
            (900.0, 503.507_855_731_488_8, 504),
            (1200.0, 520.820_820_540_474_9, 521),
            (1500.0, 537.577_017_924_883_0, 538),
            (1800.0, 553.826_940_089_398_6, 554),
        ];
        for (capacity, marginal, lot) in expected {
            let analysis = integer_lot(&p, capacity).unwrap();
            assert_relative_eq!(analysis.marginal, marginal, max_relative = 1e-12);
            assert_eq!(analysis.lot, lot);
            assert_eq!(analysis.co_optimal, None);
        }
    }

    #[test]
    fn integer_break_even_tie_returns_both_lots() {
        // k' = 11, h' = 2, D = 10 puts the break-even point exactly at 10,
        // so 10 and 11 cost the same: 11*10/10 + 10 = 11*10/11 + 11 = 21.
        let mut p = classical();
        p.ordering_cost = 11.0;
        p.holding_cost = 2.0;
        p.demand = 10.0;
        p.unit_cost = 0.0;
        p.surplus_time_per_order = 0.0;
        p.surplus_emission_rate = 0.0;
        let analysis = integer_lot(&p, 100.0).unwrap();
        assert_eq!(analysis.lot, 10);
        assert_eq!(analysis.co_optimal, Some(11));
        let at = |q: f64| model::total_cost_approx(&p, 100.0, q).unwrap();
        assert_relative_eq!(at(10.0), at(11.0), max_relative = 1e-14);
        assert!(at(9.0) > at(10.0) && at(12.0) > at(11.0));
    }

    #[test]
    fn integer_solution_matches_brute_force_in_classical_case() {
        let p = classical();
        let segments = wide_segment(3000.0);
        let solution = solve_integer(&p, &segments).unwrap();
        assert_eq!(solution.approximate.optimum_lot, 1118.0);

        let mut best = (f64::INFINITY, 0u32);
        for q in 1..=3000u32 {
            let cost = model::total_cost_approx(&p, 3000.0, f64::from(q)).unwrap();
            if cost < best.0 {
                best = (cost, q);
            }
        }
        assert_eq!(best.1, 1118);
    }

    #[test]
    fn integer_solution_over_baseline_segments() {
        let p = baseline();
        let segments = baseline_segments();
        let solution = solve_integer(&p, &segments).unwrap();

        assert_eq!(solution.exact.optimum_lot, 486.0);
        assert_relative_eq!(
            solution.exact.optimum_cost,
            66_297_295.349_365_21,
            max_relative = 1e-12
        );
        assert_eq!(solution.approximate.optimum_lot, 486.0);
        assert_relative_eq!(
            solution.approximate.optimum_cost,
            66_297_294.493_827_16,
            max_relative = 1e-12
        );

        let expected_lots = [300.0, 486.0, 600.0, 900.0, 1200.0, 1500.0];
        for outcome in [&solution.exact, &solution.approximate] {
            let lots: Vec<f64> = outcome.candidates.iter().map(|c| c.lot).collect();
            assert_eq!(lots, expected_lots);
            let interior: Vec<bool> =
                outcome.candidates.iter().map(|c| !c.at_boundary).collect();
            assert_eq!(interior, [false, true, false, false, false, false]);
        }
    }

    #[test]
    fn integer_mode_skips_sub_unit_segments() {
        let combos = vec![
            crate::segments::Combination {
                counts: vec![1],
                total_capacity: 0.4,
            },
            crate::segments::Combination {
                counts: vec![2],
                total_capacity: 0.8,
            },
            crate::segments::Combination {
                counts: vec![3],
                total_capacity: 1200.0,
            },
        ];
        let segments = build_segments(&combos).unwrap();
        let p = baseline();
        let solution = solve_integer(&p, &segments).unwrap();
        // Only the third segment contains whole units.
        assert_eq!(solution.exact.candidates.len(), 1);
        assert_eq!(solution.exact.candidates[0].segment_index, 2);
        assert_eq!(solution.exact.optimum_lot, 521.0);
    }

    #[test]
    fn integer_mode_rejects_fleet_without_whole_units() {
        let segments = build_segments(&[crate::segments::Combination {
            counts: vec![1],
            total_capacity: 0.9,
        }])
        .unwrap();
        assert!(matches!(
            solve_integer(&baseline(), &segments),
            Err(Error::NoFeasibleIntegerLot)
        ));
    }

    #[test]
    fn environmental_rate_and_solution_at_baseline() {
        let p = baseline();
        let segments = baseline_segments();
        let outcome = solve_environmental(&p, &segments).unwrap();
        assert_eq!(outcome.optimum.segment_index, 1);
        assert!(!outcome.optimum.at_boundary);
        assert!((outcome.optimum_lot - 412.905_349_568_435_86).abs() < 2.0 * LOT_TOLERANCE);
        assert_relative_eq!(
            outcome.optimum_cost,
            144_257.563_446_155_05,
            max_relative = 1e-10
        );
        assert_eq!(
            outcome.optimum.cost_function_used,
            CostFunction::Environmental
        );
    }

    #[test]
    fn environmental_solution_across_surplus_scales() {
        let segments = baseline_segments();

        let mut p = baseline();
        p.surplus_time_per_order = 0.04;
        let outcome = solve_environmental(&p, &segments).unwrap();
        assert!((outcome.optimum_lot - 441.622_679_186_359_47).abs() < 2.0 * LOT_TOLERANCE);
        assert_relative_eq!(
            outcome.optimum_cost,
            179_442.798_109_161_4,
            max_relative = 1e-10
        );

        p.surplus_time_per_order = 0.2;
        let outcome = solve_environmental(&p, &segments).unwrap();
        assert_eq!(outcome.optimum.segment_index, 3);
        assert!(!outcome.optimum.at_boundary);
        assert!((outcome.optimum_lot - 1_029.883_730_774_927_8).abs() < 2.0 * LOT_TOLERANCE);
        assert_relative_eq!(
            outcome.optimum_cost,
            455_650.247_704_904_7,
            max_relative = 1e-10
        );
    }

    #[test]
    fn exact_solution_across_surplus_scales() {
        let segments = baseline_segments();

        let mut p = baseline();
        p.surplus_time_per_order = 0.04;
        let outcome = solve_exact(&p, &segments).unwrap();
        assert!((outcome.optimum_lot - 509.173_165_203_398_43).abs() < 2.0 * LOT_TOLERANCE);
        assert_relative_eq!(
            outcome.optimum_cost,
            66_331_158.060_411_08,
            max_relative = 1e-12
        );

        p.surplus_time_per_order = 0.2;
        let outcome = solve_exact(&p, &segments).unwrap();
        assert_eq!(outcome.optimum.segment_index, 3);
        assert!(!outcome.optimum.at_boundary);
        assert!((outcome.optimum_lot - 1_060.102_869_474_416_5).abs() < 2.0 * LOT_TOLERANCE);
        assert_relative_eq!(
            outcome.optimum_cost,
            66_601_863.670_268_11,
            max_relative = 1e-12
        );
    }

    #[test]
    fn expanded_solution_lands_on_boundary_at_large_surplus_scale() {
        let mut p = baseline();
        p.surplus_time_per_order = 0.2;
        let segments = baseline_segments();
        let outcome = solve_continuous(&p, &segments).unwrap();

        assert_eq!(outcome.optimum_lot, 1200.0);
        assert!(outcome.optimum.at_boundary);
        assert_eq!(outcome.optimum.segment_index, 4);
        assert_relative_eq!(outcome.optimum_cost, 66_586_050.0, max_relative = 1e-12);
        assert_relative_eq!(
            outcome.optimum_selection_cost,
            66_607_725.660_360_71,
            max_relative = 1e-12
        );

        // The third segment holds an interior expanded-rate candidate that
        // is cheaper under the expanded rate but loses under the exact one;
        // the screening step must not fall for it.
        let interior = &outcome.candidates[2];
        assert!(!interior.at_boundary);
        assert_relative_eq!(
            interior.lot,
            835.244_357_116_331_9,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            interior.cost,
            66_562_312.592_705_32,
            max_relative = 1e-12
        );
    }

    #[test]
    fn solvers_reject_empty_inputs_and_bad_parameters() {
        let p = baseline();
        assert!(matches!(solve_exact(&p, &[]), Err(Error::NoSegments)));
        let segments = baseline_segments();
        let mut bad = p;
        bad.return_fraction = 2.0;
        assert!(matches!(
            solve_exact(&bad, &segments),
            Err(Error::InvalidParameter { name: "alpha", .. })
        ));
    }
}
