//! Container combinations and the lot-size segments they induce.
//!
//! The transport cost of a cycle depends on the total capacity reserved, and
//! capacity comes in whole containers. Sorting the distinct reachable
//! capacities yields half-open lot ranges `(lower, upper]`; inside one range
//! the cheapest sufficient combination is the one with total capacity equal
//! to `upper`, so the cost rate is smooth there and jumps at the range ends.

use crate::error::{Error, Result};

/// One container type offered by the carrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContainerSpec {
    /// Capacity of one container of this type, in product units.
    pub capacity: f64,
    /// How many containers of this type can be used per delivery.
    pub available: u32,
}

/// A choice of how many containers of each type to use for one delivery.
#[derive(Debug, Clone, PartialEq)]
pub struct Combination {
    /// Containers used per type, indexed like the `ContainerSpec` list.
    pub counts: Vec<u32>,
    /// Total reserved capacity, `sum(counts[i] * capacity[i])`.
    pub total_capacity: f64,
}

impl Combination {
    /// Total number of containers in the combination.
    pub fn total_containers(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// A half-open lot-size range `(lower, upper]` served by one combination
/// whose total capacity equals `upper`.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    /// Exclusive lower bound: lots at or below it are served by a smaller
    /// combination (or are infeasible when `lower` is zero).
    pub lower: f64,
    /// Inclusive upper bound; equals the serving combination's capacity.
    pub upper: f64,
    /// The combination serving this range.
    pub combination: Combination,
    /// Position in the ordered segment list, starting at zero.
    pub index: usize,
}

impl Segment {
    /// The capacity governing transport cost inside this segment.
    pub fn capacity(&self) -> f64 {
        self.upper
    }

    /// Whether `lot` lies in the half-open range `(lower, upper]`.
    pub fn contains(&self, lot: f64) -> bool {
        self.lower < lot && lot <= self.upper
    }
}

/// Enumerates every usable container combination, deduplicated by total
/// capacity and sorted by capacity ascending.
///
/// All count vectors with `0 <= counts[i] <= specs[i].available` are
/// considered, except all-zero. Since the cost depends on the combination
/// only through its total capacity, combinations of equal capacity are
/// collapsed to one representative: the one using the fewest containers,
/// ties resolved in favor of loading earlier container types.
pub fn enumerate_combinations(specs: &[ContainerSpec]) -> Result<Vec<Combination>> {
    for spec in specs {
        if !(spec.capacity.is_finite() && spec.capacity > 0.0) {
            return Err(Error::NonPositiveCapacity(spec.capacity));
        }
    }
    if specs.iter().all(|s| s.available == 0) {
        return Err(Error::EmptyFleet);
    }

    let mut combos = Vec::new();
    let mut counts = vec![0u32; specs.len()];
    loop {
        // Advance the odometer: counts[i] runs over 0..=available[i].
        let mut idx = 0;
        loop {
            if idx == specs.len() {
                // Wrapped past the last digit: enumeration complete.
                finish_combinations(&mut combos);
                return Ok(combos);
            }
            if counts[idx] < specs[idx].available {
                counts[idx] += 1;
                break;
            }
            counts[idx] = 0;
            idx += 1;
        }
        let total_capacity = counts
            .iter()
            .zip(specs)
            .map(|(&n, s)| f64::from(n) * s.capacity)
            .sum();
        combos.push(Combination {
            counts: counts.clone(),
            total_capacity,
        });
    }
}

fn finish_combinations(combos: &mut Vec<Combination>) {
    combos.sort_by(|a, b| {
        a.total_capacity
            .total_cmp(&b.total_capacity)
            .then_with(|| a.total_containers().cmp(&b.total_containers()))
            // Prefer loading earlier container types: larger counts first.
            .then_with(|| b.counts.cmp(&a.counts))
    });
    combos.dedup_by(|next, kept| next.total_capacity == kept.total_capacity);
}

/// Builds the ordered lot-size segments from deduplicated combinations
/// sorted by strictly increasing capacity (the output of
/// [`enumerate_combinations`]).
pub fn build_segments(combos: &[Combination]) -> Result<Vec<Segment>> {
    if combos.is_empty() {
        return Err(Error::EmptyFleet);
    }
    let mut previous = 0.0;
    let mut segments = Vec::with_capacity(combos.len());
    for (index, combo) in combos.iter().enumerate() {
        if !(combo.total_capacity.is_finite() && combo.total_capacity > 0.0) {
            return Err(Error::NonPositiveCapacity(combo.total_capacity));
        }
        if combo.total_capacity <= previous {
            return Err(Error::InvalidCombinations(format!(
                "capacities must be strictly increasing and deduplicated; \
                 {} at position {index} does not exceed {previous}",
                combo.total_capacity
            )));
        }
        segments.push(Segment {
            lower: previous,
            upper: combo.total_capacity,
            combination: combo.clone(),
            index,
        });
        previous = combo.total_capacity;
    }
    Ok(segments)
}

/// Index of the segment containing `lot`, or `None` when the lot is
/// non-positive or exceeds the largest capacity.
pub fn find_segment(segments: &[Segment], lot: f64) -> Option<usize> {
    segments.iter().position(|s| s.contains(lot))
}
