//! Identification of the surplus-storage shape parameters from observable
//! machine behavior.
//!
//! The surplus-storage emission component `l * (Q/2) * e^{r*D/Q}` has two
//! observable fingerprints: its minimum sits at the critical lot
//! `Q* = r*D`, and for lots far above `Q*` it grows linearly in the average
//! inventory `Q/2` with slope `l`. Knowing the critical order count
//! `N* = D/Q*` and that asymptotic slope therefore pins both parameters
//! down. "Far above" is quantified by the closeness lot: the smallest lot
//! where the component's actual growth reaches 90% of the asymptotic one.

use crate::error::{Error, Result};

/// Shape parameters recovered by [`calibrate`], plus the lot size from
/// which the asymptotic reading is trustworthy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibrationResult {
    /// The observed order count per time unit at which surplus storage
    /// sets in (the input `n_star`).
    pub critical_orders: f64,
    /// Lot size at the emission-component minimum, `demand / n_star`.
    pub critical_lot: f64,
    /// Surplus-storage time per order, `critical_lot / demand`.
    pub r: f64,
    /// Surplus-storage emission rate per unit of average inventory (the
    /// observed asymptotic slope).
    pub l: f64,
    /// Smallest lot where the emission growth reaches 90% of the
    /// asymptotic slope; readings at or above it identify `l` reliably.
    pub closeness_lot: f64,
}

fn ensure_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::CalibrationInput(format!(
            "{name} must be a positive finite number, got {value}"
        )))
    }
}

/// Growth of the emission component at `lot` relative to its asymptotic
/// slope: `e^{critical/lot} * (1 - critical/lot)`, which increases from 0
/// at the critical lot toward 1.
fn closeness_ratio(critical_lot: f64, lot: f64) -> f64 {
    let t = critical_lot / lot;
    (1.0 - t) * t.exp()
}

/// Smallest lot with [`closeness_ratio`] at least 0.9, found by bisection
/// on `(critical_lot, 10 * critical_lot]` to 1e-9 relative width. The
/// ratio is 0 at the critical lot and about 0.995 at ten times it, so the
/// bracket always straddles the threshold.
fn closeness_lot(critical_lot: f64) -> f64 {
    let mut lo = critical_lot;
    let mut hi = 10.0 * critical_lot;
    while hi - lo > 1e-9 * hi {
        let mid = 0.5 * (lo + hi);
        if closeness_ratio(critical_lot, mid) >= 0.9 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Recovers the surplus-storage parameters from the critical order count,
/// the demand rate, and the asymptotic emission slope per unit of average
/// inventory.
pub fn calibrate(n_star: f64, demand: f64, emission_slope: f64) -> Result<CalibrationResult> {
    ensure_positive("n_star", n_star)?;
    ensure_positive("demand", demand)?;
    if !(emission_slope.is_finite() && emission_slope >= 0.0) {
        return Err(Error::CalibrationInput(format!(
            "emission_slope must be a nonnegative finite number, got {emission_slope}"
        )));
    }
    let critical_lot = demand / n_star;
    Ok(CalibrationResult {
        critical_orders: n_star,
        critical_lot,
        r: critical_lot / demand,
        l: emission_slope,
        closeness_lot: closeness_lot(critical_lot),
    })
}

/// The surplus-storage emission component `l * (lot/2) * e^{r*demand/lot}`
/// on its own, for inspecting calibrated parameters against observations.
pub fn component_emissions(r: f64, l: f64, demand: f64, lot: f64) -> Result<f64> {
    if !(lot.is_finite() && lot > 0.0) {
        return Err(Error::NonPositiveLot(lot));
    }
    Ok(l * (lot / 2.0) * (r * demand / lot).exp())
}

/// Slope of the emission component's asymptote with respect to the lot
/// size: `l / 2` (equivalently `l` per unit of average inventory).
pub fn asymptote_slope(l: f64) -> f64 {
    l / 2.0
}

/// Relative error of each observed emission reading against the calibrated
/// component, `(observed - predicted) / predicted` per `(lot, observed)`
/// pair.
pub fn emission_residuals(
    r: f64,
    l: f64,
    demand: f64,
    observations: &[(f64, f64)],
) -> Result<Vec<f64>> {
    let mut residuals = Vec::with_capacity(observations.len());
    for &(lot, observed) in observations {
        let predicted = component_emissions(r, l, demand, lot)?;
        if predicted == 0.0 {
            return Err(Error::CalibrationInput(format!(
                "relative error is undefined at lot {lot}: predicted emissions are zero"
            )));
        }
        residuals.push((observed - predicted) / predicted);
    }
    Ok(residuals)
}

/// Estimates the emission slope per unit of average inventory as the
/// least-squares slope of observed emissions against `lot / 2`, using only
/// observations with `lot >= 3 * critical_lot` — far enough above the
/// critical lot for the growth to be near-asymptotic. Needs at least two
/// such observations at distinct lots.
pub fn estimate_emission_slope(
    n_star: f64,
    demand: f64,
    observations: &[(f64, f64)],
) -> Result<f64> {
    ensure_positive("n_star", n_star)?;
    ensure_positive("demand", demand)?;
    let critical_lot = demand / n_star;
    let cutoff = 3.0 * critical_lot;
    let eligible: Vec<(f64, f64)> = observations
        .iter()
        .filter(|(lot, _)| lot.is_finite() && *lot >= cutoff)
        .map(|&(lot, observed)| (lot / 2.0, observed))
        .collect();
    if eligible.len() < 2 {
        return Err(Error::CalibrationInput(format!(
            "need at least two observations at lots >= {cutoff} to estimate the slope, got {}",
            eligible.len()
        )));
    }
    let n = eligible.len() as f64;
    let mean_x = eligible.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = eligible.iter().map(|(_, y)| y).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in &eligible {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(Error::CalibrationInput(
            "observations must cover at least two distinct lots".into(),
        ));
    }
    Ok(sxy / sxx)
}
