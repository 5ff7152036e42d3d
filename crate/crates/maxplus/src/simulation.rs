//! Explicit trajectory simulation and empirical periodicity detection.
//!
//! `simulate` unrolls `X(k+1) = A_i(k) ⊗ X(k)` exactly under a schedule;
//! `detect_periodicity` recovers the asymptotic regime from the trace alone;
//! `cross_validate` runs both the spectral prediction and the empirical
//! detector and compares them. Everything is exact rational arithmetic:
//! agreement means equality, never closeness.

use crate::error::{Error, Result};
use crate::matrix::Vector;
use crate::scalar::{times_int, Rational, Scalar};
use crate::switched::{self, MatrixMap, Schedule, SwitchedSpectral};
use crate::spectral::DEFAULT_TRANSIENT_CAP;

/// Largest candidate period the detector scans by default. Cross-validation
/// widens this to cover the spectrally predicted period.
pub const DEFAULT_DETECTION_PERIOD_MAX: usize = 64;

/// A simulated trajectory: states X(0..=horizon) plus the matrix name
/// applied at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub states: Vec<Vector>,
    /// Name of the matrix applied at step k (producing `states[k+1]`);
    /// length equals the horizon.
    pub applied: Vec<String>,
    pub schedule: Schedule,
}

impl Trace {
    /// Number of simulated steps (states run 0..=horizon).
    pub fn horizon(&self) -> usize {
        self.states.len() - 1
    }
}

/// Empirically detected asymptotic periodicity: from step `k0` on, the state
/// repeats every `d` steps shifted by `d * lambda_per_step`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Periodicity {
    pub d: usize,
    pub lambda_per_step: Rational,
    pub k0: usize,
}

/// Spectral prediction vs. empirical detection for one switched system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub spectral: SwitchedSpectral,
    pub empirical: Option<Periodicity>,
    /// True iff the empirical growth rate equals the spectral one exactly,
    /// the empirical period divides the spectral period, and the empirical
    /// transient does not exceed the spectral transient.
    pub agree: bool,
    pub trace: Trace,
}

/// Unrolls the switched recursion for `horizon` steps from `x0`.
///
/// The all-eps initial state is rejected: it is a fixed point and the
/// trajectory would carry no information.
pub fn simulate(
    schedule: &Schedule,
    matrices: &MatrixMap,
    x0: &Vector,
    horizon: usize,
) -> Result<Trace> {
    if x0.is_zero() {
        return Err(Error::ZeroInitialState);
    }
    let step_names = schedule.step_names();
    let mut states = Vec::with_capacity(horizon + 1);
    let mut applied = Vec::with_capacity(horizon);
    states.push(x0.clone());
    for k in 0..horizon {
        let name = step_names[k % step_names.len()];
        let a = matrices
            .get(name)
            .ok_or_else(|| Error::UnknownMatrix(name.to_string()))?;
        let next = a.apply(states.last().expect("nonempty"))?;
        states.push(next);
        applied.push(name.to_string());
    }
    Ok(Trace {
        states,
        applied,
        schedule: schedule.clone(),
    })
}

/// Scans for the smallest period `d` (up to the default cap) whose shift
/// relation holds on the tail of the trace. See [`detect_periodicity_up_to`].
pub fn detect_periodicity(trace: &Trace) -> Option<Periodicity> {
    detect_periodicity_up_to(trace, DEFAULT_DETECTION_PERIOD_MAX)
}

/// Detects the minimal `(d, lambda, k0)` with
/// `states[k+d] = (d * lambda) ⊗ states[k]` for all k in `[k0, horizon-d]`:
/// finite components shift by exactly `d * lambda` and eps components stay
/// eps.
///
/// Candidate periods are tried in increasing order. Each candidate must hold
/// on a verification window at the end of the trace — the final third,
/// shortened to the last `3d` steps when the third would reach further back
/// (so a trace of length `k0 + 3d` always suffices for a system with true
/// transient k0 and period d). The reported k0 is then pushed backward to
/// the earliest index from which the relation holds.
///
/// Returns `None` when no candidate fits, e.g. when the horizon is too short
/// for the system's transient; the fix is a longer trace. A short window can
/// also mistake a locally uniform stretch for a small period; when the true
/// period is known from spectral data, [`cross_validate`] pins the window to
/// cover full periods instead.
pub fn detect_periodicity_up_to(trace: &Trace, d_max: usize) -> Option<Periodicity> {
    detect_with_window(trace, d_max, Lookback::PerCandidate)
}

/// How far back from the end of the trace a candidate period must hold.
enum Lookback {
    /// The final third, shortened to `3d` steps for each candidate d.
    PerCandidate,
    /// The final third, shortened to a fixed number of steps. Used when the
    /// system's true period is known: a window spanning several true periods
    /// inside the asymptotic regime leaves no room for spurious candidates.
    Fixed(usize),
}

fn detect_with_window(trace: &Trace, d_max: usize, lookback: Lookback) -> Option<Periodicity> {
    let t = trace.horizon();
    for d in 1..=d_max.min(t / 3) {
        let steps_back = match lookback {
            Lookback::PerCandidate => 3 * d,
            Lookback::Fixed(steps) => steps,
        };
        let window_start = ((2 * t) / 3).max(t.saturating_sub(steps_back));
        if window_start > t - d {
            continue;
        }
        let Some(lambda) = window_rate(trace, window_start, d) else {
            continue;
        };
        let shift = Scalar::Finite(times_int(&lambda, d));
        let holds =
            |k: usize| trace.states[k].scale(&shift).ok().as_ref() == Some(&trace.states[k + d]);
        if !(window_start..=t - d).all(holds) {
            continue;
        }
        let mut k0 = window_start;
        while k0 > 0 && holds(k0 - 1) {
            k0 -= 1;
        }
        return Some(Periodicity {
            d,
            lambda_per_step: lambda,
            k0,
        });
    }
    None
}

/// Per-step rate implied by the first finite component pair at lag d inside
/// the window, or `None` when every component is eps there (no rate can be
/// pinned down).
fn window_rate(trace: &Trace, window_start: usize, d: usize) -> Option<Rational> {
    let t = trace.horizon();
    for k in window_start..=t - d {
        let now = &trace.states[k];
        let later = &trace.states[k + d];
        for i in 0..now.dim() {
            if let (Scalar::Finite(a), Scalar::Finite(b)) = (&now[i], &later[i]) {
                return Some((b - a) / Rational::from_integer((d as u64).into()));
            }
        }
    }
    None
}

/// Spectral analysis plus simulation plus detection, with the default
/// transient cap.
pub fn cross_validate(
    schedule: &Schedule,
    matrices: &MatrixMap,
    x0: &Vector,
    horizon: usize,
) -> Result<CrossValidation> {
    cross_validate_capped(schedule, matrices, x0, horizon, DEFAULT_TRANSIENT_CAP)
}

/// Runs [`switched::switched_analysis`] and an independent trajectory
/// detection over the same schedule, then compares: exact rate equality, the
/// empirical period dividing the spectral one, and the empirical transient
/// bounded by the spectral one. A horizon of at least
/// `transient + 3 * period` (in original steps) guarantees detection.
///
/// The detector scans candidates up to the spectral period (the trajectory's
/// minimal period always divides it) and verifies each over a window of
/// three spectral periods, which at the guaranteed horizon lies entirely in
/// the asymptotic regime.
pub fn cross_validate_capped(
    schedule: &Schedule,
    matrices: &MatrixMap,
    x0: &Vector,
    horizon: usize,
    cap: usize,
) -> Result<CrossValidation> {
    let spectral = switched::switched_analysis_capped(schedule, matrices, cap)?;
    let trace = simulate(schedule, matrices, x0, horizon)?;
    let empirical = detect_with_window(
        &trace,
        spectral.period,
        Lookback::Fixed(3 * spectral.period),
    );
    let agree = empirical.as_ref().is_some_and(|e| {
        e.lambda_per_step == spectral.lambda_per_step
            && spectral.period % e.d == 0
            && e.k0 <= spectral.transient
    });
    Ok(CrossValidation {
        spectral,
        empirical,
        agree,
        trace,
    })
}

/// Horizon that guarantees detection for a given spectral result:
/// transient + 3 periods, in original step indices.
pub fn sufficient_horizon(spectral: &SwitchedSpectral) -> usize {
    spectral.transient + 3 * spectral.period
}
