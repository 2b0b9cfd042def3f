//! Monte Carlo estimation of condition-violation and LP block-error rates,
//! with Wilson confidence intervals.
//!
//! Trials are independent and derive their seeds as `seed + trial_index`
//! (wrapping), so a run is reproducible and aggregates only counts; the
//! parallel and sequential paths therefore return bit-identical results.

use crate::bounds0::ratio_statistic;
use crate::channels::ChannelModel;
use crate::codes::Code;
use crate::decoder::{lp_decode, DecodeError};
use std::fmt;
use std::time::Instant;

const WILSON_Z: f64 = 1.959963984540054; // 95%

#[derive(Debug, Clone, PartialEq)]
pub enum MonteCarloError {
    ZeroTrials,
    Decode(DecodeError),
}

impl fmt::Display for MonteCarloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonteCarloError::ZeroTrials => write!(f, "trial count must be positive"),
            MonteCarloError::Decode(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for MonteCarloError {}

/// One grid point of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    /// The swept channel parameter (epsilon or sigma^2).
    pub param: f64,
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    /// Wall-clock spent on this point (not part of stable outputs).
    pub seconds: f64,
    /// Trials on which the LP solver gave up; counted apart from failures.
    pub decoder_failures: u64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
}

/// Wilson 95% score interval for `failures` out of `trials`.
pub fn wilson_interval(failures: u64, trials: u64) -> (f64, f64) {
    assert!(trials > 0 && failures <= trials);
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = WILSON_Z * WILSON_Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = WILSON_Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // the extremes round just inside (0,1); pin them so the interval always
    // contains the point estimate
    let lo = if failures == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let hi = if failures == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo, hi)
}

/// The documented per-trial seed derivation.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    seed.wrapping_add(trial)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialOutcome {
    Pass,
    Fail,
    DecoderFailure,
}

/// Sequential trial runner; returns (failures, decoder_failures).
pub fn run_trials_sequential<F>(trials: u64, trial: F) -> (u64, u64)
where
    F: Fn(u64) -> TrialOutcome + Sync,
{
    (0..trials).map(trial).fold((0, 0), accumulate)
}

/// Rayon-parallel trial runner; aggregation is count-only, so the result is
/// bit-identical to the sequential path.
#[cfg(feature = "parallel")]
pub fn run_trials_parallel<F>(trials: u64, trial: F) -> (u64, u64)
where
    F: Fn(u64) -> TrialOutcome + Sync + Send,
{
    use rayon::prelude::*;
    (0..trials)
        .into_par_iter()
        .map(trial)
        .fold(|| (0, 0), accumulate)
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
}

fn accumulate(acc: (u64, u64), outcome: TrialOutcome) -> (u64, u64) {
    match outcome {
        TrialOutcome::Pass => acc,
        TrialOutcome::Fail => (acc.0 + 1, acc.1),
        TrialOutcome::DecoderFailure => (acc.0, acc.1 + 1),
    }
}

fn run_trials<F>(trials: u64, trial: F) -> (u64, u64)
where
    F: Fn(u64) -> TrialOutcome + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        run_trials_parallel(trials, trial)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_trials_sequential(trials, trial)
    }
}

fn channel_param(ch: &ChannelModel) -> f64 {
    match *ch {
        ChannelModel::Bsc { eps } | ChannelModel::Bec { eps } => eps,
        ChannelModel::Awgn { sigma2, .. } => sigma2,
    }
}

fn make_point(
    ch: &ChannelModel,
    trials: u64,
    failures: u64,
    decoder_failures: u64,
    started: Instant,
) -> SweepPoint {
    let (ci_lo, ci_hi) = wilson_interval(failures, trials);
    SweepPoint {
        param: channel_param(ch),
        trials,
        failures,
        rate: failures as f64 / trials as f64,
        ci_lo,
        ci_hi,
        seconds: started.elapsed().as_secs_f64(),
        decoder_failures,
    }
}

/// Fraction of length-n LLR draws violating the ratio condition
/// gamma_pos/gamma_neg >= w_row - 1.
pub fn estimate_condition_violation(
    w_row: usize,
    n: usize,
    ch: &ChannelModel,
    trials: u64,
    seed: u64,
) -> Result<SweepPoint, MonteCarloError> {
    if trials == 0 {
        return Err(MonteCarloError::ZeroTrials);
    }
    let started = Instant::now();
    let (failures, _) = run_trials(trials, |t| {
        let gamma = ch.sample_llrs(n, trial_seed(seed, t));
        if ratio_statistic(&gamma, w_row).passes {
            TrialOutcome::Pass
        } else {
            TrialOutcome::Fail
        }
    });
    Ok(make_point(ch, trials, failures, 0, started))
}

/// Fraction of trials on which LP decoding raises the block-error event.
/// Solver breakdowns (iteration limit) are tallied as decoder failures, not
/// as errors; anything else is a bug and propagates.
pub fn estimate_lp_error_rate(
    code: &Code,
    ch: &ChannelModel,
    trials: u64,
    seed: u64,
) -> Result<SweepPoint, MonteCarloError> {
    if trials == 0 {
        return Err(MonteCarloError::ZeroTrials);
    }
    // fail fast on structural problems (row-weight cap, dimension)
    lp_decode(code, &ch.sample_llrs(code.n(), trial_seed(seed, 0)))
        .map_err(MonteCarloError::Decode)?;
    let started = Instant::now();
    let (failures, decoder_failures) = run_trials(trials, |t| {
        let gamma = ch.sample_llrs(code.n(), trial_seed(seed, t));
        match lp_decode(code, &gamma) {
            Ok(res) if res.error_event => TrialOutcome::Fail,
            Ok(_) => TrialOutcome::Pass,
            Err(_) => TrialOutcome::DecoderFailure,
        }
    });
    Ok(make_point(ch, trials, failures, decoder_failures, started))
}
