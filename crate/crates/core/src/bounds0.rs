//! Sign-based (0-neighborhood) necessary conditions and the resulting
//! threshold upper bounds: the finite-length ratio statistic, its asymptotic
//! moment form, the exact BSC bound 1/w_row, the AWGN noise bound, and the
//! data tables behind the rate/threshold figures.

use crate::channels::{ChannelModel, LlrVector};
use num_rational::Rational64;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Bound0Error {
    /// The bisection bracket [1e-3, 1e3] does not enclose a sign change.
    BracketFailure {
        w_row: usize,
        ec: f64,
    },
    SOutOfRange {
        s: u32,
        max_s: u32,
    },
}

impl fmt::Display for Bound0Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound0Error::BracketFailure { w_row, ec } => {
                write!(f, "no sigma root bracketed for w_row = {w_row}, Ec = {ec}")
            }
            Bound0Error::SOutOfRange { s, max_s } => {
                write!(f, "s = {s} outside 1..={max_s}")
            }
        }
    }
}

impl std::error::Error for Bound0Error {}

/// The per-realization ratio statistic gamma_pos / gamma_neg against the
/// w_row - 1 requirement.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub gamma_pos: f64,
    pub gamma_neg: f64,
    /// gamma_pos / gamma_neg, +inf when gamma_neg = 0.
    pub ratio: f64,
    /// ratio >= w_row - 1, the necessary condition for deciding all-zeros.
    pub passes: bool,
}

/// Splits the LLRs into the nonnegative sum and the negated negative sum
/// and tests the ratio condition; the boundary value gamma_i = 0 counts as
/// nonnegative.
pub fn ratio_statistic(gamma: &LlrVector, w_row: usize) -> RatioReport {
    assert!(w_row >= 2);
    let gamma_pos: f64 = gamma.values.iter().filter(|&&g| g >= 0.0).sum();
    let gamma_neg: f64 = -gamma.values.iter().filter(|&&g| g < 0.0).sum::<f64>();
    let ratio = if gamma_neg == 0.0 {
        f64::INFINITY
    } else {
        gamma_pos / gamma_neg
    };
    RatioReport {
        gamma_pos,
        gamma_neg,
        ratio,
        passes: ratio >= w_row as f64 - 1.0,
    }
}

/// The asymptotic condition for a channel and check degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Bound0Report {
    pub channel: ChannelModel,
    pub w_row: usize,
    /// positive_moment / negative_moment; +inf when the negative moment
    /// vanishes (BEC), in which case the condition never bites.
    pub lhs: f64,
    pub condition_holds: bool,
    /// lhs sits on the w_row - 1 boundary (to relative 1e-9).
    pub boundary: bool,
    /// BSC threshold upper bound 1/w_row.
    pub eps_ub: Option<f64>,
    /// AWGN noise threshold sigma* (w_row >= 3 only).
    pub sigma_ub: Option<f64>,
}

/// Evaluates the law-of-large-numbers form of the ratio condition:
/// positive_moment / negative_moment >= w_row - 1, non-strict as stated.
pub fn asymptotic_condition(ch: &ChannelModel, w_row: usize) -> Bound0Report {
    assert!(w_row >= 2);
    let pos = ch.positive_moment();
    let neg = ch.negative_moment();
    let lhs = if neg == 0.0 { f64::INFINITY } else { pos / neg };
    let target = w_row as f64 - 1.0;
    let eps_ub = matches!(ch, ChannelModel::Bsc { .. }).then(|| bsc_threshold_ub(w_row));
    let sigma_ub = match ch {
        ChannelModel::Awgn { ec, .. } if w_row >= 3 => {
            awgn_threshold_ub(w_row, *ec).ok().map(|(sigma, _)| sigma)
        }
        _ => None,
    };
    Bound0Report {
        channel: *ch,
        w_row,
        lhs,
        condition_holds: lhs >= target,
        boundary: (lhs - target).abs() <= 1e-9 * target,
        eps_ub,
        sigma_ub,
    }
}

/// BSC threshold upper bound: exactly 1/w_row.
pub fn bsc_threshold_ub(w_row: usize) -> f64 {
    assert!(w_row >= 2);
    1.0 / w_row as f64
}

/// The same bound as an exact rational, for arithmetic checks.
pub fn bsc_threshold_ub_exact(w_row: usize) -> Rational64 {
    assert!(w_row >= 2);
    Rational64::new(1, w_row as i64)
}

/// AWGN threshold: the unique sigma where the moment ratio equals
/// w_row - 1 (the ratio is strictly decreasing in sigma, from +inf at
/// sigma -> 0 down to 1 as sigma -> inf, so a root exists for w_row >= 3).
/// Returns (sigma*, SNR* = Ec/sigma*^2); bisection to absolute 1e-6.
pub fn awgn_threshold_ub(w_row: usize, ec: f64) -> Result<(f64, f64), Bound0Error> {
    awgn_threshold_ub_with_tol(w_row, ec, 1e-6)
}

pub fn awgn_threshold_ub_with_tol(
    w_row: usize,
    ec: f64,
    tol: f64,
) -> Result<(f64, f64), Bound0Error> {
    assert!(
        w_row >= 3,
        "for w_row = 2 the condition holds for every sigma"
    );
    assert!(ec > 0.0 && tol > 0.0);
    let ratio_gap = |sigma: f64| {
        let ch = ChannelModel::awgn(ec, sigma * sigma).expect("positive parameters");
        let neg = ch.negative_moment();
        let lhs = if neg == 0.0 {
            f64::INFINITY
        } else {
            ch.positive_moment() / neg
        };
        lhs - (w_row as f64 - 1.0)
    };
    let (mut lo, mut hi) = (1e-3, 1e3);
    if !(ratio_gap(lo) > 0.0 && ratio_gap(hi) < 0.0) {
        return Err(Bound0Error::BracketFailure { w_row, ec });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if ratio_gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let sigma = 0.5 * (lo + hi);
    Ok((sigma, ec / (sigma * sigma)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig1Row {
    pub w_col: usize,
    pub w_row: usize,
    /// Designed rate 1 - w_col/w_row.
    pub rate: f64,
    pub eps_ub: f64,
}

/// Rate/threshold pairs for regular ensembles.
pub fn fig1_data(pairs: &[(usize, usize)]) -> Vec<Fig1Row> {
    pairs
        .iter()
        .map(|&(w_col, w_row)| {
            assert!(w_col < w_row, "designed rate needs w_col < w_row");
            Fig1Row {
                w_col,
                w_row,
                rate: 1.0 - w_col as f64 / w_row as f64,
                eps_ub: bsc_threshold_ub(w_row),
            }
        })
        .collect()
}

/// The default figure grid: w_col in 2..=6, w_row in w_col+1..=20.
pub fn fig1_default_pairs() -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for w_col in 2..=6 {
        for w_row in w_col + 1..=20 {
            pairs.push((w_col, w_row));
        }
    }
    pairs
}

/// BSC capacity 1 - h2(eps).
pub fn bsc_capacity(eps: f64) -> f64 {
    assert!((0.0..=1.0).contains(&eps));
    let h = |p: f64| if p == 0.0 { 0.0 } else { -p * p.log2() };
    1.0 - h(eps) - h(1.0 - eps)
}

/// Capacity samples at eps = step, 2*step, ... below 1/2.
pub fn bsc_capacity_curve(step: f64) -> Vec<(f64, f64)> {
    assert!(step > 0.0 && step < 0.5);
    let mut out = Vec::new();
    let mut k = 1;
    loop {
        let eps = k as f64 * step;
        if eps >= 0.5 {
            return out;
        }
        out.push((eps, bsc_capacity(eps)));
        k += 1;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Row {
    pub q: u64,
    pub n: u64,
    /// R(q) = 1 - (3^s + 1)/(q^2 + q + 1).
    pub rate: f64,
    /// 1/(q + 1), the bound at check degree q + 1.
    pub eps_ub: f64,
}

/// Rate/threshold points for the PG(2, 2^s) family; formulas only, the
/// matrices themselves come from `codes::build_pg2q_code`.
pub fn fig2_data(s_list: &[u32]) -> Result<Vec<Fig2Row>, Bound0Error> {
    s_list
        .iter()
        .map(|&s| {
            if s == 0 || s > crate::codes::PG_MAX_S {
                return Err(Bound0Error::SOutOfRange {
                    s,
                    max_s: crate::codes::PG_MAX_S,
                });
            }
            let q = 1u64 << s;
            let n = q * q + q + 1;
            Ok(Fig2Row {
                q,
                n,
                rate: 1.0 - (3u64.pow(s) + 1) as f64 / n as f64,
                eps_ub: 1.0 / (q + 1) as f64,
            })
        })
        .collect()
}
