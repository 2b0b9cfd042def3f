//! Binary-input channel models, LLR sampling under the all-zeros-codeword
//! assumption, and the positive/negative partial moments of the LLR law.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum ChannelError {
    EpsilonOutOfRange { eps: f64 },
    NonPositive { field: &'static str, value: f64 },
    Parse(String),
}

impl fmt::Display for ChannelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelError::EpsilonOutOfRange { eps } => {
                write!(f, "epsilon = {eps} outside the open interval (0,1)")
            }
            ChannelError::NonPositive { field, value } => {
                write!(f, "{field} = {value} must be positive")
            }
            ChannelError::Parse(msg) => write!(f, "channel spec: {msg}"),
        }
    }
}

impl std::error::Error for ChannelError {}

/// One of the three binary-input memoryless channels, with the parameters of
/// its LLR law under transmission of a zero symbol:
///
/// * BSC(eps): LLR is +G w.p. 1-eps and -G w.p. eps, G = log((1-eps)/eps);
/// * AWGNC(Ec, sigma2): LLR ~ Normal(2 Ec / sigma2, 4 Ec / sigma2);
/// * BEC(eps): LLR is +inf w.p. 1-eps and 0 w.p. eps.
///
/// Infinite LLRs are represented by the IEEE infinities, never by large
/// finite sentinels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    Bsc { eps: f64 },
    Awgn { ec: f64, sigma2: f64 },
    Bec { eps: f64 },
}

/// A vector of log-likelihood ratios; entries live in R plus/minus infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct LlrVector {
    pub values: Vec<f64>,
}

impl LlrVector {
    pub fn new(values: Vec<f64>) -> Self {
        assert!(values.iter().all(|v| !v.is_nan()));
        LlrVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl ChannelModel {
    pub fn bsc(eps: f64) -> Result<Self, ChannelError> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(ChannelError::EpsilonOutOfRange { eps });
        }
        Ok(ChannelModel::Bsc { eps })
    }

    pub fn awgn(ec: f64, sigma2: f64) -> Result<Self, ChannelError> {
        if !(ec > 0.0) {
            return Err(ChannelError::NonPositive {
                field: "Ec",
                value: ec,
            });
        }
        if !(sigma2 > 0.0) {
            return Err(ChannelError::NonPositive {
                field: "sigma2",
                value: sigma2,
            });
        }
        Ok(ChannelModel::Awgn { ec, sigma2 })
    }

    pub fn bec(eps: f64) -> Result<Self, ChannelError> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(ChannelError::EpsilonOutOfRange { eps });
        }
        Ok(ChannelModel::Bec { eps })
    }

    /// Parses the CLI channel spec: `bsc:0.05`, `awgn:Ec=1,sigma2=0.8`,
    /// `bec:0.3`. The AWGN Ec defaults to 1.
    pub fn parse(spec: &str) -> Result<Self, ChannelError> {
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| ChannelError::Parse(format!("expected kind:params in '{spec}'")))?;
        match kind {
            "bsc" | "bec" => {
                let eps: f64 = rest
                    .parse()
                    .map_err(|_| ChannelError::Parse(format!("bad probability '{rest}'")))?;
                if kind == "bsc" {
                    ChannelModel::bsc(eps)
                } else {
                    ChannelModel::bec(eps)
                }
            }
            "awgn" => {
                let mut ec = 1.0;
                let mut sigma2 = None;
                for part in rest.split(',') {
                    let (key, value) = part.split_once('=').ok_or_else(|| {
                        ChannelError::Parse(format!("expected key=value, got '{part}'"))
                    })?;
                    let value: f64 = value
                        .parse()
                        .map_err(|_| ChannelError::Parse(format!("bad number '{value}'")))?;
                    match key {
                        "Ec" | "ec" => ec = value,
                        "sigma2" => sigma2 = Some(value),
                        _ => return Err(ChannelError::Parse(format!("unknown key '{key}'"))),
                    }
                }
                let sigma2 =
                    sigma2.ok_or_else(|| ChannelError::Parse("missing sigma2".to_string()))?;
                ChannelModel::awgn(ec, sigma2)
            }
            _ => Err(ChannelError::Parse(format!(
                "unknown channel kind '{kind}'"
            ))),
        }
    }

    /// The BSC LLR magnitude G = log((1-eps)/eps).
    pub fn bsc_llr_magnitude(&self) -> Option<f64> {
        match self {
            ChannelModel::Bsc { eps } => Some(((1.0 - eps) / eps).ln()),
            _ => None,
        }
    }

    /// Draws n i.i.d. LLRs under the all-zeros-codeword assumption;
    /// deterministic given the seed.
    pub fn sample_llrs(&self, n: usize, seed: u64) -> LlrVector {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = match *self {
            ChannelModel::Bsc { eps } => {
                let g = ((1.0 - eps) / eps).ln();
                (0..n)
                    .map(|_| if rng.random::<f64>() < eps { -g } else { g })
                    .collect()
            }
            ChannelModel::Awgn { ec, sigma2 } => {
                let mean = 2.0 * ec / sigma2;
                let sd = (4.0 * ec / sigma2).sqrt();
                let normal = Normal::new(mean, sd).expect("valid parameters");
                (0..n).map(|_| normal.sample(&mut rng)).collect()
            }
            ChannelModel::Bec { eps } => (0..n)
                .map(|_| {
                    if rng.random::<f64>() < eps {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                })
                .collect(),
        };
        LlrVector { values }
    }

    /// E[Gamma | Gamma >= 0] * Pr(Gamma >= 0), the integral of gamma times
    /// its density over [0, inf); the atom at zero counts as positive.
    /// Infinite for the BEC.
    pub fn positive_moment(&self) -> f64 {
        match *self {
            ChannelModel::Bsc { eps } => ((1.0 - eps) / eps).ln() * (1.0 - eps),
            ChannelModel::Awgn { ec, sigma2 } => {
                let mean = 2.0 * ec / sigma2;
                let sd = (4.0 * ec / sigma2).sqrt();
                let z = mean / sd;
                mean * normal_cdf(z) + sd * normal_pdf(z)
            }
            ChannelModel::Bec { .. } => f64::INFINITY,
        }
    }

    /// -E[Gamma | Gamma < 0] * Pr(Gamma < 0) >= 0; zero for the BEC.
    pub fn negative_moment(&self) -> f64 {
        match *self {
            ChannelModel::Bsc { eps } => ((1.0 - eps) / eps).ln() * eps,
            ChannelModel::Awgn { ec, sigma2 } => {
                let mean = 2.0 * ec / sigma2;
                let sd = (4.0 * ec / sigma2).sqrt();
                let z = mean / sd;
                sd * normal_pdf(z) - mean * normal_cdf(-z)
            }
            ChannelModel::Bec { .. } => 0.0,
        }
    }

    /// The LLR mean; infinite for the BEC.
    pub fn llr_mean(&self) -> f64 {
        match *self {
            ChannelModel::Bsc { eps } => ((1.0 - eps) / eps).ln() * (1.0 - 2.0 * eps),
            ChannelModel::Awgn { ec, sigma2 } => 2.0 * ec / sigma2,
            ChannelModel::Bec { .. } => f64::INFINITY,
        }
    }
}

impl fmt::Display for ChannelModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelModel::Bsc { eps } => write!(f, "bsc:{eps}"),
            ChannelModel::Awgn { ec, sigma2 } => write!(f, "awgn:Ec={ec},sigma2={sigma2}"),
            ChannelModel::Bec { eps } => write!(f, "bec:{eps}"),
        }
    }
}

pub fn normal_pdf(z: f64) -> f64 {
    (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

pub fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / std::f64::consts::SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Composite-Simpson oracle for integrals of gamma^k times the AWGN LLR
    /// density, independent of the closed forms above.
    fn simpson_moment(mean: f64, sd: f64, k: u32, lo: f64, hi: f64) -> f64 {
        let steps = 60_000usize; // even
        let h = (hi - lo) / steps as f64;
        let f = |x: f64| x.powi(k as i32) * normal_pdf((x - mean) / sd) / sd;
        let mut acc = f(lo) + f(hi);
        for i in 1..steps {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(lo + i as f64 * h);
        }
        acc * h / 3.0
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for spec in ["bsc:0.05", "awgn:Ec=1,sigma2=0.8", "bec:0.3"] {
            let ch = ChannelModel::parse(spec).unwrap();
            assert_eq!(ch.to_string(), spec);
        }
        assert_eq!(
            ChannelModel::parse("awgn:sigma2=2").unwrap(),
            ChannelModel::Awgn {
                ec: 1.0,
                sigma2: 2.0
            }
        );
        assert!(ChannelModel::parse("bsc:0").is_err());
        assert!(ChannelModel::parse("bsc:1").is_err());
        assert!(ChannelModel::parse("laplace:0.1").is_err());
        assert!(ChannelModel::parse("awgn:Ec=1").is_err());
    }

    #[test]
    fn epsilon_domain_is_open() {
        assert!(matches!(
            ChannelModel::bsc(0.0),
            Err(ChannelError::EpsilonOutOfRange { .. })
        ));
        assert!(matches!(
            ChannelModel::bsc(1.0),
            Err(ChannelError::EpsilonOutOfRange { .. })
        ));
        assert!(ChannelModel::bsc(0.5).is_ok());
        assert!(matches!(
            ChannelModel::bec(0.0),
            Err(ChannelError::EpsilonOutOfRange { .. })
        ));
    }

    #[test]
    fn bsc_sample_fraction() {
        let ch = ChannelModel::bsc(0.25).unwrap();
        let llrs = ch.sample_llrs(1_000_000, 17);
        let g = ch.bsc_llr_magnitude().unwrap();
        let frac = llrs.values.iter().filter(|&&v| v < 0.0).count() as f64 / 1e6;
        assert!((frac - 0.25).abs() < 0.002, "fraction {frac}");
        assert!(llrs.values.iter().all(|&v| v == g || v == -g));
    }

    #[test]
    fn awgn_sample_mean_and_variance() {
        let ch = ChannelModel::awgn(1.0, 1.0).unwrap();
        let llrs = ch.sample_llrs(1_000_000, 5);
        let mean = llrs.values.iter().sum::<f64>() / 1e6;
        let var = llrs
            .values
            .iter()
            .map(|v| (v - mean) * (v - mean))
            .sum::<f64>()
            / 1e6;
        assert!((mean - 2.0).abs() < 0.01, "mean {mean}");
        assert!((var - 4.0).abs() < 0.05, "variance {var}");
    }

    #[test]
    fn bec_sample_support() {
        let ch = ChannelModel::bec(0.5).unwrap();
        let llrs = ch.sample_llrs(10_000, 3);
        assert!(llrs.values.iter().all(|&v| v == 0.0 || v == f64::INFINITY));
        let erased = llrs.values.iter().filter(|&&v| v == 0.0).count();
        assert!((erased as f64 / 1e4 - 0.5).abs() < 0.02);
    }

    #[test]
    fn bsc_moments_closed_form() {
        let ch = ChannelModel::bsc(0.25).unwrap();
        assert!((ch.positive_moment() - 3f64.ln() * 0.75).abs() < 1e-15);
        assert!((ch.negative_moment() - 3f64.ln() * 0.25).abs() < 1e-15);
        assert!((ch.positive_moment() - 0.823959).abs() < 1e-6);
        assert!((ch.negative_moment() - 0.274653).abs() < 1e-6);
    }

    #[test]
    fn awgn_moments_closed_form() {
        let ch = ChannelModel::awgn(1.0, 4.0).unwrap();
        assert!((ch.positive_moment() - 0.697796).abs() < 1e-6);
        assert!((ch.negative_moment() - 0.197796).abs() < 1e-6);
    }

    #[test]
    fn awgn_moments_match_quadrature() {
        for (ec, sigma2) in [(1.0, 4.0), (1.0, 1.0), (2.0, 0.5), (1.0, 9.0)] {
            let ch = ChannelModel::awgn(ec, sigma2).unwrap();
            let mean = 2.0 * ec / sigma2;
            let sd = (4.0 * ec / sigma2).sqrt();
            let pos = simpson_moment(mean, sd, 1, 0.0, mean + 14.0 * sd);
            let neg = -simpson_moment(mean, sd, 1, mean - 14.0 * sd, 0.0);
            assert!(
                (ch.positive_moment() - pos).abs() < 1e-10,
                "Ec={ec} s2={sigma2}"
            );
            assert!(
                (ch.negative_moment() - neg).abs() < 1e-10,
                "Ec={ec} s2={sigma2}"
            );
        }
    }

    #[test]
    fn bec_moments() {
        let ch = ChannelModel::bec(0.5).unwrap();
        assert_eq!(ch.positive_moment(), f64::INFINITY);
        assert_eq!(ch.negative_moment(), 0.0);
    }

    #[test]
    fn moment_difference_is_mean() {
        for ch in [
            ChannelModel::bsc(0.1).unwrap(),
            ChannelModel::bsc(0.45).unwrap(),
            ChannelModel::awgn(1.0, 2.0).unwrap(),
            ChannelModel::awgn(0.5, 0.7).unwrap(),
        ] {
            let diff = ch.positive_moment() - ch.negative_moment();
            assert!((diff - ch.llr_mean()).abs() < 1e-12, "{ch}");
        }
    }

    #[test]
    fn moments_are_nonnegative() {
        for ch in [
            ChannelModel::bsc(0.49).unwrap(),
            ChannelModel::bsc(0.01).unwrap(),
            ChannelModel::awgn(1.0, 100.0).unwrap(),
            ChannelModel::bec(0.9).unwrap(),
        ] {
            assert!(ch.positive_moment() >= 0.0);
            assert!(ch.negative_moment() >= 0.0);
        }
    }

    #[test]
    fn partial_sums_converge_to_moments() {
        // law-of-large-numbers check at n = 10^6, tolerance 3 standard errors
        let n = 1_000_000usize;
        for (ch, seed) in [
            (ChannelModel::bsc(0.3).unwrap(), 11u64),
            (ChannelModel::awgn(1.0, 2.0).unwrap(), 12),
        ] {
            let llrs = ch.sample_llrs(n, seed);
            let pos: f64 = llrs.values.iter().filter(|&&v| v >= 0.0).sum::<f64>() / n as f64;
            let neg: f64 = -llrs.values.iter().filter(|&&v| v < 0.0).sum::<f64>() / n as f64;
            // per-sample second moments bound the standard errors
            let second: f64 = llrs.values.iter().map(|v| v * v).sum::<f64>() / n as f64;
            let se = (second / n as f64).sqrt();
            assert!((pos - ch.positive_moment()).abs() < 3.0 * se, "{ch} pos");
            assert!((neg - ch.negative_moment()).abs() < 3.0 * se, "{ch} neg");
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let ch = ChannelModel::awgn(1.0, 1.5).unwrap();
        assert_eq!(ch.sample_llrs(100, 9).values, ch.sample_llrs(100, 9).values);
        assert_ne!(
            ch.sample_llrs(100, 9).values,
            ch.sample_llrs(100, 10).values
        );
    }
}
