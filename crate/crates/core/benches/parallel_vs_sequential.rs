//! Throughput comparison of the sequential and rayon trial runners on the
//! two Monte Carlo workloads: the cheap ratio-condition check and full LP
//! decoding. Run with `cargo bench`; the parallel benches need the default
//! `parallel` feature.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lpdec_core::bounds0::ratio_statistic;
use lpdec_core::channels::ChannelModel;
use lpdec_core::codes::Code;
use lpdec_core::decoder::lp_decode;
#[cfg(feature = "parallel")]
use lpdec_core::montecarlo::run_trials_parallel;
use lpdec_core::montecarlo::{run_trials_sequential, trial_seed, TrialOutcome};

fn ratio_trial(ch: &ChannelModel, n: usize, seed: u64) -> impl Fn(u64) -> TrialOutcome + Sync + '_ {
    move |t| {
        let gamma = ch.sample_llrs(n, trial_seed(seed, t));
        if ratio_statistic(&gamma, 6).passes {
            TrialOutcome::Pass
        } else {
            TrialOutcome::Fail
        }
    }
}

fn bench_ratio_condition(c: &mut Criterion) {
    let ch = ChannelModel::bsc(0.18).unwrap();
    let mut group = c.benchmark_group("ratio_condition_trials");
    group.sample_size(10);
    let trials = 200u64;
    let n = 10_000usize;
    group.bench_function(BenchmarkId::new("sequential", trials), |b| {
        b.iter(|| run_trials_sequential(trials, ratio_trial(&ch, n, 1)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function(BenchmarkId::new("parallel", trials), |b| {
        b.iter(|| run_trials_parallel(trials, ratio_trial(&ch, n, 1)))
    });
    group.finish();
}

fn bench_lp_decode(c: &mut Criterion) {
    let ch = ChannelModel::bsc(0.08).unwrap();
    let code = Code::fano();
    let decode_trial = |t: u64| {
        let gamma = ch.sample_llrs(code.n(), trial_seed(7, t));
        match lp_decode(&code, &gamma) {
            Ok(res) if res.error_event => TrialOutcome::Fail,
            Ok(_) => TrialOutcome::Pass,
            Err(_) => TrialOutcome::DecoderFailure,
        }
    };
    let mut group = c.benchmark_group("lp_decode_trials");
    group.sample_size(10);
    let trials = 200u64;
    group.bench_function(BenchmarkId::new("sequential", trials), |b| {
        b.iter(|| run_trials_sequential(trials, decode_trial))
    });
    #[cfg(feature = "parallel")]
    group.bench_function(BenchmarkId::new("parallel", trials), |b| {
        b.iter(|| run_trials_parallel(trials, decode_trial))
    });
    group.finish();
}

criterion_group!(benches, bench_ratio_condition, bench_lp_decode);
criterion_main!(benches);
