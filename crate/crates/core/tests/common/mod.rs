//! Shared oracles for the integration suites, independent of the library's
//! closed-form implementations.

/// Composite-Simpson integral of x^k times the Normal(mean, sd^2) density
/// over [lo, hi].
pub fn simpson_normal_moment(mean: f64, sd: f64, k: u32, lo: f64, hi: f64) -> f64 {
    if hi <= lo {
        return 0.0;
    }
    let steps = 80_000usize; // even
    let h = (hi - lo) / steps as f64;
    let pdf = |x: f64| {
        let z = (x - mean) / sd;
        (-0.5 * z * z).exp() / (sd * (2.0 * std::f64::consts::PI).sqrt())
    };
    let f = |x: f64| x.powi(k as i32) * pdf(x);
    let mut acc = f(lo) + f(hi);
    for i in 1..steps {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(lo + i as f64 * h);
    }
    acc * h / 3.0
}

/// Positive and negative partial moments of the AWGN LLR law by quadrature.
pub fn awgn_partial_moments_by_quadrature(ec: f64, sigma2: f64) -> (f64, f64) {
    let mean = 2.0 * ec / sigma2;
    let sd = (4.0 * ec / sigma2).sqrt();
    let pos = simpson_normal_moment(mean, sd, 1, 0.0, mean + 14.0 * sd);
    let neg = -simpson_normal_moment(mean, sd, 1, mean - 14.0 * sd, 0.0);
    (pos, neg)
}
