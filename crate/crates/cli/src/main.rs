//! Command-line front end: code generation, one-shot LP decoding, threshold
//! bound reports, figure-data CSV emitters, and Monte Carlo sweeps.
//!
//! Exit codes: 0 success, 1 input error, 2 numerical failure. All outputs
//! are deterministic for fixed flags and seed; wall-clock timing columns are
//! opt-in (`--timing`) so files stay byte-stable.

use clap::{Parser, Subcommand, ValueEnum};
use lpdec_core::bounds0::{
    asymptotic_condition, awgn_threshold_ub_with_tol, bsc_capacity_curve, fig1_data,
    fig1_default_pairs, fig2_data,
};
use lpdec_core::bounds2::{bsc_threshold_ub2, fig3_data, Bound2Setup, Bounds2Error};
use lpdec_core::channels::{ChannelModel, LlrVector};
use lpdec_core::codes::{
    alist, build_all_rows_code, build_array_code, build_bernoulli_code, build_pg2q_code,
    build_regular_code, Code,
};
use lpdec_core::decoder::lp_decode;
use lpdec_core::montecarlo::{estimate_condition_violation, estimate_lp_error_rate, SweepPoint};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lpdec",
    about = "LP decoding of LDPC codes and threshold bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for sweeps (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Emit reports as JSON instead of text/CSV.
    #[arg(long, global = true)]
    json: bool,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized constructions and sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepTarget {
    /// Violation rate of the ratio necessary condition.
    Ratio,
    /// LP block-error rate on a concrete code.
    Lp,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it in alist format (JSON descriptor with --json).
    GenCode {
        #[arg(long)]
        code: String,
    },
    /// LP-decode one LLR vector read from a JSON file.
    Decode {
        #[arg(long)]
        code: String,
        /// JSON array of numbers; "inf"/"-inf" mark infinite LLRs.
        #[arg(long)]
        llr: PathBuf,
        /// Include the fractional solution in the record.
        #[arg(long)]
        emit_omega: bool,
    },
    /// Sign-based asymptotic condition report for a channel and row weight.
    Bound0 {
        #[arg(long)]
        wrow: usize,
        #[arg(long)]
        channel: String,
    },
    /// AWGN noise threshold sigma* and SNR* for a row weight.
    AwgnBound {
        #[arg(long)]
        wrow: usize,
        #[arg(long, default_value_t = 1.0)]
        ec: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// 2-neighborhood BSC threshold upper bound by bisection.
    Bound2 {
        #[arg(long)]
        wcol: usize,
        #[arg(long)]
        wrow: usize,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        /// Dump the constraint system in plain-text LP form.
        #[arg(long)]
        dump_constraints: Option<PathBuf>,
    },
    /// Rate/threshold table for regular ensembles (CSV).
    Fig1 {
        /// Pairs like "3:6,4:8"; defaults to w_col 2..=6, w_row to 20.
        #[arg(long)]
        pairs: Option<String>,
        /// Also write the BSC capacity curve to this file.
        #[arg(long)]
        capacity_out: Option<PathBuf>,
        #[arg(long, default_value_t = 0.005)]
        capacity_step: f64,
    },
    /// Rate/threshold table for the PG(2, 2^s) family (CSV).
    Fig2 {
        /// Comma-separated exponents, e.g. "1,2,3".
        #[arg(long)]
        s: String,
    },
    /// 0- vs 2-neighborhood bounds per pair (CSV, sorted by rate).
    Fig3 {
        #[arg(long)]
        pairs: String,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Monte Carlo sweep over a channel-parameter grid (CSV).
    Sweep {
        #[arg(long, value_enum, default_value_t = SweepTarget::Ratio)]
        target: SweepTarget,
        /// Row weight for the ratio target.
        #[arg(long)]
        wrow: Option<usize>,
        /// Block length for the ratio target.
        #[arg(long)]
        n: Option<usize>,
        /// Code spec for the lp target.
        #[arg(long)]
        code: Option<String>,
        /// bsc, bec, or awgn (the grid sweeps epsilon or sigma2).
        #[arg(long)]
        channel_family: String,
        #[arg(long, default_value_t = 1.0)]
        ec: f64,
        /// Grid "lo:hi:step", inclusive of hi up to rounding.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        /// Append a wall-clock seconds column (breaks byte-stability).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Numerical(String),
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn numerical<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Numerical(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let threads = cli.threads.max(1);
    let run_all = || match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(2)
        }
    };
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(run_all),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        run_all()
    }
}

/// Nine significant digits, plain decimal.
fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (8 - exp).clamp(0, 17) as usize;
    format!("{:.*}", decimals, x)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Code specs: `fano`, `pg:<s>`, `regular:n=..,wcol=..,wrow=..`,
/// `allrows:n=..,w=..`, `bernoulli:n=..,m=..,theta=..`,
/// `array:wcol=..,wrow=..,p=..`, or a path to an alist/JSON file.
fn parse_code(spec: &str, seed: u64) -> Result<Code, Failure> {
    if spec == "fano" {
        return Ok(Code::fano());
    }
    if spec.contains('/') || spec.ends_with(".alist") || spec.ends_with(".json") {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| Failure::Input(format!("cannot read {spec}: {e}")))?;
        return if spec.ends_with(".json") {
            alist::read_json_descriptor(&text).map_err(input)
        } else {
            alist::read_alist(&text).map_err(input)
        };
    }
    let (family, rest) = spec
        .split_once(':')
        .ok_or_else(|| Failure::Input(format!("unrecognized code spec '{spec}'")))?;
    let mut fields = std::collections::BTreeMap::new();
    if family != "pg" {
        for part in rest.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Failure::Input(format!("expected key=value in '{part}'")))?;
            fields.insert(k.to_string(), v.to_string());
        }
    }
    let get = |key: &str| {
        fields
            .get(key)
            .ok_or_else(|| Failure::Input(format!("code spec '{spec}' is missing {key}")))
    };
    let get_usize = |key: &str| -> Result<usize, Failure> {
        get(key)?
            .parse()
            .map_err(|_| Failure::Input(format!("bad integer for {key}")))
    };
    match family {
        "pg" => {
            let s: u32 = rest
                .parse()
                .map_err(|_| Failure::Input(format!("bad pg order '{rest}'")))?;
            build_pg2q_code(s).map_err(input)
        }
        "regular" => build_regular_code(
            get_usize("n")?,
            get_usize("wcol")?,
            get_usize("wrow")?,
            seed,
        )
        .map_err(input),
        "allrows" => build_all_rows_code(get_usize("n")?, get_usize("w")?).map_err(input),
        "bernoulli" => {
            let theta: f64 = get("theta")?
                .parse()
                .map_err(|_| Failure::Input("bad theta".to_string()))?;
            build_bernoulli_code(get_usize("n")?, get_usize("m")?, theta, seed).map_err(input)
        }
        "array" => build_array_code(
            get_usize("wcol")?,
            get_usize("wrow")?,
            get_usize("p")?,
            seed,
        )
        .map_err(input),
        _ => Err(Failure::Input(format!("unknown code family '{family}'"))),
    }
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(',')
        .map(|pair| {
            let (a, b) = pair
                .split_once(':')
                .ok_or_else(|| Failure::Input(format!("expected wcol:wrow, got '{pair}'")))?;
            let w_col = a
                .parse()
                .map_err(|_| Failure::Input(format!("bad integer '{a}'")))?;
            let w_row = b
                .parse()
                .map_err(|_| Failure::Input(format!("bad integer '{b}'")))?;
            if w_col >= w_row {
                return Err(Failure::Input(format!("need wcol < wrow in '{pair}'")));
            }
            Ok((w_col, w_row))
        })
        .collect()
}

fn parse_grid(text: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err(Failure::Input(format!("expected lo:hi:step, got '{text}'")));
    };
    let parse = |t: &str| {
        t.parse::<f64>()
            .map_err(|_| Failure::Input(format!("bad number '{t}'")))
    };
    let (lo, hi, step) = (parse(lo)?, parse(hi)?, parse(step)?);
    if !(step > 0.0 && hi >= lo) {
        return Err(Failure::Input(
            "grid needs hi >= lo and step > 0".to_string(),
        ));
    }
    let mut values = Vec::new();
    let mut k = 0u64;
    loop {
        let v = lo + step * k as f64;
        if v > hi + 1e-12 {
            break;
        }
        values.push(v);
        k += 1;
    }
    Ok(values)
}

fn read_llr_file(path: &PathBuf) -> Result<LlrVector, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("bad LLR JSON: {e}")))?;
    let array = value
        .as_array()
        .ok_or_else(|| Failure::Input("LLR file must be a JSON array".to_string()))?;
    let mut llrs = Vec::with_capacity(array.len());
    for entry in array {
        let v = match entry {
            serde_json::Value::Number(x) => x
                .as_f64()
                .ok_or_else(|| Failure::Input(format!("bad LLR value {x}")))?,
            serde_json::Value::String(s) => match s.as_str() {
                "inf" | "+inf" => f64::INFINITY,
                "-inf" => f64::NEG_INFINITY,
                other => return Err(Failure::Input(format!("bad LLR marker \"{other}\""))),
            },
            other => return Err(Failure::Input(format!("bad LLR entry {other}"))),
        };
        if v.is_nan() {
            return Err(Failure::Input("LLR entries must not be NaN".to_string()));
        }
        llrs.push(v);
    }
    Ok(LlrVector::new(llrs))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::GenCode { code } => {
            let code = parse_code(&code, cli.seed)?;
            let content = if cli.json {
                let mut s = alist::write_json_descriptor(&code);
                s.push('\n');
                s
            } else {
                alist::write_alist(&code)
            };
            emit(&cli.out, &content)
        }
        Command::Decode {
            code,
            llr,
            emit_omega,
        } => {
            let code = parse_code(&code, cli.seed)?;
            let gamma = read_llr_file(&llr)?;
            let res = lp_decode(&code, &gamma).map_err(numerical)?;
            let mut record = serde_json::json!({
                "objective": res.objective,
                "integral": res.integral,
                "error_event": res.error_event,
            });
            if emit_omega {
                record["omega"] = serde_json::json!(res.omega_hat.values);
            }
            emit(&cli.out, &format!("{record}\n"))
        }
        Command::Bound0 { wrow, channel } => {
            if wrow < 2 {
                return Err(Failure::Input("wrow must be at least 2".to_string()));
            }
            let ch = ChannelModel::parse(&channel).map_err(input)?;
            let report = asymptotic_condition(&ch, wrow);
            let content = if cli.json {
                let mut record = serde_json::json!({
                    "channel": ch.to_string(),
                    "w_row": wrow,
                    "lhs": report.lhs,
                    "condition_holds": report.condition_holds,
                    "boundary": report.boundary,
                });
                if let Some(eps) = report.eps_ub {
                    record["eps_ub"] = serde_json::json!(eps);
                }
                if let Some(sigma) = report.sigma_ub {
                    record["sigma_ub"] = serde_json::json!(sigma);
                }
                format!("{record}\n")
            } else {
                let mut text = String::new();
                let _ = writeln!(text, "channel: {ch}");
                let _ = writeln!(text, "w_row: {wrow}");
                let _ = writeln!(text, "lhs: {}", sig9(report.lhs));
                let _ = writeln!(text, "threshold: {}", wrow - 1);
                let verdict = match (report.condition_holds, report.boundary) {
                    (true, true) => "holds (boundary)",
                    (true, false) => "holds",
                    _ => "fails",
                };
                let _ = writeln!(text, "condition: {verdict}");
                if let Some(eps) = report.eps_ub {
                    let _ = writeln!(text, "eps_ub: {}", sig9(eps));
                }
                if let Some(sigma) = report.sigma_ub {
                    let _ = writeln!(text, "sigma_ub: {}", sig9(sigma));
                }
                text
            };
            emit(&cli.out, &content)
        }
        Command::AwgnBound { wrow, ec, tol } => {
            if wrow < 3 {
                return Err(Failure::Input(
                    "wrow must be at least 3 (the condition never bites for wrow = 2)".to_string(),
                ));
            }
            if !(ec > 0.0 && tol > 0.0) {
                return Err(Failure::Input("ec and tol must be positive".to_string()));
            }
            let (sigma, snr) = awgn_threshold_ub_with_tol(wrow, ec, tol).map_err(numerical)?;
            let content = if cli.json {
                format!(
                    "{}\n",
                    serde_json::json!({
                        "w_row": wrow,
                        "ec": ec,
                        "sigma_star": sigma,
                        "snr_star": snr,
                        "snr_star_db": 10.0 * snr.log10(),
                    })
                )
            } else {
                format!(
                    "w_row: {wrow}\nEc: {}\nsigma_star: {}\nsnr_star: {}\nsnr_star_db: {}\n",
                    sig9(ec),
                    sig9(sigma),
                    sig9(snr),
                    sig9(10.0 * snr.log10())
                )
            };
            emit(&cli.out, &content)
        }
        Command::Bound2 {
            wcol,
            wrow,
            tol,
            dump_constraints,
        } => {
            if !(2 <= wcol && wcol < wrow) {
                return Err(Failure::Input("need 2 <= wcol < wrow".to_string()));
            }
            if !(tol > 0.0) {
                return Err(Failure::Input("tol must be positive".to_string()));
            }
            if let Some(path) = dump_constraints {
                let setup = Bound2Setup::new(wcol, wrow).map_err(input)?;
                std::fs::write(&path, setup.system.to_lp_text())
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            let report = bsc_threshold_ub2(wcol, wrow, tol).map_err(|e| match e {
                Bounds2Error::Lp(_) => numerical(e),
                other => input(other),
            })?;
            let content = if cli.json {
                format!(
                    "{}\n",
                    serde_json::json!({
                        "w_col": wcol,
                        "w_row": wrow,
                        "eps_ub0": 1.0 / wrow as f64,
                        "eps_ub2": report.eps_ub2,
                        "restricted_eps": report.restricted_eps,
                        "lp_orbit_vars": report.lp_orbit_vars,
                        "lp_aux_vars": report.lp_aux_vars,
                        "lp_constraints": report.lp_constraints,
                    })
                )
            } else {
                format!(
                    "w_col: {wcol}\nw_row: {wrow}\norbits: {}\nlp_constraints: {}\n\
                     restricted_eps: {}\neps_ub0: {}\neps_ub2: {}\n",
                    report.lp_orbit_vars,
                    report.lp_constraints,
                    sig9(report.restricted_eps),
                    sig9(1.0 / wrow as f64),
                    sig9(report.eps_ub2)
                )
            };
            emit(&cli.out, &content)
        }
        Command::Fig1 {
            pairs,
            capacity_out,
            capacity_step,
        } => {
            let pairs = match pairs {
                Some(text) => parse_pairs(&text)?,
                None => fig1_default_pairs(),
            };
            let rows = fig1_data(&pairs);
            let content = if cli.json {
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "w_col": r.w_col, "w_row": r.w_row,
                            "rate": r.rate, "eps_ub": r.eps_ub,
                        })
                    })
                    .collect();
                format!("{}\n", serde_json::Value::from(rows))
            } else {
                let mut csv = String::from("w_col,w_row,rate,eps_ub\n");
                for r in &rows {
                    let _ = writeln!(
                        csv,
                        "{},{},{},{}",
                        r.w_col,
                        r.w_row,
                        sig9(r.rate),
                        sig9(r.eps_ub)
                    );
                }
                csv
            };
            if let Some(path) = capacity_out {
                if !(capacity_step > 0.0 && capacity_step < 0.5) {
                    return Err(Failure::Input(
                        "capacity step must be in (0, 0.5)".to_string(),
                    ));
                }
                let mut csv = String::from("eps,capacity\n");
                for (eps, c) in bsc_capacity_curve(capacity_step) {
                    let _ = writeln!(csv, "{},{}", sig9(eps), sig9(c));
                }
                std::fs::write(&path, csv)
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            emit(&cli.out, &content)
        }
        Command::Fig2 { s } => {
            let s_list: Vec<u32> = s
                .split(',')
                .map(|t| {
                    t.parse()
                        .map_err(|_| Failure::Input(format!("bad exponent '{t}'")))
                })
                .collect::<Result<_, _>>()?;
            let rows = fig2_data(&s_list).map_err(input)?;
            let content = if cli.json {
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "q": r.q, "n": r.n, "rate": r.rate, "eps_ub": r.eps_ub,
                        })
                    })
                    .collect();
                format!("{}\n", serde_json::Value::from(rows))
            } else {
                let mut csv = String::from("q,n,rate,eps_ub\n");
                for r in &rows {
                    let _ = writeln!(csv, "{},{},{},{}", r.q, r.n, sig9(r.rate), sig9(r.eps_ub));
                }
                csv
            };
            emit(&cli.out, &content)
        }
        Command::Fig3 { pairs, tol } => {
            if !(tol > 0.0) {
                return Err(Failure::Input("tol must be positive".to_string()));
            }
            let pairs = parse_pairs(&pairs)?;
            let rows = fig3_data(&pairs, tol).map_err(|e| match e {
                Bounds2Error::Lp(_) => numerical(e),
                other => input(other),
            })?;
            let content = if cli.json {
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "w_col": r.w_col, "w_row": r.w_row, "rate": r.rate,
                            "eps_ub0": r.eps_ub0, "eps_ub2": r.eps_ub2,
                        })
                    })
                    .collect();
                format!("{}\n", serde_json::Value::from(rows))
            } else {
                let mut csv = String::from("w_col,w_row,rate,eps_ub0,eps_ub2\n");
                for r in &rows {
                    let _ = writeln!(
                        csv,
                        "{},{},{},{},{}",
                        r.w_col,
                        r.w_row,
                        sig9(r.rate),
                        sig9(r.eps_ub0),
                        sig9(r.eps_ub2)
                    );
                }
                csv
            };
            emit(&cli.out, &content)
        }
        Command::Sweep {
            target,
            wrow,
            n,
            code,
            channel_family,
            ec,
            grid,
            trials,
            timing,
        } => {
            if trials == 0 {
                return Err(Failure::Input("trials must be positive".to_string()));
            }
            let grid = parse_grid(&grid)?;
            let make_channel = |param: f64| -> Result<ChannelModel, Failure> {
                match channel_family.as_str() {
                    "bsc" => ChannelModel::bsc(param).map_err(input),
                    "bec" => ChannelModel::bec(param).map_err(input),
                    "awgn" => ChannelModel::awgn(ec, param).map_err(input),
                    other => Err(Failure::Input(format!("unknown channel family '{other}'"))),
                }
            };
            let mut points: Vec<SweepPoint> = Vec::with_capacity(grid.len());
            match target {
                SweepTarget::Ratio => {
                    let wrow =
                        wrow.ok_or_else(|| Failure::Input("ratio sweeps need --wrow".into()))?;
                    let n = n.ok_or_else(|| Failure::Input("ratio sweeps need --n".into()))?;
                    if wrow < 2 || n == 0 {
                        return Err(Failure::Input("need wrow >= 2 and n >= 1".to_string()));
                    }
                    for &param in &grid {
                        let ch = make_channel(param)?;
                        points.push(
                            estimate_condition_violation(wrow, n, &ch, trials, cli.seed)
                                .map_err(numerical)?,
                        );
                    }
                }
                SweepTarget::Lp => {
                    let spec =
                        code.ok_or_else(|| Failure::Input("lp sweeps need --code".into()))?;
                    let code = parse_code(&spec, cli.seed)?;
                    for &param in &grid {
                        let ch = make_channel(param)?;
                        points.push(
                            estimate_lp_error_rate(&code, &ch, trials, cli.seed)
                                .map_err(numerical)?,
                        );
                    }
                }
            }
            let content = if cli.json {
                let rows: Vec<serde_json::Value> = points
                    .iter()
                    .map(|p| {
                        let mut row = serde_json::json!({
                            "param": p.param,
                            "trials": p.trials,
                            "failures": p.failures,
                            "rate": p.rate,
                            "ci_lo": p.ci_lo,
                            "ci_hi": p.ci_hi,
                            "decoder_failures": p.decoder_failures,
                        });
                        if timing {
                            row["seconds"] = serde_json::json!(p.seconds);
                        }
                        row
                    })
                    .collect();
                format!("{}\n", serde_json::Value::from(rows))
            } else {
                let mut csv = String::from(if timing {
                    "param,trials,failures,rate,ci_lo,ci_hi,seconds\n"
                } else {
                    "param,trials,failures,rate,ci_lo,ci_hi\n"
                });
                for p in &points {
                    let _ = write!(
                        csv,
                        "{},{},{},{},{},{}",
                        sig9(p.param),
                        p.trials,
                        p.failures,
                        sig9(p.rate),
                        sig9(p.ci_lo),
                        sig9(p.ci_hi)
                    );
                    if timing {
                        let _ = write!(csv, ",{:.3}", p.seconds);
                    }
                    csv.push('\n');
                }
                csv
            };
            emit(&cli.out, &content)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig9_formats_nine_significant_digits() {
        assert_eq!(sig9(0.25), "0.250000000");
        assert_eq!(sig9(1.0 / 6.0), "0.166666667");
        assert_eq!(sig9(4.0), "4.00000000");
        assert_eq!(sig9(-3.930483), "-3.93048300");
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(f64::INFINITY), "inf");
        assert_eq!(sig9(1e-7), "0.000000100000000");
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("0.1:0.3:0.1").unwrap(), vec![0.1, 0.2, 0.30000000000000004]);
        assert_eq!(parse_grid("0.2:0.2:0.5").unwrap(), vec![0.2]);
        assert!(parse_grid("0.3:0.1:0.1").is_err());
        assert!(parse_grid("0.1:0.2:0").is_err());
        assert!(parse_grid("0.1:0.2").is_err());
    }

    #[test]
    fn pair_parsing() {
        assert_eq!(parse_pairs("3:6,4:8").unwrap(), vec![(3, 6), (4, 8)]);
        assert!(parse_pairs("6:3").is_err());
        assert!(parse_pairs("3-6").is_err());
    }

    #[test]
    fn code_specs() {
        assert_eq!(parse_code("fano", 0).unwrap().n(), 7);
        assert_eq!(parse_code("pg:2", 0).unwrap().n(), 21);
        assert_eq!(parse_code("allrows:n=4,w=2", 0).unwrap().m(), 6);
        let regular = parse_code("regular:n=12,wcol=3,wrow=4", 5).unwrap();
        assert_eq!((regular.n(), regular.m()), (12, 9));
        assert!(parse_code("regular:n=12,wcol=3", 0).is_err());
        assert!(parse_code("mystery:n=1", 0).is_err());
    }
}
