//! Acceptance: every subcommand is byte-stable across two runs with
//! identical flags and seed, the parallel and sequential sweep paths agree,
//! and exit codes follow the 0/1/2 convention.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

static COUNTER: AtomicU32 = AtomicU32::new(0);

fn scratch(name: &str) -> PathBuf {
    let k = COUNTER.fetch_add(1, Ordering::Relaxed);
    std::env::temp_dir().join(format!("lpdec-test-{}-{k}-{name}", std::process::id()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpdec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_stable(args: &[&str]) {
    let first = run(args);
    let second = run(args);
    assert!(
        first.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(first.status.code(), second.status.code(), "{args:?}");
    assert_eq!(first.stdout, second.stdout, "stdout differs for {args:?}");
}

fn assert_stable_file(args: &[&str], path: &PathBuf) -> Vec<u8> {
    let first = run(args);
    assert!(
        first.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    let bytes_a = std::fs::read(path).expect("output file written");
    let second = run(args);
    assert!(second.status.success());
    let bytes_b = std::fs::read(path).expect("output file written twice");
    assert_eq!(bytes_a, bytes_b, "file differs for {args:?}");
    bytes_a
}

#[test]
fn criterion_10_every_subcommand_is_byte_stable() {
    // gen-code, alist and JSON descriptor forms
    let alist_path = scratch("code.alist");
    let alist_str = alist_path.to_str().unwrap();
    let bytes = assert_stable_file(
        &[
            "gen-code",
            "--code",
            "regular:n=12,wcol=3,wrow=4",
            "--seed",
            "7",
            "--out",
            alist_str,
        ],
        &alist_path,
    );
    assert!(bytes.starts_with(b"12 9\n"));
    assert_stable(&["gen-code", "--code", "fano", "--json"]);
    assert_stable(&["gen-code", "--code", "allrows:n=4,w=2"]);

    // decode from an LLR file, reading the generated alist back
    let llr_path = scratch("llr.json");
    std::fs::write(
        &llr_path,
        "[1.0, 2.0, 0.5, 1.5, 3.0, 1.0, 2.0, 1.0, 0.5, 1.0, 2.0, \"inf\"]",
    )
    .unwrap();
    let decode_args = [
        "decode",
        "--code",
        alist_str,
        "--llr",
        llr_path.to_str().unwrap(),
        "--emit-omega",
    ];
    assert_stable(&decode_args);
    let out = run(&decode_args);
    let record: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(record["error_event"], serde_json::json!(false));

    // bound reports
    assert_stable(&["bound0", "--wrow", "6", "--channel", "bsc:0.2"]);
    assert_stable(&["bound0", "--wrow", "6", "--channel", "bsc:0.2", "--json"]);
    assert_stable(&["bound0", "--wrow", "4", "--channel", "awgn:Ec=1,sigma2=2"]);
    assert_stable(&["bound0", "--wrow", "5", "--channel", "bec:0.3"]);
    assert_stable(&["awgn-bound", "--wrow", "4"]);
    assert_stable(&["awgn-bound", "--wrow", "6", "--json"]);

    let dump_path = scratch("cone.lp");
    let bound2_args = [
        "bound2",
        "--wcol",
        "3",
        "--wrow",
        "4",
        "--tol",
        "1e-2",
        "--dump-constraints",
        dump_path.to_str().unwrap(),
    ];
    assert_stable(&bound2_args);
    let dump_a = std::fs::read(&dump_path).unwrap();
    run(&bound2_args);
    assert_eq!(dump_a, std::fs::read(&dump_path).unwrap());
    assert!(String::from_utf8(dump_a).unwrap().lines().count() > 40);

    // figure emitters
    let cap_path = scratch("capacity.csv");
    let fig1_args = [
        "fig1",
        "--pairs",
        "3:6,4:8,3:4",
        "--capacity-out",
        cap_path.to_str().unwrap(),
    ];
    assert_stable(&fig1_args);
    let cap_a = std::fs::read(&cap_path).unwrap();
    run(&fig1_args);
    assert_eq!(cap_a, std::fs::read(&cap_path).unwrap());
    assert_stable(&["fig2", "--s", "1,2,3"]);
    assert_stable(&["fig2", "--s", "1,2", "--json"]);
    assert_stable(&["fig3", "--pairs", "3:4", "--tol", "1e-2"]);

    // sweeps, both targets
    assert_stable(&[
        "sweep",
        "--target",
        "ratio",
        "--wrow",
        "6",
        "--n",
        "1000",
        "--channel-family",
        "bsc",
        "--grid",
        "0.1:0.2:0.05",
        "--trials",
        "40",
        "--seed",
        "3",
    ]);
    assert_stable(&[
        "sweep",
        "--target",
        "lp",
        "--code",
        "fano",
        "--channel-family",
        "bsc",
        "--grid",
        "0.05:0.1:0.05",
        "--trials",
        "40",
        "--seed",
        "2",
        "--json",
    ]);
    println!("PASS criterion 10: all subcommands byte-stable across repeated runs");
}

#[test]
fn parallel_sweep_matches_single_thread() {
    let base = [
        "sweep",
        "--target",
        "lp",
        "--code",
        "fano",
        "--channel-family",
        "bsc",
        "--grid",
        "0.05:0.15:0.05",
        "--trials",
        "60",
        "--seed",
        "5",
    ];
    let single = run(&[&base[..], &["--threads", "1"]].concat());
    let multi = run(&[&base[..], &["--threads", "4"]].concat());
    assert!(single.status.success() && multi.status.success());
    assert_eq!(single.stdout, multi.stdout);
}

#[test]
fn exit_codes_follow_the_convention() {
    // parse failures and bad preconditions exit 1
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(
        run(&["bound0", "--wrow", "6", "--channel", "bsc:1.5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["bound0", "--wrow", "1", "--channel", "bsc:0.1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["gen-code", "--code", "regular:n=7,wcol=3,wrow=4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["awgn-bound", "--wrow", "2"]).status.code(), Some(1));
    assert_eq!(
        run(&[
            "sweep",
            "--target",
            "lp",
            "--channel-family",
            "bsc",
            "--grid",
            "0.1:0.2:0.1"
        ])
        .status
        .code(),
        Some(1)
    );

    // successful reports exit 0 even when the condition fails
    assert_eq!(
        run(&["bound0", "--wrow", "6", "--channel", "bsc:0.2"])
            .status
            .code(),
        Some(0)
    );
}
