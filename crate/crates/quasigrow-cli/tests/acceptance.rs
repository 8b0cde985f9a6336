//! Acceptance: byte-determinism of the command surface.

use std::process::Command;
use std::time::Instant;

fn run(args: &[&str], env: &[(&str, &str)]) -> (Vec<u8>, Vec<u8>, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quasigrow"));
    cmd.args(args).env_remove("QUASIGROW_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.stdout,
        out.stderr,
        out.status.code().expect("no signal"),
    )
}

#[test]
fn c8_byte_determinism() {
    let started = Instant::now();
    let invocations: &[&[&str]] = &[
        &[
            "grow", "--seed", "1", "--length", "400", "--format", "letters",
        ],
        &[
            "grow", "--seed", "1/2", "--length", "50", "--left", "20", "--format", "json",
        ],
        &[
            "grow", "--seed", "-1+1t", "--length", "30", "--format", "svg",
        ],
        &[
            "deceptions",
            "--window",
            "3",
            "--max-len",
            "10",
            "--demo-trials",
            "2000",
            "--rng-seed",
            "42",
            "--json",
        ],
        &["deceptions", "--window", "12", "--max-len", "13"],
        &[
            "lift",
            "ABAABABAABAAB",
            "--offset",
            "1",
            "--mode",
            "geometric",
        ],
    ];
    for args in invocations {
        let first = run(args, &[]);
        let second = run(args, &[]);
        assert_eq!(first.2, 0, "command failed: {args:?}");
        assert_eq!(first, second, "non-identical reruns for {args:?}");
        assert!(!first.0.is_empty());
    }
    println!(
        "acceptance 8 (byte-identical reruns): PASS in {:.2?}",
        started.elapsed()
    );
}
