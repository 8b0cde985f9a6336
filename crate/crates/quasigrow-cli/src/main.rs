//! `quasigrow` — grow, verify, enumerate, lift, render.
//!
//! Exit codes: 0 success, 1 selftest/IO failure, 2 parse failure, 3 seed
//! out of range, 4 oracle disagreement, 5 enumeration budget exceeded.
//! All JSON goes to stdout; diagnostics go to stderr.

mod record;
mod selftest;

use clap::{Parser, Subcommand, ValueEnum};
use quasigrow::covering::{self, TileGeometry};
use quasigrow::deceptions::{self, DeceptionError, DEFAULT_BUDGET};
use quasigrow::golden::GoldenNumber;
use quasigrow::hyperlift::{self, PerpMode};
use quasigrow::words::{self, Word};
use record::RunRecord;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "quasigrow",
    version,
    about = "Grow and verify 1D quasiperiodic coverings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow a covering from a seed string height
    Grow {
        /// Seed height in [0, τ) as a golden string, e.g. "1" or "-1+1t"
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        /// Number of tiles attached to the right (the seed tile is free)
        #[arg(long, default_value_t = 0)]
        length: usize,
        /// Number of tiles attached to the left
        #[arg(long, default_value_t = 0)]
        left: usize,
        #[arg(long, value_enum, default_value_t = GrowFormat::Letters)]
        format: GrowFormat,
        /// Overlap half-width w (golden string, default 1/(2τ): square tiles)
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
    /// Check a word against the three factor oracles
    Verify {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the deceptions of a fixed-window growth rule
    Deceptions {
        /// Window length r of the conventional rule
        #[arg(long)]
        window: usize,
        /// Word length to scan exhaustively (2^L candidates, pruned)
        #[arg(long)]
        max_len: usize,
        /// Also run the randomized greedy-growth failure demo
        #[arg(long, requires = "rng_seed")]
        demo_trials: Option<usize>,
        /// RNG seed for the demo (required with --demo-trials)
        #[arg(long)]
        rng_seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Lift a word to the 2D lattice and test the strip criterion
    Lift {
        word: String,
        #[arg(long, value_enum, default_value_t = LiftMode::Scaled)]
        mode: LiftMode,
        /// Starting perpendicular coordinate (golden string)
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        offset: String,
        /// Emit the staircase figure as SVG instead of JSON
        #[arg(long)]
        svg: bool,
    },
    /// Grow a covering and render it as SVG
    Render {
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long, default_value_t = 0)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        left: usize,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the oracles and the forcing bounds
    Selftest {
        /// Limit the agreement sweep to n ≤ 8 (sub-second)
        #[arg(long)]
        quick: bool,
        #[arg(long, hide = true)]
        inject_bug: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GrowFormat {
    Letters,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftMode {
    Scaled,
    Geometric,
}

enum Failure {
    Io(String),
    Parse(String),
    OutOfRange(String),
    OracleMismatch(String),
    Budget(String),
    SelftestFailed,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::SelftestFailed => 1,
            Failure::Parse(_) => 2,
            Failure::OutOfRange(_) => 3,
            Failure::OracleMismatch(_) => 4,
            Failure::Budget(_) => 5,
        }
    }

    fn message(&self) -> Option<&str> {
        match self {
            Failure::Io(m)
            | Failure::Parse(m)
            | Failure::OutOfRange(m)
            | Failure::OracleMismatch(m)
            | Failure::Budget(m) => Some(m),
            Failure::SelftestFailed => None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Some(message) = failure.message() {
                eprintln!("quasigrow: {message}");
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn parse_golden(text: &str, what: &str) -> Result<GoldenNumber, Failure> {
    text.parse()
        .map_err(|e| Failure::Parse(format!("{what}: {e}")))
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse()
        .map_err(|e| Failure::Parse(format!("word: {e}")))
}

fn parse_geometry(w: Option<&str>) -> Result<TileGeometry, Failure> {
    match w {
        None => Ok(TileGeometry::square()),
        Some(text) => {
            let w = parse_golden(text, "w")?;
            TileGeometry::new(w).map_err(|_| Failure::Parse("w must be positive".into()))
        }
    }
}

fn budget_from_env() -> Result<usize, Failure> {
    match std::env::var("QUASIGROW_BUDGET") {
        Err(_) => Ok(DEFAULT_BUDGET),
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::Parse(format!("QUASIGROW_BUDGET {text:?} is not an integer"))),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Grow {
            seed,
            length,
            left,
            format,
            w,
        } => {
            let seed_value = parse_golden(&seed, "seed")?;
            let geometry = parse_geometry(w.as_deref())?;
            let covering = covering::grow_with_geometry(&seed_value, length, left, geometry)
                .map_err(|e| Failure::OutOfRange(e.to_string()))?;
            match format {
                GrowFormat::Letters => println!("{}", covering.letters()),
                GrowFormat::Svg => print!("{}", covering::render_svg(&covering)),
                GrowFormat::Json => {
                    let heights: Vec<String> =
                        covering.y_l_sequence().map(|y| y.to_string()).collect();
                    let record = RunRecord::new("grow")
                        .param("seed", seed_value.to_string())
                        .param("length", length)
                        .param("left", left)
                        .param("format", "json")
                        .outputs(json!({
                            "seed": seed_value.to_string(),
                            "n_right": length,
                            "n_left": left,
                            "letters": covering.letters().to_string(),
                            "heights": heights,
                            "geometry": { "w": covering.geometry().w().to_string() },
                        }));
                    println!("{}", record.render());
                }
            }
            Ok(())
        }

        Command::Verify { word, json } => {
            let w = parse_word(&word)?;
            let interval = covering::feasible_interval(&w);
            let by_interval = !interval.is_empty();
            let by_substring = words::substring_factor(&w);
            let width = hyperlift::strip_width(&w, PerpMode::Scaled);
            let by_strip = (&width - &hyperlift::strip_threshold(PerpMode::Scaled)).is_negative();
            if by_interval != by_substring || by_strip != by_substring {
                return Err(Failure::OracleMismatch(format!(
                    "oracles disagree on {w}: interval={by_interval} substring={by_substring} strip={by_strip}"
                )));
            }
            let depth = words::deflation_illegality_depth(&w, 32);
            if json {
                let record = RunRecord::new("verify")
                    .param("word", w.to_string())
                    .outputs(json!({
                        "word": w.to_string(),
                        "is_factor": by_interval,
                        "feasible_interval": interval_json(&interval),
                        "strip_width": width.to_string(),
                        "strip_width_approx": width.to_f64(),
                        "deflation_depth_to_bb": depth,
                    }));
                println!("{}", record.render());
            } else {
                println!("word: {w}");
                println!("factor: {}", if by_interval { "yes" } else { "no" });
                println!("feasible interval: {interval}");
                println!("strip width (scaled): {} (~{:.6})", width, width.to_f64());
                match depth {
                    Some(d) => println!("deflation depth to BB: {d}"),
                    None => println!("deflation depth to BB: none"),
                }
            }
            Ok(())
        }

        Command::Deceptions {
            window,
            max_len,
            demo_trials,
            rng_seed,
            json,
        } => {
            if window == 0 {
                return Err(Failure::Parse("window must be at least 1".into()));
            }
            let budget = budget_from_env()?;
            let reports = deceptions::enumerate_deceptions_with_budget(max_len, window, budget)
                .map_err(|e @ DeceptionError::BudgetExceeded { .. }| {
                    Failure::Budget(e.to_string())
                })?;
            let demo = demo_trials.map(|trials| {
                deceptions::greedy_growth_failure_demo(
                    window,
                    trials,
                    max_len,
                    rng_seed.expect("clap enforces rng_seed with demo_trials"),
                )
            });
            if json {
                let rows: Vec<Value> = reports
                    .iter()
                    .map(|rep| {
                        json!({
                            "word": rep.word.to_string(),
                            "window": rep.window,
                            "depth_to_bb": rep.composition_depth_to_bb,
                            "windows_verified": rep.windows_verified,
                        })
                    })
                    .collect();
                let demo_json = demo.as_ref().map(|stats| {
                    json!({
                        "trials": stats.trials,
                        "failures": stats.failures,
                        "failure_fraction": stats.failure_fraction,
                        "stuck": stats.stuck,
                    })
                });
                let mut record = RunRecord::new("deceptions")
                    .param("window", window)
                    .param("max_len", max_len)
                    .param("budget", budget)
                    .outputs(json!({ "deceptions": rows, "demo": demo_json }));
                if let Some(seed) = rng_seed {
                    record = record.param("rng_seed", seed);
                }
                println!("{}", record.render());
            } else {
                println!("deceptions of length {max_len} under a window-{window} rule:");
                for rep in &reports {
                    let depth = rep
                        .composition_depth_to_bb
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "none".into());
                    let verified = if rep.windows_verified { "yes" } else { "NO" };
                    println!(
                        "  {}  depth_to_BB={}  windows_ok={}",
                        rep.word, depth, verified
                    );
                }
                println!("{} deception(s)", reports.len());
                if let Some(stats) = demo {
                    println!(
                        "greedy demo: {}/{} trials ended off-lattice (fraction {:.4}, {} stuck early)",
                        stats.failures, stats.trials, stats.failure_fraction, stats.stuck
                    );
                }
            }
            Ok(())
        }

        Command::Lift {
            word,
            mode,
            offset,
            svg,
        } => {
            let w = parse_word(&word)?;
            let offset_value = parse_golden(&offset, "offset")?;
            let mode = match mode {
                LiftMode::Scaled => PerpMode::Scaled,
                LiftMode::Geometric => PerpMode::Geometric,
            };
            let staircase = hyperlift::lift(&w);
            if svg {
                // the band figure wants the scaled offset
                let scaled_offset = match mode {
                    PerpMode::Scaled => offset_value,
                    PerpMode::Geometric => &offset_value * &GoldenNumber::inv_tau(),
                };
                print!("{}", hyperlift::staircase_svg(&staircase, &scaled_offset));
                return Ok(());
            }
            let trace = hyperlift::perp_trace(&w, &offset_value, mode);
            let width = trace.width();
            let threshold = hyperlift::strip_threshold(mode);
            let contained = (&width - &threshold).is_negative();
            let record = RunRecord::new("lift")
                .param("word", w.to_string())
                .param("mode", mode_name(mode))
                .param("offset", offset_value.to_string())
                .outputs(json!({
                    "staircase": staircase.points(),
                    "trace": trace.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "trace_approx": trace.approx_values(),
                    "strip_width": width.to_string(),
                    "strip_width_approx": width.to_f64(),
                    "strip_threshold": threshold.to_string(),
                    "contained": contained,
                }));
            println!("{}", record.render());
            Ok(())
        }

        Command::Render {
            seed,
            length,
            left,
            w,
            out,
        } => {
            let seed_value = parse_golden(&seed, "seed")?;
            let geometry = parse_geometry(w.as_deref())?;
            let covering = covering::grow_with_geometry(&seed_value, length, left, geometry)
                .map_err(|e| Failure::OutOfRange(e.to_string()))?;
            let svg = covering::render_svg(&covering);
            match out {
                None => print!("{svg}"),
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
            }
            Ok(())
        }

        Command::Selftest { quick, inject_bug } => {
            if selftest::run(quick, inject_bug) {
                Ok(())
            } else {
                Err(Failure::SelftestFailed)
            }
        }
    }
}

fn mode_name(mode: PerpMode) -> &'static str {
    match mode {
        PerpMode::Scaled => "scaled",
        PerpMode::Geometric => "geometric",
    }
}

fn interval_json(interval: &quasigrow::golden::GoldenInterval) -> Value {
    match (interval.lo(), interval.hi()) {
        (Some(lo), Some(hi)) => json!({ "lo": lo.to_string(), "hi": hi.to_string() }),
        _ => json!("empty"),
    }
}
