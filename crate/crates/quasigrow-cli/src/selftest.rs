//! Built-in cross-check of the three factor oracles and the forcing bounds.
//!
//! The substring side is rebuilt here from the raw substitution, so the
//! agreement sweep genuinely pits independent routes against each other.
//! `inject_bug` swaps the deco-B α-domain for `[0, 1/τ²)`; the sweep must
//! catch that within the quick budget, proving the harness has teeth.

use quasigrow::covering;
use quasigrow::golden::{GoldenInterval, GoldenNumber};
use quasigrow::hyperlift::{self, PerpMode};
use quasigrow::words::{fibonacci_word, Letter, Word};
use std::collections::HashSet;

pub fn run(quick: bool, inject_bug: bool) -> bool {
    let (max_n, seeds, steps) = if quick { (8, 50, 100) } else { (12, 200, 500) };
    let mut ok = true;
    ok &= forcing_bounds();
    ok &= tri_oracle_sweep(max_n, inject_bug);
    ok &= growth_closure(seeds, steps);
    if ok {
        println!("selftest: all checks passed");
    } else {
        println!("selftest: FAILED");
    }
    ok
}

fn forcing_bounds() -> bool {
    let after_aa = covering::terminal_boundary_interval(&"AA".parse().unwrap());
    let expected_aa = GoldenInterval::half_open(GoldenNumber::zero(), GoldenNumber::inv_tau_sq());
    if after_aa != expected_aa {
        println!("[FAIL] boundary after AA is {after_aa}, expected {expected_aa}");
        return false;
    }
    let after_ababa = covering::terminal_boundary_interval(&"ABABA".parse().unwrap());
    let two_inv_tau_sq = GoldenNumber::from_parts(4, 1, -2, 1);
    match after_ababa.lo() {
        Some(lo) if lo == &two_inv_tau_sq => {}
        _ => {
            println!("[FAIL] boundary after ABABA is {after_ababa}, expected lo {two_inv_tau_sq}");
            return false;
        }
    }
    println!("[ok] forcing bounds: after AA = {after_aa}, after ABABA ≥ {two_inv_tau_sq}");
    true
}

fn tri_oracle_sweep(max_n: usize, inject_bug: bool) -> bool {
    let dom_a = covering::domain_a();
    let dom_b = if inject_bug {
        GoldenInterval::half_open(GoldenNumber::zero(), GoldenNumber::inv_tau_sq())
    } else {
        covering::domain_b()
    };
    let prefix = fibonacci_word(20 * max_n + 100);
    let threshold = hyperlift::strip_threshold(PerpMode::Scaled);

    let mut words_checked = 0u64;
    for n in 1..=max_n {
        let substring_set: HashSet<&[Letter]> = prefix.as_slice().windows(n).collect();
        for bits in 0..(1u32 << n) {
            let w = Word::from_letters(
                (0..n)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            Letter::B
                        } else {
                            Letter::A
                        }
                    })
                    .collect(),
            );
            let by_interval =
                !covering::feasible_interval_with_domains(&w, &dom_a, &dom_b).is_empty();
            let by_substring = substring_set.contains(w.as_slice());
            let by_strip =
                (hyperlift::strip_width(&w, PerpMode::Scaled) - &threshold).is_negative();
            if by_interval != by_substring || by_strip != by_substring {
                println!(
                    "[FAIL] oracle disagreement on {w}: interval={by_interval} substring={by_substring} strip={by_strip}"
                );
                return false;
            }
            words_checked += 1;
        }
    }
    println!("[ok] tri-oracle agreement: {words_checked} words, n ≤ {max_n}");
    true
}

fn growth_closure(seeds: i64, steps: usize) -> bool {
    for k in 0..seeds {
        let seed = GoldenNumber::tau() * GoldenNumber::ratio(k, seeds);
        let mut y = seed.clone();
        for i in 0..steps {
            let (letter, next) = match covering::step_right(&y) {
                Ok(step) => step,
                Err(e) => {
                    println!("[FAIL] growth left the height range at seed {seed}, step {i}: {e}");
                    return false;
                }
            };
            match covering::step_left(&next) {
                Ok((back_letter, back)) if back_letter == letter && back == y => {}
                other => {
                    println!("[FAIL] step_left does not invert step_right at {y}: {other:?}");
                    return false;
                }
            }
            y = next;
        }
    }
    println!("[ok] growth closure and step inverses: {seeds} seeds × {steps} steps");
    true
}
