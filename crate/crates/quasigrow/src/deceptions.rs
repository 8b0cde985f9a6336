//! Conventional fixed-window growth rules and their deceptions.
//!
//! A window rule of range `r` accepts a word when every length-`min(r, |w|)`
//! window is a factor of the Fibonacci word. A *deception* is a word the
//! rule accepts that is nevertheless not a factor — once grown it can never
//! be completed to a Fibonacci lattice, and growth does not allow removal.
//! This module enumerates deceptions exhaustively and demonstrates that
//! they exist at every window size, in contrast to the covering rule which
//! admits none.

use crate::covering::{self, Direction};
use crate::golden::GoldenNumber;
use crate::words::{self, Letter, Word};
use std::collections::HashSet;
use std::fmt;

/// Default exhaustive-scan budget: word lengths up to 2²⁴ candidates.
pub const DEFAULT_BUDGET: usize = 24;

/// Largest window parameter `min_deception_length` will scan.
pub const MAX_WINDOW: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeceptionError {
    /// The requested scan exceeds the exhaustive-enumeration budget.
    BudgetExceeded { requested: usize, budget: usize },
}

impl fmt::Display for DeceptionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeceptionError::BudgetExceeded { requested, budget } => {
                write!(
                    f,
                    "length {} exceeds the enumeration budget {}",
                    requested, budget
                )
            }
        }
    }
}

impl std::error::Error for DeceptionError {}

/// Bit encoding of a word (A = 0, B = 1, first letter in the low bit),
/// used for window lookups during enumeration.
fn word_bits(letters: &[Letter]) -> u32 {
    letters.iter().enumerate().fold(
        0u32,
        |bits, (i, &l)| if l == Letter::B { bits | 1 << i } else { bits },
    )
}

fn bits_to_word(bits: u32, len: usize) -> Word {
    Word::from_letters(
        (0..len)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Letter::B
                } else {
                    Letter::A
                }
            })
            .collect(),
    )
}

/// Factor masks of one fixed length, for O(1) window membership tests.
struct FactorMasks {
    masks: HashSet<u32>,
}

impl FactorMasks {
    fn new(len: usize) -> FactorMasks {
        let masks = words::factor_set(len)
            .iter()
            .map(|w| word_bits(w.as_slice()))
            .collect();
        FactorMasks { masks }
    }

    fn contains(&self, bits: u32) -> bool {
        self.masks.contains(&bits)
    }
}

/// A conventional growth rule that inspects a bounded window: a word is
/// legal when every contiguous window of length `min(r, |w|)` is a factor
/// (so words no longer than `r` are legal exactly when they are factors).
pub struct WindowRule {
    r: usize,
    masks_by_len: Vec<FactorMasks>,
}

impl WindowRule {
    /// Materializes the allowed window sets for every length up to `r`.
    pub fn new(r: usize) -> WindowRule {
        assert!(r >= 1, "window rules need range ≥ 1");
        let masks_by_len = (1..=r).map(FactorMasks::new).collect();
        WindowRule { r, masks_by_len }
    }

    pub fn window(&self) -> usize {
        self.r
    }

    fn masks(&self, len: usize) -> &FactorMasks {
        &self.masks_by_len[len - 1]
    }

    /// Is every window of `w` allowed?
    pub fn is_legal(&self, w: &Word) -> bool {
        if w.is_empty() {
            return true;
        }
        let m = self.r.min(w.len());
        let masks = self.masks(m);
        w.as_slice()
            .windows(m)
            .all(|win| masks.contains(word_bits(win)))
    }
}

/// Legal under the window rule yet not a factor.
pub fn is_deception(w: &Word, r: usize) -> bool {
    let rule = WindowRule::new(r);
    rule.is_legal(w) && !words::is_factor(w)
}

/// One enumerated deception with its diagnostic facts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeceptionReport {
    pub word: Word,
    pub window: usize,
    /// Composition passes until a BB segment appears, if within 32 passes.
    pub composition_depth_to_bb: Option<usize>,
    /// All windows of length `min(window, |word|)` re-checked as factors.
    pub windows_verified: bool,
}

impl DeceptionReport {
    fn new(word: Word, rule: &WindowRule) -> DeceptionReport {
        let composition_depth_to_bb = words::deflation_illegality_depth(&word, 32);
        let windows_verified = rule.is_legal(&word);
        DeceptionReport {
            word,
            window: rule.window(),
            composition_depth_to_bb,
            windows_verified,
        }
    }
}

/// All length-`L` deceptions for window `r`, in lexicographic order
/// (A before B). Exhaustive over 2^L candidates with pruning on the first
/// illegal window: a non-factor window in a prefix already dooms every
/// extension, since factors are closed under taking subwords.
pub fn enumerate_deceptions(len: usize, r: usize) -> Result<Vec<DeceptionReport>, DeceptionError> {
    enumerate_deceptions_with_budget(len, r, DEFAULT_BUDGET)
}

pub fn enumerate_deceptions_with_budget(
    len: usize,
    r: usize,
    budget: usize,
) -> Result<Vec<DeceptionReport>, DeceptionError> {
    // hard cap 30: windows are u32 bit masks
    let budget = budget.min(30);
    if len > budget {
        return Err(DeceptionError::BudgetExceeded {
            requested: len,
            budget,
        });
    }
    if len == 0 {
        return Ok(Vec::new());
    }
    let rule = WindowRule::new(r.min(len).max(1));
    let full = FactorMasks::new(len);

    // Shard the candidate space by first letter and scan shards
    // independently; A-then-B concatenation restores lexicographic order.
    let scan = |first: Letter| -> Vec<u32> {
        let mut found = Vec::new();
        let mut stack: Vec<(u32, usize)> = vec![(word_bits(&[first]), 1)];
        while let Some((bits, l)) = stack.pop() {
            let m = rule.window().min(l);
            let window = bits >> (l - m) & ((1 << m) - 1);
            if !rule.masks(m).contains(window) {
                continue;
            }
            if l == len {
                if !full.contains(bits) {
                    found.push(bits);
                }
                continue;
            }
            // push B first so A is explored first (lexicographic DFS)
            stack.push((bits | 1 << l, l + 1));
            stack.push((bits, l + 1));
        }
        found
    };

    let (from_a, from_b) = if len >= 16 {
        std::thread::scope(|s| {
            let a = s.spawn(|| scan(Letter::A));
            let b = s.spawn(|| scan(Letter::B));
            (
                a.join().expect("shard panicked"),
                b.join().expect("shard panicked"),
            )
        })
    } else {
        (scan(Letter::A), scan(Letter::B))
    };

    let reports = from_a
        .into_iter()
        .chain(from_b)
        .map(|bits| DeceptionReport::new(bits_to_word(bits, len), &rule))
        .collect();
    Ok(reports)
}

/// Smallest word length at which window `r` admits a deception.
///
/// Errors when `r` exceeds [`MAX_WINDOW`] or no deception shows up within
/// the enumeration budget.
pub fn min_deception_length(r: usize) -> Result<usize, DeceptionError> {
    if r > MAX_WINDOW {
        return Err(DeceptionError::BudgetExceeded {
            requested: r,
            budget: MAX_WINDOW,
        });
    }
    for len in 2..=DEFAULT_BUDGET {
        if !enumerate_deceptions(len, r)?.is_empty() {
            return Ok(len);
        }
    }
    Err(DeceptionError::BudgetExceeded {
        requested: DEFAULT_BUDGET + 1,
        budget: DEFAULT_BUDGET,
    })
}

/// splitmix64; a fixed in-crate generator keeps the demo reproducible
/// across platforms and releases.
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Outcome of a randomized growth experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct GreedyStats {
    pub trials: usize,
    /// Trials whose final word is not a factor (the grower walked into a
    /// deception, or got stuck with no legal extension).
    pub failures: usize,
    pub failure_fraction: f64,
    /// Trials that could not even reach `max_len`.
    pub stuck: usize,
}

/// Simulate a conventional window-`r` grower: starting from a random legal
/// letter, append any letter that keeps the newest window legal, choosing
/// uniformly when both letters qualify. A trial fails when the word it is
/// committed to is not a factor. Reproducible given `rng_seed`.
pub fn greedy_growth_failure_demo(
    r: usize,
    trials: usize,
    max_len: usize,
    rng_seed: u64,
) -> GreedyStats {
    let rule = WindowRule::new(r);
    let mut rng = SplitMix64::new(rng_seed);
    let mut failures = 0;
    let mut stuck = 0;
    for _ in 0..trials {
        let mut letters: Vec<Letter> = Vec::with_capacity(max_len);
        while letters.len() < max_len {
            let mut candidates: [Option<Letter>; 2] = [None, None];
            let mut n_candidates = 0;
            for letter in [Letter::A, Letter::B] {
                letters.push(letter);
                let m = rule.window().min(letters.len());
                let window = &letters[letters.len() - m..];
                if rule.masks(m).contains(word_bits(window)) {
                    candidates[n_candidates] = Some(letter);
                    n_candidates += 1;
                }
                letters.pop();
            }
            match n_candidates {
                0 => {
                    stuck += 1;
                    break;
                }
                1 => letters.push(candidates[0].unwrap()),
                _ => letters.push(candidates[rng.below(2) as usize].unwrap()),
            }
        }
        if !words::is_factor(&Word::from_letters(letters)) {
            failures += 1;
        }
    }
    GreedyStats {
        trials,
        failures,
        failure_fraction: if trials == 0 {
            0.0
        } else {
            failures as f64 / trials as f64
        },
        stuck,
    }
}

/// The same harness run against the covering grower: random golden-rational
/// seeds, grown to `max_len`, checked as factors. The covering rule never
/// fails, whatever the window parameter of the competing rule was.
pub fn covering_growth_failure_demo(trials: usize, max_len: usize, rng_seed: u64) -> GreedyStats {
    let mut rng = SplitMix64::new(rng_seed);
    let mut failures = 0;
    for _ in 0..trials {
        let numer = rng.below(1 << 20) as i64;
        let seed = GoldenNumber::tau() * GoldenNumber::ratio(numer, 1 << 20);
        let letters: Vec<Letter> = covering::GrowthStream::new(&seed, Direction::Right)
            .expect("seed is in [0, τ) by construction")
            .take(max_len)
            .collect();
        if !words::is_factor(&Word::from_letters(letters)) {
            failures += 1;
        }
    }
    GreedyStats {
        trials,
        failures,
        failure_fraction: if trials == 0 {
            0.0
        } else {
            failures as f64 / trials as f64
        },
        stuck: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn deception_definition_examples() {
        // AAA: both AA windows are factors, AAA is not
        assert!(is_deception(&word("AAA"), 2));
        // BB: its own window is already a non-factor
        assert!(!is_deception(&word("BB"), 2));
        // factors are never deceptions
        assert!(!is_deception(&word("ABAAB"), 2));
        assert!(!is_deception(&word("ABAAB"), 5));
    }

    #[test]
    fn window_rule_legality() {
        let rule = WindowRule::new(2);
        assert!(rule.is_legal(&word("AAA")));
        assert!(!rule.is_legal(&word("ABB")));
        assert!(rule.is_legal(&word("A")));
        assert!(rule.is_legal(&word("")));
        // shorter than the window: legal iff a factor
        let rule = WindowRule::new(5);
        assert!(!rule.is_legal(&word("AAA")));
        assert!(rule.is_legal(&word("ABA")));
    }

    #[test]
    fn smallest_deceptions() {
        // range 1 forbids nothing beyond the alphabet, so BB itself is legal
        assert_eq!(min_deception_length(1), Ok(2));
        assert_eq!(min_deception_length(2), Ok(3));
        let found = enumerate_deceptions(3, 2).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].word, word("AAA"));
        assert_eq!(found[0].composition_depth_to_bb, Some(1));
        assert!(found[0].windows_verified);
    }

    #[test]
    fn no_length_two_deceptions_for_window_two() {
        assert!(enumerate_deceptions(2, 2).unwrap().is_empty());
    }

    #[test]
    fn ababab_membership_follows_its_windows() {
        // ABABAB is a non-factor; whether it is a deception for r = 5
        // depends exactly on its two length-5 windows.
        let listed = enumerate_deceptions(6, 5)
            .unwrap()
            .iter()
            .any(|rep| rep.word == word("ABABAB"));
        let windows_ok = words::is_factor(&word("ABABA")) && words::is_factor(&word("BABAB"));
        assert_eq!(listed, windows_ok);
        // BABAB is not a factor, so ABABAB must be absent at r = 5 …
        assert!(!listed);
        // … but present at r = 4: a three-tile deception of inflated tiles.
        assert!(enumerate_deceptions(6, 4)
            .unwrap()
            .iter()
            .any(|rep| rep.word == word("ABABAB")));
    }

    #[test]
    fn enumeration_is_lexicographic_and_sound() {
        let reports = enumerate_deceptions(8, 3).unwrap();
        let mut sorted = reports.clone();
        sorted.sort_by(|a, b| a.word.cmp(&b.word));
        assert_eq!(reports, sorted);
        for rep in &reports {
            assert!(!words::is_factor(&rep.word));
            assert!(rep.windows_verified);
            // independent re-check against the interval oracle
            assert!(covering::feasible_interval(&rep.word).is_empty());
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_deceptions(25, 3),
            Err(DeceptionError::BudgetExceeded {
                requested: 25,
                budget: 24
            })
        ));
        assert!(enumerate_deceptions_with_budget(10, 3, 10).is_ok());
        assert!(min_deception_length(MAX_WINDOW + 1).is_err());
    }

    #[test]
    fn deceptions_exist_for_every_small_window() {
        for r in 1..=10 {
            let len = min_deception_length(r).unwrap();
            assert!(
                len > r,
                "a deception shorter than the window would be caught"
            );
        }
        // checking 11 tiles (correct length-12 configurations) still admits
        // a deception one tile longer
        assert_eq!(min_deception_length(12), Ok(13));
    }

    #[test]
    fn length_13_window_12_deception() {
        let reports = enumerate_deceptions(13, 12).unwrap();
        assert!(!reports.is_empty());
        let landmark = reports.iter().find(|rep| {
            rep.word[0] == Letter::B
                && rep.word[12] == Letter::B
                && rep.composition_depth_to_bb == Some(4)
        });
        assert!(
            landmark.is_some(),
            "expected a B…B deception revealing BB after 4 passes"
        );
        // the scan finds exactly one candidate, and it is a palindrome
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].word, word("BABAABABAABAB"));
    }

    #[test]
    fn minimal_forbidden_words_sit_at_fibonacci_lengths() {
        // A word every proper subword of which is a factor is exactly a
        // deception for window len−1. These ladder down under composition:
        // each one's span composes to the previous, so the BB depth counts
        // the rungs. Deceptions therefore exist at every inflation scale.
        let mut found = Vec::new();
        for len in 2..=21usize {
            for rep in enumerate_deceptions(len, len - 1).unwrap() {
                found.push((len, rep.word.to_string(), rep.composition_depth_to_bb));
            }
        }
        assert_eq!(
            found,
            vec![
                (2, "BB".to_string(), Some(0)),
                (3, "AAA".to_string(), Some(1)),
                (5, "BABAB".to_string(), Some(2)),
                (8, "AABAABAA".to_string(), Some(3)),
                (13, "BABAABABAABAB".to_string(), Some(4)),
                (21, "AABAABABAABAABABAABAA".to_string(), Some(5)),
            ]
        );
    }

    #[test]
    fn greedy_grower_fails_with_small_windows() {
        let stats = greedy_growth_failure_demo(2, 500, 50, 0xabcdef);
        assert!(
            stats.failure_fraction > 0.0,
            "AAA is reachable, some trial must hit it"
        );
        assert_eq!(stats.trials, 500);
        // reproducibility
        let again = greedy_growth_failure_demo(2, 500, 50, 0xabcdef);
        assert_eq!(stats, again);
    }

    #[test]
    fn greedy_grower_cannot_fail_below_min_deception_length() {
        // window 12 has no deception of length ≤ 12, so runs capped there
        // can only produce factors.
        let stats = greedy_growth_failure_demo(12, 50, 12, 7);
        assert_eq!(stats.failures, 0);
    }

    #[test]
    fn zero_trials_give_empty_statistics() {
        let stats = greedy_growth_failure_demo(2, 0, 50, 1);
        assert_eq!(
            stats,
            GreedyStats {
                trials: 0,
                failures: 0,
                failure_fraction: 0.0,
                stuck: 0
            }
        );
    }

    #[test]
    fn covering_grower_never_fails_the_same_harness() {
        let stats = covering_growth_failure_demo(200, 60, 0xfeedbeef);
        assert_eq!(stats.failures, 0);
        assert_eq!(stats.failure_fraction, 0.0);
    }
}
