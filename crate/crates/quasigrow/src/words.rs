//! Words over the two tile types and the Fibonacci substitution system.
//!
//! The infinite Fibonacci word is the fixed point of `A → AB`, `B → A`;
//! composition (`AB → A`, `A → B`) runs the substitution backwards. A finite
//! word is *correct* when it occurs somewhere in the infinite word; this
//! module provides that factor test twice over (exact feasible interval and
//! plain substring search) and insists the two answers agree.

use crate::covering;
use crate::golden::GoldenNumber;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Tile type: `A` is the long tile, `B` the short one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'B' => Some(Letter::B),
            _ => None,
        }
    }

    /// The other letter.
    pub fn other(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite sequence of letters. Legality is a predicate, not an invariant:
/// any sequence is representable, including forbidden ones.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn contains_bb(&self) -> bool {
        self.0.windows(2).any(|w| w == [Letter::B, Letter::B])
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Word {
        Word(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl FromStr for Word {
    type Err = WordsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| Letter::from_char(c).ok_or(WordsError::BadLetter(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordsError {
    /// Input contains a character outside {A, B}.
    BadLetter(char),
    /// Composition input already contains the forbidden BB segment.
    ContainsBb,
    /// Rotation-coding parameters do not describe a two-interval coding.
    DegenerateParameters(String),
}

impl fmt::Display for WordsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordsError::BadLetter(c) => write!(f, "letter {:?} is not in the alphabet {{A, B}}", c),
            WordsError::ContainsBb => write!(f, "word contains a forbidden BB segment"),
            WordsError::DegenerateParameters(msg) => {
                write!(f, "degenerate rotation parameters: {}", msg)
            }
        }
    }
}

impl std::error::Error for WordsError {}

/// Apply the generating substitution `A → AB`, `B → A` once.
pub fn substitute(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len() * 2);
    for l in w.iter() {
        match l {
            Letter::A => {
                out.push(Letter::A);
                out.push(Letter::B);
            }
            Letter::B => out.push(Letter::A),
        }
    }
    Word(out)
}

/// First `n` letters of the infinite Fibonacci word `ABAABABA…`.
pub fn fibonacci_word(n: usize) -> Word {
    let mut w = Word(vec![Letter::A]);
    while w.len() < n {
        w = substitute(&w);
    }
    w.0.truncate(n);
    w
}

/// Result of one composition pass `AB → A`, `A → B` over the interior of a
/// word. The interior parse is unique (every B must terminate an AB block);
/// the flags record what happened at the edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub composed: Word,
    /// A leading B was absorbed as the tail of an AB block to the left.
    pub leading_b_absorbed: bool,
    /// A trailing lone A is ambiguous (standalone A-block or first half of
    /// AB) and was excluded from `composed`.
    pub trailing_a_ambiguous: bool,
}

/// Greedy left-to-right composition. Errors on a BB segment, which can
/// never be parsed.
pub fn compose(w: &Word) -> Result<Composition, WordsError> {
    let letters = w.as_slice();
    let mut i = 0;
    let mut leading_b_absorbed = false;
    if letters.first() == Some(&Letter::B) {
        leading_b_absorbed = true;
        i = 1;
    }
    let mut out = Vec::with_capacity(letters.len() / 2 + 1);
    let mut trailing_a_ambiguous = false;
    while i < letters.len() {
        match letters[i] {
            // A B at a block start means the previous letter was B too.
            Letter::B => return Err(WordsError::ContainsBb),
            Letter::A => {
                if i + 1 == letters.len() {
                    trailing_a_ambiguous = true;
                    i += 1;
                } else if letters[i + 1] == Letter::B {
                    out.push(Letter::A);
                    i += 2;
                } else {
                    out.push(Letter::B);
                    i += 1;
                }
            }
        }
    }
    Ok(Composition {
        composed: Word(out),
        leading_b_absorbed,
        trailing_a_ambiguous,
    })
}

/// Smallest number of composition passes after which a BB segment shows up,
/// or `None` if none appears within `max_depth`. Depth 0 is the word itself.
///
/// Each pass composes the word's *span*: a leading B unambiguously closes
/// an AB block, so that block's image A is kept; the ambiguous trailing
/// lone A contributes nothing. A necessary-condition check only — factors
/// compose to factors under this convention, so they never reveal BB, but
/// the shrinking edges mean absence of BB does not certify correctness.
pub fn deflation_illegality_depth(w: &Word, max_depth: usize) -> Option<usize> {
    let mut current = w.clone();
    for depth in 0..=max_depth {
        if current.contains_bb() {
            return Some(depth);
        }
        let c = compose(&current).expect("BB was ruled out above");
        current = if c.leading_b_absorbed {
            let mut letters = Vec::with_capacity(c.composed.len() + 1);
            letters.push(Letter::A);
            letters.extend(c.composed.iter());
            Word::from_letters(letters)
        } else {
            c.composed
        };
    }
    None
}

/// Substring test against a generated prefix of the infinite word.
///
/// The Fibonacci word is linearly recurrent: every factor of length n
/// occurs in every window of length about (τ+2)·n, so a prefix of
/// `20·n + 100` letters gives generous margin.
fn occurs_in_prefix(w: &Word) -> bool {
    if w.is_empty() {
        return true;
    }
    let prefix = fibonacci_word(20 * w.len() + 100);
    prefix
        .as_slice()
        .windows(w.len())
        .any(|win| win == w.as_slice())
}

/// The substring oracle on its own, for callers that compare oracles
/// instead of trusting their agreement.
pub fn substring_factor(w: &Word) -> bool {
    occurs_in_prefix(w)
}

/// Does `w` occur in the infinite Fibonacci word?
///
/// Runs both the exact feasible-interval test and the substring oracle and
/// panics if they ever disagree; the interval is the authoritative answer.
pub fn is_factor(w: &Word) -> bool {
    let by_interval = !covering::feasible_interval(w).is_empty();
    let by_substring = occurs_in_prefix(w);
    assert_eq!(
        by_interval, by_substring,
        "factor oracles disagree on {w}: interval says {by_interval}, substring says {by_substring}"
    );
    by_interval
}

/// All distinct length-`n` factors of the infinite Fibonacci word.
/// Sturmian complexity says there are exactly `n + 1` of them.
pub fn factor_set(n: usize) -> BTreeSet<Word> {
    assert!(n >= 1, "factor_set wants n >= 1");
    let prefix = fibonacci_word(20 * n + 100);
    prefix.as_slice().windows(n).map(Word::from).collect()
}

/// Parameters of a generalized two-interval rotation coding.
///
/// The state moves on `[0, width)` with letter domains `[step_down, width)`
/// for A (moving down by `step_down`) and `[0, step_down)` for B (moving up
/// by `step_up`); closure requires `width = step_down + step_up`. The
/// Fibonacci coding is `step_down = 1/τ`, `step_up = 1`, `width = τ`.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum RotationParams {
    /// Golden-ring parameters; the coding is computed exactly.
    Exact {
        step_down: GoldenNumber,
        step_up: GoldenNumber,
        width: GoldenNumber,
        y0: GoldenNumber,
    },
    /// Arbitrary real parameters in floating point, flagged approximate.
    Approximate {
        step_down: f64,
        step_up: f64,
        width: f64,
        y0: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationCoding {
    pub word: Word,
    /// The rotation number is rational, so the coding is eventually
    /// periodic. Only decidable in exact mode; always false otherwise.
    pub periodic: bool,
    /// Computed in floating point rather than the golden ring.
    pub approximate: bool,
}

/// Code `n` steps of the rotation. The Fibonacci parameters reproduce the
/// covering growth from the same seed.
pub fn rotation_coding(params: &RotationParams, n: usize) -> Result<RotationCoding, WordsError> {
    match params {
        RotationParams::Exact {
            step_down,
            step_up,
            width,
            y0,
        } => {
            if !step_down.is_positive() || !step_up.is_positive() {
                return Err(WordsError::DegenerateParameters(
                    "steps must be positive".into(),
                ));
            }
            if &(step_down + step_up) != width {
                return Err(WordsError::DegenerateParameters(
                    "width must equal step_down + step_up".into(),
                ));
            }
            if y0.is_negative() || !(y0 - width).is_negative() {
                return Err(WordsError::DegenerateParameters(
                    "y0 must lie in [0, width)".into(),
                ));
            }
            let mut letters = Vec::with_capacity(n);
            let mut y = y0.clone();
            for _ in 0..n {
                if (&y - step_down).is_negative() {
                    letters.push(Letter::B);
                    y = &y + step_up;
                } else {
                    letters.push(Letter::A);
                    y = &y - step_down;
                }
            }
            // Rational rotation number step_up/width ⇒ periodic coding.
            let periodic = step_up
                .checked_div(width)
                .map(|r| r.is_rational())
                .unwrap_or(false);
            Ok(RotationCoding {
                word: Word(letters),
                periodic,
                approximate: false,
            })
        }
        RotationParams::Approximate {
            step_down,
            step_up,
            width,
            y0,
        } => {
            let positive = |v: f64| v.is_finite() && v > 0.0;
            if !positive(*step_down) || !positive(*step_up) || !width.is_finite() {
                return Err(WordsError::DegenerateParameters(
                    "steps must be positive".into(),
                ));
            }
            if (step_down + step_up - width).abs() > 1e-9 * width.abs().max(1.0) {
                return Err(WordsError::DegenerateParameters(
                    "width must equal step_down + step_up".into(),
                ));
            }
            if !(*y0 >= 0.0 && y0 < width) {
                return Err(WordsError::DegenerateParameters(
                    "y0 must lie in [0, width)".into(),
                ));
            }

            let mut letters = Vec::with_capacity(n);
            let mut y = *y0;
            for _ in 0..n {
                if y < *step_down {
                    letters.push(Letter::B);
                    y += step_up;
                } else {
                    letters.push(Letter::A);
                    y -= step_down;
                }
            }
            Ok(RotationCoding {
                word: Word(letters),
                periodic: false,
                approximate: true,
            })
        }
    }
}
