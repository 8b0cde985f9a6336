//! Lift of a word to the 2D square lattice and the strip criterion.
//!
//! Mapping A to an x-edge and B to a y-edge embeds any word as a staircase
//! in ℤ². Projecting onto the direction perpendicular to the physical line
//! (slope tan θ = 1/τ) sends an A-step to −sin θ and a B-step to +cos θ;
//! a word comes from a Fibonacci lattice exactly when the projected walk
//! fits inside a strip of width Δ = cos θ + sin θ. The overall ℝ⊥ scale is
//! free: multiplying both steps by λ multiplies every coordinate and the
//! strip width by λ. The *scaled* normalization multiplies by 1/cos θ so
//! the steps become −1/τ and +1 and the strip width becomes 1 + 1/τ = τ —
//! which makes the perpendicular walk literally equal to the covering
//! module's string-height sequence.
//!
//! Since sin θ = 1/√(τ+2) and cos θ = τ/√(τ+2), geometric coordinates are
//! golden multiples of the common normalizer 1/√(τ+2). Storing the
//! multiple keeps geometric mode exact too: floats appear only in
//! rendering and the explicitly approximate accessors.

use crate::covering::Covering;
use crate::golden::{GoldenInterval, GoldenNumber, TAU_F64};
use crate::svg;
use crate::words::{Letter, Word};
use std::fmt;

/// Normalization of perpendicular coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PerpMode {
    /// Steps −sin θ and +cos θ, stored as golden multiples of 1/√(τ+2).
    Geometric,
    /// Steps −1/τ and +1; the covering's own height normalization.
    Scaled,
}

/// Perpendicular step for one letter, as a golden number. In geometric
/// mode this is the multiple of 1/√(τ+2): −1 for A, τ for B.
pub fn perp_step(letter: Letter, mode: PerpMode) -> GoldenNumber {
    match (mode, letter) {
        (PerpMode::Scaled, Letter::A) => -GoldenNumber::inv_tau(),
        (PerpMode::Scaled, Letter::B) => GoldenNumber::one(),
        (PerpMode::Geometric, Letter::A) => -GoldenNumber::one(),
        (PerpMode::Geometric, Letter::B) => GoldenNumber::tau(),
    }
}

/// Strip-width threshold in the mode's units: τ in scaled mode, the
/// multiple of Δ = cos θ + sin θ (namely τ + 1 = τ²) in geometric mode.
/// Containment is exclusive: a walk of exactly threshold width does not fit.
pub fn strip_threshold(mode: PerpMode) -> GoldenNumber {
    match mode {
        PerpMode::Scaled => GoldenNumber::tau(),
        PerpMode::Geometric => GoldenNumber::one() + GoldenNumber::tau(),
    }
}

/// sin θ with tan θ = 1/τ; equals 1/√(τ+2).
pub fn sin_theta() -> f64 {
    1.0 / (TAU_F64 + 2.0).sqrt()
}

/// cos θ with tan θ = 1/τ; equals τ/√(τ+2).
pub fn cos_theta() -> f64 {
    TAU_F64 / (TAU_F64 + 2.0).sqrt()
}

/// The lattice path of a word: A moves (1, 0), B moves (0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    points: Vec<(i64, i64)>,
    word: Word,
}

impl Staircase {
    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn end(&self) -> (i64, i64) {
        *self
            .points
            .last()
            .expect("staircase always holds the origin")
    }
}

/// Embed `w` as a staircase starting at the origin; the endpoint is
/// `(#A, #B)`.
pub fn lift(w: &Word) -> Staircase {
    let mut points = Vec::with_capacity(w.len() + 1);
    let (mut x, mut y) = (0i64, 0i64);
    points.push((x, y));
    for letter in w.iter() {
        match letter {
            Letter::A => x += 1,
            Letter::B => y += 1,
        }
        points.push((x, y));
    }
    Staircase {
        points,
        word: w.clone(),
    }
}

/// Cumulative perpendicular coordinates of a lifted word, one per lattice
/// point (so `|w| + 1` values starting at the offset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerpTrace {
    mode: PerpMode,
    offset: GoldenNumber,
    coords: Vec<GoldenNumber>,
}

impl PerpTrace {
    pub fn mode(&self) -> PerpMode {
        self.mode
    }

    pub fn offset(&self) -> &GoldenNumber {
        &self.offset
    }

    /// Exact coordinates; golden multiples of 1/√(τ+2) in geometric mode.
    pub fn coords(&self) -> &[GoldenNumber] {
        &self.coords
    }

    /// Float values of the actual perpendicular coordinates.
    pub fn approx_values(&self) -> Vec<f64> {
        let unit = match self.mode {
            PerpMode::Scaled => 1.0,
            PerpMode::Geometric => 1.0 / (TAU_F64 + 2.0).sqrt(),
        };
        self.coords.iter().map(|c| c.to_f64() * unit).collect()
    }

    /// `max − min` over the trace, exact.
    pub fn width(&self) -> GoldenNumber {
        match (self.coords.iter().min(), self.coords.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => GoldenNumber::zero(),
        }
    }
}

/// Walk the word's perpendicular coordinates from `offset`.
///
/// In scaled mode with the offset set to a covering's seed height, the
/// trace is the covering's `y_L` sequence without any wrap — and legal
/// growth never wraps, so they agree exactly.
pub fn perp_trace(w: &Word, offset: &GoldenNumber, mode: PerpMode) -> PerpTrace {
    let mut coords = Vec::with_capacity(w.len() + 1);
    let mut current = offset.clone();
    coords.push(current.clone());
    for letter in w.iter() {
        current = &current + &perp_step(letter, mode);
        coords.push(current.clone());
    }
    PerpTrace {
        mode,
        offset: offset.clone(),
        coords,
    }
}

/// Streaming form of [`perp_trace`]: yields the offset, then one cumulative
/// coordinate per letter. Lets 10⁴–10⁶-step runs be checked without
/// materializing the trace.
pub fn perp_trace_iter<'a, I>(
    letters: I,
    offset: &GoldenNumber,
    mode: PerpMode,
) -> impl Iterator<Item = GoldenNumber> + 'a
where
    I: IntoIterator<Item = Letter>,
    I::IntoIter: 'a,
{
    let mut state = Some(offset.clone());
    let mut letters = letters.into_iter();
    std::iter::from_fn(move || {
        let current = state.take()?;
        state = letters.next().map(|l| &current + &perp_step(l, mode));
        Some(current)
    })
}

/// Minimal width of a strip containing the whole perpendicular walk:
/// sup − inf of the trace coordinates (offset-independent).
pub fn strip_width(w: &Word, mode: PerpMode) -> GoldenNumber {
    perp_trace(w, &GoldenNumber::zero(), mode).width()
}

/// Float trace with caller-chosen steps; rendering and scaling checks only.
pub fn float_trace(w: &Word, offset: f64, step_a: f64, step_b: f64) -> Vec<f64> {
    let mut coords = Vec::with_capacity(w.len() + 1);
    let mut y = offset;
    coords.push(y);
    for letter in w.iter() {
        y += match letter {
            Letter::A => step_a,
            Letter::B => step_b,
        };
        coords.push(y);
    }
    coords
}

/// First place a covering's lift deviates from its string heights, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StripViolation {
    /// Trace coordinate differs from the tile's `y_L`.
    HeightMismatch {
        index: usize,
        expected: GoldenNumber,
        got: GoldenNumber,
    },
    /// Trace coordinate left `[0, τ)`.
    OutOfStrip { index: usize, coord: GoldenNumber },
}

/// Report of [`strip_consistency`]: passes when the scaled trace with
/// offset = seed height reproduces the covering's `y_L` sequence exactly
/// and every coordinate lies in `[0, τ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripReport {
    pub tiles_checked: usize,
    pub violation: Option<StripViolation>,
}

impl StripReport {
    pub fn pass(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for StripReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(
                f,
                "strip consistency holds over {} tiles",
                self.tiles_checked
            ),
            Some(StripViolation::HeightMismatch {
                index,
                expected,
                got,
            }) => write!(
                f,
                "height mismatch at tile {}: covering has {}, lift has {}",
                index, expected, got
            ),
            Some(StripViolation::OutOfStrip { index, coord }) => {
                write!(
                    f,
                    "lift coordinate {} at tile {} is outside [0, τ)",
                    coord, index
                )
            }
        }
    }
}

/// Cross-module oracle: lift the covering's word, walk the scaled
/// perpendicular trace from the seed height, and demand it reproduce the
/// covering's own height sequence inside `[0, τ)`. Reports the first
/// violating index on failure.
pub fn strip_consistency(covering: &Covering) -> StripReport {
    let tiles = covering.tiles();
    if tiles.is_empty() {
        return StripReport {
            tiles_checked: 0,
            violation: None,
        };
    }
    let strip = GoldenInterval::half_open(GoldenNumber::zero(), GoldenNumber::tau());
    let mut current = tiles[0].y_l().clone();
    for (index, tile) in tiles.iter().enumerate() {
        if index > 0 {
            current = &current + &perp_step(tiles[index - 1].letter(), PerpMode::Scaled);
        }
        if !strip.contains(&current) {
            return StripReport {
                tiles_checked: index,
                violation: Some(StripViolation::OutOfStrip {
                    index,
                    coord: current,
                }),
            };
        }
        if &current != tile.y_l() {
            return StripReport {
                tiles_checked: index,
                violation: Some(StripViolation::HeightMismatch {
                    index,
                    expected: tile.y_l().clone(),
                    got: current,
                }),
            };
        }
    }
    StripReport {
        tiles_checked: tiles.len(),
        violation: None,
    }
}

/// Draw the staircase on the square lattice with the strip shaded behind
/// it. A lattice point (x, y) has perpendicular coordinate
/// `p = p₀ + y·cosθ − x·sinθ` with `p₀` the geometric offset of the walk's
/// start; the shaded band is `0 ≤ p < Δ`, the image of scaled `[0, τ)`.
pub fn staircase_svg(staircase: &Staircase, scaled_offset: &GoldenNumber) -> String {
    const SCALE: f64 = 40.0;
    const MARGIN: f64 = 30.0;
    let (ex, ey) = staircase.end();
    let (nx, ny) = (ex.max(1) as f64, ey.max(1) as f64);
    let mut doc = svg::Document::new(nx * SCALE + 2.0 * MARGIN, ny * SCALE + 2.0 * MARGIN);
    let map = |x: f64, y: f64| (MARGIN + x * SCALE, MARGIN + (ny - y) * SCALE);

    let sin = sin_theta();
    let cos = cos_theta();
    let p0 = scaled_offset.to_f64() * cos;
    let delta = cos + sin;
    // band boundary lines solved for y: y = (c − p₀)/cosθ + x·tanθ
    let y_on = |c: f64, x: f64| (c - p0) / cos + x * sin / cos;
    let x_lo = -0.5;
    let x_hi = nx + 0.5;
    let band = [
        map(x_lo, y_on(0.0, x_lo)),
        map(x_hi, y_on(0.0, x_hi)),
        map(x_hi, y_on(delta, x_hi)),
        map(x_lo, y_on(delta, x_lo)),
    ];
    doc.polygon(&band, "#f3e27a", 0.45);

    // lattice grid
    for i in 0..=(nx as i64) {
        let (x1, y1) = map(i as f64, 0.0);
        let (x2, y2) = map(i as f64, ny);
        doc.line(x1, y1, x2, y2, "#cccccc", 0.5);
    }
    for j in 0..=(ny as i64) {
        let (x1, y1) = map(0.0, j as f64);
        let (x2, y2) = map(nx, j as f64);
        doc.line(x1, y1, x2, y2, "#cccccc", 0.5);
    }

    let pts: Vec<(f64, f64)> = staircase
        .points()
        .iter()
        .map(|&(x, y)| map(x as f64, y as f64))
        .collect();
    doc.polyline(&pts, "#222222");
    for &(x, y) in staircase.points() {
        let (cx, cy) = map(x as f64, y as f64);
        doc.circle(cx, cy, 3.0, "#222222");
    }
    doc.finish()
}
