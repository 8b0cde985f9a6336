//! Growth of perfect one-dimensional quasiperiodic (Fibonacci) structures
//! with a local covering rule, plus the machinery to verify that claim.
//!
//! The library has two sides that keep each other honest:
//!
//! * **Growth.** [`covering`] implements rectangular tiles carrying a movable
//!   string decoration. A tile attaches to a patch only when its string can
//!   coincide with the neighbour's string in the overlap region; the string
//!   height at the boundary then encodes the entire patch, so growth is both
//!   local and deterministic. All heights live in the golden ring, handled
//!   exactly by [`golden`].
//! * **Verification.** Three independent oracles decide whether a finite word
//!   over `{A, B}` occurs in the infinite Fibonacci word: exact feasible-
//!   interval propagation ([`covering::feasible_interval`]), substring search
//!   in a long generated prefix ([`words`]), and the strip criterion on the
//!   2D lattice lift ([`hyperlift`]). [`deceptions`] shows by exhaustive
//!   enumeration why fixed-decoration window rules cannot do the same job:
//!   they admit deceptions at every window size.
//!
//! Everything quantitative is computed in exact arithmetic over `p + q·τ`
//! with rational `p`, `q`; floats appear only in rendering and sanity logs.
//!
//! ```
//! use quasigrow::{feasible_interval, fibonacci_word, grow, GoldenNumber};
//!
//! let covering = grow(&GoldenNumber::one(), 4, 0)?;
//! assert_eq!(covering.letters(), fibonacci_word(5));
//!
//! // AAB occurs in the Fibonacci word; its seeds fill [2/τ, τ)
//! let interval = feasible_interval(&"AAB".parse()?);
//! assert_eq!(interval.lo().unwrap(), &GoldenNumber::from_parts(-2, 1, 2, 1));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod covering;
pub mod deceptions;
pub mod golden;
pub mod hyperlift;
mod svg;
pub mod words;

pub use covering::{feasible_interval, grow, Covering, Decoration, TileGeometry};
pub use golden::{GoldenInterval, GoldenNumber};
pub use words::{fibonacci_word, Letter, Word};
