//! Exact arithmetic in the golden ring ℚ(τ), τ = (1+√5)/2.
//!
//! Every lattice quantity in this crate — string heights, interval
//! endpoints, perpendicular coordinates — is an element `p + q·τ` with
//! rational coefficients, stored exactly. Since τ is irrational the
//! representation is unique, so equality is componentwise and the sign of
//! any element is decidable in rational arithmetic alone: for `x ≥ 0`,
//! `x < τ  ⇔  x² < x + 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Float value of τ, for rendering and sanity logs only.
pub const TAU_F64: f64 = 1.618033988749895;

/// An element of ℚ(τ): the value `p + q·τ`.
///
/// Multiplication closes via τ² = τ + 1. Coefficients are exact rationals
/// (arbitrary-precision integers over a denominator) so that seeds such as
/// 1/2 are representable; growth steps only ever add golden integers, so
/// denominators never grow along a run.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNumber {
    p: BigRational,
    q: BigRational,
}

impl GoldenNumber {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        GoldenNumber { p, q }
    }

    pub fn zero() -> Self {
        GoldenNumber::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GoldenNumber::from_integer(1)
    }

    /// τ itself: (0, 1).
    pub fn tau() -> Self {
        GoldenNumber::new(BigRational::zero(), BigRational::one())
    }

    /// 1/τ = τ − 1: (−1, 1).
    pub fn inv_tau() -> Self {
        GoldenNumber::new(-BigRational::one(), BigRational::one())
    }

    /// 1/τ² = 2 − τ: (2, −1).
    pub fn inv_tau_sq() -> Self {
        GoldenNumber::new(BigRational::from_integer(2.into()), -BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        GoldenNumber::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// The rational `num/den` as a golden number. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        GoldenNumber::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    /// `(p_num/p_den) + (q_num/q_den)·τ`. Panics on zero denominators.
    pub fn from_parts(p_num: i64, p_den: i64, q_num: i64, q_den: i64) -> Self {
        GoldenNumber::new(
            BigRational::new(p_num.into(), p_den.into()),
            BigRational::new(q_num.into(), q_den.into()),
        )
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// True when the τ-coefficient vanishes, i.e. the value is rational.
    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Exact sign of `p + q·τ`.
    ///
    /// Same-sign coefficients decide immediately. In the mixed case the
    /// value is `q·(τ − x)` with `x = −p/q > 0`, and `x < τ ⇔ x² < x + 1`
    /// — a single rational comparison, no iteration.
    pub fn sign(&self) -> Ordering {
        let ps = rational_sign(&self.p);
        let qs = rational_sign(&self.q);
        match (ps, qs) {
            (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            _ => {
                let x = -(&self.p / &self.q);
                let tau_minus_x = match (&x * &x).cmp(&(&x + BigRational::one())) {
                    Ordering::Less => Ordering::Greater,
                    Ordering::Greater => Ordering::Less,
                    // x² = x + 1 has no rational solution.
                    Ordering::Equal => Ordering::Equal,
                };
                if qs == Ordering::Greater {
                    tau_minus_x
                } else {
                    tau_minus_x.reverse()
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn abs(&self) -> GoldenNumber {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Float approximation; exact paths never consume this.
    pub fn to_f64(&self) -> f64 {
        self.p.to_f64().unwrap_or(f64::NAN) + self.q.to_f64().unwrap_or(f64::NAN) * TAU_F64
    }

    /// Largest integer ≤ the value. A float estimate is corrected by exact
    /// sign checks, so the result is exact for any input.
    pub fn floor(&self) -> BigInt {
        let est = self.to_f64();
        let mut n = if est.is_finite() {
            BigInt::from(est.floor() as i64)
        } else {
            BigInt::zero()
        };
        while (self - &GoldenNumber::new(BigRational::from(n.clone()), BigRational::zero()))
            .is_negative()
        {
            n -= 1;
        }
        loop {
            let next: BigInt = &n + 1;
            let diff =
                self - &GoldenNumber::new(BigRational::from(next.clone()), BigRational::zero());
            if diff.is_negative() {
                break;
            }
            n = next;
        }
        n
    }

    /// The representative `r ∈ [0, τ)` with `self − r` an integer multiple
    /// of τ. Wraps by the floor of the τ-quotient; `x/τ = (q−p) + p·τ`.
    pub fn mod_tau(&self) -> GoldenNumber {
        let quotient = GoldenNumber::new(&self.q - &self.p, self.p.clone());
        let k = quotient.floor();
        self - &GoldenNumber::new(BigRational::zero(), BigRational::from(k))
    }

    /// Galois conjugate: τ ↦ 1 − τ, i.e. `(p + q) − q·τ`.
    pub fn conjugate(&self) -> GoldenNumber {
        GoldenNumber::new(&self.p + &self.q, -self.q.clone())
    }

    /// Field norm `x · x̄ = p² + pq − q²`, a rational.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p + &self.p * &self.q - &self.q * &self.q
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<GoldenNumber> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let conj = self.conjugate();
        Some(GoldenNumber::new(&conj.p / &n, &conj.q / &n))
    }

    pub fn checked_div(&self, rhs: &GoldenNumber) -> Option<GoldenNumber> {
        rhs.inverse().map(|inv| self * &inv)
    }
}

fn rational_sign(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: &GoldenNumber) -> GoldenNumber {
                (&self).$method(rhs)
            }
        }
        impl $trait<GoldenNumber> for &GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}
forward_binop!(Add, add);

impl Sub<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}
forward_binop!(Sub, sub);

impl Mul<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    /// `(p₁+q₁τ)(p₂+q₂τ) = (p₁p₂ + q₁q₂) + (p₁q₂ + q₁p₂ + q₁q₂)τ` via τ² = τ+1.
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        let qq = &self.q * &rhs.q;
        GoldenNumber::new(
            &self.p * &rhs.p + &qq,
            &self.p * &rhs.q + &self.q * &rhs.p + &qq,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn div(self, rhs: &GoldenNumber) -> GoldenNumber {
        self.checked_div(rhs)
            .expect("division by zero golden number")
    }
}
forward_binop!(Div, div);

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.p.clone(), -self.q.clone())
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GoldenNumber {
    /// Canonical textual form `p + qt` (`t` denotes τ), e.g. `2 - 1t` for 1/τ².
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_negative() {
            write!(
                f,
                "{} - {}t",
                fmt_rational(&self.p),
                fmt_rational(&-&self.q)
            )
        } else {
            write!(f, "{} + {}t", fmt_rational(&self.p), fmt_rational(&self.q))
        }
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNumber({} ≈ {})", self, self.to_f64())
    }
}

/// Error for unparseable golden-string input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseGoldenError {
    pub input: String,
    pub message: String,
}

impl fmt::Display for ParseGoldenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot parse {:?} as a golden number: {}",
            self.input, self.message
        )
    }
}

impl std::error::Error for ParseGoldenError {}

impl FromStr for GoldenNumber {
    type Err = ParseGoldenError;

    /// Accepts `a/b + c/dt` with integer shorthands: `1`, `-2t`, `1/2`,
    /// `-1+1t`, `3/2t`, `t`. Whitespace around terms and operators is free.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |message: &str| ParseGoldenError {
            input: s.to_string(),
            message: message.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // Split into signed terms at '+'/'-' that are not leading.
        let mut terms: Vec<String> = Vec::new();
        let mut current = String::new();
        for (i, c) in compact.chars().enumerate() {
            if (c == '+' || c == '-') && i > 0 {
                terms.push(std::mem::take(&mut current));
                current.push(c);
            } else {
                current.push(c);
            }
        }
        terms.push(current);

        let mut p = BigRational::zero();
        let mut q = BigRational::zero();
        for term in &terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (is_tau, digits) = match body.strip_suffix('t') {
                Some(rest) => (true, rest),
                None => (false, body),
            };
            let value = if is_tau && digits.is_empty() {
                BigRational::one()
            } else {
                parse_rational(digits).ok_or_else(|| err("bad rational coefficient"))?
            };
            let signed = if sign < 0 { -value } else { value };
            if is_tau {
                q += signed;
            } else {
                p += signed;
            }
        }
        Ok(GoldenNumber::new(p, q))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next()?.parse().ok()?;
    match parts.next() {
        None => Some(BigRational::from(numer)),
        Some(d) => {
            let denom: BigInt = d.parse().ok()?;
            if denom.is_zero() {
                None
            } else {
                Some(BigRational::new(numer, denom))
            }
        }
    }
}

/// A half-open interval `[lo, hi)` of golden numbers, or the empty interval.
///
/// Half-open matches the decoration domains `[1/τ, τ)` and `[0, 1/τ)`;
/// every interval this crate manipulates is of that shape, and intersecting
/// or translating half-open intervals yields half-open intervals again.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenInterval {
    bounds: Option<(GoldenNumber, GoldenNumber)>,
}

impl GoldenInterval {
    pub fn empty() -> Self {
        GoldenInterval { bounds: None }
    }

    /// `[lo, hi)`; collapses to empty when `lo ≥ hi`.
    pub fn half_open(lo: GoldenNumber, hi: GoldenNumber) -> Self {
        if (&hi - &lo).is_positive() {
            GoldenInterval {
                bounds: Some((lo, hi)),
            }
        } else {
            GoldenInterval::empty()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn lo(&self) -> Option<&GoldenNumber> {
        self.bounds.as_ref().map(|(lo, _)| lo)
    }

    pub fn hi(&self) -> Option<&GoldenNumber> {
        self.bounds.as_ref().map(|(_, hi)| hi)
    }

    pub fn contains(&self, y: &GoldenNumber) -> bool {
        match &self.bounds {
            None => false,
            Some((lo, hi)) => !(y - lo).is_negative() && (y - hi).is_negative(),
        }
    }

    pub fn intersect(&self, other: &GoldenInterval) -> GoldenInterval {
        match (&self.bounds, &other.bounds) {
            (Some((alo, ahi)), Some((blo, bhi))) => {
                let lo = if alo >= blo { alo } else { blo };
                let hi = if ahi <= bhi { ahi } else { bhi };
                GoldenInterval::half_open(lo.clone(), hi.clone())
            }
            _ => GoldenInterval::empty(),
        }
    }

    pub fn translate(&self, delta: &GoldenNumber) -> GoldenInterval {
        match &self.bounds {
            None => GoldenInterval::empty(),
            Some((lo, hi)) => GoldenInterval {
                bounds: Some((lo + delta, hi + delta)),
            },
        }
    }

    /// `hi − lo`, zero for the empty interval.
    pub fn width(&self) -> GoldenNumber {
        match &self.bounds {
            None => GoldenNumber::zero(),
            Some((lo, hi)) => hi - lo,
        }
    }
}

impl fmt::Display for GoldenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.bounds {
            None => write!(f, "empty"),
            Some((lo, hi)) => write!(f, "[{}, {})", lo, hi),
        }
    }
}

impl fmt::Debug for GoldenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenInterval({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gn(p: i64, q: i64) -> GoldenNumber {
        GoldenNumber::from_parts(p, 1, q, 1)
    }

    #[test]
    fn add_examples() {
        // 1 + τ = τ²
        assert_eq!(gn(1, 0) + gn(0, 1), gn(1, 1));
        assert_eq!(gn(0, 0) + gn(7, -3), gn(7, -3));
        // 1/τ² + 1/τ = 1  (0.38197 + 0.61803 = 1)
        assert_eq!(gn(2, -1) + gn(-1, 1), gn(1, 0));
    }

    #[test]
    fn mul_examples() {
        // defining relation τ·τ = 1 + τ
        assert_eq!(gn(0, 1) * gn(0, 1), gn(1, 1));
        // (τ − 1)·τ = 1, i.e. 1/τ = τ − 1
        assert_eq!(gn(-1, 1) * gn(0, 1), gn(1, 0));
        // (1/τ²)·τ² = 1
        assert_eq!(gn(2, -1) * gn(1, 1), gn(1, 0));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(gn(2, -1).sign(), Ordering::Greater); // 1/τ² > 0
        assert_eq!(gn(1, -1).sign(), Ordering::Less); // 1 − τ < 0
                                                      // 3(τ−1) − τ = 2τ − 3 > 0 since 3/τ ≈ 1.854 > τ
        assert_eq!((gn(-3, 3) - gn(0, 1)).sign(), Ordering::Greater);
        assert_eq!(gn(-3, 2).sign(), Ordering::Greater);
        assert_eq!(gn(0, 0).sign(), Ordering::Equal);
    }

    #[test]
    fn mod_tau_examples() {
        assert_eq!(GoldenNumber::tau().mod_tau(), GoldenNumber::zero());
        assert_eq!(gn(1, 0).mod_tau(), gn(1, 0));
        // 2 + τ wraps twice: (2 + τ) − 2τ = 2 − τ = 1/τ²
        assert_eq!(gn(2, 1).mod_tau(), gn(2, -1));
        assert_eq!(gn(-1, 0).mod_tau(), gn(-1, 1)); // −1 + τ = 1/τ ∈ [0, τ)
    }

    #[test]
    fn interval_examples() {
        let full = GoldenInterval::half_open(GoldenNumber::zero(), GoldenNumber::tau());
        let dom_a = GoldenInterval::half_open(GoldenNumber::inv_tau(), GoldenNumber::tau());
        let dom_b = GoldenInterval::half_open(GoldenNumber::zero(), GoldenNumber::inv_tau());
        assert_eq!(full.intersect(&dom_a), dom_a);
        assert!(dom_b.intersect(&dom_a).is_empty());
        // [2/τ, τ) ∩ [0, 1/τ) is empty since 2/τ ≈ 1.236 > 1/τ
        let two_over_tau = gn(-2, 2);
        let upper = GoldenInterval::half_open(two_over_tau, GoldenNumber::tau());
        assert!(upper.intersect(&dom_b).is_empty());
    }

    #[test]
    fn interval_boundaries_are_half_open() {
        let dom_a = GoldenInterval::half_open(GoldenNumber::inv_tau(), GoldenNumber::tau());
        assert!(dom_a.contains(&GoldenNumber::inv_tau()));
        assert!(!dom_a.contains(&GoldenNumber::tau()));
        assert!(GoldenInterval::half_open(gn(1, 0), gn(1, 0)).is_empty());
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<GoldenNumber>();
        assert_send_sync::<GoldenInterval>();
    }

    #[test]
    fn display_and_parse_canonical_forms() {
        assert_eq!(gn(1, 0).to_string(), "1 + 0t");
        assert_eq!(gn(2, -1).to_string(), "2 - 1t");
        assert_eq!(GoldenNumber::from_parts(1, 2, 0, 1).to_string(), "1/2 + 0t");
        for s in [
            "1", "2 - 1t", "-1+1t", "t", "-t", "3/2t", "1/2", "0 + 0t", "2t - 1",
        ] {
            let v: GoldenNumber = s.parse().unwrap();
            let round: GoldenNumber = v.to_string().parse().unwrap();
            assert_eq!(v, round, "round trip through display failed for {s}");
        }
        assert_eq!(
            "-1+1t".parse::<GoldenNumber>().unwrap(),
            GoldenNumber::inv_tau()
        );
        assert!("".parse::<GoldenNumber>().is_err());
        assert!("1x".parse::<GoldenNumber>().is_err());
        assert!("1/0".parse::<GoldenNumber>().is_err());
    }

    #[test]
    fn division_and_norm() {
        assert_eq!(
            GoldenNumber::tau().inverse().unwrap(),
            GoldenNumber::inv_tau()
        );
        assert_eq!(GoldenNumber::zero().inverse(), None);
        let x = gn(3, -2);
        assert_eq!((&x / &x), GoldenNumber::one());
        assert_eq!(
            GoldenNumber::tau().norm(),
            BigRational::from_integer((-1).into())
        );
    }

    /// Deterministic pseudo-random coefficients for the float cross-check.
    struct SplitMix(u64);
    impl SplitMix {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }
        fn int(&mut self, bound: i64) -> i64 {
            (self.next() % (2 * bound as u64 + 1)) as i64 - bound
        }
    }

    #[test]
    fn sign_agrees_with_float_on_random_values() {
        let mut rng = SplitMix(0x5eed);
        for _ in 0..10_000 {
            let v = GoldenNumber::from_parts(
                rng.int(1_000_000),
                1 + rng.int(500).abs(),
                rng.int(1_000_000),
                1 + rng.int(500).abs(),
            );
            let approx = v.to_f64();
            if approx.abs() > 1e-6 {
                let expected = if approx > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
                assert_eq!(v.sign(), expected, "sign mismatch for {v}");
            }
        }
    }

    #[test]
    fn mod_tau_is_idempotent_and_in_range() {
        let mut rng = SplitMix(0xfeed);
        let tau = GoldenNumber::tau();
        for _ in 0..2_000 {
            let v = GoldenNumber::from_parts(
                rng.int(1000),
                1 + rng.int(30).abs(),
                rng.int(1000),
                1 + rng.int(30).abs(),
            );
            let m = v.mod_tau();
            assert!(
                !m.is_negative() && (&m - &tau).is_negative(),
                "{m} out of [0, τ)"
            );
            assert_eq!(m.mod_tau(), m);
            // v − m is an integer multiple of τ
            let k = (&v - &m) / tau.clone();
            assert!(k.is_rational() && k.p().denom().is_one());
        }
    }
}
