//! Number types the algorithms run over.
//!
//! Everything is generic over [`Scalar`]. [`Rational`] gives exact results and
//! is the default; `f64` exists so large instances can be timed.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::HotspotError;

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

/// Ordered field used for coordinates, timestamps and weights.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `true` when comparisons are exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Parses a finite decimal (`-12.5`, `3e-2`) or a fraction (`7/3`).
    fn parse(text: &str) -> Result<Self, HotspotError>;

    fn to_f64(&self) -> f64;

    /// Total order used for sorting and queue keys.
    fn total_cmp(&self, other: &Self) -> Ordering;

    /// Comparison used for decisions between competing weights. Exact for
    /// rationals; within a small relative tolerance for floats.
    fn decide_cmp(&self, other: &Self) -> Ordering {
        self.total_cmp(other)
    }

    /// Lossless text form accepted by [`Scalar::parse`].
    fn to_exact_string(&self) -> String;

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }

    fn min_of(a: &Self, b: &Self) -> Self {
        if a.total_cmp(b) == Ordering::Greater {
            b.clone()
        } else {
            a.clone()
        }
    }

    fn max_of(a: &Self, b: &Self) -> Self {
        if a.total_cmp(b) == Ordering::Less {
            b.clone()
        } else {
            a.clone()
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse(text: &str) -> Result<Self, HotspotError> {
        parse_rational(text)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn to_exact_string(&self) -> String {
        if let Some(dec) = terminating_decimal(self) {
            dec
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

/// Relative tolerance for float weight decisions.
const FLOAT_DECIDE_TOL: f64 = 1e-11;

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn parse(text: &str) -> Result<Self, HotspotError> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| bad_number(text))?;
            let d: f64 = d.trim().parse().map_err(|_| bad_number(text))?;
            if d == 0.0 {
                return Err(bad_number(text));
            }
            return Ok(n / d);
        }
        let v: f64 = text.parse().map_err(|_| bad_number(text))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad_number(text))
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        // Rotations produce -0.0, which must sort equal to 0.0.
        self.partial_cmp(other)
            .unwrap_or_else(|| f64::total_cmp(self, other))
    }

    fn decide_cmp(&self, other: &Self) -> Ordering {
        let scale = 1f64.max(self.abs()).max(other.abs());
        if (self - other).abs() <= FLOAT_DECIDE_TOL * scale {
            Ordering::Equal
        } else {
            f64::total_cmp(self, other)
        }
    }

    fn to_exact_string(&self) -> String {
        // `{:?}` prints the shortest representation that round-trips.
        format!("{self:?}")
    }
}

fn bad_number(text: &str) -> HotspotError {
    HotspotError::InvalidNumber(text.to_string())
}

fn parse_rational(text: &str) -> Result<Rational, HotspotError> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad_number(text))?;
        let d: BigInt = d.trim().parse().map_err(|_| bad_number(text))?;
        if d.is_zero() {
            return Err(bad_number(text));
        }
        return Ok(BigRational::new(n, d));
    }

    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = text[pos + 1..].parse().map_err(|_| bad_number(text))?;
            (&text[..pos], exp)
        }
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad_number(text));
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad_number(text));
    }
    if exponent.unsigned_abs() > 4096 {
        return Err(bad_number(text));
    }

    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| bad_number(text))?
    };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Decimal rendering when the denominator has only factors 2 and 5.
fn terminating_decimal(value: &Rational) -> Option<String> {
    let mut den = value.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let (mut twos, mut fives) = (0usize, 0usize);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return None;
    }
    let places = twos.max(fives);
    if places == 0 {
        return Some(value.numer().to_string());
    }
    let scaled = value * BigRational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    let sign = if value.is_negative() { "-" } else { "" };
    Some(format!("{sign}{int_part}.{frac_part}"))
}
