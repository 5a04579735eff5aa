//! Exact base-b digit representation.
//!
//! Everything here works on [`Natural`] (an unbounded unsigned integer) and
//! a [`Base`] between 2 and 36. Reversal is defined on values: the reversal
//! of `120` in base 10 is `21`, because the leading zero of `021` has no
//! effect on the integer.
//!
//! Zero is written as the single digit `[0]`, has digit sum 0 and is a
//! palindrome.
//!
//! The `_u64` helpers are fast paths for range scans; they agree with the
//! generic functions on every input that fits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Unbounded nonnegative integer.
pub type Natural = BigUint;

const DIGIT_CHARS: &[u8; 36] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// A numeration base in `2..=36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

impl Base {
    pub const MIN: u32 = 2;
    pub const MAX: u32 = 36;
    pub const TEN: Base = Base(10);

    pub fn new(value: u32) -> Result<Self> {
        if (Self::MIN..=Self::MAX).contains(&value) {
            Ok(Base(value))
        } else {
            Err(Error::InvalidBase(value))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Largest digit, `b - 1`.
    #[inline]
    pub fn max_digit(self) -> u32 {
        self.0 - 1
    }

    /// All bases in `lo..=hi`; panics if either end is out of range.
    pub fn range(lo: u32, hi: u32) -> impl Iterator<Item = Base> {
        (lo..=hi).map(|b| Base::new(b).expect("base out of range"))
    }
}

impl TryFrom<u32> for Base {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self> {
        Base::new(value)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: u32 = s.trim().parse().map_err(|_| Error::InvalidBase(0))?;
        Base::new(v)
    }
}

/// Canonical base-b digit string, most significant digit first.
///
/// Never has a leading zero, except that zero itself is `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    base: Base,
    digits: Vec<u8>,
}

impl DigitString {
    /// Validates `digits` against `base` and strips leading zeros.
    pub fn new(base: Base, digits: &[u32]) -> Result<Self> {
        let mut out = Vec::with_capacity(digits.len());
        for &d in digits {
            if d >= base.get() {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    base: base.get(),
                });
            }
            out.push(d as u8);
        }
        Ok(Self::from_raw(base, out))
    }

    fn from_raw(base: Base, mut digits: Vec<u8>) -> Self {
        let first = digits.iter().position(|&d| d != 0);
        match first {
            Some(0) => {}
            Some(i) => {
                digits.drain(..i);
            }
            None => {
                digits.clear();
                digits.push(0);
            }
        }
        DigitString { base, digits }
    }

    /// Parses characters `0-9A-Z` (case-insensitive).
    pub fn parse(text: &str, base: Base) -> Result<Self> {
        let mut digits = Vec::with_capacity(text.len());
        for c in text.chars() {
            let d = c.to_digit(36).ok_or(Error::InvalidDigitChar(c))?;
            digits.push(d);
        }
        if digits.is_empty() {
            return Err(Error::InvalidParams("empty digit string".into()));
        }
        Self::new(base, &digits)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_palindrome(&self) -> bool {
        self.digits.iter().eq(self.digits.iter().rev())
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn value(&self) -> Natural {
        BigUint::from_radix_be(&self.digits, self.base.get()).expect("validated digits")
    }

    /// The digits reversed and renormalized.
    pub fn reversed(&self) -> DigitString {
        let mut d = self.digits.clone();
        d.reverse();
        Self::from_raw(self.base, d)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", DIGIT_CHARS[d as usize] as char)?;
        }
        Ok(())
    }
}

/// Little-endian digits of `n`; `[0]` for zero.
pub(crate) fn digits_le(n: &Natural, b: Base) -> Vec<u8> {
    if n.is_zero() {
        vec![0]
    } else {
        n.to_radix_le(b.get())
    }
}

pub(crate) fn from_le(digits: &[u8], b: Base) -> Natural {
    BigUint::from_radix_le(digits, b.get()).expect("digits below base")
}

pub fn to_digits(n: &Natural, b: Base) -> DigitString {
    let mut d = digits_le(n, b);
    d.reverse();
    DigitString { base: b, digits: d }
}

/// Positional value of a most-significant-first digit list. Leading zeros are
/// accepted.
pub fn from_digits(digits: &[u32], b: Base) -> Result<Natural> {
    DigitString::new(b, digits).map(|d| d.value())
}

pub fn digit_sum(n: &Natural, b: Base) -> u64 {
    if n.is_zero() {
        return 0;
    }
    n.to_radix_le(b.get()).iter().map(|&d| u64::from(d)).sum()
}

/// Number of canonical digits (1 for zero).
pub fn digit_count(n: &Natural, b: Base) -> usize {
    if n.is_zero() {
        1
    } else {
        n.to_radix_le(b.get()).len()
    }
}

pub fn reverse_value(n: &Natural, b: Base) -> Natural {
    if n.is_zero() {
        return Natural::zero();
    }
    BigUint::from_radix_be(&n.to_radix_le(b.get()), b.get()).expect("digits below base")
}

pub fn is_palindrome(n: &Natural, b: Base) -> bool {
    let d = digits_le(n, b);
    d.iter().eq(d.iter().rev())
}

pub fn digit_sum_u64(mut n: u64, b: u32) -> u64 {
    let b = u64::from(b);
    let mut s = 0;
    while n > 0 {
        s += n % b;
        n /= b;
    }
    s
}

/// Reversal of a `u64`; widened because the reversal can exceed `u64::MAX`.
pub fn reverse_u64(mut n: u64, b: u32) -> u128 {
    let bw = u64::from(b);
    let mut r: u128 = 0;
    while n > 0 {
        r = r * u128::from(b) + u128::from(n % bw);
        n /= bw;
    }
    r
}

pub fn digit_count_u64(mut n: u64, b: u32) -> usize {
    let b = u64::from(b);
    let mut k = 1;
    while n >= b {
        n /= b;
        k += 1;
    }
    k
}

/// One element of a [`Pattern`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Digit(u32),
    Group(Pattern),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub piece: Piece,
    pub repeat: usize,
}

/// Digit-string template built from digits and repeated groups, the
/// `[1 (0)^k 1]` style notation. A repeat count of zero contributes nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Pattern {
    segments: Vec<Segment>,
}

impl Pattern {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn digit(self, d: u32) -> Self {
        self.repeat_digit(d, 1)
    }

    pub fn digits(mut self, ds: &[u32]) -> Self {
        for &d in ds {
            self = self.digit(d);
        }
        self
    }

    pub fn repeat_digit(mut self, d: u32, k: usize) -> Self {
        self.segments.push(Segment {
            piece: Piece::Digit(d),
            repeat: k,
        });
        self
    }

    pub fn repeat_group(mut self, group: Pattern, k: usize) -> Self {
        self.segments.push(Segment {
            piece: Piece::Group(group),
            repeat: k,
        });
        self
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Expanded digit list, most significant first, leading zeros kept.
    pub fn expand(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.expand_into(&mut out);
        out
    }

    fn expand_into(&self, out: &mut Vec<u32>) {
        for seg in &self.segments {
            for _ in 0..seg.repeat {
                match &seg.piece {
                    Piece::Digit(d) => out.push(*d),
                    Piece::Group(g) => g.expand_into(out),
                }
            }
        }
    }
}

pub fn build(pattern: &Pattern, b: Base) -> Result<Natural> {
    from_digits(&pattern.expand(), b)
}
