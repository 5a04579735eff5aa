//! From an extra term `A` to every number it witnesses.
//!
//! For each candidate digit sum `s` the number is forced: `T = A + s` and
//! `N(s) = T + R(T)` or `T * R(T)`. `N(s)` is kept when `s_b(N(s)) = s`.
//! Large `s` cannot work because `s_b(N) <= (b-1) * digits(N)` grows only
//! logarithmically, so the scan stops at a cap that is checked, not trusted:
//! [`digit_sum_cap`] proves that no `s` beyond the cap can be a digit sum.

use num_traits::{ToPrimitive, Zero};

use crate::digits::{digit_count, digit_sum, Base, Natural};
use crate::error::{Error, Result};
use crate::solvers::Mode;

/// Outcome of an inverse search together with the bound it relied on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSearch {
    pub extra_term: Natural,
    pub base: Base,
    pub mode: Mode,
    /// Largest digit sum examined; certified to exclude all larger ones.
    pub digit_sum_cap: u64,
    /// Upper bound on the digit count of any instance.
    pub max_digits: u64,
    pub instances: Vec<Natural>,
}

/// Digit-count bound of `N(s)` from the digit count of `T`.
fn digits_bound(t: &Natural, b: Base, mode: Mode) -> u64 {
    let k = digit_count(t, b) as u64;
    if mode.is_additive() {
        k + 1
    } else {
        2 * k
    }
}

fn excluded(a: &Natural, b: Base, mode: Mode, s: u64) -> bool {
    u64::from(b.max_digit()) * digits_bound(&(a + s), b, mode) < s
}

/// Checks that every `s > cap` is too large to be the digit sum of `N(s)`.
///
/// `f(s) = s - (b-1) * bound(A + s)` rises by one per step except where
/// `A + s` gains a digit, and its values at those crossings increase. So it
/// suffices to check `cap + 1` and the first crossing after it. The band
/// `cap+1 ..= 2 cap` is additionally checked against the actual `N(s)`.
fn certified(a: &Natural, b: Base, mode: Mode, cap: u64) -> bool {
    let s0 = cap + 1;
    if !excluded(a, b, mode, s0) {
        return false;
    }
    let d0 = digit_count(&(a + s0), b) as u32;
    let next = Natural::from(b.get()).pow(d0) - a;
    match next.to_u64() {
        Some(s1) if !excluded(a, b, mode, s1) => return false,
        _ => {}
    }
    (s0..=2 * cap.max(1)).all(|s| {
        let n = mode.combine(&(a + s), b);
        (u64::from(b.max_digit()) * digit_count(&n, b) as u64) < s
    })
}

/// Certified digit-sum cap for the inverse search. Starts from
/// `(b-1)(digits(A) + 4)` (additive) or `(b-1)(2 digits(A) + 6)`
/// (multiplicative) and doubles until the certificate holds.
pub fn digit_sum_cap(a: &Natural, b: Base, mode: Mode) -> u64 {
    let da = digit_count(a, b) as u64;
    let bm1 = u64::from(b.max_digit());
    let mut cap = if mode.is_additive() {
        bm1 * (da + 4)
    } else {
        bm1 * (2 * da + 6)
    };
    while !certified(a, b, mode, cap) {
        cap *= 2;
    }
    cap
}

pub fn extra_term_search(a: &Natural, b: Base, mode: Mode) -> Result<InverseSearch> {
    if !mode.is_weak() {
        return Err(Error::InvalidParams(format!(
            "inverse search needs a weak mode, got {mode}"
        )));
    }
    let cap = digit_sum_cap(a, b, mode);
    let mut instances = Vec::new();
    if a.is_zero() {
        // s = 0 forces N = 0, which needs T = A = 0.
        instances.push(Natural::zero());
    }
    for s in 1..=cap {
        let n = mode.combine(&(a + s), b);
        if digit_sum(&n, b) == s {
            instances.push(n);
        }
    }
    instances.sort();
    let max_digits = digits_bound(&(a + cap), b, mode);
    Ok(InverseSearch {
        extra_term: a.clone(),
        base: b,
        mode,
        digit_sum_cap: cap,
        max_digits,
        instances,
    })
}

/// Every `N` admitting extra term `a`, ascending.
pub fn extra_term_instances(a: &Natural, b: Base, mode: Mode) -> Result<Vec<Natural>> {
    extra_term_search(a, b, mode).map(|r| r.instances)
}
