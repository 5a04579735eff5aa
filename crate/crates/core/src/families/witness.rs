//! Explicit witnesses for palindromes and squares of palindromes.

use num_traits::Zero;

use crate::digits::{digit_sum, digits_le, from_le, is_palindrome, Base, Natural};
use crate::error::{Error, Result};

/// The `T` with `T + R(T) = n` built from the left half of a palindrome:
/// `[a_1..a_m (0)^m]` for even length, `[a_1..a_m (a_{m+1}/2) (0)^m]` for odd
/// length with an even middle digit.
pub fn canonical_palindrome_root(n: &Natural, b: Base) -> Result<Natural> {
    let le = digits_le(n, b);
    if !is_palindrome(n, b) {
        return Err(Error::NotEligible(format!("{n} is not a base-{b} palindrome")));
    }
    let len = le.len();
    let m = len / 2;
    // Palindrome, so the little-endian digits double as the big-endian ones.
    let mut t_le = vec![0u8; m];
    if len % 2 == 1 {
        let middle = le[m];
        if middle % 2 == 1 {
            return Err(Error::NotEligible(format!(
                "{n} has odd middle digit {middle} in base {b}"
            )));
        }
        t_le.push(middle / 2);
    }
    t_le.extend(le[len - m..].iter());
    Ok(from_le(&t_le, b))
}

/// Extra term `A = T - s_b(n)` for the canonical root. Fails with
/// [`Error::NegativeWitness`] for single nonzero even digits, where
/// `T = n/2 < s_b(n)`.
pub fn canonical_palindrome_witness(n: &Natural, b: Base) -> Result<Natural> {
    let t = canonical_palindrome_root(n, b)?;
    let s = digit_sum(n, b);
    if t < Natural::from(s) {
        return Err(Error::NegativeWitness {
            n: n.to_string(),
            t: t.to_string(),
            digit_sum: s,
        });
    }
    Ok(t - s)
}

/// `(p^2, p - s_b(p^2))` for a palindrome `p` with at least two digits, so
/// that `T = p` and `T * R(T) = p^2`.
pub fn canonical_square_witness(p: &Natural, b: Base) -> Result<(Natural, Natural)> {
    if p.is_zero() || digits_le(p, b).len() < 2 || !is_palindrome(p, b) {
        return Err(Error::NotEligible(format!(
            "{p} is not a base-{b} palindrome with at least two digits"
        )));
    }
    let n = p * p;
    let s = digit_sum(&n, b);
    if *p < Natural::from(s) {
        return Err(Error::NegativeWitness {
            n: n.to_string(),
            t: p.to_string(),
            digit_sum: s,
        });
    }
    let a = p - s;
    Ok((n, a))
}
