//! Divisor enumeration by trial division.
//!
//! Values up to `u64::MAX` are factored with machine integers. Larger values
//! fall back to trial division on `Natural`, which is only practical while the
//! second-largest prime factor stays small.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::digits::Natural;

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while n.is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn expand_divisors<T: Clone + std::ops::Mul<Output = T> + Ord>(
    factors: &[(T, u32)],
    one: T,
) -> Vec<T> {
    let mut divs = vec![one];
    for (p, e) in factors {
        let base_len = divs.len();
        let mut pk = p.clone();
        for _ in 0..*e {
            for i in 0..base_len {
                divs.push(divs[i].clone() * pk.clone());
            }
            pk = pk * p.clone();
        }
    }
    divs.sort();
    divs
}

/// Sorted divisors of `n >= 1`.
pub(crate) fn divisors_u64(n: u64) -> Vec<u64> {
    debug_assert!(n > 0);
    expand_divisors(&factor_u64(n), 1u64)
}

fn factor_big(n: &Natural) -> Vec<(Natural, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = Natural::from(2u32);
    while &p * &p <= n {
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == Natural::from(2u32) { 1u32 } else { 2u32 };
    }
    if n > Natural::one() {
        out.push((n, 1));
    }
    out
}

/// Sorted divisors of `n >= 1`.
pub(crate) fn divisors(n: &Natural) -> Vec<Natural> {
    match n.to_u64() {
        Some(v) => divisors_u64(v).into_iter().map(Natural::from).collect(),
        None => expand_divisors(&factor_big(n), Natural::one()),
    }
}
