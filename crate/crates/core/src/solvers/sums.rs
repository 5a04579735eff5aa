//! Solving `T + rev(T) = n` without scanning every `T`.
//!
//! If `T` has `k` digits `t_0..t_{k-1}` (little-endian), the digit of
//! `T + rev(T)` at position `i`, before carries, is `p_i = t_i + t_{k-1-i}`.
//! The column sums are symmetric (`p_i = p_{k-1-i}`), lie in `0..=2b-2`, and
//! the middle one of an odd-length `T` is even. So the search runs in two
//! stages: a carry-propagating walk from the low end picks the free half of
//! the column sums (at most two choices per position), the upper half is then
//! forced by symmetry and checked, and every surviving column-sum vector is
//! expanded into the digit pairs that produce it.
//!
//! Only `k = len(n)` and `k = len(n) - 1` can work, since
//! `b^(k-1) <= T + rev(T) < 2 b^k`.

use num_traits::Zero;

use crate::digits::{digits_le, from_le, Base, Natural};

/// Column-sum vectors for every digit length that can solve `T + rev(T) = n`.
fn column_sums(n_le: &[u8], b: u32) -> Vec<Vec<u8>> {
    let len = n_le.len();
    let mut found = Vec::new();
    for k in [len.saturating_sub(1), len] {
        if k == 0 {
            continue;
        }
        // Carry left over above position k-1 must equal n's remaining digits.
        let high = if k == len { 0 } else { u32::from(n_le[len - 1]) };
        if high > 1 {
            continue;
        }
        let mut p = vec![0u8; k];
        walk(n_le, b, k, high, 0, 0, &mut p, &mut found);
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn walk(
    n_le: &[u8],
    b: u32,
    k: usize,
    high: u32,
    i: usize,
    carry: u32,
    p: &mut Vec<u8>,
    found: &mut Vec<Vec<u8>>,
) {
    if i == k {
        if carry == high {
            found.push(p.clone());
        }
        return;
    }
    let digit = u32::from(n_le[i]);
    let mirror = k - 1 - i;
    if mirror < i {
        let pi = u32::from(p[mirror]);
        if (pi + carry) % b == digit {
            walk(n_le, b, k, high, i + 1, (pi + carry) / b, p, found);
        }
        return;
    }
    let r = (digit + b - carry) % b;
    for pi in [r, r + b] {
        if pi > 2 * (b - 1) {
            continue;
        }
        if i == mirror && pi % 2 == 1 {
            continue;
        }
        // t_{k-1} >= 1, so the outermost column is nonzero; for k = 1 it is
        // 2 t_0 with t_0 >= 1.
        if i == 0 && pi == 0 {
            continue;
        }
        p[i] = pi as u8;
        walk(n_le, b, k, high, i + 1, (pi + carry) / b, p, found);
    }
}

/// Range of `t_i` for the pair `(i, k-1-i)` with column sum `p`.
fn pair_range(p: u32, b: u32, outermost: bool) -> std::ops::RangeInclusive<u32> {
    let lo = p.saturating_sub(b - 1);
    let mut hi = p.min(b - 1);
    if outermost {
        // t_{k-1} = p - t_0 must be at least 1.
        hi = hi.min(p.saturating_sub(1));
    }
    lo..=hi
}

fn expand(p: &[u8], b: u32, out: &mut Vec<Vec<u8>>) {
    let k = p.len();
    let mut t = vec![0u8; k];
    if k == 1 {
        t[0] = p[0] / 2;
        out.push(t);
        return;
    }
    fn rec(p: &[u8], b: u32, i: usize, t: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let k = p.len();
        let j = k - 1 - i;
        if j < i {
            out.push(t.clone());
            return;
        }
        let pi = u32::from(p[i]);
        if i == j {
            t[i] = (pi / 2) as u8;
            rec(p, b, i + 1, t, out);
            return;
        }
        for ti in pair_range(pi, b, i == 0) {
            t[i] = ti as u8;
            t[j] = (pi - ti) as u8;
            rec(p, b, i + 1, t, out);
        }
    }
    rec(p, b, 0, &mut t, out);
}

fn count_for(p: &[u8], b: u32) -> Natural {
    let k = p.len();
    let mut c = Natural::from(1u32);
    for (i, &d) in p.iter().take(k / 2).enumerate() {
        let r = pair_range(u32::from(d), b, i == 0);
        let width = if r.is_empty() { 0 } else { r.end() - r.start() + 1 };
        c *= width;
    }
    c
}

/// Every `T >= 0` with `T + rev_b(T) = n`, ascending.
pub(crate) fn additive_roots(n: &Natural, b: Base) -> Vec<Natural> {
    if n.is_zero() {
        return vec![Natural::zero()];
    }
    let n_le = digits_le(n, b);
    let mut ts = Vec::new();
    for p in column_sums(&n_le, b.get()) {
        expand(&p, b.get(), &mut ts);
    }
    let mut roots: Vec<Natural> = ts.iter().map(|t| from_le(t, b)).collect();
    roots.sort();
    roots.dedup();
    roots
}

/// Number of roots `T >= floor` without materializing large solution sets.
pub(crate) fn additive_root_count(n: &Natural, b: Base, floor: u64) -> Natural {
    if n.is_zero() {
        return Natural::from(u32::from(floor == 0));
    }
    let n_le = digits_le(n, b);
    let floor_big = Natural::from(floor);
    let mut total = Natural::zero();
    for p in column_sums(&n_le, b.get()) {
        // Every k-digit T is at least b^(k-1); only tiny T can fall below the
        // floor, and those are enumerated.
        let smallest = Natural::from(b.get()).pow(p.len() as u32 - 1);
        if smallest >= floor_big {
            total += count_for(&p, b.get());
        } else {
            let mut ts = Vec::new();
            expand(&p, b.get(), &mut ts);
            total += ts.iter().filter(|t| from_le(t, b) >= floor_big).count();
        }
    }
    total
}
