//! Audits of the general statements: the extra-term-zero solutions, the
//! digit-count bounds, and the digit-sum inequalities.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::digits::{
    digit_count, digit_sum, digit_sum_u64, from_le, reverse_u64, to_digits, Base, Natural,
};
use crate::families::report::{ClaimReport, Verdict};
use crate::solvers::{warh_witnesses, wmrh_witnesses};

/// Every `N < b^max_digits` with `N = s + R(s)`, `s = s_b(N)`.
pub fn zero_term_solutions(b: Base, max_digits: u32) -> Vec<Natural> {
    let bb = b.get();
    let limit = u64::from(bb).pow(max_digits);
    (0..limit)
        .filter(|&n| {
            let s = digit_sum_u64(n, bb);
            u128::from(s) + reverse_u64(s, bb) == u128::from(n)
        })
        .map(Natural::from)
        .collect()
}

/// The list of extra-term-zero numbers as stated: `0`, `[1 (b-2)]_b`, plus
/// `[11]_2` in base 2 and `[22]_3` in base 3.
pub fn stated_zero_terms(b: Base) -> Vec<Natural> {
    let bb = u64::from(b.get());
    let mut v = vec![0, 2 * bb - 2];
    match bb {
        2 => v.push(3),
        3 => v.push(8),
        _ => {}
    }
    v.sort_unstable();
    v.dedup();
    v.into_iter().map(Natural::from).collect()
}

fn set_string(v: &[Natural]) -> String {
    let parts: Vec<String> = v.iter().map(|n| n.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Compares the brute-force extra-term-zero solutions with four or fewer
/// digits against [`stated_zero_terms`]. Extras and omissions are failures.
pub fn check_zero_term_theorem(b: Base) -> ClaimReport {
    let computed = zero_term_solutions(b, 4);
    let stated = stated_zero_terms(b);
    let mut report = ClaimReport::new(
        format!("additive extra term 0, base {b}"),
        format!("all N with at most 4 digits in base {b}"),
    );
    report.note(format!("computed {}", set_string(&computed)));
    report.note(format!("stated {}", set_string(&stated)));
    let mut all: Vec<Natural> = computed.iter().chain(stated.iter()).cloned().collect();
    all.sort();
    all.dedup();
    for n in all {
        let in_computed = computed.contains(&n);
        let in_stated = stated.contains(&n);
        let s = digit_sum(&n, b);
        let params = format!("b={b},N={n},[{}]_{b}", to_digits(&n, b));
        let (verdict, detail) = match (in_computed, in_stated) {
            (true, true) => (Verdict::Pass, format!("{s} + R({s}) = N, listed")),
            (true, false) => (Verdict::Fail, format!("{s} + R({s}) = N but N is not listed")),
            _ => (Verdict::Fail, format!("listed but s = {s} gives s + R(s) != N")),
        };
        report.record("zero-extra-term-set", params, verdict, detail);
    }
    report
}

fn digits_of(a: &Natural, b: Base) -> u64 {
    digit_count(a, b) as u64
}

/// `floor(log_b a)` for `a >= 1`.
fn floor_log(a: &Natural, b: Base) -> u64 {
    digits_of(a, b) - 1
}

fn audit_chunk(b: Base, lo: u64, hi: u64) -> ClaimReport {
    let mut r = ClaimReport::failures_only("", "");
    let bb = b.get();
    let b3 = Natural::from(bb).pow(3);
    let mul_slack: u64 = if bb >= 6 { 4 } else { 5 };
    let log_floor_mul = if bb == 2 { Natural::from(4u32) } else { b3.clone() };
    for v in lo..hi {
        let n = Natural::from(v);
        let k = digits_of(&n, b);
        for a in warh_witnesses(&n, b).witnesses() {
            let bound = a + 4u32;
            r.record_with("additive-digits-at-most-a-plus-4", Verdict::from_bool(Natural::from(k) <= bound), || {
                (format!("N={n},A={a}"), format!("k = {k}, A + 4 = {bound}"))
            });
            if *a >= b3 {
                let bound = 2 * floor_log(a, b);
                r.record_with("additive-digits-at-most-2-log-a", Verdict::from_bool(k <= bound), || {
                    (format!("N={n},A={a}"), format!("k = {k}, 2 floor(log_b A) = {bound}"))
                });
            } else {
                r.record_with("additive-digits-at-most-2-log-a", Verdict::NotApplicable, || {
                    (format!("N={n},A={a}"), format!("A < {b3}"))
                });
            }
        }
        for a in wmrh_witnesses(&n, b).witnesses() {
            let pa = format!("N={n},A={a}");
            if a.to_u64() == Some(0) {
                r.record_with("multiplicative-digits-at-most-a-plus-c", Verdict::NotApplicable, || {
                    (pa.clone(), "A = 0".into())
                });
                r.record_with("multiplicative-digits-at-most-3-log-a", Verdict::NotApplicable, || {
                    (pa.clone(), "A = 0".into())
                });
                continue;
            }
            let bound = a + mul_slack;
            r.record_with(
                "multiplicative-digits-at-most-a-plus-c",
                Verdict::from_bool(Natural::from(k) <= bound),
                || (pa.clone(), format!("k = {k}, A + {mul_slack} = {bound}")),
            );
            if *a >= log_floor_mul {
                let bound = 3 * floor_log(a, b);
                r.record_with("multiplicative-digits-at-most-3-log-a", Verdict::from_bool(k <= bound), || {
                    (pa.clone(), format!("k = {k}, 3 floor(log_b A) = {bound}"))
                });
            } else {
                r.record_with("multiplicative-digits-at-most-3-log-a", Verdict::NotApplicable, || {
                    (pa.clone(), format!("A < {log_floor_mul}"))
                });
            }
        }
    }
    r
}

/// Evaluates the digit-count bounds for every witness of every `N` in
/// `0..=n_limit`:
///
/// - additive: `k <= A + 4`; `k <= 2 floor(log_b A)` when `A >= b^3`;
/// - multiplicative, `A >= 1`: `k <= A + 4` (`b >= 6`) or `A + 5`
///   (`b <= 5`); `k <= 3 floor(log_b A)` when `A >= b^3` (`b >= 3`) or
///   `A >= 4` (`b = 2`).
pub fn check_bound_theorems(b: Base, n_limit: &Natural) -> ClaimReport {
    const CHUNK: u64 = 4096;
    let end = n_limit.to_u64().unwrap_or(u64::MAX - 1).saturating_add(1);
    let chunks: Vec<(u64, u64)> = (0..end.div_ceil(CHUNK))
        .map(|i| (i * CHUNK, ((i + 1) * CHUNK).min(end)))
        .collect();
    let parts: Vec<ClaimReport> = chunks
        .par_iter()
        .map(|&(lo, hi)| audit_chunk(b, lo, hi))
        .collect();
    let mut report = ClaimReport::failures_only(
        format!("digit-count bounds, base {b}"),
        format!("0 <= N <= {n_limit}"),
    );
    for p in parts {
        report.merge(p);
    }
    report
}

/// Checks for each sample `N`:
///
/// - `2 s_b(N) <= N` (at least two digits);
/// - `2 s_b(N) + b - 1 <= N b + (b-1)/2` (at least two digits), compared
///   after doubling;
/// - `s_b(N^2) <= N` (at least three digits). For two-digit `N` the values
///   are still shown in the not-applicable entry.
pub fn check_digit_inequalities(b: Base, sample: &[Natural]) -> ClaimReport {
    let bm1 = u64::from(b.max_digit());
    let parts: Vec<ClaimReport> = sample
        .par_chunks(1024)
        .map(|chunk| {
            let mut r = ClaimReport::failures_only("", "");
            for n in chunk {
                let k = digit_count(n, b);
                let s = digit_sum(n, b);
                let params = || format!("b={b},N={n}");
                if k < 2 {
                    r.record_with("half-digit-sum", Verdict::NotApplicable, || (params(), "one digit".into()));
                    r.record_with("scaled-digit-sum", Verdict::NotApplicable, || (params(), "one digit".into()));
                } else {
                    let lhs = Natural::from(2 * s);
                    r.record_with("half-digit-sum", Verdict::from_bool(&lhs <= n), || {
                        (params(), format!("2 s = {lhs}, N = {n}"))
                    });
                    let lhs = Natural::from(4 * s + 2 * bm1);
                    let rhs = n * (2 * b.get()) + bm1;
                    r.record_with("scaled-digit-sum", Verdict::from_bool(lhs <= rhs), || {
                        (params(), format!("4 s + 2(b-1) = {lhs}, 2 N b + (b-1) = {rhs}"))
                    });
                }
                let sq = digit_sum(&(n * n), b);
                let holds = Natural::from(sq) <= *n;
                if k < 3 {
                    r.record_with("square-digit-sum", Verdict::NotApplicable, || {
                        (params(), format!("fewer than 3 digits; s(N^2) = {sq}, N = {n}, holds: {holds}"))
                    });
                } else {
                    r.record_with("square-digit-sum", Verdict::from_bool(holds), || {
                        (params(), format!("s(N^2) = {sq}, N = {n}"))
                    });
                }
            }
            r
        })
        .collect();
    let mut report = ClaimReport::failures_only(
        format!("digit-sum inequalities, base {b}"),
        format!("{} sampled values", sample.len()),
    );
    for p in parts {
        report.merge(p);
    }
    report
}

/// `count` values whose digit count is uniform in `min_digits..=max_digits`
/// with uniform digits and a nonzero leading digit. Seeded, so repeatable.
pub fn sample_numbers(b: Base, count: usize, min_digits: usize, max_digits: usize, seed: u64) -> Vec<Natural> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bb = b.get() as u8;
    (0..count)
        .map(|_| {
            let len = rng.gen_range(min_digits.max(1)..=max_digits.max(min_digits).max(1));
            let mut le: Vec<u8> = (0..len).map(|_| rng.gen_range(0..bb)).collect();
            le[len - 1] = rng.gen_range(1..bb);
            from_le(&le, b)
        })
        .collect()
}
