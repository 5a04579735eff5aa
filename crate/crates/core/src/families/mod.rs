//! Infinite families with their claimed witnesses, and claim audits.
//!
//! Generators never trust a claim: [`generate`] pairs each member with what
//! its family statement asserts, and [`verify_family`] evaluates every
//! assertion against the defining equations and the solvers.
//!
//! | id | members | claims |
//! |----|---------|--------|
//! | F1 | `[1 (0)^k (0)^k 1]`, `k >= 1` | additive extra term `b^(2k) - 2` |
//! | F2 | `([1 (0)^(k-1) 1])^2`, `k >= 1` | multiplicative extra term `b^k - 1` |
//! | F3 | `[1 (0)^k (b-1) (b-1) (0)^k 1]`, `k >= 1` | additive weak, `s = 2b`, not Niven |
//! | F4 | `[(b-1) (0)^k (b-1)]`, `k` even; `[2 (0)^k 2 (0)^k 2]_3` | additive weak, not MRH |
//! | F5 | squares of sparse palindromes, by base class | multiplicative weak, not Niven, not MRH |
//! | F6 | `[I c c I^R]`, `c = 0..b` | additive weak, constant step `(b+1) b^len(I)` |
//! | F7 | `[(1)^k]`, `k = b^p`, `b` even | listed additive multipliers `k [(1)^p I]` |
//! | F8 | `[(1)^p (10)^(k-2p) 0 (1)^p]`, `k = b^p`, `b` even | listed extra terms `2([(1)^p I 0] - 1)` |

mod audit;
mod report;
mod witness;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::digits::{build, digit_sum, reverse_value, Base, DigitString, Natural, Pattern};
use crate::error::{Error, Result};
use crate::solvers::{is_niven, multiplicity, witnesses, Mode};

pub use audit::{
    check_bound_theorems, check_digit_inequalities, check_zero_term_theorem, sample_numbers,
    stated_zero_terms, zero_term_solutions,
};
pub use report::{ClaimEntry, ClaimReport, Tally, Verdict};
pub use witness::{canonical_palindrome_root, canonical_palindrome_witness, canonical_square_witness};

/// Default cap on listed witnesses per F7/F8 member.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Members longer than this many digits are refused.
const MAX_DIGITS: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::F5,
        FamilyId::F6,
        FamilyId::F7,
        FamilyId::F8,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            FamilyId::F1 => "[1 (0)^k (0)^k 1] with additive extra term b^(2k) - 2",
            FamilyId::F2 => "([1 (0)^(k-1) 1])^2 with multiplicative extra term b^k - 1",
            FamilyId::F3 => "[1 (0)^k (b-1)(b-1) (0)^k 1], additive weak and not Niven",
            FamilyId::F4 => "[(b-1) (0)^k (b-1)] for even k, additive weak and not MRH",
            FamilyId::F5 => "squares of sparse palindromes, multiplicative weak and not Niven",
            FamilyId::F6 => "[I c c I^R] for c = 0..b-1, an arithmetic progression",
            FamilyId::F7 => "repunits of length b^p with listed additive multipliers",
            FamilyId::F8 => "[(1)^p (10)^(k-2p) 0 (1)^p] with listed additive extra terms",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", *self as u8 + 1)
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let idx = t
            .strip_prefix(['F', 'f'])
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|d| (1..=8).contains(d))
            .ok_or_else(|| Error::InvalidParams(format!("unknown family {t:?}, expected F1..F8")))?;
        Ok(FamilyId::ALL[idx - 1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub base: Base,
    /// First `k` (F1 to F5). Defaults to the smallest valid value.
    pub k: Option<u64>,
    /// First `p` (F7, F8). Defaults to 1.
    pub p: Option<u32>,
    /// Digit string `I` (F6).
    pub i: Option<DigitString>,
    /// Most listed witnesses checked per member (F7, F8).
    pub budget: usize,
}

impl FamilySpec {
    pub fn new(id: FamilyId, base: Base) -> Self {
        FamilySpec {
            id,
            base,
            k: None,
            p: None,
            i: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_p(mut self, p: u32) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_i(mut self, i: DigitString) -> Self {
        self.i = Some(i);
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }
}

/// One assertion made about a family member `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    /// `term` is an extra term of `N` in a weak mode.
    ExtraTerm { mode: Mode, term: Natural },
    /// `multiplier` is a multiplier of `N` in an RH mode.
    Multiplier { mode: Mode, multiplier: Natural },
    Member(Mode),
    NotMember(Mode),
    NotNiven,
    DigitSum(u64),
    CountAtLeast { mode: Mode, count: Natural },
    CountExactly { mode: Mode, count: Natural },
    /// `N - previous = step`.
    Step { previous: Natural, step: Natural },
    /// The listed set was cut at the budget.
    Truncated { listed: usize, total: Natural },
}

impl Claim {
    pub fn id(&self) -> String {
        match self {
            Claim::ExtraTerm { mode, .. } => format!("extra-term-{mode}"),
            Claim::Multiplier { mode, .. } => format!("multiplier-{mode}"),
            Claim::Member(mode) => format!("member-{mode}"),
            Claim::NotMember(mode) => format!("not-{mode}"),
            Claim::NotNiven => "not-niven".into(),
            Claim::DigitSum(_) => "digit-sum".into(),
            Claim::CountAtLeast { mode, .. } => format!("count-at-least-{mode}"),
            Claim::CountExactly { mode, .. } => format!("count-exactly-{mode}"),
            Claim::Step { .. } => "progression-step".into(),
            Claim::Truncated { .. } => "listing-truncated".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    /// Parameters of this member, e.g. `k=2`.
    pub params: String,
    pub n: Natural,
    pub claims: Vec<Claim>,
}

fn pow(b: Base, e: u64) -> Natural {
    Natural::from(b.get()).pow(e as u32)
}

fn check_len(digits: u64) -> Result<()> {
    if digits > MAX_DIGITS {
        return Err(Error::InvalidParams(format!(
            "member would have {digits} digits, limit is {MAX_DIGITS}"
        )));
    }
    Ok(())
}

fn pattern(b: Base, p: Pattern, len: u64) -> Result<Natural> {
    check_len(len)?;
    build(&p, b)
}

fn palindrome_claims(n: &Natural, b: Base) -> Vec<Claim> {
    let mut claims = vec![Claim::Member(Mode::AdditiveWeak)];
    if let Ok(a) = canonical_palindrome_witness(n, b) {
        claims.push(Claim::ExtraTerm {
            mode: Mode::AdditiveWeak,
            term: a,
        });
    }
    claims
}

/// Parameter values `start, start+step, ...`.
fn ks(start: u64, step: u64, count: usize) -> impl Iterator<Item = u64> {
    (0..count as u64).map(move |i| start + i * step)
}

fn f1(b: Base, k0: u64, count: usize) -> Result<Vec<FamilyMember>> {
    if k0 == 0 {
        return Err(Error::InvalidParams("F1 needs k >= 1".into()));
    }
    ks(k0, 1, count)
        .map(|k| {
            let n = pattern(b, Pattern::new().digit(1).repeat_digit(0, 2 * k as usize).digit(1), 2 * k + 2)?;
            Ok(FamilyMember {
                params: format!("k={k}"),
                n,
                claims: vec![Claim::ExtraTerm {
                    mode: Mode::AdditiveWeak,
                    term: pow(b, 2 * k) - 2u32,
                }],
            })
        })
        .collect()
}

fn f2(b: Base, k0: u64, count: usize) -> Result<Vec<FamilyMember>> {
    if k0 == 0 {
        return Err(Error::InvalidParams("F2 needs k >= 1".into()));
    }
    ks(k0, 1, count)
        .map(|k| {
            let p = pattern(b, Pattern::new().digit(1).repeat_digit(0, k as usize - 1).digit(1), 2 * k + 1)?;
            Ok(FamilyMember {
                params: format!("k={k}"),
                n: &p * &p,
                claims: vec![Claim::ExtraTerm {
                    mode: Mode::MultiplicativeWeak,
                    term: pow(b, k) - 1u32,
                }],
            })
        })
        .collect()
}

fn f3(b: Base, k0: u64, count: usize) -> Result<Vec<FamilyMember>> {
    if k0 == 0 {
        return Err(Error::InvalidParams("F3 needs k >= 1".into()));
    }
    let top = b.max_digit();
    ks(k0, 1, count)
        .map(|k| {
            let zeros = k as usize;
            let p = Pattern::new()
                .digit(1)
                .repeat_digit(0, zeros)
                .digits(&[top, top])
                .repeat_digit(0, zeros)
                .digit(1);
            let n = pattern(b, p, 2 * k + 4)?;
            let mut claims = palindrome_claims(&n, b);
            claims.push(Claim::DigitSum(2 * u64::from(b.get())));
            claims.push(Claim::NotNiven);
            Ok(FamilyMember {
                params: format!("k={k}"),
                n,
                claims,
            })
        })
        .collect()
}

fn f4(b: Base, k: Option<u64>, count: usize) -> Result<Vec<FamilyMember>> {
    if b.get() == 3 {
        return ks(k.unwrap_or(1), 1, count)
            .map(|k| {
                let zeros = k as usize;
                let p = Pattern::new()
                    .digit(2)
                    .repeat_digit(0, zeros)
                    .digit(2)
                    .repeat_digit(0, zeros)
                    .digit(2);
                let n = pattern(b, p, 2 * k + 3)?;
                let mut claims = palindrome_claims(&n, b);
                claims.push(Claim::DigitSum(6));
                claims.push(Claim::NotMember(Mode::MultiplicativeRH));
                Ok(FamilyMember {
                    params: format!("k={k}"),
                    n,
                    claims,
                })
            })
            .collect();
    }
    let k0 = k.unwrap_or(2);
    if k0 % 2 == 1 {
        return Err(Error::InvalidParams(format!("F4 needs even k, got {k0}")));
    }
    let top = b.max_digit();
    ks(k0, 2, count)
        .map(|k| {
            let p = Pattern::new().digit(top).repeat_digit(0, k as usize).digit(top);
            let n = pattern(b, p, k + 2)?;
            let mut claims = palindrome_claims(&n, b);
            claims.push(Claim::DigitSum(2 * u64::from(top)));
            claims.push(Claim::NotMember(Mode::MultiplicativeRH));
            Ok(FamilyMember {
                params: format!("k={k}"),
                n,
                claims,
            })
        })
        .collect()
}

/// Base classes for F5: the square root pattern, claimed digit sum, and the
/// parity rule on `k`.
enum SquareCase {
    Binary,
    Even,
    OddNotOne,
    OddOne,
}

fn square_case(b: Base) -> Result<SquareCase> {
    let v = b.get();
    Ok(match (v, v % 2, v % 3) {
        (2, _, _) => SquareCase::Binary,
        (_, 0, _) => SquareCase::Even,
        (_, 1, 0) | (_, 1, 2) => SquareCase::OddNotOne,
        (v, 1, 1) if v >= 11 => SquareCase::OddOne,
        _ => {
            return Err(Error::InvalidParams(format!(
                "F5 has no construction for base {v} (odd, 1 mod 3, below 11)"
            )))
        }
    })
}

fn f5(b: Base, k: Option<u64>, count: usize) -> Result<Vec<FamilyMember>> {
    let case = square_case(b)?;
    let (k0, step) = match case {
        SquareCase::OddNotOne => (k.unwrap_or(2), 2),
        _ => (k.unwrap_or(1), 1),
    };
    if matches!(case, SquareCase::OddNotOne) && k0 % 2 == 1 {
        return Err(Error::InvalidParams(format!("F5 in base {b} needs even k, got {k0}")));
    }
    if matches!(case, SquareCase::Binary) && k0 == 0 {
        return Err(Error::InvalidParams("F5 in base 2 needs k >= 1".into()));
    }
    ks(k0, step, count)
        .map(|k| {
            let z = k as usize;
            let (root, claimed_sum) = match case {
                SquareCase::Binary | SquareCase::OddNotOne => (
                    Pattern::new().digit(1).repeat_digit(0, z).digit(1).repeat_digit(0, z).digit(1),
                    if matches!(case, SquareCase::Binary) { 6 } else { 9 },
                ),
                SquareCase::Even => (Pattern::new().digit(1).repeat_digit(0, z).digit(1), 4),
                SquareCase::OddOne => (
                    Pattern::new().digit(2).repeat_digit(0, z).digit(1).repeat_digit(0, z).digit(2),
                    24,
                ),
            };
            let p = pattern(b, root, 4 * k + 6)?;
            let n = &p * &p;
            let mut claims = vec![Claim::Member(Mode::MultiplicativeWeak)];
            if let Ok((_, a)) = canonical_square_witness(&p, b) {
                claims.push(Claim::ExtraTerm {
                    mode: Mode::MultiplicativeWeak,
                    term: a,
                });
            }
            claims.push(Claim::DigitSum(claimed_sum));
            claims.push(Claim::NotNiven);
            claims.push(Claim::NotMember(Mode::MultiplicativeRH));
            Ok(FamilyMember {
                params: format!("k={k}"),
                n,
                claims,
            })
        })
        .collect()
}

fn f6(b: Base, i: Option<&DigitString>, count: usize) -> Result<Vec<FamilyMember>> {
    let i = i.ok_or_else(|| Error::InvalidParams("F6 needs a digit string I".into()))?;
    if i.base() != b {
        return Err(Error::InvalidParams(format!("I is written in base {}, not {b}", i.base())));
    }
    if i.is_empty() || i.digits()[0] == 0 {
        return Err(Error::InvalidParams("F6 needs I nonempty without a leading zero".into()));
    }
    let head: Vec<u32> = i.digits().iter().map(|&d| u32::from(d)).collect();
    let tail: Vec<u32> = head.iter().rev().copied().collect();
    let len = head.len() as u64;
    let step = pow(b, len) * (b.get() + 1);
    let mut out: Vec<FamilyMember> = Vec::new();
    for c in 0..b.get().min(count as u32) {
        let p = Pattern::new().digits(&head).digits(&[c, c]).digits(&tail);
        let n = pattern(b, p, 2 * len + 2)?;
        let mut claims = palindrome_claims(&n, b);
        if let Some(prev) = out.last() {
            claims.push(Claim::Step {
                previous: prev.n.clone(),
                step: step.clone(),
            });
        }
        out.push(FamilyMember {
            params: format!("I={i},c={c}"),
            n,
            claims,
        });
    }
    Ok(out)
}

/// `k = b^p` for F7/F8, which need an even base.
fn growth_k(b: Base, p: u32) -> Result<u64> {
    if b.get() % 2 == 1 {
        return Err(Error::InvalidParams(format!("base {b} is odd; F7 and F8 need an even base")));
    }
    if p == 0 {
        return Err(Error::InvalidParams("F7 and F8 need p >= 1".into()));
    }
    let k = u64::from(b.get())
        .checked_pow(p)
        .filter(|&k| k <= MAX_DIGITS)
        .ok_or_else(|| Error::InvalidParams(format!("k = {b}^{p} is too large")))?;
    Ok(k)
}

/// Little-endian digits of `value` in base `radix` padded to `width`.
fn mixed_digits(mut value: u64, radix: u64, width: usize) -> Vec<u64> {
    let mut out = vec![0; width];
    for slot in out.iter_mut().rev() {
        *slot = value % radix;
        value /= radix;
    }
    out
}

fn listing_claims(
    claims: &mut Vec<Claim>,
    total: &Natural,
    budget: usize,
    mut make: impl FnMut(u64) -> Vec<Claim>,
) {
    let listed = total.to_u64().map_or(budget, |t| (t as usize).min(budget));
    for idx in 0..listed as u64 {
        claims.extend(make(idx));
    }
    if Natural::from(listed) < *total {
        claims.push(Claim::Truncated {
            listed,
            total: total.clone(),
        });
    }
}

fn f7(b: Base, p0: u32, count: usize, budget: usize) -> Result<Vec<FamilyMember>> {
    (p0..p0.saturating_add(count as u32))
        .map(|p| {
            let k = growth_k(b, p)?;
            let m = k - 2 * u64::from(p);
            let n = pattern(b, Pattern::new().repeat_digit(1, k as usize), k)?;
            let half = (m / 2) as usize;
            let total = Natural::one() << half;
            let mut claims = vec![
                Claim::Member(Mode::AdditiveWeak),
                Claim::CountAtLeast {
                    mode: Mode::AdditiveRH,
                    count: total.clone(),
                },
            ];
            listing_claims(&mut claims, &total, budget, |idx| {
                // Free left half of I; the right half is its mirrored complement.
                let left = mixed_digits(idx, 2, half);
                let mut digits = vec![1u32; p as usize];
                digits.extend(left.iter().map(|&d| d as u32));
                digits.extend(left.iter().rev().map(|&d| 1 - d as u32));
                let v = Natural::from(k) * from_ms(&digits, b);
                vec![
                    Claim::Multiplier {
                        mode: Mode::AdditiveRH,
                        multiplier: v.clone(),
                    },
                    Claim::ExtraTerm {
                        mode: Mode::AdditiveWeak,
                        term: v,
                    },
                ]
            });
            Ok(FamilyMember {
                params: format!("p={p},k={k}"),
                n,
                claims,
            })
        })
        .collect()
}

fn f8(b: Base, p0: u32, count: usize, budget: usize) -> Result<Vec<FamilyMember>> {
    let bv = u64::from(b.get());
    (p0..p0.saturating_add(count as u32))
        .map(|p| {
            let k = growth_k(b, p)?;
            let m = k - 2 * u64::from(p);
            let ones = p as usize;
            let shape = Pattern::new()
                .repeat_digit(1, ones)
                .repeat_group(Pattern::new().digits(&[1, 0]), m as usize)
                .digit(0)
                .repeat_digit(1, ones);
            let n = pattern(b, shape, 2 * m + 2 * u64::from(p) + 1)?;
            let half = (m / 2) as usize;
            let total = Natural::from(bv - 1).pow(half as u32);
            let mut claims = vec![
                Claim::Member(Mode::AdditiveWeak),
                Claim::CountExactly {
                    mode: Mode::AdditiveWeak,
                    count: total.clone(),
                },
            ];
            listing_claims(&mut claims, &total, budget, |idx| {
                // alpha_i for the left half; alpha_{m-1-i} = b - alpha_i.
                let left: Vec<u64> = mixed_digits(idx, bv - 1, half).iter().map(|d| d + 1).collect();
                let mut alphas = left.clone();
                alphas.extend(left.iter().rev().map(|a| bv - a));
                let mut digits = vec![1u32; ones];
                for a in alphas {
                    digits.extend([0, a as u32]);
                }
                digits.push(0);
                let v = (from_ms(&digits, b) - 1u32) * 2u32;
                vec![Claim::ExtraTerm {
                    mode: Mode::AdditiveWeak,
                    term: v,
                }]
            });
            Ok(FamilyMember {
                params: format!("p={p},k={k}"),
                n,
                claims,
            })
        })
        .collect()
}

fn from_ms(digits: &[u32], b: Base) -> Natural {
    let bb = b.get();
    digits.iter().fold(Natural::zero(), |acc, &d| acc * bb + d)
}

/// The first `count` members of a family in increasing parameter order,
/// each with the claims its family statement makes.
pub fn generate(spec: &FamilySpec, count: usize) -> Result<Vec<FamilyMember>> {
    let b = spec.base;
    match spec.id {
        FamilyId::F1 => f1(b, spec.k.unwrap_or(1), count),
        FamilyId::F2 => f2(b, spec.k.unwrap_or(1), count),
        FamilyId::F3 => f3(b, spec.k.unwrap_or(1), count),
        FamilyId::F4 => f4(b, spec.k, count),
        FamilyId::F5 => f5(b, spec.k, count),
        FamilyId::F6 => f6(b, spec.i.as_ref(), count),
        FamilyId::F7 => f7(b, spec.p.unwrap_or(1), count, spec.budget),
        FamilyId::F8 => f8(b, spec.p.unwrap_or(1), count, spec.budget),
    }
}

fn op(mode: Mode) -> &'static str {
    if mode.is_additive() {
        "+"
    } else {
        "*"
    }
}

/// Both sides of the defining equation for `T`, plus a note when the
/// claimed value itself solves it.
fn equation_detail(n: &Natural, b: Base, mode: Mode, t: &Natural, value: &Natural) -> (bool, String) {
    let lhs = mode.combine(t, b);
    let o = op(mode);
    let mut detail = format!(
        "T = {t}, T {o} R(T) = {t} {o} {} = {lhs}, N = {n}",
        reverse_value(t, b)
    );
    let ok = lhs == *n;
    if !ok && mode.combine(value, b) == *n {
        detail.push_str(&format!("; the claimed value itself gives {value} {o} R({value}) = N"));
    }
    (ok, detail)
}

/// Evaluates one claim about `n`.
pub fn check_claim(n: &Natural, b: Base, claim: &Claim) -> (Verdict, String) {
    let s = digit_sum(n, b);
    match claim {
        Claim::ExtraTerm { mode, term } => {
            let t = term + s;
            let (ok, d) = equation_detail(n, b, *mode, &t, term);
            (Verdict::from_bool(ok), format!("A = {term}, s = {s}, {d}"))
        }
        Claim::Multiplier { mode, multiplier } => {
            let t = multiplier * s;
            let (ok, d) = equation_detail(n, b, *mode, &t, multiplier);
            (Verdict::from_bool(ok && !multiplier.is_zero()), format!("M = {multiplier}, s = {s}, {d}"))
        }
        Claim::Member(mode) => {
            let c = multiplicity(n, b, *mode);
            let ok = !c.is_zero();
            (Verdict::from_bool(ok), format!("{c} {mode} witnesses"))
        }
        Claim::NotMember(mode) => {
            let w = witnesses(n, b, *mode);
            let detail = match w.witnesses().first() {
                None => format!("s = {s}, N mod s = {}, no {mode} witness", n.mod_floor(&Natural::from(s.max(1)))),
                Some(first) => format!("{} {mode} witnesses, smallest {first}", w.len()),
            };
            (Verdict::from_bool(w.is_empty()), detail)
        }
        Claim::NotNiven => {
            let r = if s == 0 { Natural::zero() } else { n % s };
            (Verdict::from_bool(!is_niven(n, b)), format!("s = {s}, N mod s = {r}"))
        }
        Claim::DigitSum(c) => (Verdict::from_bool(s == *c), format!("s = {s}, claimed {c}")),
        Claim::CountAtLeast { mode, count } => {
            let c = multiplicity(n, b, *mode);
            (Verdict::from_bool(c >= *count), format!("{c} {mode} witnesses, claimed at least {count}"))
        }
        Claim::CountExactly { mode, count } => {
            let c = multiplicity(n, b, *mode);
            (Verdict::from_bool(c == *count), format!("{c} {mode} witnesses, claimed {count}"))
        }
        Claim::Step { previous, step } => {
            let ok = n >= previous && &(n - previous) == step;
            (Verdict::from_bool(ok), format!("N - previous = {n} - {previous}, claimed step {step}"))
        }
        Claim::Truncated { listed, total } => (
            Verdict::NotApplicable,
            format!("checked {listed} of {total} listed values"),
        ),
    }
}

/// Checks every claim of every generated member.
pub fn verify_family(spec: &FamilySpec, count: usize) -> Result<ClaimReport> {
    let members = generate(spec, count)?;
    let b = spec.base;
    let range = match (members.first(), members.last()) {
        (Some(f), Some(l)) => format!("{} .. {} ({} members)", f.params, l.params, members.len()),
        _ => "no members".to_string(),
    };
    let mut report = ClaimReport::new(format!("{} base {b}: {}", spec.id, spec.id.describe()), range);
    let parts: Vec<ClaimReport> = members
        .par_iter()
        .map(|m| {
            let mut r = ClaimReport::new("", "");
            for c in &m.claims {
                let (verdict, detail) = check_claim(&m.n, b, c);
                r.record(&format!("{}/{}", spec.id, c.id()), format!("{} N={}", m.params, m.n), verdict, detail);
            }
            r
        })
        .collect();
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}
