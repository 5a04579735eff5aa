//! Witness enumeration for the weak and multiplier-based classes.
//!
//! With `s = s_b(n)` and `R` the base-b reversal:
//!
//! | mode | `n` is a member when | witness |
//! |------|----------------------|---------|
//! | additive weak (wARH) | `n = T + R(T)`, `T = A + s` | extra term `A >= 0` |
//! | multiplicative weak (wMRH) | `n = T * R(T)`, `T = A + s` | extra term `A >= 0` |
//! | additive RH (ARH) | `n = T + R(T)`, `T = M * s` | multiplier `M >= 1` |
//! | multiplicative RH (MRH) | `n = T * R(T)`, `T = M * s` | multiplier `M >= 1` |
//!
//! All four reduce to finding the roots `T` of `T + R(T) = n` or
//! `T * R(T) = n` and filtering them. Additive roots come from a column-sum
//! search ([`sums`]); multiplicative roots are divisors of `n`.
//!
//! Zero: `s_b(0) = 0` and `T = 0` solves both equations, so both weak classes
//! contain 0 with extra term 0. Every multiplier would work for 0, so the
//! multiplier sets of 0 are reported empty instead.

mod divisors;
mod inverse;
mod sums;

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::digits::{digit_sum, is_palindrome, reverse_u64, reverse_value, Base, Natural};
use crate::error::{Error, Result};

pub use inverse::{extra_term_instances, extra_term_search, digit_sum_cap, InverseSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    AdditiveWeak,
    MultiplicativeWeak,
    AdditiveRH,
    MultiplicativeRH,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::AdditiveWeak,
        Mode::MultiplicativeWeak,
        Mode::AdditiveRH,
        Mode::MultiplicativeRH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::AdditiveWeak => "warh",
            Mode::MultiplicativeWeak => "wmrh",
            Mode::AdditiveRH => "arh",
            Mode::MultiplicativeRH => "mrh",
        }
    }

    pub fn is_weak(self) -> bool {
        matches!(self, Mode::AdditiveWeak | Mode::MultiplicativeWeak)
    }

    pub fn is_additive(self) -> bool {
        matches!(self, Mode::AdditiveWeak | Mode::AdditiveRH)
    }

    /// Evaluates `T + R(T)` or `T * R(T)`.
    pub fn combine(self, t: &Natural, b: Base) -> Natural {
        let r = reverse_value(t, b);
        if self.is_additive() {
            t + r
        } else {
            t * r
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "warh" | "add" => Ok(Mode::AdditiveWeak),
            "wmrh" | "mul" => Ok(Mode::MultiplicativeWeak),
            "arh" => Ok(Mode::AdditiveRH),
            "mrh" => Ok(Mode::MultiplicativeRH),
            other => Err(Error::InvalidParams(format!("unknown mode {other:?}"))),
        }
    }
}

/// Sorted witnesses of one number in one mode: extra terms for the weak
/// modes, multipliers for the RH modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSet {
    pub n: Natural,
    pub base: Base,
    pub mode: Mode,
    witnesses: Vec<Natural>,
}

impl WitnessSet {
    /// Sorts and deduplicates `witnesses`.
    pub fn new(n: Natural, base: Base, mode: Mode, mut witnesses: Vec<Natural>) -> Self {
        witnesses.sort();
        witnesses.dedup();
        WitnessSet {
            n,
            base,
            mode,
            witnesses,
        }
    }

    pub fn witnesses(&self) -> &[Natural] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn contains(&self, w: &Natural) -> bool {
        self.witnesses.binary_search(w).is_ok()
    }

    /// Re-evaluates every witness against the defining equation.
    pub fn is_sound(&self) -> bool {
        self.witnesses
            .iter()
            .all(|w| satisfies(&self.n, self.base, self.mode, w))
    }
}

impl fmt::Display for WitnessSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.witnesses.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

/// Whether `w` witnesses `n` in `mode`, evaluated directly from the
/// definition.
pub fn satisfies(n: &Natural, b: Base, mode: Mode, w: &Natural) -> bool {
    let s = Natural::from(digit_sum(n, b));
    let t = if mode.is_weak() {
        w + &s
    } else {
        if w.is_zero() {
            return false;
        }
        w * &s
    };
    mode.combine(&t, b) == *n
}

/// Every `T >= 0` with `T * R(T) = n`, ascending.
pub(crate) fn multiplicative_roots(n: &Natural, b: Base) -> Vec<Natural> {
    if n.is_zero() {
        return vec![Natural::zero()];
    }
    if let Some(v) = n.to_u64() {
        return divisors::divisors_u64(v)
            .into_iter()
            .filter(|&d| u128::from(d) * reverse_u64(d, b.get()) == u128::from(v))
            .map(Natural::from)
            .collect();
    }
    divisors::divisors(n)
        .into_iter()
        .filter(|d| &(d * reverse_value(d, b)) == n)
        .collect()
}

pub(crate) fn additive_roots(n: &Natural, b: Base) -> Vec<Natural> {
    sums::additive_roots(n, b)
}

fn extra_terms(roots: &[Natural], s: u64) -> Vec<Natural> {
    let s = Natural::from(s);
    roots.iter().filter(|t| **t >= s).map(|t| t - &s).collect()
}

fn multipliers(n: &Natural, roots: &[Natural], s: u64) -> Vec<Natural> {
    if n.is_zero() || s == 0 {
        return Vec::new();
    }
    let s = Natural::from(s);
    roots
        .iter()
        .filter(|t| !t.is_zero() && (*t % &s).is_zero())
        .map(|t| t / &s)
        .collect()
}

pub fn warh_witnesses(n: &Natural, b: Base) -> WitnessSet {
    let s = digit_sum(n, b);
    let w = extra_terms(&additive_roots(n, b), s);
    WitnessSet::new(n.clone(), b, Mode::AdditiveWeak, w)
}

pub fn wmrh_witnesses(n: &Natural, b: Base) -> WitnessSet {
    let s = digit_sum(n, b);
    let w = extra_terms(&multiplicative_roots(n, b), s);
    WitnessSet::new(n.clone(), b, Mode::MultiplicativeWeak, w)
}

pub fn arh_multipliers(n: &Natural, b: Base) -> WitnessSet {
    let s = digit_sum(n, b);
    let w = multipliers(n, &additive_roots(n, b), s);
    WitnessSet::new(n.clone(), b, Mode::AdditiveRH, w)
}

pub fn mrh_multipliers(n: &Natural, b: Base) -> WitnessSet {
    let s = digit_sum(n, b);
    // T = M s divides n, so s must divide n.
    let w = if s != 0 && (n % s).is_zero() {
        multipliers(n, &multiplicative_roots(n, b), s)
    } else {
        Vec::new()
    };
    WitnessSet::new(n.clone(), b, Mode::MultiplicativeRH, w)
}

pub fn witnesses(n: &Natural, b: Base, mode: Mode) -> WitnessSet {
    match mode {
        Mode::AdditiveWeak => warh_witnesses(n, b),
        Mode::MultiplicativeWeak => wmrh_witnesses(n, b),
        Mode::AdditiveRH => arh_multipliers(n, b),
        Mode::MultiplicativeRH => mrh_multipliers(n, b),
    }
}

/// `s_b(n)` divides `n`; zero counts as Niven.
pub fn is_niven(n: &Natural, b: Base) -> bool {
    let s = digit_sum(n, b);
    n.is_zero() || (s != 0 && (n % s).is_zero())
}

/// Size of the witness set. The additive weak count is computed from the
/// column sums and never materializes the set.
pub fn multiplicity(n: &Natural, b: Base, mode: Mode) -> Natural {
    match mode {
        Mode::AdditiveWeak => sums::additive_root_count(n, b, digit_sum(n, b)),
        _ => Natural::from(witnesses(n, b, mode).len()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub n: Natural,
    pub base: Base,
    pub digit_sum: u64,
    pub is_palindrome: bool,
    pub is_niven: bool,
    pub warh_terms: WitnessSet,
    pub wmrh_terms: WitnessSet,
    pub arh_multipliers: WitnessSet,
    pub mrh_multipliers: WitnessSet,
}

impl ClassificationRecord {
    pub fn set(&self, mode: Mode) -> &WitnessSet {
        match mode {
            Mode::AdditiveWeak => &self.warh_terms,
            Mode::MultiplicativeWeak => &self.wmrh_terms,
            Mode::AdditiveRH => &self.arh_multipliers,
            Mode::MultiplicativeRH => &self.mrh_multipliers,
        }
    }

    pub fn is_member(&self, mode: Mode) -> bool {
        !self.set(mode).is_empty()
    }
}

pub fn classify(n: &Natural, b: Base) -> ClassificationRecord {
    let s = digit_sum(n, b);
    let add = additive_roots(n, b);
    let niven = is_niven(n, b);
    let mul = multiplicative_roots(n, b);
    let mrh = if niven {
        multipliers(n, &mul, s)
    } else {
        Vec::new()
    };
    ClassificationRecord {
        n: n.clone(),
        base: b,
        digit_sum: s,
        is_palindrome: is_palindrome(n, b),
        is_niven: niven,
        warh_terms: WitnessSet::new(n.clone(), b, Mode::AdditiveWeak, extra_terms(&add, s)),
        wmrh_terms: WitnessSet::new(n.clone(), b, Mode::MultiplicativeWeak, extra_terms(&mul, s)),
        arh_multipliers: WitnessSet::new(n.clone(), b, Mode::AdditiveRH, multipliers(n, &add, s)),
        mrh_multipliers: WitnessSet::new(n.clone(), b, Mode::MultiplicativeRH, mrh),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::digit_sum_u64;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn vals(ws: &WitnessSet) -> Vec<u64> {
        ws.witnesses().iter().map(|w| w.to_u64().unwrap()).collect()
    }

    /// Scans every `T` in `0..=n`.
    fn scan_oracle(n: u64, b: u32, mode: Mode) -> Vec<u64> {
        let s = digit_sum_u64(n, b);
        let mut out = Vec::new();
        for t in 0..=n {
            let r = reverse_u64(t, b);
            let v = if mode.is_additive() {
                u128::from(t) + r
            } else {
                u128::from(t) * r
            };
            if v != u128::from(n) {
                continue;
            }
            if mode.is_weak() {
                if t >= s {
                    out.push(t - s);
                }
            } else if n > 0 && t > 0 && t % s == 0 {
                out.push(t / s);
            }
        }
        out
    }

    #[test]
    fn warh_examples() {
        assert_eq!(vals(&warh_witnesses(&nat(12), Base::TEN)), vec![3]);
        assert!(warh_witnesses(&nat(121212), Base::TEN).contains(&nat(60597)));
        assert_eq!(
            vals(&warh_witnesses(&nat(99), Base::TEN)),
            vec![0, 9, 18, 27, 36, 45, 54, 63, 72]
        );
        assert_eq!(vals(&warh_witnesses(&nat(0), Base::TEN)), vec![0]);
        // 12 in base 3 is not additive weak.
        assert!(warh_witnesses(&nat(5), Base::new(3).unwrap()).is_empty());
    }

    #[test]
    fn wmrh_examples() {
        assert_eq!(vals(&wmrh_witnesses(&nat(2268), Base::TEN)), vec![18, 45]);
        assert_eq!(vals(&wmrh_witnesses(&nat(252), Base::TEN)), vec![3, 12]);
        assert_eq!(vals(&wmrh_witnesses(&nat(63504), Base::TEN)), vec![126, 234, 423]);
        assert!(wmrh_witnesses(&nat(7), Base::TEN).is_empty());
        assert_eq!(vals(&wmrh_witnesses(&nat(0), Base::TEN)), vec![0]);
        assert_eq!(vals(&wmrh_witnesses(&nat(10), Base::TEN)), vec![9]);
    }

    #[test]
    fn multiplier_examples() {
        assert!(arh_multipliers(&nat(18), Base::TEN).contains(&nat(1)));
        assert!(arh_multipliers(&nat(99), Base::TEN).contains(&nat(1)));
        assert!(arh_multipliers(&nat(7), Base::TEN).is_empty());
        assert!(mrh_multipliers(&nat(1729), Base::TEN).contains(&nat(1)));
        assert!(mrh_multipliers(&nat(81), Base::TEN).contains(&nat(1)));
        // 10 * R(10) = 10 * 1, and 10 = 10 * s.
        assert_eq!(vals(&mrh_multipliers(&nat(10), Base::TEN)), vec![10]);
        assert!(arh_multipliers(&nat(0), Base::TEN).is_empty());
        assert!(mrh_multipliers(&nat(0), Base::TEN).is_empty());
    }

    #[test]
    fn niven_examples() {
        assert!(is_niven(&nat(18), Base::TEN));
        assert!(!is_niven(&nat(99), Base::TEN));
        assert!(!is_niven(&nat(109901), Base::TEN));
        assert!(is_niven(&nat(0), Base::TEN));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&nat(2268), Base::TEN);
        assert_eq!(r.wmrh_terms.len(), 2);
        assert!(r.is_niven);
        assert_eq!(r.digit_sum, 18);

        let r = classify(&nat(7), Base::TEN);
        assert!(Mode::ALL.iter().all(|&m| !r.is_member(m)));
        assert!(r.is_niven);
        assert!(!classify(&nat(13), Base::TEN).is_niven);

        let r = classify(&nat(0), Base::TEN);
        assert_eq!(vals(&r.warh_terms), vec![0]);
        assert_eq!(vals(&r.wmrh_terms), vec![0]);
    }

    #[test]
    fn multiplicity_examples() {
        let m = |n: u64, mode| multiplicity(&nat(n), Base::TEN, mode);
        assert_eq!(m(63504, Mode::MultiplicativeWeak), nat(3));
        assert_eq!(m(252, Mode::MultiplicativeWeak), nat(2));
        assert_eq!(m(7, Mode::AdditiveWeak), nat(0));
        assert_eq!(m(99, Mode::AdditiveWeak), nat(9));
    }

    #[test]
    fn agrees_with_scan_oracle() {
        for b in [2u32, 3, 7, 10, 16] {
            let base = Base::new(b).unwrap();
            for n in 0..1500u64 {
                let r = classify(&nat(n), base);
                for mode in Mode::ALL {
                    assert_eq!(vals(r.set(mode)), scan_oracle(n, b, mode), "n={n} b={b} {mode}");
                    assert_eq!(r.set(mode), &witnesses(&nat(n), base, mode));
                }
            }
        }
    }

    #[test]
    fn records_are_internally_consistent() {
        for b in [2u32, 5, 10, 12] {
            let base = Base::new(b).unwrap();
            for n in 0..3000u64 {
                let r = classify(&nat(n), base);
                let s = nat(r.digit_sum);
                for mode in Mode::ALL {
                    assert!(r.set(mode).is_sound());
                }
                if !r.mrh_multipliers.is_empty() {
                    assert!(r.is_niven, "n={n} b={b}");
                }
                for m in r.arh_multipliers.witnesses() {
                    assert!(r.warh_terms.contains(&(&s * (m - 1u32))));
                }
                for m in r.mrh_multipliers.witnesses() {
                    assert!(r.wmrh_terms.contains(&(&s * (m - 1u32))));
                }
            }
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("add".parse::<Mode>().unwrap(), Mode::AdditiveWeak);
        assert_eq!("WMRH".parse::<Mode>().unwrap(), Mode::MultiplicativeWeak);
        assert!("nope".parse::<Mode>().is_err());
    }

    #[test]
    fn big_values() {
        // [1 (0)^20 1]_10 = 10^21 + 1 has root 10^21: A = 10^21 - 2.
        let n = Natural::from(10u32).pow(21) + 1u32;
        let w = warh_witnesses(&n, Base::TEN);
        assert!(w.contains(&(Natural::from(10u32).pow(21) - 2u32)));
        assert!(w.is_sound());
        assert_eq!(multiplicity(&n, Base::TEN, Mode::AdditiveWeak), Natural::from(w.len()));
    }
}
