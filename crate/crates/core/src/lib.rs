//! Weak Ramanujan-Hardy numbers and their relatives in arbitrary bases.
//!
//! A number `N` is *additive weak* (b-wARH) when `N = T + R(T)` and
//! *multiplicative weak* (b-wMRH) when `N = T * R(T)` for some
//! `T = A + s_b(N)` with extra term `A >= 0`; `R` reverses base-b digits.
//! Replacing `A + s_b(N)` by `M * s_b(N)` with `M >= 1` gives the b-ARH and
//! b-MRH classes.
//!
//! - [`digits`]: radix conversion, digit sums, reversal, palindromes, digit
//!   patterns.
//! - [`solvers`]: complete witness sets, classification, the inverse solver.
//! - [`families`]: infinite-family generators, canonical witnesses, and
//!   claim audits that report pass/fail per instance.
//! - [`enumeration`]: parallel range scans, reference-table comparison,
//!   b-files and the CSV store.
//! - [`cli`]: the `weakrh` command line.

pub mod cli;
pub mod digits;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod solvers;

pub use digits::{Base, DigitString, Natural, Pattern};
pub use error::{Error, Result};
pub use solvers::{ClassificationRecord, Mode, WitnessSet};
