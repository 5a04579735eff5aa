use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("base {0} is outside the supported range 2..=36")]
    InvalidBase(u32),

    #[error("digit {digit} is out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("invalid digit character {0:?}")]
    InvalidDigitChar(char),

    #[error("not eligible: {0}")]
    NotEligible(String),

    /// A construction produced a negative extra term; carries the would-be
    /// `T` and the digit sum it fell short of.
    #[error("construction for {n} gives T = {t} below digit sum {digit_sum}")]
    NegativeWitness { n: String, t: String, digit_sum: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("line {line}: {message}")]
    Format { line: u64, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
