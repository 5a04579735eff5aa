//! Range scans, sequences, table comparison and persistence.
//!
//! [`scan`] splits `[lo, hi)` into contiguous chunks, classifies them on a
//! dedicated thread pool and emits records in ascending order, so the output
//! does not depend on the chunk size or the worker count.

mod bfile;
mod discrepancy;
mod store;
pub mod tables;

use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::digits::{Base, Natural};
use crate::error::{Error, Result};
use crate::solvers::{classify, ClassificationRecord, Mode};

pub use bfile::{export_bfile, write_bfile};
pub use discrepancy::{
    compare_table, reproduce_tables, Confidence, DiscrepancyReport, RowComparison, RowStatus,
    TableComparison,
};
pub use store::{load, persist, read_store, write_store, StoreWriter, STORE_HEADER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRequest {
    pub base: Base,
    /// Inclusive lower end.
    pub lo: Natural,
    /// Exclusive upper end.
    pub hi: Natural,
    /// Modes whose membership defines the sequences taken from the scan.
    pub modes: Vec<Mode>,
    pub chunk_size: u64,
    /// Worker threads; 0 picks the number of cores.
    pub workers: usize,
}

impl ScanRequest {
    pub fn new(base: Base, lo: impl Into<Natural>, hi: impl Into<Natural>) -> Self {
        ScanRequest {
            base,
            lo: lo.into(),
            hi: hi.into(),
            modes: Mode::ALL.to_vec(),
            chunk_size: 4096,
            workers: 0,
        }
    }

    pub fn with_modes(mut self, modes: &[Mode]) -> Self {
        self.modes = modes.to_vec();
        self
    }

    pub fn with_chunk_size(mut self, chunk_size: u64) -> Self {
        self.chunk_size = chunk_size;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.lo >= self.hi {
            return Err(Error::InvalidParams(format!(
                "empty range [{}, {})",
                self.lo, self.hi
            )));
        }
        if self.chunk_size == 0 {
            return Err(Error::InvalidParams("chunk size must be at least 1".into()));
        }
        Ok(())
    }
}

/// Classifies `[lo, hi)` and hands each record to `sink` in ascending order.
/// Chunks are processed in batches of a few per worker, so memory stays
/// bounded on long ranges.
pub fn scan_with<F>(req: &ScanRequest, mut sink: F) -> Result<()>
where
    F: FnMut(ClassificationRecord) -> Result<()>,
{
    req.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(req.workers)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let batch = (pool.current_num_threads() * 4) as u64;
    let b = req.base;
    let mut next = req.lo.clone();
    while next < req.hi {
        let mut chunks: Vec<(Natural, u64)> = Vec::new();
        while chunks.len() < batch as usize && next < req.hi {
            let left = &req.hi - &next;
            let len = left.to_u64().map_or(req.chunk_size, |l| l.min(req.chunk_size));
            chunks.push((next.clone(), len));
            next += len;
        }
        let done: Vec<Vec<ClassificationRecord>> = pool.install(|| {
            chunks
                .par_iter()
                .map(|(start, len)| {
                    let mut n = start.clone();
                    let mut out = Vec::with_capacity(*len as usize);
                    for _ in 0..*len {
                        out.push(classify(&n, b));
                        n += Natural::one();
                    }
                    out
                })
                .collect()
        });
        for rec in done.into_iter().flatten() {
            sink(rec)?;
        }
    }
    Ok(())
}

/// Collects [`scan_with`] into a vector.
pub fn scan(req: &ScanRequest) -> Result<Vec<ClassificationRecord>> {
    let mut out = Vec::new();
    scan_with(req, |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

/// Members of one mode in a scanned range, indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceResult {
    pub base: Base,
    pub mode: Mode,
    pub lo: Natural,
    pub hi: Natural,
    terms: Vec<Natural>,
}

impl SequenceResult {
    /// Fails unless `terms` is strictly increasing.
    pub fn new(base: Base, mode: Mode, lo: Natural, hi: Natural, terms: Vec<Natural>) -> Result<Self> {
        if terms.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams("sequence terms must be strictly increasing".into()));
        }
        Ok(SequenceResult {
            base,
            mode,
            lo,
            hi,
            terms,
        })
    }

    pub fn from_records(req: &ScanRequest, mode: Mode, records: &[ClassificationRecord]) -> Self {
        let terms = records
            .iter()
            .filter(|r| r.is_member(mode))
            .map(|r| r.n.clone())
            .collect();
        SequenceResult {
            base: req.base,
            mode,
            lo: req.lo.clone(),
            hi: req.hi.clone(),
            terms,
        }
    }

    pub fn terms(&self) -> &[Natural] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(index, n)` pairs with indices from 1.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Natural)> {
        self.terms.iter().enumerate().map(|(i, n)| (i + 1, n))
    }
}
