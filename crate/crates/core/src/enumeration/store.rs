//! CSV store: header [`STORE_HEADER`], one row per record, witness lists
//! joined with `;`, rows ordered by `(base, n)`.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::digits::{Base, Natural};
use crate::error::{Error, Result};
use crate::solvers::{ClassificationRecord, Mode, WitnessSet};

pub const STORE_HEADER: [&str; 9] = ["n", "base", "s", "palindrome", "niven", "warh", "wmrh", "arh", "mrh"];

fn join(ws: &WitnessSet) -> String {
    let parts: Vec<String> = ws.witnesses().iter().map(|w| w.to_string()).collect();
    parts.join(";")
}

fn csv_err(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Format {
            line,
            message: io.to_string(),
        },
        kind => Error::Format {
            line,
            message: format!("{kind:?}"),
        },
    }
}

fn row(r: &ClassificationRecord) -> [String; 9] {
    [
        r.n.to_string(),
        r.base.to_string(),
        r.digit_sum.to_string(),
        r.is_palindrome.to_string(),
        r.is_niven.to_string(),
        join(&r.warh_terms),
        join(&r.wmrh_terms),
        join(&r.arh_multipliers),
        join(&r.mrh_multipliers),
    ]
}

/// Row-at-a-time store output for records already in `(base, n)` order.
pub struct StoreWriter<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> StoreWriter<W> {
    pub fn new(out: W) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(out);
        inner.write_record(STORE_HEADER).map_err(csv_err)?;
        Ok(StoreWriter { inner })
    }

    pub fn write(&mut self, record: &ClassificationRecord) -> Result<()> {
        self.inner.write_record(row(record)).map_err(csv_err)
    }

    pub fn finish(mut self) -> Result<()> {
        self.inner.flush().map_err(|e| Error::Format {
            line: 0,
            message: e.to_string(),
        })
    }
}

/// Writes all records sorted by `(base, n)`.
pub fn write_store<W: Write>(records: &[ClassificationRecord], out: W) -> Result<()> {
    let mut sorted: Vec<&ClassificationRecord> = records.iter().collect();
    sorted.sort_by(|a, b| (a.base, &a.n).cmp(&(b.base, &b.n)));
    let mut w = StoreWriter::new(out)?;
    for r in sorted {
        w.write(r)?;
    }
    w.finish()
}

fn field<T: std::str::FromStr>(row: &csv::StringRecord, i: usize, line: u64) -> Result<T> {
    let raw = row.get(i).unwrap_or_default();
    raw.parse().map_err(|_| Error::Format {
        line,
        message: format!("bad {} field {raw:?}", STORE_HEADER[i]),
    })
}

fn list(row: &csv::StringRecord, i: usize, line: u64) -> Result<Vec<Natural>> {
    let raw = row.get(i).unwrap_or_default();
    if raw.is_empty() {
        return Ok(Vec::new());
    }
    raw.split(';')
        .map(|p| {
            p.parse().map_err(|_| Error::Format {
                line,
                message: format!("bad {} entry {p:?}", STORE_HEADER[i]),
            })
        })
        .collect()
}

pub fn read_store<R: Read>(input: R) -> Result<Vec<ClassificationRecord>> {
    let mut rd = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = rd.headers().map_err(csv_err)?.clone();
    if header.is_empty() {
        return Ok(Vec::new());
    }
    if header.iter().ne(STORE_HEADER.iter().copied()) {
        return Err(Error::Format {
            line: 1,
            message: format!("expected header {}", STORE_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row.map_err(csv_err)?;
        let line = row.position().map_or(0, |p| p.line());
        let n: Natural = field(&row, 0, line)?;
        let base_raw: u32 = field(&row, 1, line)?;
        let base = Base::new(base_raw).map_err(|e| Error::Format {
            line,
            message: e.to_string(),
        })?;
        let set = |i: usize, mode: Mode| -> Result<WitnessSet> {
            Ok(WitnessSet::new(n.clone(), base, mode, list(&row, i, line)?))
        };
        out.push(ClassificationRecord {
            n: n.clone(),
            base,
            digit_sum: field(&row, 2, line)?,
            is_palindrome: field(&row, 3, line)?,
            is_niven: field(&row, 4, line)?,
            warh_terms: set(5, Mode::AdditiveWeak)?,
            wmrh_terms: set(6, Mode::MultiplicativeWeak)?,
            arh_multipliers: set(7, Mode::AdditiveRH)?,
            mrh_multipliers: set(8, Mode::MultiplicativeRH)?,
        });
    }
    Ok(out)
}

pub fn persist(records: &[ClassificationRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_store(records, file)
}

pub fn load(path: &Path) -> Result<Vec<ClassificationRecord>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_store(file)
}
