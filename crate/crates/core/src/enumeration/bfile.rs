use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::enumeration::SequenceResult;
use crate::error::{Error, Result};

/// Writes `"<index> <value>\n"` per term, no header.
pub fn write_bfile<W: Write>(seq: &SequenceResult, out: &mut W) -> std::io::Result<()> {
    for (i, n) in seq.entries() {
        writeln!(out, "{i} {n}")?;
    }
    Ok(())
}

pub fn export_bfile(seq: &SequenceResult, destination: &Path) -> Result<()> {
    let io = |e| Error::io(destination, e);
    let mut w = BufWriter::new(File::create(destination).map_err(io)?);
    write_bfile(seq, &mut w).map_err(io)?;
    w.flush().map_err(io)
}
