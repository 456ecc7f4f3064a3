use std::io::Write;

use super::closure::{ClosureWitness, Verdict};
use super::factors::FactorIndex;
use super::frequency::FrequencyReport;
use crate::error::{Error, Result};

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("csv output failed: {e}"))
}

/// Columns: k, letter, count, ratio, deviation.
pub fn write_frequency_csv<W: Write>(report: &FrequencyReport, out: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["k", "letter", "count", "ratio", "deviation"])
        .map_err(csv_error)?;
    for r in &report.rows {
        csv.write_record([
            r.k.to_string(),
            r.letter.to_string(),
            r.count.to_string(),
            format!("{:.6}", r.ratio),
            format!("{:.6}", r.deviation),
        ])
        .map_err(csv_error)?;
    }
    csv.flush().map_err(csv_error)
}

/// Columns: L, factor, occurrences, max_gap. A factor seen once has an
/// empty max_gap.
pub fn write_gap_csv<W: Write>(index: &FactorIndex, out: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["L", "factor", "occurrences", "max_gap"])
        .map_err(csv_error)?;
    for s in index.iter() {
        csv.write_record([
            s.factor.len().to_string(),
            s.factor.to_string(),
            s.occurrences.to_string(),
            s.max_gap.map_or_else(String::new, |g| g.to_string()),
        ])
        .map_err(csv_error)?;
    }
    csv.flush().map_err(csv_error)
}

/// Columns: op, factor, image, verdict, position. The position is where the
/// image was found, empty when absent.
pub fn write_witness_csv<W: Write>(witnesses: &[ClosureWitness], out: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["op", "factor", "image", "verdict", "position"])
        .map_err(csv_error)?;
    for w in witnesses {
        let position = match w.verdict {
            Verdict::Found(p) => p.to_string(),
            Verdict::Absent => String::new(),
        };
        csv.write_record([
            w.op.to_string(),
            w.factor.to_string(),
            w.image.to_string(),
            w.verdict.to_string(),
            position,
        ])
        .map_err(csv_error)?;
    }
    csv.flush().map_err(csv_error)
}
