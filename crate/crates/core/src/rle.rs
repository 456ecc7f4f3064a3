//! Run-length coding: the power index sequence Δ(w) and base sequence ℬ(w).

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// The pair (Δ(w), ℬ(w)) of a word.
///
/// When `last_run_truncated` is set the source was a prefix of a longer word,
/// so the final exponent is only a lower bound on the true run length.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunDecomposition {
    pub exponents: Word,
    pub bases: Word,
    pub last_run_truncated: bool,
}

impl RunDecomposition {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Exponents whose run lengths are known exactly: all of them, or all but
    /// the last when the final run is truncated.
    pub fn exact_exponents(&self) -> &[Letter] {
        if self.last_run_truncated && !self.exponents.is_empty() {
            &self.exponents[..self.exponents.len() - 1]
        } else {
            &self.exponents
        }
    }
}

/// Run-length codes a complete finite word.
pub fn rle_encode(w: &[Letter]) -> RunDecomposition {
    let mut exponents = Word::new();
    let mut bases = Word::new();
    for run in w.chunk_by(|a, b| a == b) {
        exponents.push(run.len() as Letter);
        bases.push(run[0]);
    }
    RunDecomposition {
        exponents,
        bases,
        last_run_truncated: false,
    }
}

/// Run-length codes a prefix of a longer (possibly infinite) word; the final
/// exponent is flagged as a lower bound.
pub fn rle_encode_prefix(w: &[Letter]) -> RunDecomposition {
    let mut rd = rle_encode(w);
    rd.last_run_truncated = !w.is_empty();
    rd
}

/// Δ(w) alone.
pub fn exponents(w: &[Letter]) -> Word {
    w.chunk_by(|a, b| a == b)
        .map(|run| run.len() as Letter)
        .collect()
}

/// ℬ(w) alone.
pub fn bases(w: &[Letter]) -> Word {
    w.chunk_by(|a, b| a == b).map(|run| run[0]).collect()
}

/// Inverse of [`rle_encode`]: concatenates `bases[j]^exponents[j]`.
pub fn rle_reconstruct(rd: &RunDecomposition) -> Result<Word> {
    if rd.exponents.len() != rd.bases.len() {
        return Err(Error::LengthMismatch {
            exponents: rd.exponents.len(),
            bases: rd.bases.len(),
        });
    }
    if let Some(j) = rd.bases.windows(2).position(|p| p[0] == p[1]) {
        return Err(Error::InvalidRuns(format!(
            "bases {} and {} are equal ({}) and would merge into one run",
            j + 1,
            j + 2,
            rd.bases[j]
        )));
    }
    if let Some(j) = rd.exponents.iter().position(|&e| e == 0) {
        return Err(Error::ZeroExponent(j + 1));
    }
    let total: Letter = rd.exponents.iter().sum();
    let mut out = Word::with_capacity(total as usize);
    for (&e, &b) in rd.exponents.iter().zip(rd.bases.iter()) {
        out.extend(std::iter::repeat_n(b, e as usize));
    }
    Ok(out)
}
