use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::factors::FactorTable;
use crate::alphabet::Permutation;
use crate::error::{Error, Result};
use crate::inverse::{phi_inverse_prefix, CyclicOrder};
use crate::rle::rle_encode;
use crate::transform::{apply_permutation, is_palindrome, reverse};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureOp {
    Reversal,
    Permutation(Permutation),
}

impl ClosureOp {
    pub fn image(&self, w: &[Letter]) -> Result<Word> {
        match self {
            ClosureOp::Reversal => Ok(reverse(w)),
            ClosureOp::Permutation(sigma) => apply_permutation(w, sigma),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, ClosureOp::Permutation(sigma) if sigma.is_identity())
    }
}

impl fmt::Display for ClosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureOp::Reversal => write!(f, "reversal"),
            ClosureOp::Permutation(sigma) => write!(f, "permutation({sigma})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The image occurs, first at this 1-based position.
    Found(usize),
    /// The image does not occur in the scanned word.
    Absent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Found(_) => write!(f, "found"),
            Verdict::Absent => write!(f, "absent"),
        }
    }
}

/// A factor of the scanned word, its image under `op`, and where (if
/// anywhere) the image occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWitness {
    pub op: ClosureOp,
    pub factor: Word,
    /// 1-based start of the factor in the scanned word.
    pub factor_position: usize,
    pub image: Word,
    pub verdict: Verdict,
}

impl ClosureWitness {
    pub fn is_miss(&self) -> bool {
        self.verdict == Verdict::Absent
    }

    /// Re-checks factor and verdict against `w` by direct search.
    pub fn recheck(&self, w: &[Letter]) -> bool {
        let occurs_at = |pat: &[Letter]| {
            w.windows(pat.len())
                .position(|win| win == pat)
                .map(|i| i + 1)
        };
        let factor_ok = occurs_at(&self.factor).is_some();
        let verdict = match occurs_at(&self.image) {
            Some(p) => Verdict::Found(p),
            None => Verdict::Absent,
        };
        factor_ok && verdict == self.verdict
    }
}

fn middle_third(len: usize) -> (usize, usize) {
    (len / 3, 2 * len / 3)
}

fn witness_for(
    op: &ClosureOp,
    factor: &[Letter],
    factor_position: usize,
    table: &FactorTable,
) -> Result<ClosureWitness> {
    let image = op.image(factor)?;
    let verdict = match table.find(&image) {
        Some(s) => Verdict::Found(s.first),
        None => Verdict::Absent,
    };
    Ok(ClosureWitness {
        op: op.clone(),
        factor: Word::from(factor),
        factor_position,
        image,
        verdict,
    })
}

/// Takes every distinct factor of length ≤ `lmax` starting in the middle
/// third of `w`, searches all of `w` for its image under `op`, and returns
/// the misses ordered by length then factor.
pub fn closure_check(w: &[Letter], op: &ClosureOp, lmax: usize) -> Result<Vec<ClosureWitness>> {
    let (lo, hi) = middle_third(w.len());
    let per_length: Vec<Vec<ClosureWitness>> = (1..=lmax)
        .into_par_iter()
        .map(|len| {
            let table = FactorTable::build(w, len, w.len());
            let mut seen = BTreeMap::new();
            for i in lo..hi.min((w.len() + 1).saturating_sub(len)) {
                seen.entry(&w[i..i + len]).or_insert(i + 1);
            }
            let mut misses = Vec::new();
            for (factor, pos) in seen {
                let witness = witness_for(op, factor, pos, &table)?;
                if witness.is_miss() {
                    misses.push(witness);
                }
            }
            Ok(misses)
        })
        .collect::<Result<_>>()?;
    Ok(per_length.into_iter().flatten().collect())
}

/// Checks the images of explicit `factors` (each must occur in `w`) and
/// returns one witness per factor, found or absent.
pub fn closure_check_factors(
    w: &[Letter],
    op: &ClosureOp,
    factors: &[Word],
) -> Result<Vec<ClosureWitness>> {
    let mut lengths: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    lengths.sort_unstable();
    lengths.dedup();
    let tables: BTreeMap<usize, FactorTable> = lengths
        .into_par_iter()
        .map(|len| (len, FactorTable::build(w, len, w.len())))
        .collect();
    factors
        .iter()
        .map(|f| {
            let table = &tables[&f.len()];
            let pos = table.find(f).map(|s| s.first).ok_or_else(|| {
                Error::Precondition(format!("{f} is not a factor of the scanned word"))
            })?;
            witness_for(op, f, pos, table)
        })
        .collect()
}

/// A maximal stretch of consecutive runs that all have the same length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunBlock {
    pub factor: Word,
    pub exponent: Letter,
    pub runs: usize,
    /// 1-based start in the scanned word.
    pub start: usize,
}

/// Splits `w` into maximal blocks of equal-length runs, left to right.
pub fn equal_run_blocks(w: &[Letter]) -> Vec<RunBlock> {
    let rd = rle_encode(w);
    let mut blocks = Vec::new();
    let mut start = 0usize;
    for group in rd.exponents.chunk_by(|a, b| a == b) {
        let len: usize = group.iter().map(|&e| e as usize).sum();
        blocks.push(RunBlock {
            factor: Word::from(&w[start..start + len]),
            exponent: group[0],
            runs: group.len(),
            start: start + 1,
        });
        start += len;
    }
    blocks
}

/// Result of checking Φ⁻¹(u) over all short words u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeCheck {
    pub cases: usize,
    /// The first u whose expansion is not an odd-length palindrome.
    pub counterexample: Option<Word>,
}

impl PalindromeCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that Φ⁻¹(u) is an odd-length palindrome for every u of length
/// 1..=`k_max` over a 2-letter odd alphabet.
pub fn phi_inverse_palindrome_check(order: &CyclicOrder, k_max: usize) -> Result<PalindromeCheck> {
    let letters = order.arrangement().to_vec();
    if letters.len() != 2 || letters.iter().any(|a| a % 2 == 0) {
        return Err(Error::Precondition(format!(
            "the palindrome check needs a 2-letter odd alphabet, got {order}"
        )));
    }
    let mut cases = 0;
    for k in 1..=k_max {
        let words: Vec<Word> = (0..1usize << k)
            .map(|bits| (0..k).map(|i| letters[(bits >> (k - 1 - i)) & 1]).collect())
            .collect();
        let bad = words
            .par_iter()
            .map(|u| {
                phi_inverse_prefix(u, order)
                    .map(|w| !(w.len() % 2 == 1 && is_palindrome(&w)))
            })
            .collect::<Result<Vec<bool>>>()?;
        cases += words.len();
        if let Some(i) = bad.iter().position(|&b| b) {
            return Ok(PalindromeCheck {
                cases,
                counterexample: Some(words[i].clone()),
            });
        }
    }
    Ok(PalindromeCheck {
        cases,
        counterexample: None,
    })
}
