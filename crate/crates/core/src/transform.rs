//! Reversal, letter permutation and palindromes.

use crate::alphabet::Permutation;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

pub fn reverse(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

/// Applies `sigma` letter by letter.
pub fn apply_permutation(w: &[Letter], sigma: &Permutation) -> Result<Word> {
    w.iter()
        .map(|&a| {
            sigma.image(a).ok_or_else(|| {
                Error::InvalidPermutation(format!("letter {a} is outside the permutation's domain"))
            })
        })
        .collect()
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    w.iter().eq(w.iter().rev())
}
