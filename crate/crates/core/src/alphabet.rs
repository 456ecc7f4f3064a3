//! Alphabets `a₁ < ⋯ < aₙ` of positive integers and permutations on them.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Arithmetic class of an alphabet modulo its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Remainder {
    /// Every letter satisfies `aᵢ = n·qᵢ + r`; `quotients[i]` is `qᵢ`.
    Uniform { r: u64, quotients: Vec<u64> },
    /// Letters leave different remainders modulo `n`.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    /// Builds an alphabet from distinct positive letters in any order; they
    /// are stored sorted. At least two letters are required.
    pub fn new(letters: impl Into<Vec<Letter>>) -> Result<Self> {
        let mut letters = letters.into();
        letters.sort_unstable();
        if letters.len() < 2 {
            return Err(Error::InvalidAlphabet(
                "an alphabet needs at least two letters".into(),
            ));
        }
        if letters[0] == 0 {
            return Err(Error::InvalidAlphabet("letters must be positive".into()));
        }
        if letters.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidAlphabet("letters must be distinct".into()));
        }
        Ok(Alphabet { letters })
    }

    /// Parses `1,2,3`.
    pub fn parse(text: &str) -> Result<Self> {
        Alphabet::new(Word::parse_list(text)?.into_vec())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn min(&self) -> Letter {
        self.letters[0]
    }

    /// The largest letter `aₙ`.
    pub fn max(&self) -> Letter {
        *self.letters.last().expect("alphabet is nonempty")
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters.binary_search(&letter).is_ok()
    }

    /// Zero-based rank of `letter` in increasing order.
    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        self.letters.binary_search(&letter).ok()
    }

    pub fn remainder(&self) -> Remainder {
        let n = self.size() as u64;
        let r = self.letters[0] % n;
        if self.letters.iter().all(|&a| a % n == r) {
            Remainder::Uniform {
                r,
                quotients: self.letters.iter().map(|&a| (a - r) / n).collect(),
            }
        } else {
            Remainder::Mixed
        }
    }

    /// The uniform remainder `r`, if there is one.
    pub fn uniform_remainder(&self) -> Option<u64> {
        match self.remainder() {
            Remainder::Uniform { r, .. } => Some(r),
            Remainder::Mixed => None,
        }
    }

    /// `(a - r) / n` for a letter of a uniform-remainder alphabet.
    pub fn quotient(&self, letter: Letter) -> Option<u64> {
        let r = self.uniform_remainder()?;
        self.contains(letter)
            .then(|| (letter - r) / self.size() as u64)
    }

    /// True when every letter is odd and `n = 2`.
    pub fn is_two_letter_odd(&self) -> bool {
        self.size() == 2 && self.letters.iter().all(|a| a % 2 == 1)
    }

    pub fn check_letter(&self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::NotInAlphabet {
                letter,
                alphabet: self.to_string(),
            })
        }
    }

    pub fn check_word(&self, word: &[Letter]) -> Result<()> {
        word.iter().try_for_each(|&a| self.check_letter(a))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A bijection on the letters of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    mapping: BTreeMap<Letter, Letter>,
}

impl Permutation {
    pub fn identity(alphabet: &Alphabet) -> Self {
        Permutation {
            mapping: alphabet.letters().iter().map(|&a| (a, a)).collect(),
        }
    }

    /// The complement `ā₁ = a₂, ā₂ = a₁` of a two-letter alphabet.
    pub fn complement(alphabet: &Alphabet) -> Result<Self> {
        if alphabet.size() != 2 {
            return Err(Error::InvalidPermutation(
                "the complement is only defined on two-letter alphabets".into(),
            ));
        }
        Permutation::from_images(alphabet, &[alphabet.letters()[1], alphabet.letters()[0]])
    }

    /// `images[i]` is the image of the i-th smallest letter.
    pub fn from_images(alphabet: &Alphabet, images: &[Letter]) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::InvalidPermutation(format!(
                "expected {} images, got {}",
                alphabet.size(),
                images.len()
            )));
        }
        let mut sorted = images.to_vec();
        sorted.sort_unstable();
        if sorted != alphabet.letters() {
            return Err(Error::InvalidPermutation(
                "images are not a rearrangement of the alphabet".into(),
            ));
        }
        Ok(Permutation {
            mapping: alphabet
                .letters()
                .iter()
                .copied()
                .zip(images.iter().copied())
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().all(|(a, b)| a == b)
    }

    pub fn image(&self, letter: Letter) -> Option<Letter> {
        self.mapping.get(&letter).copied()
    }

    /// Images listed in increasing order of their preimages.
    pub fn images(&self) -> Vec<Letter> {
        self.mapping.values().copied().collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .mapping
            .iter()
            .map(|(a, b)| format!("{a}->{b}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}
