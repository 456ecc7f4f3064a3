//! Finite words over positive-integer letters and their text format.
//!
//! A word prints as decimal letters separated by single spaces. On input the
//! run form `b^e` is also accepted, so `2^3 4^2` reads as `2 2 2 4 4`.

use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single symbol. Letters of an alphabet are at least 1; exponent words
/// (images of Δ) use the same type for run lengths.
pub type Letter = u64;

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Word(Vec::with_capacity(capacity))
    }

    /// `letter` repeated `count` times.
    pub fn power(letter: Letter, count: usize) -> Self {
        Word(vec![letter; count])
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(other);
        Word(out)
    }

    pub fn is_prefix_of(&self, other: &[Letter]) -> bool {
        other.starts_with(&self.0)
    }

    /// Parses the repo-wide text format. Tokens are separated by whitespace;
    /// each is either a decimal letter or `b^e`.
    pub fn parse(text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            match token.split_once('^') {
                Some((base, exp)) => {
                    let base = parse_letter(base)?;
                    let exp: usize = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
                    out.extend(std::iter::repeat_n(base, exp));
                }
                None => out.push(parse_letter(token)?),
            }
        }
        Ok(Word(out))
    }

    /// Parses a comma-separated list such as `2,4,3`, the form used by
    /// command-line flags. The empty string is the empty word.
    pub fn parse_list(text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::new());
        }
        text.split(',')
            .map(|t| parse_letter(t.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

fn parse_letter(token: &str) -> Result<Letter> {
    let value: Letter = token
        .parse()
        .map_err(|_| Error::Parse(format!("`{token}` is not a positive integer")))?;
    if value == 0 {
        return Err(Error::Parse("letters must be positive".into()));
    }
    Ok(value)
}

impl Deref for Word {
    type Target = Vec<Letter>;

    fn deref(&self) -> &Vec<Letter> {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl<const N: usize> From<[Letter; N]> for Word {
    fn from(v: [Letter; N]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl IntoIterator for Word {
    type Item = Letter;
    type IntoIter = std::vec::IntoIter<Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

/// Writes letters in the flat text form without a trailing newline.
pub fn write_letters<W: fmt::Write>(out: &mut W, letters: &[Letter]) -> fmt::Result {
    for (i, letter) in letters.iter().enumerate() {
        if i > 0 {
            out.write_char(' ')?;
        }
        write!(out, "{letter}")?;
    }
    Ok(())
}

/// Renders letters in the compact run form, e.g. `2^3 4^2 3`.
pub fn run_form(letters: &[Letter]) -> String {
    let mut out = String::new();
    for chunk in letters.chunk_by(|a, b| a == b) {
        if !out.is_empty() {
            out.push(' ');
        }
        if chunk.len() == 1 {
            out.push_str(&chunk[0].to_string());
        } else {
            out.push_str(&format!("{}^{}", chunk[0], chunk.len()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_and_run_forms() {
        assert_eq!(Word::parse("1 2 2").unwrap(), Word::from([1, 2, 2]));
        assert_eq!(
            Word::parse("2^3 4^2").unwrap(),
            Word::from([2, 2, 2, 4, 4])
        );
        assert_eq!(Word::parse("").unwrap(), Word::new());
        assert_eq!(Word::parse_list("2,4,3").unwrap(), Word::from([2, 4, 3]));
        assert_eq!(Word::parse_list("").unwrap(), Word::new());
    }

    #[test]
    fn rejects_zero_and_garbage() {
        assert!(Word::parse("1 0 2").is_err());
        assert!(Word::parse("1 x").is_err());
        assert!(Word::parse("2^y").is_err());
        assert!(Word::parse_list("1,,2").is_err());
    }

    #[test]
    fn display_is_flat() {
        let w = Word::parse("2^3 4").unwrap();
        assert_eq!(w.to_string(), "2 2 2 4");
        assert_eq!(run_form(&w), "2^3 4");
        assert_eq!(Word::new().to_string(), "");
    }
}
