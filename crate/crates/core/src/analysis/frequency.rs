use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::inverse::pseudo_inverse_with_base;
use crate::word::Letter;

/// One letter's share of the prefix `W_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyRow {
    pub k: usize,
    pub letter: Letter,
    pub count: u64,
    pub ratio: f64,
    /// |ratio − 1/n|.
    pub deviation: f64,
}

/// Letter counts at each sampled prefix length, rows ordered by k then letter.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyReport {
    pub letters: Vec<Letter>,
    pub rows: Vec<FrequencyRow>,
}

impl FrequencyReport {
    pub fn samples(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self.rows.iter().map(|r| r.k).collect();
        ks.dedup();
        ks
    }

    pub fn at(&self, k: usize) -> Vec<&FrequencyRow> {
        self.rows.iter().filter(|r| r.k == k).collect()
    }

    pub fn max_deviation(&self) -> f64 {
        self.rows.iter().map(|r| r.deviation).fold(0.0, f64::max)
    }
}

/// Exact letter counts of the first k letters of `stream` for every k in
/// `samples`.
pub fn letter_frequencies(
    stream: impl IntoIterator<Item = Letter>,
    alphabet: &Alphabet,
    samples: &[usize],
) -> Result<FrequencyReport> {
    let mut ks = samples.to_vec();
    ks.sort_unstable();
    ks.dedup();
    let letters = alphabet.letters().to_vec();
    let n = letters.len() as f64;
    let mut counts = vec![0u64; letters.len()];
    let mut rows = Vec::with_capacity(ks.len() * letters.len());
    let mut stream = stream.into_iter();
    let mut consumed = 0usize;
    for &k in &ks {
        while consumed < k {
            let a = stream.next().ok_or(Error::Exhausted(consumed))?;
            let i = alphabet.index_of(a).ok_or_else(|| Error::NotInAlphabet {
                letter: a,
                alphabet: alphabet.to_string(),
            })?;
            counts[i] += 1;
            consumed += 1;
        }
        for (&letter, &count) in letters.iter().zip(&counts) {
            let ratio = if k == 0 { 0.0 } else { count as f64 / k as f64 };
            rows.push(FrequencyRow {
                k,
                letter,
                count,
                ratio,
                deviation: (ratio - 1.0 / n).abs(),
            });
        }
    }
    Ok(FrequencyReport { letters, rows })
}

/// True when every complete block `α_{in+1} … α_{in+n}` of `bases` is a
/// permutation of the alphabet. A trailing partial block is ignored.
pub fn is_well_proportioned_prefix(bases: &[Letter], alphabet: &Alphabet) -> bool {
    let n = alphabet.size();
    bases.chunks_exact(n).all(|block| {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        sorted == alphabet.letters()
    })
}

/// Builds Δ_v⁻¹(u) and tests whether each letter makes up exactly 1/n of it.
///
/// Requires n | aᵢ for every letter, exponents of `u` divisible by n,
/// |u| = |v| divisible by n, and `v` well-proportioned.
pub fn exact_frequency_check(u: &[Letter], v: &[Letter], alphabet: &Alphabet) -> Result<bool> {
    let n = alphabet.size() as u64;
    if alphabet.uniform_remainder() != Some(0) {
        return Err(Error::Precondition(format!(
            "every letter of {alphabet} must be divisible by {n}"
        )));
    }
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            exponents: u.len(),
            bases: v.len(),
        });
    }
    if !(u.len() as u64).is_multiple_of(n) {
        return Err(Error::Precondition(format!("|u| = {} is not a multiple of {n}", u.len())));
    }
    if let Some(e) = u.iter().find(|&&e| e % n != 0) {
        return Err(Error::Precondition(format!("exponent {e} is not divisible by {n}")));
    }
    alphabet.check_word(v)?;
    if !is_well_proportioned_prefix(v, alphabet) {
        return Err(Error::Precondition("v is not well-proportioned".into()));
    }
    let w = pseudo_inverse_with_base(u, v)?;
    let share = w.len() as u64 / n;
    Ok(alphabet
        .letters()
        .iter()
        .all(|&a| w.iter().filter(|&&x| x == a).count() as u64 == share))
}
