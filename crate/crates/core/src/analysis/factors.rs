use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::word::{Letter, Word};

const MODULUS: u64 = (1 << 61) - 1;
const RADIX: u64 = 1_000_003;

fn mul_mod(a: u64, b: u64) -> u64 {
    let p = u128::from(a) * u128::from(b);
    let folded = (p as u64 & MODULUS) + (p >> 61) as u64;
    if folded >= MODULUS {
        folded - MODULUS
    } else {
        folded
    }
}

fn add_mod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

fn digit(a: Letter) -> u64 {
    a % (MODULUS - 1) + 1
}

fn hash(pattern: &[Letter]) -> u64 {
    pattern
        .iter()
        .fold(0, |h, &a| add_mod(mul_mod(h, RADIX), digit(a)))
}

/// Polynomial hashes of every length-`len` window of `w`, left to right.
fn window_hashes(w: &[Letter], len: usize) -> impl Iterator<Item = u64> + '_ {
    let top = (1..len).fold(1, |p, _| mul_mod(p, RADIX));
    let mut h = if len <= w.len() { hash(&w[..len]) } else { 0 };
    let count = (w.len() + 1).saturating_sub(len);
    (0..count).map(move |i| {
        let current = h;
        if i + len < w.len() {
            let out = mul_mod(digit(w[i]), top);
            h = add_mod(mul_mod(add_mod(h, MODULUS - out), RADIX), digit(w[i + len]));
        }
        current
    })
}

/// Occurrence statistics of one factor; positions are 1-based starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorStats {
    pub factor: Word,
    pub occurrences: usize,
    pub first: usize,
    pub second: Option<usize>,
    pub last: usize,
    /// Largest difference between consecutive starts; `None` for a single
    /// occurrence.
    pub max_gap: Option<usize>,
}

impl FactorStats {
    pub fn recurs(&self) -> bool {
        self.second.is_some()
    }
}

/// All factors of one length, keyed by rolling hash with slice verification.
pub(crate) struct FactorTable {
    len: usize,
    buckets: HashMap<u64, Vec<usize>>,
    entries: Vec<FactorStats>,
}

impl FactorTable {
    /// Indexes factors of length `len` whose first occurrence starts before
    /// `first_before` (0-based); later occurrences anywhere in `w` are counted.
    pub(crate) fn build(w: &[Letter], len: usize, first_before: usize) -> Self {
        let mut table = FactorTable {
            len,
            buckets: HashMap::new(),
            entries: Vec::new(),
        };
        if len == 0 {
            return table;
        }
        for (i, h) in window_hashes(w, len).enumerate() {
            let window = &w[i..i + len];
            let bucket = table.buckets.entry(h).or_default();
            let found = bucket
                .iter()
                .copied()
                .find(|&e| table.entries[e].factor.as_slice() == window);
            match found {
                Some(e) => {
                    let s = &mut table.entries[e];
                    let pos = i + 1;
                    let gap = pos - s.last;
                    s.max_gap = Some(s.max_gap.map_or(gap, |g| g.max(gap)));
                    s.second.get_or_insert(pos);
                    s.last = pos;
                    s.occurrences += 1;
                }
                None if i < first_before => {
                    bucket.push(table.entries.len());
                    table.entries.push(FactorStats {
                        factor: Word::from(window),
                        occurrences: 1,
                        first: i + 1,
                        second: None,
                        last: i + 1,
                        max_gap: None,
                    });
                }
                None => {}
            }
        }
        table
    }

    pub(crate) fn find(&self, pattern: &[Letter]) -> Option<&FactorStats> {
        if pattern.len() != self.len {
            return None;
        }
        self.buckets
            .get(&hash(pattern))?
            .iter()
            .map(|&e| &self.entries[e])
            .find(|s| s.factor.as_slice() == pattern)
    }

    fn into_sorted(mut self) -> Vec<FactorStats> {
        self.entries.sort_by(|a, b| a.factor.cmp(&b.factor));
        self.entries
    }
}

/// Factors of lengths 1..=L_max with their occurrence statistics, ordered by
/// length then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorIndex {
    pub text_len: usize,
    pub lmax: usize,
    /// Number of leading start positions from which factors were collected.
    pub window: usize,
    /// `by_length[L − 1]` holds the factors of length L.
    pub by_length: Vec<Vec<FactorStats>>,
}

impl FactorIndex {
    pub fn build(w: &[Letter], lmax: usize, window: usize) -> Self {
        let by_length = (1..=lmax)
            .into_par_iter()
            .map(|len| FactorTable::build(w, len, window).into_sorted())
            .collect();
        FactorIndex {
            text_len: w.len(),
            lmax,
            window,
            by_length,
        }
    }

    pub fn of_length(&self, len: usize) -> &[FactorStats] {
        len.checked_sub(1)
            .and_then(|i| self.by_length.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FactorStats> {
        self.by_length.iter().flatten()
    }

    pub fn get(&self, factor: &[Letter]) -> Option<&FactorStats> {
        let list = self.of_length(factor.len());
        list.binary_search_by(|s| s.factor.as_slice().cmp(factor))
            .ok()
            .map(|i| &list[i])
    }

    pub fn non_recurrent(&self) -> Vec<&FactorStats> {
        self.iter().filter(|s| !s.recurs()).collect()
    }

    /// Largest max-gap among factors of length `len`.
    pub fn gap_bound(&self, len: usize) -> Option<usize> {
        self.of_length(len).iter().filter_map(|s| s.max_gap).max()
    }
}

/// Start positions used by [`recurrence_report`]: the first ⌈|w|/100⌉, at
/// least one.
pub fn recurrence_window(len: usize) -> usize {
    len.div_ceil(100).max(1)
}

/// Every factor of length ≤ `lmax` that starts in the first ⌈|w|/100⌉
/// positions, with its second occurrence in `w` if there is one.
pub fn recurrence_report(w: &[Letter], lmax: usize) -> FactorIndex {
    FactorIndex::build(w, lmax, recurrence_window(w.len()))
}

/// Every factor of length ≤ `lmax` with its maximal occurrence gap.
pub fn max_gap_report(w: &[Letter], lmax: usize) -> FactorIndex {
    FactorIndex::build(w, lmax, w.len())
}

/// A factor whose gap differs between two prefix lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapChange {
    pub factor: Word,
    pub shorter: Option<usize>,
    pub longer: Option<usize>,
}

/// Compares gaps of a prefix's index with those of a longer prefix for
/// factors up to `lmax`. A factor missing from either index, or seen only
/// once in either, counts as a change.
pub fn gap_changes(shorter: &FactorIndex, longer: &FactorIndex, lmax: usize) -> Vec<GapChange> {
    let mut changes = Vec::new();
    for len in 1..=lmax {
        // Outer `None`: factor absent from that index.
        let mut merged: BTreeMap<&Word, [Option<Option<usize>>; 2]> = BTreeMap::new();
        for s in shorter.of_length(len) {
            merged.entry(&s.factor).or_default()[0] = Some(s.max_gap);
        }
        for s in longer.of_length(len) {
            merged.entry(&s.factor).or_default()[1] = Some(s.max_gap);
        }
        for (factor, [a, b]) in merged {
            if a.is_none() || a != b || a == Some(None) {
                changes.push(GapChange {
                    factor: factor.clone(),
                    shorter: a.flatten(),
                    longer: b.flatten(),
                });
            }
        }
    }
    changes
}

/// Quadratic reference scanner: every factor of length `len` with all its
/// 1-based start positions.
pub fn naive_occurrences(w: &[Letter], len: usize) -> BTreeMap<Word, Vec<usize>> {
    let mut out: BTreeMap<Word, Vec<usize>> = BTreeMap::new();
    if len == 0 || len > w.len() {
        return out;
    }
    for i in 0..=w.len() - len {
        let f = Word::from(&w[i..i + len]);
        if out.contains_key(&f) {
            continue;
        }
        let starts = (i..=w.len() - len)
            .filter(|&j| w[j..j + len] == f[..])
            .map(|j| j + 1)
            .collect();
        out.insert(f, starts);
    }
    out
}
