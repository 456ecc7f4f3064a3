//! Generalized Kolakoski words K_u, the fixpoints of Δ.
//!
//! K_u is the unique word whose run j consists of the base letter uⱼ repeated
//! K_u[j] times. Three generators are provided:
//!
//! * [`kolakoski_prefix`] materializes a prefix, reading run lengths back from
//!   its own output.
//! * [`GeneratorState`] is the same self-reading scheme as a cursor that keeps
//!   only the not-yet-read letters in a ring buffer. The buffer grows with the
//!   gap between the write and read pointers, which is linear in the output.
//! * [`KolakoskiStream`] reads run lengths from a nested copy of itself, which
//!   in turn reads from another copy, and so on. Each level holds O(1) state
//!   and levels are created on demand, so memory is logarithmic in the number
//!   of letters pulled.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rle::{bases, rle_encode_prefix};
use crate::word::{Letter, Word};

/// An eventually periodic base sequence u = preperiod · period^ω with no two
/// equal adjacent letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSequenceSpec {
    preperiod: Word,
    period: Word,
}

impl BaseSequenceSpec {
    pub fn new(alphabet: &Alphabet, preperiod: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidBase("the period must be nonempty".into()));
        }
        alphabet.check_word(&preperiod)?;
        alphabet.check_word(&period)?;
        // One period past the seam covers every adjacent pair of u.
        let realized = preperiod.concat(&period).concat(&period[..1]);
        if let Some(i) = realized.windows(2).position(|p| p[0] == p[1]) {
            return Err(Error::InvalidBase(format!(
                "u{} = u{} = {}",
                i + 1,
                i + 2,
                realized[i]
            )));
        }
        Ok(BaseSequenceSpec { preperiod, period })
    }

    pub fn periodic(alphabet: &Alphabet, period: Word) -> Result<Self> {
        BaseSequenceSpec::new(alphabet, Word::new(), period)
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// u_{j+1}, zero-based.
    pub fn letter(&self, j: usize) -> Letter {
        if j < self.preperiod.len() {
            self.preperiod[j]
        } else {
            self.period[(j - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The first `len` letters of u.
    pub fn prefix(&self, len: usize) -> Word {
        (0..len).map(|j| self.letter(j)).collect()
    }

    pub fn cursor(&self) -> BaseCursor {
        BaseCursor {
            spec: Arc::new(self.clone()),
            next: 0,
        }
    }
}

impl fmt::Display for BaseSequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &Word| {
            w.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.preperiod.is_empty() {
            write!(f, "({})^ω", join(&self.period))
        } else {
            write!(f, "{}·({})^ω", join(&self.preperiod), join(&self.period))
        }
    }
}

/// Walks the letters u₁ u₂ u₃ ⋯ of a base sequence.
#[derive(Debug, Clone)]
pub struct BaseCursor {
    spec: Arc<BaseSequenceSpec>,
    next: usize,
}

impl BaseCursor {
    fn from_shared(spec: Arc<BaseSequenceSpec>) -> Self {
        BaseCursor { spec, next: 0 }
    }
}

impl Iterator for BaseCursor {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        let letter = self.spec.letter(self.next);
        self.next += 1;
        // Keep the index bounded inside the periodic part.
        if self.next >= self.spec.preperiod.len() + self.spec.period.len() {
            self.next -= self.spec.period.len();
        }
        Some(letter)
    }
}

/// The first `m` letters of K_u.
pub fn kolakoski_prefix(spec: &BaseSequenceSpec, m: usize) -> Result<Word> {
    if m == 0 {
        return Err(Error::Precondition("prefix length must be at least 1".into()));
    }
    let mut w = Word::with_capacity(m);
    let mut base = spec.cursor();
    let mut run = 0;
    while w.len() < m {
        let letter = base.next().expect("base sequences are infinite");
        // Run j can only start at position ≤ j; when it starts exactly at j
        // its length is its own first letter.
        let length = if run < w.len() { w[run] } else { letter };
        let take = (length as usize).min(m - w.len());
        w.extend(std::iter::repeat_n(letter, take));
        run += 1;
    }
    Ok(w)
}

/// Self-reading cursor over K_u with a ring buffer of emitted letters that
/// have not yet been read back as run lengths.
#[derive(Debug, Clone)]
pub struct GeneratorState {
    base: BaseCursor,
    write_count: u64,
    read_index: u64,
    pending_letter: Letter,
    pending_remaining: Letter,
    buffer: VecDeque<Letter>,
    peak_buffer: usize,
}

impl GeneratorState {
    pub fn new(spec: &BaseSequenceSpec) -> Self {
        GeneratorState {
            base: spec.cursor(),
            write_count: 0,
            read_index: 0,
            pending_letter: 0,
            pending_remaining: 0,
            buffer: VecDeque::new(),
            peak_buffer: 0,
        }
    }

    pub fn write_count(&self) -> u64 {
        self.write_count
    }

    /// One-based index of the run being expanded.
    pub fn read_index(&self) -> u64 {
        self.read_index
    }

    pub fn buffer_len(&self) -> usize {
        self.buffer.len()
    }

    pub fn peak_buffer_len(&self) -> usize {
        self.peak_buffer
    }

    /// `write_count − read_index`, the number of letters awaiting reading.
    pub fn pointer_gap(&self) -> u64 {
        self.write_count.saturating_sub(self.read_index)
    }
}

impl Iterator for GeneratorState {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        if self.pending_remaining == 0 {
            self.read_index += 1;
            let letter = self.base.next()?;
            let length = if self.read_index <= self.write_count {
                self.buffer.pop_front().expect("buffer holds unread letters")
            } else {
                letter
            };
            self.pending_letter = letter;
            self.pending_remaining = length;
        }
        self.pending_remaining -= 1;
        self.write_count += 1;
        if self.write_count > self.read_index {
            self.buffer.push_back(self.pending_letter);
            self.peak_buffer = self.peak_buffer.max(self.buffer.len());
        }
        Some(self.pending_letter)
    }
}

#[derive(Debug, Clone)]
struct Level {
    base: BaseCursor,
    letter: Letter,
    remaining: Letter,
    runs_started: u64,
    emitted: u64,
    /// Letters already taken from the level below.
    child_consumed: u64,
}

impl Level {
    fn new(spec: &Arc<BaseSequenceSpec>) -> Self {
        Level {
            base: BaseCursor::from_shared(Arc::clone(spec)),
            letter: 0,
            remaining: 0,
            runs_started: 0,
            emitted: 0,
            child_consumed: 0,
        }
    }
}

/// Lazy letter stream of K_u using memory logarithmic in the letters pulled.
///
/// Level 0 produces the output. To learn the length of its run j it needs
/// K_u[j], which it pulls from level 1, an independent generator of the same
/// word that runs behind it; level 1 pulls from level 2, and so on.
#[derive(Debug, Clone)]
pub struct KolakoskiStream {
    spec: Arc<BaseSequenceSpec>,
    levels: Vec<Level>,
}

impl KolakoskiStream {
    pub fn new(spec: &BaseSequenceSpec) -> Self {
        let spec = Arc::new(spec.clone());
        let levels = vec![Level::new(&spec)];
        KolakoskiStream { spec, levels }
    }

    /// Number of nested generators currently alive.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    fn pull(&mut self, i: usize) -> Letter {
        if self.levels[i].remaining == 0 {
            let j = self.levels[i].runs_started + 1;
            let letter = self.levels[i].base.next().expect("base sequences are infinite");
            let length = if j > self.levels[i].emitted {
                letter
            } else {
                self.read_length(i, j)
            };
            let level = &mut self.levels[i];
            level.runs_started = j;
            level.letter = letter;
            level.remaining = length;
        }
        let level = &mut self.levels[i];
        level.remaining -= 1;
        level.emitted += 1;
        level.letter
    }

    /// K_u[j] as produced by the level below `i`.
    fn read_length(&mut self, i: usize, j: u64) -> Letter {
        if self.levels.len() == i + 1 {
            self.levels.push(Level::new(&self.spec));
        }
        while self.levels[i].child_consumed + 1 < j {
            self.pull(i + 1);
            self.levels[i].child_consumed += 1;
        }
        let length = self.pull(i + 1);
        self.levels[i].child_consumed += 1;
        length
    }
}

impl Iterator for KolakoskiStream {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        Some(self.pull(0))
    }
}

pub fn kolakoski_stream(spec: &BaseSequenceSpec) -> KolakoskiStream {
    KolakoskiStream::new(spec)
}

/// True when Δ of the prefix `w`, with its possibly truncated last run
/// dropped, is itself a prefix of `w`.
pub fn verify_fixpoint_prefix(w: &[Letter]) -> bool {
    let rd = rle_encode_prefix(w);
    w.starts_with(rd.exact_exponents())
}

/// True when ℬ(w) is a prefix of the base sequence of `spec`.
pub fn verify_base_prefix(spec: &BaseSequenceSpec, w: &[Letter]) -> bool {
    let b = bases(w);
    b == spec.prefix(b.len())
}
