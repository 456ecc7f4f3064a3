//! Pseudo-inverses of Δ under a cyclic order of the alphabet, their chains,
//! and the prefix forms of the bijection Φ between smooth infinite words and
//! infinite words over the alphabet.
//!
//! Expansion is exponential in chain depth, so every materializing operation
//! checks its output length against an [`ExpansionBudget`] before allocating.
//! [`ChainExpander`] yields the same letters lazily with memory linear in the
//! chain depth.

use std::collections::HashMap;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rle::{exponents, rle_reconstruct, RunDecomposition};
use crate::word::{Letter, Word};

/// Environment variable that overrides the default expansion budget.
pub const MAX_EXPANSION_ENV: &str = "SMOOTHWORDS_MAX_EXPANSION";

/// Upper bound on the number of symbols a single expansion may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionBudget(pub u64);

impl ExpansionBudget {
    pub const DEFAULT: ExpansionBudget = ExpansionBudget(100_000_000);

    /// Reads [`MAX_EXPANSION_ENV`], falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_EXPANSION_ENV) {
            Ok(text) => text
                .trim()
                .parse()
                .map(ExpansionBudget)
                .map_err(|_| Error::Parse(format!("{MAX_EXPANSION_ENV}={text} is not a count"))),
            Err(_) => Ok(Self::DEFAULT),
        }
    }

    fn admit(self, needed: u128) -> Result<()> {
        if needed > u128::from(self.0) {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for ExpansionBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// A cyclic arrangement `b₁ → b₂ → ⋯ → bₙ → b₁` of the alphabet. Every base
/// sequence produced by a pseudo-inverse follows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicOrder {
    arrangement: Vec<Letter>,
    position: HashMap<Letter, usize>,
}

impl CyclicOrder {
    pub fn new(alphabet: &Alphabet, arrangement: impl Into<Vec<Letter>>) -> Result<Self> {
        let arrangement = arrangement.into();
        let mut sorted = arrangement.clone();
        sorted.sort_unstable();
        if sorted != alphabet.letters() {
            return Err(Error::InvalidOrder(format!(
                "{} is not an arrangement of {alphabet}",
                Word::from(arrangement)
            )));
        }
        let position = arrangement
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, i))
            .collect();
        Ok(CyclicOrder {
            arrangement,
            position,
        })
    }

    /// The order `a₁ → a₂ → ⋯ → aₙ`.
    pub fn increasing(alphabet: &Alphabet) -> Self {
        CyclicOrder::new(alphabet, alphabet.letters().to_vec()).expect("alphabet is its own order")
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        CyclicOrder::new(alphabet, Word::parse_list(text)?.into_vec())
    }

    pub fn arrangement(&self) -> &[Letter] {
        &self.arrangement
    }

    pub fn size(&self) -> usize {
        self.arrangement.len()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.position.contains_key(&letter)
    }

    /// Zero-based index of `letter` in the arrangement.
    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        self.position.get(&letter).copied()
    }

    pub fn successor(&self, letter: Letter) -> Option<Letter> {
        self.advance(letter, 1)
    }

    /// The letter `k` steps after `letter` along the cycle.
    pub fn advance(&self, letter: Letter, k: usize) -> Option<Letter> {
        let i = self.index_of(letter)?;
        Some(self.arrangement[(i + k % self.size()) % self.size()])
    }

    /// `(b₁ b₂ ⋯ bₙ)` repeated until `len` letters, starting at `start`.
    pub fn cycle_from(&self, start: Letter, len: usize) -> Option<Word> {
        let i = self.index_of(start)?;
        Some(
            (0..len)
                .map(|k| self.arrangement[(i + k) % self.size()])
                .collect(),
        )
    }

    fn check(&self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::InvalidOrder(format!(
                "letter {letter} is not in the cyclic order {self}"
            )))
        }
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arrangement.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join("→"))
    }
}

/// A position on a cyclic order, advanced one step per emitted run.
#[derive(Debug, Clone)]
pub struct BaseTrack<'a> {
    order: &'a CyclicOrder,
    position: usize,
}

impl<'a> BaseTrack<'a> {
    pub fn new(order: &'a CyclicOrder, start: Letter) -> Result<Self> {
        order.check(start)?;
        Ok(BaseTrack {
            order,
            position: order.index_of(start).expect("checked"),
        })
    }

    pub fn current(&self) -> Letter {
        self.order.arrangement[self.position]
    }

    /// One-based position, matching the `b₁ ⋯ bₙ` indexing.
    pub fn position(&self) -> usize {
        self.position + 1
    }

    pub fn advance(&mut self, k: usize) {
        self.position = (self.position + k) % self.order.size();
    }
}

fn check_exponents(u: &[Letter]) -> Result<()> {
    match u.iter().position(|&e| e == 0) {
        Some(j) => Err(Error::ZeroExponent(j + 1)),
        None => Ok(()),
    }
}

fn total_length(u: &[Letter]) -> u128 {
    u.iter().map(|&e| u128::from(e)).sum()
}

/// Δ_α⁻¹(u) = α^{u₁} s(α)^{u₂} s²(α)^{u₃} ⋯ with `s` the cyclic successor.
pub fn pseudo_inverse(alpha: Letter, u: &[Letter], order: &CyclicOrder) -> Result<Word> {
    pseudo_inverse_within(alpha, u, order, ExpansionBudget::DEFAULT)
}

pub fn pseudo_inverse_within(
    alpha: Letter,
    u: &[Letter],
    order: &CyclicOrder,
    budget: ExpansionBudget,
) -> Result<Word> {
    check_exponents(u)?;
    budget.admit(total_length(u))?;
    let mut track = BaseTrack::new(order, alpha)?;
    let mut out = Word::with_capacity(total_length(u) as usize);
    for &e in u {
        out.extend(std::iter::repeat_n(track.current(), e as usize));
        track.advance(1);
    }
    Ok(out)
}

/// Δ_p⁻ᵏ(u) = Δ_{p₁}⁻¹(Δ_{p₂}⁻¹(⋯ Δ_{pₖ}⁻¹(u))); the empty chain is the identity.
pub fn pseudo_inverse_chain(p: &[Letter], u: &[Letter], order: &CyclicOrder) -> Result<Word> {
    pseudo_inverse_chain_within(p, u, order, ExpansionBudget::DEFAULT)
}

pub fn pseudo_inverse_chain_within(
    p: &[Letter],
    u: &[Letter],
    order: &CyclicOrder,
    budget: ExpansionBudget,
) -> Result<Word> {
    p.iter().try_for_each(|&a| order.check(a))?;
    check_exponents(u)?;
    let mut current = Word::from(u);
    for &alpha in p.iter().rev() {
        current = pseudo_inverse_within(alpha, &current, order, budget)?;
    }
    Ok(current)
}

/// Δ_v⁻¹(u) = v₁^{u₁} v₂^{u₂} ⋯ vₖ^{uₖ} for an explicit base word `v`.
pub fn pseudo_inverse_with_base(u: &[Letter], v: &[Letter]) -> Result<Word> {
    pseudo_inverse_with_base_within(u, v, ExpansionBudget::DEFAULT)
}

pub fn pseudo_inverse_with_base_within(
    u: &[Letter],
    v: &[Letter],
    budget: ExpansionBudget,
) -> Result<Word> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            exponents: u.len(),
            bases: v.len(),
        });
    }
    budget.admit(total_length(u))?;
    rle_reconstruct(&RunDecomposition {
        exponents: Word::from(u),
        bases: Word::from(v),
        last_run_truncated: false,
    })
}

/// Φ⁻¹(u[1..k]) = Δ^{-(k-1)}_{u[1..k-1]}(u[k]).
pub fn phi_inverse_prefix(u: &[Letter], order: &CyclicOrder) -> Result<Word> {
    phi_inverse_prefix_within(u, order, ExpansionBudget::DEFAULT)
}

pub fn phi_inverse_prefix_within(
    u: &[Letter],
    order: &CyclicOrder,
    budget: ExpansionBudget,
) -> Result<Word> {
    let (&last, chain) = u.split_last().ok_or(Error::EmptyInput)?;
    order.check(last)?;
    pseudo_inverse_chain_within(chain, &[last], order, budget)
}

/// The first `m` letters of Φ(w): first(w), first(Δ(w)), first(Δ²(w)), ….
///
/// Iterates use every run of `w`, including the last one. When `w` is a
/// proper prefix and some Δʲ(w) consists of a single run, the following
/// coordinate is only a lower bound.
pub fn phi_prefix(w: &[Letter], m: usize) -> Result<Word> {
    let mut out = Word::with_capacity(m);
    let mut current = Word::from(w);
    for depth in 0..m {
        match current.first() {
            Some(a) => out.push(a),
            None => return Err(Error::InsufficientDepth { depth }),
        }
        if depth + 1 < m {
            current = exponents(&current);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
struct ExpansionLevel {
    base: usize,
    remaining: Letter,
    started: bool,
}

/// Lazily yields the letters of Δ_p⁻ᵏ(u), one level of run state per chain
/// letter. Not shareable between threads while in use, but may be moved.
#[derive(Debug, Clone)]
pub struct ChainExpander {
    order: CyclicOrder,
    levels: Vec<ExpansionLevel>,
    source: std::vec::IntoIter<Letter>,
}

impl ChainExpander {
    pub fn new(p: &[Letter], u: &[Letter], order: &CyclicOrder) -> Result<Self> {
        check_exponents(u)?;
        let levels = p
            .iter()
            .map(|&a| {
                order.check(a)?;
                Ok(ExpansionLevel {
                    base: order.index_of(a).expect("checked"),
                    remaining: 0,
                    started: false,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainExpander {
            order: order.clone(),
            levels,
            source: u.to_vec().into_iter(),
        })
    }

    /// Streams Φ⁻¹(u) for a nonempty `u`.
    pub fn phi_inverse(u: &[Letter], order: &CyclicOrder) -> Result<Self> {
        let (&last, chain) = u.split_last().ok_or(Error::EmptyInput)?;
        order.check(last)?;
        ChainExpander::new(chain, &[last], order)
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    fn pull(&mut self, level: usize) -> Option<Letter> {
        if level == self.levels.len() {
            return self.source.next();
        }
        if self.levels[level].remaining == 0 {
            let exponent = self.pull(level + 1)?;
            let n = self.order.size();
            let state = &mut self.levels[level];
            if state.started {
                state.base = (state.base + 1) % n;
            }
            state.started = true;
            state.remaining = exponent;
        }
        let state = &mut self.levels[level];
        state.remaining -= 1;
        Some(self.order.arrangement[state.base])
    }
}

impl Iterator for ChainExpander {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        self.pull(0)
    }
}
