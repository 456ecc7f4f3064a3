//! Block substitutions whose fixpoints are generalized Kolakoski words.
//!
//! A substitution acts on block symbols (`A₁…Aₙ`, `B₁…Bₘ`, or Sing's `A`, `B`,
//! `C`); each block stands for a short word over the underlying alphabet and
//! [`Substitution::flatten`] replaces every block by that word.

use std::fmt;

use crate::alphabet::{Alphabet, Remainder};
use crate::error::{Error, Result};
use crate::inverse::CyclicOrder;
use crate::kolakoski::{kolakoski_prefix, BaseSequenceSpec};
use crate::word::{run_form, Letter, Word};

/// Iterations allowed before a non-growing substitution is reported.
const MAX_ITERATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    A(usize),
    B(usize),
    Named(char),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::A(i) => write!(f, "A{i}"),
            Symbol::B(i) => write!(f, "B{i}"),
            Symbol::Named(c) => write!(f, "{c}"),
        }
    }
}

/// A block symbol together with the word it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub symbol: Symbol,
    pub expansion: Word,
}

/// Renders a block word compactly, e.g. `A1 B1 A2^2`.
pub fn format_block_word(word: &[Symbol]) -> String {
    word.chunk_by(|a, b| a == b)
        .map(|run| {
            if run.len() == 1 {
                run[0].to_string()
            } else {
                format!("{}^{}", run[0], run.len())
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    name: String,
    symbols: Vec<Symbol>,
    blocks: Vec<Word>,
    rules: Vec<Vec<usize>>,
}

impl Substitution {
    /// Builds a substitution from its block table and rules. Every block needs
    /// exactly one rule, and every right-hand side must be nonempty and use
    /// only defined blocks.
    pub fn new(
        name: impl Into<String>,
        blocks: Vec<Block>,
        rules: Vec<(Symbol, Vec<Symbol>)>,
    ) -> Result<Self> {
        let symbols: Vec<Symbol> = blocks.iter().map(|b| b.symbol).collect();
        let index = |s: &Symbol| symbols.iter().position(|t| t == s);
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::InvalidSubstitution(format!("block {s} defined twice")));
            }
            if blocks[i].expansion.is_empty() {
                return Err(Error::InvalidSubstitution(format!("block {s} is empty")));
            }
        }
        let mut table: Vec<Option<Vec<usize>>> = vec![None; symbols.len()];
        for (lhs, rhs) in rules {
            let i = index(&lhs).ok_or_else(|| {
                Error::InvalidSubstitution(format!("rule for undefined block {lhs}"))
            })?;
            if table[i].is_some() {
                return Err(Error::InvalidSubstitution(format!("two rules for {lhs}")));
            }
            if rhs.is_empty() {
                return Err(Error::InvalidSubstitution(format!("rule for {lhs} is empty")));
            }
            let rhs = rhs
                .iter()
                .map(|s| {
                    index(s).ok_or_else(|| {
                        Error::InvalidSubstitution(format!(
                            "rule for {lhs} references undefined block {s}"
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            table[i] = Some(rhs);
        }
        let rules = table
            .into_iter()
            .zip(&symbols)
            .map(|(r, s)| {
                r.ok_or_else(|| Error::InvalidSubstitution(format!("block {s} has no rule")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Substitution {
            name: name.into(),
            symbols,
            blocks: blocks.into_iter().map(|b| b.expansion).collect(),
            rules,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn blocks(&self) -> Vec<Block> {
        self.symbols
            .iter()
            .zip(&self.blocks)
            .map(|(&symbol, expansion)| Block {
                symbol,
                expansion: expansion.clone(),
            })
            .collect()
    }

    fn index_of(&self, s: Symbol) -> Result<usize> {
        self.symbols
            .iter()
            .position(|&t| t == s)
            .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
    }

    fn to_indices(&self, word: &[Symbol]) -> Result<Vec<usize>> {
        word.iter().map(|&s| self.index_of(s)).collect()
    }

    fn to_symbols(&self, word: &[usize]) -> Vec<Symbol> {
        word.iter().map(|&i| self.symbols[i]).collect()
    }

    pub fn rule(&self, s: Symbol) -> Result<Vec<Symbol>> {
        Ok(self.to_symbols(&self.rules[self.index_of(s)?]))
    }

    pub fn expansion(&self, s: Symbol) -> Result<&Word> {
        Ok(&self.blocks[self.index_of(s)?])
    }

    fn apply_indices(&self, word: &[usize]) -> Vec<usize> {
        word.iter()
            .flat_map(|&i| self.rules[i].iter().copied())
            .collect()
    }

    fn flat_len(&self, word: &[usize]) -> usize {
        word.iter().map(|&i| self.blocks[i].len()).sum()
    }

    fn flatten_indices(&self, word: &[usize]) -> Word {
        let mut out = Word::with_capacity(self.flat_len(word));
        for &i in word {
            out.extend_from_slice(&self.blocks[i]);
        }
        out
    }

    /// The morphic extension σ(b₁b₂⋯) = σ(b₁)σ(b₂)⋯.
    pub fn apply(&self, word: &[Symbol]) -> Result<Vec<Symbol>> {
        Ok(self.to_symbols(&self.apply_indices(&self.to_indices(word)?)))
    }

    /// σᵗ(seed).
    pub fn iterate(&self, seed: Symbol, t: usize) -> Result<Vec<Symbol>> {
        let mut word = vec![self.index_of(seed)?];
        for _ in 0..t {
            word = self.apply_indices(&word);
        }
        Ok(self.to_symbols(&word))
    }

    /// Replaces each block by its expansion.
    pub fn flatten(&self, word: &[Symbol]) -> Result<Word> {
        Ok(self.flatten_indices(&self.to_indices(word)?))
    }

    /// M with `M[i][j]` = occurrences of symbol i in the rule of symbol j.
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let s = self.symbols.len();
        let mut entries = vec![vec![0u64; s]; s];
        for (j, rhs) in self.rules.iter().enumerate() {
            for &i in rhs {
                entries[i][j] += 1;
            }
        }
        IncidenceMatrix { entries }
    }

    /// σ∘τ, defined on symbols shared by both (τ applied first).
    pub fn compose(&self, tau: &Substitution) -> Result<Substitution> {
        if self.symbols != tau.symbols {
            return Err(Error::InvalidSubstitution(
                "composition needs the same block symbols".into(),
            ));
        }
        let rules = (0..self.symbols.len())
            .map(|j| {
                (
                    self.symbols[j],
                    self.to_symbols(&self.apply_indices(&tau.rules[j])),
                )
            })
            .collect();
        Substitution::new(
            format!("{}∘{}", self.name, tau.name),
            self.blocks(),
            rules,
        )
    }

    /// σᵗ as a substitution in its own right; `t = 0` gives the identity.
    pub fn power(&self, t: usize) -> Substitution {
        let rules = self
            .symbols
            .iter()
            .map(|&s| (s, self.iterate(s, t).expect("own symbol")))
            .collect();
        Substitution::new(format!("{}^{t}", self.name), self.blocks(), rules)
            .expect("powers of a valid substitution are valid")
    }

    /// Primitivity with the least exponent k for which Mᵏ is entrywise
    /// positive, searched up to Wielandt's bound (s−1)²+1.
    pub fn is_primitive(&self) -> Primitivity {
        let s = self.symbols.len();
        let base = self.incidence_matrix().support();
        let bound = (s - 1) * (s - 1) + 1;
        let mut power = base.clone();
        for k in 1..=bound {
            if power.iter().all(|row| row.iter().all(|&x| x)) {
                return Primitivity {
                    primitive: true,
                    exponent: Some(k),
                };
            }
            power = bool_mul(&power, &base);
        }
        Primitivity {
            primitive: false,
            exponent: None,
        }
    }

    /// A symbol whose rule starts with itself and whose block starts with
    /// `first_letter`. `A₁` (or the first listed block) is preferred.
    pub fn prolongable_seed(&self, first_letter: Letter) -> Result<Symbol> {
        let candidate = |i: usize| {
            self.rules[i].first() == Some(&i) && self.blocks[i].first() == Some(first_letter)
        };
        let preferred = self
            .symbols
            .iter()
            .position(|&s| s == Symbol::A(1))
            .unwrap_or(0);
        if candidate(preferred) {
            return Ok(self.symbols[preferred]);
        }
        (0..self.symbols.len())
            .find(|&i| candidate(i))
            .map(|i| self.symbols[i])
            .ok_or_else(|| {
                Error::NotProlongable(format!(
                    "no rule of {} starts with its own symbol and letter {first_letter}",
                    self.name
                ))
            })
    }

    /// Iterates from `seed` until the flattened word has at least `m` letters.
    /// Returns the first `m` letters and the number of iterations used.
    pub fn fixpoint_prefix(&self, seed: Symbol, m: usize) -> Result<(Word, usize)> {
        let seed_index = self.index_of(seed)?;
        if self.rules[seed_index].first() != Some(&seed_index) {
            return Err(Error::NotProlongable(format!(
                "the rule for {seed} does not start with {seed}"
            )));
        }
        let mut word = vec![seed_index];
        let mut t = 0;
        while self.flat_len(&word) < m {
            if t == MAX_ITERATIONS {
                return Err(Error::NotProlongable(format!(
                    "{} does not grow from {seed}",
                    self.name
                )));
            }
            let previous = self.flat_len(&word);
            word = self.apply_indices(&word);
            // Only the prefix that can still reach m letters matters.
            let mut kept = 0;
            let mut letters = 0;
            while kept < word.len() && letters < m {
                letters += self.blocks[word[kept]].len();
                kept += 1;
            }
            word.truncate(kept);
            t += 1;
            if self.flat_len(&word) <= previous && self.flat_len(&word) < m {
                return Err(Error::NotProlongable(format!(
                    "{} does not grow from {seed}",
                    self.name
                )));
            }
        }
        let mut flat = self.flatten_indices(&word);
        flat.truncate(m);
        Ok((flat, t))
    }

    /// The rule table, one rule per line, e.g. `A1 -> A1 B1 A2 A3 B2 A4`.
    pub fn show(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.symbols.iter().enumerate() {
            out.push_str(&format!(
                "{s} -> {}\n",
                format_block_word(&self.to_symbols(&self.rules[i]))
            ));
        }
        out
    }

    /// The block table, e.g. `A1 = 6^4`.
    pub fn show_blocks(&self) -> String {
        let mut out = String::new();
        for (s, w) in self.symbols.iter().zip(&self.blocks) {
            out.push_str(&format!("{s} = {}\n", run_form(w)));
        }
        out
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.show())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Primitivity {
    pub primitive: bool,
    pub exponent: Option<usize>,
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let s = a.len();
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| (0..s).any(|k| a[i][k] && b[k][j]))
                .collect()
        })
        .collect()
}

/// Square non-negative integer matrix; products saturate at `u64::MAX`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub entries: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub fn identity(size: usize) -> Self {
        IncidenceMatrix {
            entries: (0..size)
                .map(|i| (0..size).map(|j| u64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        let s = self.size();
        let entries = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| {
                        (0..s).fold(0u64, |acc, k| {
                            acc.saturating_add(self.entries[i][k].saturating_mul(other.entries[k][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        IncidenceMatrix { entries }
    }

    pub fn pow(&self, t: u32) -> IncidenceMatrix {
        (0..t).fold(IncidenceMatrix::identity(self.size()), |acc, _| acc.mul(self))
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|&x| x > 0))
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.size())
            .map(|j| self.entries.iter().map(|row| row[j]).sum())
            .collect()
    }

    /// `M·v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn support(&self) -> Vec<Vec<bool>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&x| x > 0).collect())
            .collect()
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn sing_blocks(pairs: &[(char, Letter, Letter)]) -> Vec<Block> {
    pairs
        .iter()
        .map(|&(c, x, y)| Block {
            symbol: Symbol::Named(c),
            expansion: Word::from([x, y]),
        })
        .collect()
}

fn repeat(s: Symbol, k: u64) -> impl Iterator<Item = Symbol> {
    std::iter::repeat_n(s, k as usize)
}

/// Sing's substitution for K over `{c₁ = 2m, c₂ = 2n}`:
/// `A ↦ AᵐBᵐ`, `B ↦ AⁿBⁿ` with `A = c₁²`, `B = c₂²`.
pub fn build_sing_even(c1: Letter, c2: Letter) -> Result<Substitution> {
    if c1 == 0 || c2 == 0 || !c1.is_multiple_of(2) || !c2.is_multiple_of(2) || c1 == c2 {
        return Err(Error::Precondition(format!(
            "the even construction needs distinct positive even letters, got {c1}, {c2}"
        )));
    }
    let (m, n) = (c1 / 2, c2 / 2);
    let (a, b) = (Symbol::Named('A'), Symbol::Named('B'));
    Substitution::new(
        format!("sing-even({c1},{c2})"),
        sing_blocks(&[('A', c1, c1), ('B', c2, c2)]),
        vec![
            (a, repeat(a, m).chain(repeat(b, m)).collect()),
            (b, repeat(a, n).chain(repeat(b, n)).collect()),
        ],
    )
}

/// Sing's substitution for K over `{c₁ = 2m+1 < c₂ = 2n+1}`:
/// `A ↦ AᵐBCᵐ`, `B ↦ AᵐBCⁿ`, `C ↦ AⁿBCⁿ` with `A = c₁²`, `B = c₁c₂`, `C = c₂²`.
/// The degenerate `m = 0` (c₁ = 1) is rejected.
pub fn build_sing_odd(c1: Letter, c2: Letter) -> Result<Substitution> {
    if c1 % 2 != 1 || c2 % 2 != 1 || c1 >= c2 {
        return Err(Error::Precondition(format!(
            "the odd construction needs odd letters c1 < c2, got {c1}, {c2}"
        )));
    }
    if c1 == 1 {
        return Err(Error::Precondition(
            "c1 = 1 gives m = 0 and the degenerate rule A -> B".into(),
        ));
    }
    let (m, n) = ((c1 - 1) / 2, (c2 - 1) / 2);
    let (a, b, c) = (Symbol::Named('A'), Symbol::Named('B'), Symbol::Named('C'));
    let rule = |x: u64, y: u64| -> Vec<Symbol> {
        repeat(a, x).chain([b]).chain(repeat(c, y)).collect()
    };
    Substitution::new(
        format!("sing-odd({c1},{c2})"),
        sing_blocks(&[('A', c1, c1), ('B', c1, c2), ('C', c2, c2)]),
        vec![(a, rule(m, m)), (b, rule(m, n)), (c, rule(n, n))],
    )
}

/// `c₁ … cₙ` (the order's letters) with their quotients `qᵢ = (cᵢ − r)/n`.
fn ordered_quotients(alphabet: &Alphabet, order: &CyclicOrder) -> Result<(u64, Vec<Letter>, Vec<u64>)> {
    let r = match alphabet.remainder() {
        Remainder::Uniform { r, .. } => r,
        Remainder::Mixed => {
            return Err(Error::Precondition(format!(
                "letters of {alphabet} leave different remainders mod {}",
                alphabet.size()
            )))
        }
    };
    if order.size() != alphabet.size() || !alphabet.letters().iter().all(|&a| order.contains(a)) {
        return Err(Error::InvalidOrder(format!("{order} is not an order of {alphabet}")));
    }
    let c = order.arrangement().to_vec();
    let n = c.len() as u64;
    let q = c.iter().map(|&x| (x - r) / n).collect();
    Ok((r, c, q))
}

fn a_blocks(c: &[Letter]) -> Vec<Block> {
    let n = c.len();
    c.iter()
        .enumerate()
        .map(|(i, &ci)| Block {
            symbol: Symbol::A(i + 1),
            expansion: Word::power(ci, n),
        })
        .collect()
}

/// The remainder-zero construction: `Aᵢ = cᵢⁿ` and
/// `Aᵢ ↦ A₁^{qᵢ} A₂^{qᵢ} ⋯ Aₙ^{qᵢ}`.
pub fn build_sigma_r0(alphabet: &Alphabet, order: &CyclicOrder) -> Result<Substitution> {
    let (r, c, q) = ordered_quotients(alphabet, order)?;
    if r != 0 {
        return Err(Error::Precondition(format!(
            "the construction needs remainder 0, {alphabet} has remainder {r}"
        )));
    }
    let n = c.len();
    let rules = (1..=n)
        .map(|i| {
            let rhs = (1..=n).flat_map(|j| repeat(Symbol::A(j), q[i - 1])).collect();
            (Symbol::A(i), rhs)
        })
        .collect();
    Substitution::new(format!("sigma-r0({order})"), a_blocks(&c), rules)
}

/// The construction for even `n = 2m` and remainder `r > 0`, with blocks
/// `Aᵢ = cᵢⁿ` and `Bᵢ = c_{2i−1}ʳ c_{2i}ʳ`.
///
/// Rules are read off the general displays term by term; subscripts are
/// reduced mod n for A and mod m for B. Each display is a sequence of
/// triples `A_{o+2j−1}^{e₁} B_{o/2+j} A_{o+2j}^{e₂}`:
///
/// * `A_{2k+1}`: offset `o = 2kr`, `j = 1..m`, both exponents `q_{2k+1}`;
/// * `A_{2k+2}`: offset `o = 2(k+1)r`, `j = 1..m`, both exponents `q_{2k+2}`;
/// * `B_{k+1}`: offset `o = 2kr`, `j = 1..r`; with `r = 2h` the first `h`
///   triples use `q_{2k+1}` and the rest `q_{2k+2}`; with `r = 2h+1` the
///   middle triple `j = h+1` uses `q_{2k+1}` then `q_{2k+2}`.
pub fn build_sigma_even_n(alphabet: &Alphabet, order: &CyclicOrder) -> Result<Substitution> {
    let (r, c, q) = ordered_quotients(alphabet, order)?;
    let n = c.len();
    if r == 0 {
        return Err(Error::Precondition(
            "remainder 0 uses the remainder-zero construction".into(),
        ));
    }
    if n % 2 != 0 {
        return Err(Error::Precondition(format!(
            "n = {n} is odd; the construction needs an even alphabet size"
        )));
    }
    if q.iter().filter(|&&x| x == 0).count() > 1 {
        return Err(Error::Precondition("more than one quotient is zero".into()));
    }
    let m = n / 2;
    let r = r as usize;
    let h = r / 2;
    let a = |i: usize| Symbol::A((i - 1) % n + 1);
    let b = |i: usize| Symbol::B((i - 1) % m + 1);
    let triple = |offset: usize, j: usize, e1: u64, e2: u64| -> Vec<Symbol> {
        repeat(a(offset + 2 * j - 1), e1)
            .chain([b(offset / 2 + j)])
            .chain(repeat(a(offset + 2 * j), e2))
            .collect()
    };

    let mut rules = Vec::with_capacity(n + m);
    for k in 0..m {
        let (q_odd, q_even) = (q[2 * k], q[2 * k + 1]);

        let odd_rule = (1..=m)
            .flat_map(|j| triple(2 * k * r, j, q_odd, q_odd))
            .collect();
        rules.push((Symbol::A(2 * k + 1), odd_rule));

        let even_rule = (1..=m)
            .flat_map(|j| triple(2 * (k + 1) * r, j, q_even, q_even))
            .collect();
        rules.push((Symbol::A(2 * k + 2), even_rule));

        let b_rule = (1..=r)
            .flat_map(|j| {
                let (e1, e2) = if j <= h {
                    (q_odd, q_odd)
                } else if r % 2 == 1 && j == h + 1 {
                    (q_odd, q_even)
                } else {
                    (q_even, q_even)
                };
                triple(2 * k * r, j, e1, e2)
            })
            .collect();
        rules.push((Symbol::B(k + 1), b_rule));
    }

    let mut blocks = a_blocks(&c);
    blocks.extend((1..=m).map(|i| Block {
        symbol: Symbol::B(i),
        expansion: Word::power(c[2 * i - 2], r).concat(&Word::power(c[2 * i - 1], r)),
    }));
    // Present rules in the A₁ B₁ A₂ A₃ B₂ A₄ … layout of the block table.
    let layout = display_layout(n);
    blocks.sort_by_key(|blk| layout.iter().position(|&s| s == blk.symbol));
    Substitution::new(format!("sigma-even-n({order})"), blocks, rules)
}

/// `A₁ B₁ A₂ A₃ B₂ A₄ …`: each `Bᵢ` sits between `A_{2i−1}` and `A_{2i}`.
fn display_layout(n: usize) -> Vec<Symbol> {
    (1..=n / 2)
        .flat_map(|i| [Symbol::A(2 * i - 1), Symbol::B(i), Symbol::A(2 * i)])
        .collect()
}

/// Picks the construction that applies to `alphabet` under `order`:
/// remainder 0, or even `n` with remainder > 0.
pub fn build_for(alphabet: &Alphabet, order: &CyclicOrder) -> Result<Substitution> {
    match alphabet.uniform_remainder() {
        Some(0) => build_sigma_r0(alphabet, order),
        Some(_) => build_sigma_even_n(alphabet, order),
        None => Err(Error::Precondition(format!(
            "letters of {alphabet} leave different remainders mod {}",
            alphabet.size()
        ))),
    }
}

/// Outcome of comparing a substitution's fixpoint with K_u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointCheck {
    pub agrees: bool,
    pub seed: Symbol,
    pub iterations: usize,
    /// One-based position of the first disagreement.
    pub first_mismatch: Option<usize>,
}

/// Compares the first `m` letters of lim σᵗ(seed) with K_u for `spec`. The
/// seed is `A₁` when prolongable, otherwise any prolongable symbol whose
/// block starts with u₁; the choice is reported.
pub fn verify_substitution_fixpoint(
    sigma: &Substitution,
    spec: &BaseSequenceSpec,
    m: usize,
) -> Result<FixpointCheck> {
    let seed = sigma.prolongable_seed(spec.letter(0))?;
    let (generated, iterations) = sigma.fixpoint_prefix(seed, m)?;
    let expected = kolakoski_prefix(spec, m)?;
    let first_mismatch = generated
        .iter()
        .zip(expected.iter())
        .position(|(a, b)| a != b)
        .map(|i| i + 1);
    Ok(FixpointCheck {
        agrees: first_mismatch.is_none(),
        seed,
        iterations,
        first_mismatch,
    })
}
