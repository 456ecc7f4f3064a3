//! The acceptance suite: each criterion runs a concrete check at fixed sizes
//! and tolerances and reports pass or fail with a short detail line.
//!
//! A criterion passes only when its check holds and it finishes within its
//! time limit. Randomized criteria draw from a ChaCha stream seeded by the
//! caller, so a given seed reproduces the same instances.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Permutation};
use crate::analysis::{
    closure_check, closure_check_factors, equal_run_blocks, gap_changes, letter_frequencies,
    max_gap_report, phi_inverse_palindrome_check, recurrence_report, ClosureOp,
};
use crate::error::Result;
use crate::inverse::{phi_inverse_prefix, pseudo_inverse, pseudo_inverse_chain, CyclicOrder};
use crate::kolakoski::{
    kolakoski_prefix, kolakoski_stream, verify_base_prefix, verify_fixpoint_prefix,
    BaseSequenceSpec,
};
use crate::rle::{bases, exponents, rle_encode, rle_reconstruct};
use crate::substitution::{
    build_sigma_even_n, format_block_word, verify_substitution_fixpoint, Substitution, Symbol,
};
use crate::transform::is_palindrome;
use crate::word::{Letter, Word};

pub const DEFAULT_SEED: u64 = 20_190_601;

const MILLION: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] {:>2} {}: {} ({:.3} s",
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )?;
        match self.limit {
            Some(limit) => write!(f, ", limit {} s)", limit.as_secs_f64()),
            None => write!(f, ")"),
        }
    }
}

struct Check {
    ok: bool,
    detail: String,
}

impl Check {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Check {
            ok,
            detail: detail.into(),
        }
    }
}

type Runner = fn(u64) -> Result<Check>;

const CRITERIA: [(u8, &str, Option<u64>, Runner); 11] = [
    (1, "classic Kolakoski prefix", Some(1), classic_prefix),
    (2, "fixpoint property", Some(5_000), fixpoint_property),
    (3, "chained pseudo-inverse", None, chained_expansion),
    (4, "substitution tables", Some(1_000), substitution_tables),
    (5, "primitivity", None, primitivity),
    (6, "letter frequencies", Some(10_000), frequencies),
    (7, "recurrence", Some(60_000), recurrence),
    (8, "uniform recurrence", Some(60_000), uniform_recurrence),
    (9, "reversal closure", Some(60_000), reversal_closure),
    (10, "permutation non-closure", Some(30_000), permutation_non_closure),
    (11, "property suites", Some(120_000), property_suites),
];

pub fn criterion_ids() -> Vec<u8> {
    CRITERIA.iter().map(|c| c.0).collect()
}

/// Runs criterion `id`; `None` for an unknown id.
pub fn run_criterion(id: u8, seed: u64) -> Option<CriterionOutcome> {
    let &(id, title, limit_ms, runner) = CRITERIA.iter().find(|c| c.0 == id)?;
    let limit = limit_ms.map(Duration::from_millis);
    let start = Instant::now();
    let check = runner(seed).unwrap_or_else(|e| Check::new(false, format!("error: {e}")));
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let detail = if check.ok && !in_time {
        format!("{}; over the time limit", check.detail)
    } else {
        check.detail
    };
    Some(CriterionOutcome {
        id,
        title,
        passed: check.ok && in_time,
        detail,
        elapsed,
        limit,
    })
}

/// Runs every criterion in order.
pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    criterion_ids()
        .into_iter()
        .filter_map(|id| run_criterion(id, seed))
        .collect()
}

fn alphabet(letters: &[Letter]) -> Alphabet {
    Alphabet::new(letters.to_vec()).expect("fixed alphabets are valid")
}

fn periodic(letters: &[Letter], period: &[Letter]) -> BaseSequenceSpec {
    BaseSequenceSpec::periodic(&alphabet(letters), Word::from(period))
        .expect("fixed base sequences are valid")
}

/// The base sequences of the fixpoint and recurrence criteria.
fn fixpoint_specs() -> Vec<BaseSequenceSpec> {
    vec![
        periodic(&[1, 2], &[1, 2]),
        periodic(&[1, 2], &[2, 1]),
        periodic(&[1, 2, 3], &[1, 2, 3]),
        periodic(&[2, 6, 10, 14], &[6, 10, 14, 2]),
    ]
}

fn classic_prefix(_: u64) -> Result<Check> {
    let expected = Word::parse_list("1,2,2,1,1,2,1,2,2,1,2,2,1,1,2,1,1,2,2")?;
    let got = kolakoski_prefix(&periodic(&[1, 2], &[1, 2]), 19)?;
    Ok(Check::new(got == expected, format!("K_12[1..19] = {got}")))
}

fn fixpoint_property(_: u64) -> Result<Check> {
    let mut failures = Vec::new();
    for spec in fixpoint_specs() {
        let w = kolakoski_prefix(&spec, MILLION)?;
        if !(verify_fixpoint_prefix(&w) && verify_base_prefix(&spec, &w)) {
            failures.push(spec.to_string());
        }
    }
    Ok(Check::new(
        failures.is_empty(),
        if failures.is_empty() {
            "4 base sequences, 10^6 letters each".to_string()
        } else {
            format!("fixpoint fails for {}", failures.join(", "))
        },
    ))
}

fn chained_expansion(_: u64) -> Result<Check> {
    let a = alphabet(&[2, 3, 4]);
    let order = CyclicOrder::new(&a, vec![2, 4, 3])?;
    let expected = Word::parse(
        "2^3 4^3 3^2 2^2 4^4 3^4 2^4 4^4 3^3 2^3 4^3 3^3 2^2 4^2 3^2 2^2 4^4 3^4 2^4 4^4",
    )?;
    let got = pseudo_inverse_chain(&[2, 3, 2], &[2, 4], &order)?;
    Ok(Check::new(
        got == expected,
        format!("{} letters, {}", got.len(), crate::word::run_form(&got)),
    ))
}

fn sigma_1() -> Result<Substitution> {
    let a = alphabet(&[2, 6, 10, 14]);
    build_sigma_even_n(&a, &CyclicOrder::new(&a, vec![6, 10, 14, 2])?)
}

fn sigma_2() -> Result<Substitution> {
    let a = alphabet(&[1, 5, 9, 13]);
    build_sigma_even_n(&a, &CyclicOrder::new(&a, vec![5, 9, 13, 1])?)
}

/// `A3^2` becomes `A_3^2`, tokens joined without spaces.
fn tex_rule(sigma: &Substitution, s: Symbol) -> Result<String> {
    let text = format_block_word(&sigma.rule(s)?);
    Ok(text
        .split(' ')
        .map(|t| format!("{}_{}", &t[..1], &t[1..]))
        .collect())
}

fn table_mismatches(sigma: &Substitution, table: &[(Symbol, &str)]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for &(s, displayed) in table {
        let ours = tex_rule(sigma, s)?;
        if ours != displayed.replace(['{', '}'], "") {
            bad.push(format!("{s}: {ours} vs {displayed}"));
        }
    }
    Ok(bad)
}

fn substitution_tables(_: u64) -> Result<Check> {
    use Symbol::{A, B};
    let s1 = sigma_1()?;
    let s2 = sigma_2()?;
    let mut bad = table_mismatches(
        &s1,
        &[
            (A(1), "A_1B_1A_2A_3B_2A_4"),
            (B(1), "A_1B_1A_2A_3^{2}B_2A_4^2"),
            (A(2), "A_1^2B_1A_2^2A_3^2B_2A_4^2"),
            (A(3), "A_1^3B_1A_2^3A_3^3B_2A_4^3"),
            (B(2), "A_1^3B_1A_2^3B_2"),
            (A(4), "B_1B_2"),
        ],
    )?;
    bad.extend(table_mismatches(
        &s2,
        &[
            (A(1), "A_1B_1A_2A_3B_2A_4"),
            (B(1), "A_1B_1A_2^2"),
            (A(2), "A_3^2B_2A_4^2A_1^2B_1A_2^2"),
            (A(3), "A_3^3B_2A_4^3A_1^3B_1A_2^3"),
            (B(2), "A_3^3B_2"),
            (A(4), "B_1B_2"),
        ],
    )?);
    let twice = s1.flatten(&s1.iterate(A(1), 2)?)?;
    let display = Word::parse(
        "6^6 10^6 14^6 2^6 6^6 10^6 14^10 2^10 6^10 10^10 14^10 2^10 \
         6^14 10^14 14^14 2^14 6^14 10^14 14^2 2^2 6^2 10^2 14^2 2^2",
    )?;
    if twice != display {
        bad.push("σ₁²(A1) differs from the two-arrow display".into());
    }
    for (sigma, spec) in [
        (&s1, periodic(&[2, 6, 10, 14], &[6, 10, 14, 2])),
        (&s2, periodic(&[1, 5, 9, 13], &[5, 9, 13, 1])),
    ] {
        let check = verify_substitution_fixpoint(sigma, &spec, 10_000)?;
        if !check.agrees {
            bad.push(format!(
                "{} disagrees with K at {:?}",
                sigma.name(),
                check.first_mismatch
            ));
        }
    }
    Ok(Check::new(
        bad.is_empty(),
        if bad.is_empty() {
            "12 rules match, σ₁²(A1) matches, both fix K at m = 10^4".to_string()
        } else {
            bad.join("; ")
        },
    ))
}

fn primitivity(_: u64) -> Result<Check> {
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, sigma) in [("σ₁", sigma_1()?), ("σ₂", sigma_2()?)] {
        let p = sigma.is_primitive();
        let cubed = sigma.incidence_matrix().pow(3).is_positive();
        ok &= p.primitive && p.exponent.is_some_and(|k| k <= 3) && cubed;
        parts.push(format!("{name}: k = {:?}, M^3 > 0: {cubed}", p.exponent));
    }
    Ok(Check::new(ok, parts.join("; ")))
}

fn frequencies(_: u64) -> Result<Check> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (letters, period, tolerance) in [
        (&[2, 4][..], &[2, 4][..], 5e-3),
        (&[3, 6, 9][..], &[3, 6, 9][..], 1e-2),
    ] {
        let a = alphabet(letters);
        let spec = periodic(letters, period);
        let report = letter_frequencies(kolakoski_stream(&spec), &a, &[MILLION])?;
        let dev = report.max_deviation();
        ok &= dev <= tolerance;
        parts.push(format!("{a}: max deviation {dev:.2e} (tol {tolerance:.0e})"));
    }
    Ok(Check::new(ok, parts.join("; ")))
}

fn recurrence(_: u64) -> Result<Check> {
    let mut failures = 0;
    let mut factors = 0;
    for spec in fixpoint_specs() {
        let w = kolakoski_prefix(&spec, MILLION)?;
        let report = recurrence_report(&w, 24);
        factors += report.iter().count();
        failures += report.non_recurrent().len();
    }
    Ok(Check::new(
        failures == 0,
        format!("{factors} factors from the first 10^4 letters, {failures} without a second occurrence"),
    ))
}

fn uniform_recurrence(_: u64) -> Result<Check> {
    let r0 = kolakoski_prefix(&periodic(&[3, 6, 9], &[3, 6, 9]), MILLION)?;
    let s1 = sigma_1()?;
    let (fix, _) = s1.fixpoint_prefix(Symbol::A(1), MILLION)?;
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, w) in [("K over {3,6,9}", &r0), ("σ₁ fixpoint", &fix)] {
        let half = max_gap_report(&w[..MILLION / 2], 8);
        let full = max_gap_report(w, 8);
        let changes = gap_changes(&half, &full, 8);
        ok &= changes.is_empty();
        parts.push(format!(
            "{name}: {} factors, {} gap changes, max gap at L = 8: {:?}",
            full.iter().count(),
            changes.len(),
            full.gap_bound(8)
        ));
    }
    Ok(Check::new(ok, parts.join("; ")))
}

/// A prefix of length `len` of Φ⁻¹(u) for a random u over the order's
/// letters, extending u until the expansion is long enough.
pub fn random_smooth_prefix(order: &CyclicOrder, len: usize, rng: &mut impl Rng) -> Result<Word> {
    let letters = order.arrangement();
    let mut u = Word::new();
    loop {
        u.push(*letters.choose(rng).expect("orders are nonempty"));
        let mut w = phi_inverse_prefix(&u, order)?;
        if w.len() >= len {
            w.truncate(len);
            return Ok(w);
        }
    }
}

fn reversal_closure(seed: u64) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    let mut parts = Vec::new();
    for letters in [[1, 3], [3, 5]] {
        let order = CyclicOrder::increasing(&alphabet(&letters));
        let w = random_smooth_prefix(&order, MILLION, &mut rng)?;
        let misses = closure_check(&w, &ClosureOp::Reversal, 10)?;
        ok &= misses.is_empty();
        parts.push(format!("{order}: {} reversal witnesses", misses.len()));
        if let Some(m) = misses.first() {
            parts.push(format!("first: {} at {}", m.factor, m.factor_position));
        }
    }
    let order = CyclicOrder::increasing(&alphabet(&[1, 3]));
    let check = phi_inverse_palindrome_check(&order, 12)?;
    ok &= check.passed();
    parts.push(format!(
        "Φ⁻¹ palindromes: {} words of length 1..12 ({} of length 12), counterexample {:?}",
        check.cases,
        1 << 12,
        check.counterexample.map(|w| w.to_string())
    ));
    Ok(Check::new(ok, parts.join("; ")))
}

fn permutation_non_closure(_: u64) -> Result<Check> {
    let a = alphabet(&[2, 4]);
    let w = kolakoski_prefix(&periodic(&[2, 4], &[2, 4]), MILLION)?;
    let blocks = equal_run_blocks(&w);
    // Edge blocks may be cut short by the prefix boundary.
    let mut factors: Vec<Word> = blocks[1..blocks.len().saturating_sub(1)]
        .iter()
        .filter(|b| b.exponent == a.max())
        .map(|b| b.factor.clone())
        .collect();
    factors.sort();
    factors.dedup();
    let op = ClosureOp::Permutation(Permutation::complement(&a)?);
    let witnesses = closure_check_factors(&w, &op, &factors)?;
    let absent: Vec<_> = witnesses.iter().filter(|x| x.is_miss()).collect();
    let detail = match absent.first() {
        Some(x) => format!(
            "{} distinct 4-run blocks, {} with absent complement, e.g. {} -> {}",
            factors.len(),
            absent.len(),
            crate::word::run_form(&x.factor),
            crate::word::run_form(&x.image)
        ),
        None => format!("{} distinct 4-run blocks, all complements found", factors.len()),
    };
    Ok(Check::new(!absent.is_empty(), detail))
}

fn words_over(letters: &[Letter], len: usize) -> impl Iterator<Item = Word> + '_ {
    let n = letters.len();
    (0..n.pow(len as u32)).map(move |mut code| {
        let mut w = vec![letters[0]; len];
        for slot in w.iter_mut().rev() {
            *slot = letters[code % n];
            code /= n;
        }
        Word::from(w)
    })
}

fn random_word(letters: &[Letter], len: usize, rng: &mut impl Rng) -> Word {
    (0..len)
        .map(|_| *letters.choose(rng).expect("nonempty"))
        .collect()
}

fn random_order(letters: &[Letter], rng: &mut impl Rng) -> CyclicOrder {
    let mut arrangement = letters.to_vec();
    arrangement.shuffle(rng);
    CyclicOrder::new(&alphabet(letters), arrangement).expect("a shuffle is an order")
}

/// Alphabets whose letters share one remainder mod n.
const SAME_REMAINDER: [&[Letter]; 5] = [&[1, 3], &[2, 4], &[1, 4, 7], &[3, 6, 9], &[2, 6, 10, 14]];

fn property_suites(seed: u64) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures: Vec<String> = Vec::new();
    let mut cases = 0usize;

    for (letters, max_len) in [(&[1, 2][..], 12), (&[1, 2, 3][..], 8)] {
        for len in 0..=max_len {
            for w in words_over(letters, len) {
                cases += 1;
                let lhs = is_palindrome(&w);
                let rhs = is_palindrome(&exponents(&w)) && is_palindrome(&bases(&w));
                if lhs != rhs {
                    failures.push(format!("palindrome equivalence fails for {w}"));
                }
            }
        }
    }

    let roundtrip = |w: &Word| rle_reconstruct(&rle_encode(w)).ok().as_ref() == Some(w);
    for len in 0..=14 {
        for w in words_over(&[1, 2], len) {
            cases += 1;
            if !roundtrip(&w) {
                failures.push(format!("RLE roundtrip fails for {w}"));
            }
        }
    }
    for _ in 0..10_000 {
        let len = rng.gen_range(0..=64);
        let w = random_word(&[1, 2, 3], len, &mut rng);
        cases += 1;
        if !roundtrip(&w) {
            failures.push(format!("RLE roundtrip fails for {w}"));
        }
    }

    for _ in 0..1_000 {
        let letters = SAME_REMAINDER[rng.gen_range(0..SAME_REMAINDER.len())];
        let order = random_order(letters, &mut rng);
        let alpha = *letters.choose(&mut rng).expect("nonempty");
        let u = random_word(letters, rng.gen_range(0..12), &mut rng);
        let v = random_word(letters, rng.gen_range(0..12), &mut rng);
        let next = order.advance(alpha, u.len()).expect("alpha is in the order");
        let whole = pseudo_inverse(alpha, &u.concat(&v), &order)?;
        let split = pseudo_inverse(alpha, &u, &order)?.concat(&pseudo_inverse(next, &v, &order)?);
        cases += 1;
        if whole != split {
            failures.push(format!("splitting fails for α = {alpha}, u = {u}, v = {v}"));
        }
    }

    for _ in 0..1_000 {
        let letters = SAME_REMAINDER[rng.gen_range(0..SAME_REMAINDER.len())];
        let n = letters.len();
        let order = random_order(letters, &mut rng);
        let alpha = *letters.choose(&mut rng).expect("nonempty");
        let w = random_word(letters, n * rng.gen_range(0..8), &mut rng);
        let out = pseudo_inverse(alpha, &w, &order)?;
        cases += 1;
        if out.len() % n != 0 {
            failures.push(format!("length {} is not a multiple of {n} for {w}", out.len()));
        }
        if n == 2 && letters.iter().all(|a| a % 2 == 1) {
            let odd = random_word(letters, 2 * rng.gen_range(0..8) + 1, &mut rng);
            let out = pseudo_inverse(alpha, &odd, &order)?;
            if out.len() % 2 != 1 {
                failures.push(format!("odd input {odd} gives even length {}", out.len()));
            }
        }
    }

    let order = CyclicOrder::increasing(&alphabet(&[1, 2]));
    for len in 1..10 {
        for u in words_over(&[1, 2], len) {
            let shorter = phi_inverse_prefix(&u, &order)?;
            for a in [1, 2] {
                let mut v = u.clone();
                v.push(a);
                cases += 1;
                if !shorter.is_prefix_of(&phi_inverse_prefix(&v, &order)?) {
                    failures.push(format!("Φ⁻¹({u}) is not a prefix of Φ⁻¹({v})"));
                }
            }
        }
    }

    let detail = match failures.first() {
        None => format!("{cases} cases, 0 failures"),
        Some(first) => format!("{cases} cases, {} failures; first: {first}", failures.len()),
    };
    Ok(Check::new(failures.is_empty(), detail))
}
