use anyhow::{anyhow, bail, Context, Result};

use smoothwords::analysis::{
    closure_check, closure_check_factors, equal_run_blocks, gap_changes, letter_frequencies,
    max_gap_report, recurrence_report, write_frequency_csv, write_gap_csv, write_witness_csv,
    ClosureOp, ClosureWitness, FactorIndex, Verdict,
};
use smoothwords::derivative::{derivative, differentiability, Differentiability};
use smoothwords::inverse::{
    phi_inverse_prefix_within, pseudo_inverse_chain_within, pseudo_inverse_with_base_within,
};
use smoothwords::kolakoski::{kolakoski_prefix, kolakoski_stream};
use smoothwords::rle::rle_encode;
use smoothwords::substitution::{
    build_for, build_sing_even, build_sing_odd, format_block_word, verify_substitution_fixpoint,
};
use smoothwords::verify::{criterion_ids, run_criterion};
use smoothwords::{ExpansionBudget, Permutation, Substitution, Symbol, Word};

use crate::config::{parse_word, Config};
use crate::output::Output;
use crate::{Cli, Command, Format, Outcome, SubstCommand};

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let config = Config::resolve(&cli.common)?;
    match &cli.command {
        Command::Generate => generate(&config),
        Command::Encode { word } => encode(&config, word),
        Command::Derive { word } => derive(&config, word),
        Command::Expand {
            target,
            chain,
            base,
        } => expand(&config, target, chain.as_deref(), base.as_deref()),
        Command::PhiInverse { word } => phi_inverse(&config, word),
        Command::Freq { samples, word } => freq(&config, samples, word.as_deref()),
        Command::Recur { word } => recur(&config, word.as_deref()),
        Command::Gaps { word } => gaps(&config, word.as_deref()),
        Command::Closure { op, blocks, word } => closure(&config, op, *blocks, word.as_deref()),
        Command::Subst { sing, action } => subst(&config, *sing, action),
        Command::VerifyAll { only } => verify_all(&config, only),
    }
}

fn budget() -> Result<ExpansionBudget> {
    ExpansionBudget::from_env().context("invalid expansion budget")
}

/// The word under analysis: `--word` if given, else the Kolakoski prefix of
/// `--length` letters.
fn source_word(config: &Config, word: Option<&str>) -> Result<Word> {
    match word {
        Some(text) => {
            let w = parse_word(text)?;
            if let Some(a) = &config.alphabet {
                a.check_word(&w)?;
            }
            Ok(w)
        }
        None => Ok(kolakoski_prefix(config.spec()?, config.length()?)?),
    }
}

fn generate(config: &Config) -> Result<Outcome> {
    let spec = config.spec()?;
    let m = config.length()?;
    Output::check_size(config, m)?;
    let mut out = Output::open(config, "generate")?;
    out.letters(&kolakoski_prefix(spec, m)?)?;
    out.finish()?;
    Ok(Outcome::Consistent)
}

fn encode(config: &Config, word: &str) -> Result<Outcome> {
    let w = parse_word(word)?;
    if let Some(a) = &config.alphabet {
        a.check_word(&w)?;
    }
    let rd = rle_encode(&w);
    let mut out = Output::open(config, "encode")?;
    match config.format {
        Format::Text => {
            out.line(&format!("exponents: {}", rd.exponents))?;
            out.line(&format!("bases: {}", rd.bases))?;
        }
        Format::Csv => {
            out.line("run,exponent,base")?;
            for (j, (e, b)) in rd.exponents.iter().zip(rd.bases.iter()).enumerate() {
                out.line(&format!("{},{e},{b}", j + 1))?;
            }
        }
    }
    out.finish()?;
    Ok(Outcome::Consistent)
}

fn derive(config: &Config, word: &str) -> Result<Outcome> {
    let alphabet = config.alphabet()?;
    let w = parse_word(word)?;
    alphabet.check_word(&w)?;
    let mut out = Output::open(config, "derive")?;
    match derivative(&w, alphabet) {
        Ok(d) => out.line(&format!("D(w): {d}"))?,
        Err(e) => out.line(&format!("D(w): undefined ({e})"))?,
    }
    let times = match differentiability(&w, alphabet) {
        Differentiability::Smooth => "smooth".to_string(),
        Differentiability::Times(k) => format!("{k} times"),
    };
    out.line(&format!("differentiable: {times}"))?;
    out.finish()?;
    Ok(Outcome::Consistent)
}

fn expand(config: &Config, target: &str, chain: Option<&str>, base: Option<&str>) -> Result<Outcome> {
    let u = parse_word(target)?;
    let w = match (chain, base) {
        (_, Some(v)) => pseudo_inverse_with_base_within(&u, &parse_word(v)?, budget()?)?,
        (chain, None) => {
            let p = chain.map(parse_word).transpose()?.unwrap_or_default();
            pseudo_inverse_chain_within(&p, &u, config.order()?, budget()?)?
        }
    };
    Output::check_size(config, w.len())?;
    let mut out = Output::open(config, "expand")?;
    out.letters(&w)?;
    out.finish()?;
    Ok(Outcome::Consistent)
}

fn phi_inverse(config: &Config, word: &str) -> Result<Outcome> {
    let u = parse_word(word)?;
    let w = phi_inverse_prefix_within(&u, config.order()?, budget()?)?;
    Output::check_size(config, w.len())?;
    let mut out = Output::open(config, "phi-inverse")?;
    out.letters(&w)?;
    out.finish()?;
    Ok(Outcome::Consistent)
}

fn freq(config: &Config, samples: &[usize], word: Option<&str>) -> Result<Outcome> {
    let alphabet = config.alphabet()?;
    let report = match word {
        Some(_) => {
            let w = source_word(config, word)?;
            let ks = if samples.is_empty() { vec![w.len()] } else { samples.to_vec() };
            letter_frequencies(w.iter().copied(), alphabet, &ks)?
        }
        None => {
            let ks = if samples.is_empty() { vec![config.length()?] } else { samples.to_vec() };
            letter_frequencies(kolakoski_stream(config.spec()?), alphabet, &ks)?
        }
    };
    let mut out = Output::open(config, "freq")?;
    match config.format {
        Format::Csv => write_frequency_csv(&report, out.writer())?,
        Format::Text => {
            for r in &report.rows {
                out.line(&format!(
                    "k={} letter={} count={} ratio={:.6} deviation={:.6}",
                    r.k, r.letter, r.count, r.ratio, r.deviation
                ))?;
            }
            out.line(&format!("max deviation: {:.6}", report.max_deviation()))?;
        }
    }
    out.finish()?;
    Ok(Outcome::Consistent)
}

fn summarize_lengths(out: &mut Output, index: &FactorIndex) -> Result<()> {
    for len in 1..=index.lmax {
        let stats = index.of_length(len);
        let gap = index
            .gap_bound(len)
            .map_or_else(|| "-".to_string(), |g| g.to_string());
        out.line(&format!("L={len} factors={} max_gap={gap}", stats.len()))?;
    }
    Ok(())
}

fn recur(config: &Config, word: Option<&str>) -> Result<Outcome> {
    let w = source_word(config, word)?;
    let lmax = config.lmax_or(8);
    let index = recurrence_report(&w, lmax);
    let missing = index.non_recurrent();
    let mut out = Output::open(config, "recur")?;
    match config.format {
        Format::Csv => write_gap_csv(&index, out.writer())?,
        Format::Text => {
            out.line(&format!(
                "scanned {} letters; factors starting in the first {} positions: {}",
                w.len(),
                index.window,
                index.iter().count()
            ))?;
            out.line(&format!("without a second occurrence: {}", missing.len()))?;
            for s in &missing {
                out.line(&format!("L={} factor={} position={}", s.factor.len(), s.factor, s.first))?;
            }
        }
    }
    out.finish()?;
    Ok(if missing.is_empty() {
        Outcome::Consistent
    } else {
        Outcome::Mismatch
    })
}

fn gaps(config: &Config, word: Option<&str>) -> Result<Outcome> {
    let w = source_word(config, word)?;
    let lmax = config.lmax_or(8);
    let full = max_gap_report(&w, lmax);
    let mut out = Output::open(config, "gaps")?;
    match config.format {
        Format::Csv => write_gap_csv(&full, out.writer())?,
        Format::Text => {
            summarize_lengths(&mut out, &full)?;
            let half = max_gap_report(&w[..w.len() / 2], lmax);
            let stable_up_to = (lmax / 2).max(1);
            let changes = gap_changes(&half, &full, stable_up_to);
            out.line(&format!(
                "gap changes between {} and {} letters for L <= {stable_up_to}: {}",
                w.len() / 2,
                w.len(),
                changes.len()
            ))?;
            for c in &changes {
                out.line(&format!("factor={} half={:?} full={:?}", c.factor, c.shorter, c.longer))?;
            }
        }
    }
    out.finish()?;
    Ok(Outcome::Consistent)
}

fn parse_op(config: &Config, text: &str) -> Result<ClosureOp> {
    match text {
        "reversal" => Ok(ClosureOp::Reversal),
        "identity" => Ok(ClosureOp::Permutation(Permutation::identity(config.alphabet()?))),
        "complement" => Ok(ClosureOp::Permutation(Permutation::complement(config.alphabet()?)?)),
        _ => {
            let images = text
                .strip_prefix("perm:")
                .ok_or_else(|| anyhow!("unknown --op `{text}`"))?;
            let images = parse_word(images)?;
            Ok(ClosureOp::Permutation(Permutation::from_images(config.alphabet()?, &images)?))
        }
    }
}

fn closure(config: &Config, op: &str, blocks: bool, word: Option<&str>) -> Result<Outcome> {
    let op = parse_op(config, op)?;
    let w = source_word(config, word)?;
    let (witnesses, checked): (Vec<ClosureWitness>, String) = if blocks {
        let top = match &config.alphabet {
            Some(a) => a.max(),
            None => w.iter().copied().max().unwrap_or(0),
        };
        let runs = equal_run_blocks(&w);
        // Edge blocks may be cut short by the ends of the word.
        let inner = if runs.len() > 2 { &runs[1..runs.len() - 1] } else { &[][..] };
        let mut factors: Vec<Word> = inner
            .iter()
            .filter(|b| b.exponent == top)
            .map(|b| b.factor.clone())
            .collect();
        factors.sort();
        factors.dedup();
        let all = closure_check_factors(&w, &op, &factors)?;
        let n = all.len();
        (all.into_iter().filter(|x| x.is_miss()).collect(), format!("{n} run blocks of exponent {top}"))
    } else {
        let lmax = config.lmax_or(10);
        (closure_check(&w, &op, lmax)?, format!("middle-third factors of length <= {lmax}"))
    };
    let mut out = Output::open(config, "closure")?;
    match config.format {
        Format::Csv => write_witness_csv(&witnesses, out.writer())?,
        Format::Text => {
            out.line(&format!("checked {checked} under {op}; images absent: {}", witnesses.len()))?;
            for x in &witnesses {
                let verdict = match x.verdict {
                    Verdict::Found(p) => format!("found at {p}"),
                    Verdict::Absent => "absent".to_string(),
                };
                out.line(&format!(
                    "factor={} position={} image={} {verdict}",
                    x.factor, x.factor_position, x.image
                ))?;
            }
        }
    }
    out.finish()?;
    let expect_closed = match &op {
        ClosureOp::Reversal => config.alphabet.as_ref().is_some_and(|a| a.is_two_letter_odd()),
        ClosureOp::Permutation(_) => op.is_identity(),
    };
    Ok(if expect_closed && !witnesses.is_empty() {
        Outcome::Mismatch
    } else {
        Outcome::Consistent
    })
}

fn build_substitution(config: &Config, sing: bool) -> Result<Substitution> {
    let alphabet = config.alphabet()?;
    let order = config.order()?;
    if !sing {
        return Ok(build_for(alphabet, order)?);
    }
    let letters = alphabet.letters();
    if letters.len() != 2 {
        bail!("Sing's construction needs a 2-letter alphabet");
    }
    let (c1, c2) = (letters[0], letters[1]);
    Ok(if c1 % 2 == 0 {
        build_sing_even(c1, c2)?
    } else {
        build_sing_odd(c1, c2)?
    })
}

fn parse_symbol(text: &str) -> Result<Symbol> {
    let mut chars = text.chars();
    let head = chars.next().ok_or_else(|| anyhow!("empty symbol"))?;
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok(Symbol::Named(head));
    }
    let i: usize = rest.parse().with_context(|| format!("bad symbol `{text}`"))?;
    match head {
        'A' => Ok(Symbol::A(i)),
        'B' => Ok(Symbol::B(i)),
        _ => bail!("bad symbol `{text}`"),
    }
}

fn subst(config: &Config, sing: bool, action: &SubstCommand) -> Result<Outcome> {
    let sigma = build_substitution(config, sing)?;
    let spec = config.spec()?;
    let name = match action {
        SubstCommand::Build => "subst build",
        SubstCommand::Show => "subst show",
        SubstCommand::Iterate { .. } => "subst iterate",
        SubstCommand::CheckPrimitive => "subst check-primitive",
        SubstCommand::VerifyFixpoint => "subst verify-fixpoint",
    };
    let mut outcome = Outcome::Consistent;
    let mut lines = Vec::new();
    let mut letters = None;
    match action {
        SubstCommand::Build => {
            lines.push(format!("substitution {}", sigma.name()));
            lines.extend(sigma.show().lines().map(str::to_string));
            lines.extend(sigma.show_blocks().lines().map(str::to_string));
        }
        SubstCommand::Show => lines.extend(sigma.show().lines().map(str::to_string)),
        SubstCommand::Iterate { t, symbol } => {
            let seed = match symbol {
                Some(s) => parse_symbol(s)?,
                None => sigma
                    .prolongable_seed(spec.letter(0))
                    .unwrap_or(sigma.symbols()[0]),
            };
            let block_word = sigma.iterate(seed, *t)?;
            let flat = sigma.flatten(&block_word)?;
            Output::check_size(config, flat.len())?;
            if block_word.len() <= 1_000 {
                lines.push(format!("{seed} -> {}", format_block_word(&block_word)));
            }
            letters = Some(flat);
        }
        SubstCommand::CheckPrimitive => {
            let p = sigma.is_primitive();
            lines.push(format!(
                "primitive: {} k: {}",
                p.primitive,
                p.exponent.map_or_else(|| "-".to_string(), |k| k.to_string())
            ));
            lines.push("incidence matrix:".into());
            lines.extend(sigma.incidence_matrix().to_string().lines().map(str::to_string));
            if !p.primitive {
                outcome = Outcome::Mismatch;
            }
        }
        SubstCommand::VerifyFixpoint => {
            let m = config.length.unwrap_or(10_000);
            let check = verify_substitution_fixpoint(&sigma, spec, m)?;
            lines.push(format!(
                "seed: {} iterations: {} letters: {m} agrees: {}",
                check.seed, check.iterations, check.agrees
            ));
            if let Some(p) = check.first_mismatch {
                lines.push(format!("first mismatch at position {p}"));
                outcome = Outcome::Mismatch;
            }
        }
    }
    let mut out = Output::open(config, name)?;
    for line in &lines {
        out.line(line)?;
    }
    if let Some(flat) = letters {
        out.letters(&flat)?;
    }
    out.finish()?;
    Ok(outcome)
}

fn verify_all(config: &Config, only: &[u8]) -> Result<Outcome> {
    let ids = if only.is_empty() { criterion_ids() } else { only.to_vec() };
    let mut out = Output::open(config, "verify-all")?;
    let mut outcome = Outcome::Consistent;
    for id in ids {
        let result = run_criterion(id, config.seed).ok_or_else(|| anyhow!("no criterion {id}"))?;
        out.line(&result.to_string())?;
        if !result.passed {
            outcome = Outcome::Mismatch;
            break;
        }
    }
    out.finish()?;
    Ok(outcome)
}
