//! `smoothwords`: generate, transform and analyse smooth words from the
//! command line.
//!
//! Exit codes: 0 on success (including theorem-consistent verification
//! outcomes), 2 on a verification mismatch, 1 on usage or configuration
//! errors.

mod commands;
mod config;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use smoothwords::verify::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "smoothwords", version, about = "Smooth words, Kolakoski sequences and their substitutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

/// Flags shared by every subcommand.
#[derive(Debug, Args)]
pub struct Common {
    /// Alphabet letters, comma-separated (e.g. 1,2).
    #[arg(long, global = true)]
    pub alphabet: Option<String>,
    /// Cyclic order of the alphabet, comma-separated; defaults to increasing.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Base sequence preperiod, comma-separated.
    #[arg(long, global = true)]
    pub base_preperiod: Option<String>,
    /// Base sequence period, comma-separated; defaults to the cyclic order.
    #[arg(long, global = true)]
    pub base_period: Option<String>,
    /// Number of letters to generate or scan.
    #[arg(long, global = true)]
    pub length: Option<usize>,
    /// Longest factor length for factor scans.
    #[arg(long, global = true)]
    pub lmax: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Prefix of the generalized Kolakoski word for a base sequence.
    Generate,
    /// Run-length coding of a word.
    Encode {
        #[arg(long)]
        word: String,
    },
    /// The derivative D(w) and how often w can be differentiated.
    Derive {
        #[arg(long)]
        word: String,
    },
    /// Chained pseudo-inverse Δ_p⁻ᵏ(u), or Δ_v⁻¹(u) with an explicit base.
    Expand {
        /// Exponent word u.
        #[arg(long)]
        target: String,
        /// Chain p of start letters, applied right to left.
        #[arg(long, conflicts_with = "base")]
        chain: Option<String>,
        /// Explicit base word v, one letter per exponent.
        #[arg(long)]
        base: Option<String>,
    },
    /// Φ⁻¹ of a finite word of first letters.
    PhiInverse {
        #[arg(long)]
        word: String,
    },
    /// Letter frequencies at sampled prefix lengths.
    Freq {
        /// Sample points; defaults to the full length.
        #[arg(long, value_delimiter = ',')]
        samples: Vec<usize>,
        /// Analyse this word instead of a generated one.
        #[arg(long)]
        word: Option<String>,
    },
    /// Second occurrences of factors from the first hundredth of the word.
    Recur {
        #[arg(long)]
        word: Option<String>,
    },
    /// Maximal occurrence gaps per factor, at the full length and half of it.
    Gaps {
        #[arg(long)]
        word: Option<String>,
    },
    /// Closure of the factor set under reversal or a letter permutation.
    Closure {
        /// `reversal`, `complement`, `identity`, or images such as `perm:4,2`.
        #[arg(long, default_value = "reversal")]
        op: String,
        /// Test maximal blocks of equal-length runs instead of middle-third factors.
        #[arg(long)]
        blocks: bool,
        #[arg(long)]
        word: Option<String>,
    },
    /// Block substitutions generating generalized Kolakoski words.
    Subst {
        /// Use Sing's two-letter construction instead of the general one.
        #[arg(long, global = true)]
        sing: bool,
        #[command(subcommand)]
        action: SubstCommand,
    },
    /// Run the acceptance suite; stops at the first failing criterion.
    VerifyAll {
        /// Criterion numbers to run; defaults to all.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum SubstCommand {
    /// Build the substitution and print its rules and blocks.
    Build,
    /// Print the rule table.
    Show,
    /// Print the flattened word σᵗ(seed).
    Iterate {
        #[arg(long)]
        t: usize,
        /// Seed symbol, e.g. A1, B2 or A; defaults to the prolongable seed.
        #[arg(long)]
        symbol: Option<String>,
    },
    /// Least k with Mᵏ entrywise positive.
    CheckPrimitive,
    /// Compare the fixpoint with the Kolakoski word on --length letters.
    VerifyFixpoint,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Consistent,
    Mismatch,
}

fn run(argv: impl IntoIterator<Item = impl Into<OsString> + Clone>) -> ExitCode {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match commands::execute(&cli) {
        Ok(Outcome::Consistent) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    run(std::env::args_os())
}
