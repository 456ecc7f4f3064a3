use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};

use smoothwords::{Alphabet, BaseSequenceSpec, CyclicOrder, Word};

use crate::{Common, Format};

/// Flags after validation. Alphabet, order and base sequence are checked
/// before any command does work.
#[derive(Debug)]
pub struct Config {
    pub alphabet: Option<Alphabet>,
    pub order: Option<CyclicOrder>,
    pub spec: Option<BaseSequenceSpec>,
    pub length: Option<usize>,
    pub lmax: Option<usize>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

/// Reads a word flag: comma-separated (`1,2,2`) or space-separated with
/// optional powers (`2^3 4^3`).
pub fn parse_word(text: &str) -> Result<Word> {
    let word = if text.contains(',') {
        Word::parse_list(text)
    } else {
        Word::parse(text)
    };
    word.with_context(|| format!("cannot read word `{text}`"))
}

impl Config {
    pub fn resolve(c: &Common) -> Result<Self> {
        let alphabet = c
            .alphabet
            .as_deref()
            .map(Alphabet::parse)
            .transpose()
            .context("invalid --alphabet")?;
        if alphabet.is_none() && (c.order.is_some() || c.base_period.is_some()) {
            return Err(anyhow!("--order and --base-period need --alphabet"));
        }
        let order = match (&alphabet, &c.order) {
            (Some(a), Some(text)) => Some(CyclicOrder::parse(a, text).context("invalid --order")?),
            (Some(a), None) => Some(CyclicOrder::increasing(a)),
            (None, _) => None,
        };
        let spec = match (&alphabet, &order) {
            (Some(a), Some(o)) => {
                let period = match &c.base_period {
                    Some(text) => parse_word(text).context("invalid --base-period")?,
                    None => Word::from(o.arrangement()),
                };
                let preperiod = match &c.base_preperiod {
                    Some(text) => parse_word(text).context("invalid --base-preperiod")?,
                    None => Word::new(),
                };
                Some(BaseSequenceSpec::new(a, preperiod, period).context("invalid base sequence")?)
            }
            _ => None,
        };
        if c.length == Some(0) {
            return Err(anyhow!("--length must be positive"));
        }
        if c.lmax == Some(0) {
            return Err(anyhow!("--lmax must be positive"));
        }
        Ok(Config {
            alphabet,
            order,
            spec,
            length: c.length,
            lmax: c.lmax,
            output: c.output.clone(),
            format: c.format,
            seed: c.seed,
        })
    }

    pub fn alphabet(&self) -> Result<&Alphabet> {
        self.alphabet.as_ref().ok_or_else(|| anyhow!("--alphabet is required"))
    }

    pub fn order(&self) -> Result<&CyclicOrder> {
        self.order.as_ref().ok_or_else(|| anyhow!("--alphabet is required"))
    }

    pub fn spec(&self) -> Result<&BaseSequenceSpec> {
        self.spec.as_ref().ok_or_else(|| anyhow!("--alphabet is required"))
    }

    pub fn length(&self) -> Result<usize> {
        self.length.ok_or_else(|| anyhow!("--length is required"))
    }

    pub fn lmax_or(&self, default: usize) -> usize {
        self.lmax.unwrap_or(default)
    }

    /// One comment line echoing every resolved setting.
    pub fn header(&self, command: &str) -> String {
        fn show<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
        }
        format!(
            "# smoothwords {command} alphabet={} order={} base={} length={} lmax={} format={} seed={} output={}",
            show(&self.alphabet),
            show(&self.order),
            show(&self.spec),
            show(&self.length),
            show(&self.lmax),
            match self.format {
                Format::Text => "text",
                Format::Csv => "csv",
            },
            self.seed,
            self.output
                .as_ref()
                .map_or_else(|| "-".to_string(), |p| p.display().to_string()),
        )
    }
}
