use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::{anyhow, Context, Result};

use smoothwords::Letter;

use crate::config::Config;

/// Words longer than this go to a file, never to stdout.
pub const STDOUT_LIMIT: usize = 100_000;

pub struct Output {
    sink: Box<dyn Write>,
    to_file: bool,
}

impl Output {
    /// Opens stdout or the `--output` file and writes the config header.
    pub fn open(config: &Config, command: &str) -> Result<Self> {
        let (sink, to_file): (Box<dyn Write>, bool) = match &config.output {
            Some(path) => {
                let file = File::create(path)
                    .with_context(|| format!("cannot create {}", path.display()))?;
                (Box::new(BufWriter::new(file)), true)
            }
            None => (Box::new(BufWriter::new(io::stdout().lock())), false),
        };
        let mut out = Output { sink, to_file };
        out.line(&config.header(command))?;
        Ok(out)
    }

    pub fn check_size(config: &Config, symbols: usize) -> Result<()> {
        if symbols > STDOUT_LIMIT && config.output.is_none() {
            return Err(anyhow!(
                "{symbols} symbols exceed the stdout limit of {STDOUT_LIMIT}; pass --output"
            ));
        }
        Ok(())
    }

    pub fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.sink, "{text}").context("write failed")
    }

    pub fn letters(&mut self, letters: &[Letter]) -> Result<()> {
        if letters.len() > STDOUT_LIMIT && !self.to_file {
            return Err(anyhow!(
                "{} symbols exceed the stdout limit of {STDOUT_LIMIT}; pass --output",
                letters.len()
            ));
        }
        let mut first = true;
        for a in letters {
            if !first {
                self.sink.write_all(b" ")?;
            }
            write!(self.sink, "{a}")?;
            first = false;
        }
        self.sink.write_all(b"\n").context("write failed")
    }

    pub fn writer(&mut self) -> &mut dyn Write {
        &mut self.sink
    }

    pub fn finish(mut self) -> Result<()> {
        self.sink.flush().context("flush failed")
    }
}
