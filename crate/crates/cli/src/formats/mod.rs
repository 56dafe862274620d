//! Plain-text input formats. Every format is line oriented: `#` starts a comment and blank
//! lines are ignored.

pub mod category;
pub mod complex;
pub mod ring;
pub mod sset;

use std::path::Path;

use crate::error::CliError;

pub use category::{parse_category, write_category};
pub use complex::{parse_complex, write_complex, ComplexFile};
pub use ring::{parse_ring_spec, RingSpec};
pub use sset::{parse_sset, write_sset};

/// One meaningful line of an input file.
#[derive(Clone, Copy, Debug)]
pub struct Line<'a> {
    /// 1-based.
    pub number: usize,
    /// The line without its comment, untrimmed on the left so that columns stay exact.
    pub raw: &'a str,
}

impl<'a> Line<'a> {
    pub fn text(&self) -> &'a str {
        self.raw.trim()
    }

    pub fn words(&self) -> impl Iterator<Item = &'a str> {
        self.raw.split_whitespace()
    }

    /// 1-based column of `part`, which must be a subslice of this line.
    pub fn col_of(&self, part: &str) -> usize {
        let start = self.raw.as_ptr() as usize;
        let at = part.as_ptr() as usize;
        if at < start || at > start + self.raw.len() {
            return 1;
        }
        self.raw[..at - start].chars().count() + 1
    }
}

/// The text of an input file together with its name for error messages.
pub struct Source<'a> {
    pub path: &'a str,
    pub text: &'a str,
}

impl<'a> Source<'a> {
    pub fn new(path: &'a str, text: &'a str) -> Self {
        Source { path, text }
    }

    pub fn lines(&self) -> Vec<Line<'a>> {
        self.text
            .lines()
            .enumerate()
            .map(|(i, l)| Line { number: i + 1, raw: l.split('#').next().unwrap_or("") })
            .filter(|l| !l.text().is_empty())
            .collect()
    }

    /// An error pointing at `part` of `line`.
    pub fn error_at(&self, line: &Line<'_>, part: &str, msg: impl Into<String>) -> CliError {
        CliError::Parse { path: self.path.to_string(), line: line.number, col: line.col_of(part), msg: msg.into() }
    }

    /// An error about the file as a whole.
    pub fn error(&self, msg: impl Into<String>) -> CliError {
        CliError::Parse { path: self.path.to_string(), line: 0, col: 0, msg: msg.into() }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })
}

/// Parses a whitespace-separated integer token.
pub fn parse_int<T: std::str::FromStr>(src: &Source<'_>, line: &Line<'_>, word: &str) -> Result<T, CliError> {
    word.parse().map_err(|_| src.error_at(line, word, format!("expected an integer, found {:?}", word)))
}
