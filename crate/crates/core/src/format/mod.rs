//! Text formats.
//!
//! | extension | content |
//! |-----------|---------|
//! | `.bp` | Bergman presentation: `gens ...`, then `blue r: a = b` / `red r: a = b` |
//! | `.bg` | Bergman graph: `vertices ...`, then `red h: u u -> v v v` |
//! | `.dg` | ordinary digraph: optional `vertices ...`, then `edge e: u -> v` |
//! | `.mv` | move script, one move per line |
//! | `.tz` | Tietze script, one transformation per line |
//! | `.alg` | scalar algebra presentation: `gen s` and `rel: p = q` lines |
//!
//! `#` starts a comment everywhere. Writers are canonical: parsing the
//! output of a writer gives back the same value.

use std::fmt;

use crate::monoid::{parse_element, Element};
use crate::name::Name;
use crate::structures::{StructureError, ValidationReport};

mod alg;
mod dot;
mod lpa_syntax;
mod script;
mod structure;

pub use alg::{parse_alg, write_alg, ParsedAlgebra, ParsedRelation};
pub use dot::dot_export;
pub use lpa_syntax::{
    parse_anchors, parse_lpa_element, parse_lpa_products, write_anchors, write_lpa_element,
};
pub use script::{parse_mv, parse_tz, write_mv, write_tz, ScriptCommand, ScriptStep, TzStep};
pub use structure::{
    parse_bg, parse_bp, parse_dg, read_bg, read_bp, read_dg, write_bg, write_bp, write_dg,
};

/// A syntax error with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Failure to turn a file into a validated structure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("syntax error: {0}")]
    Syntax(#[from] ParseError),
    #[error("{0}")]
    Invalid(ValidationReport),
    #[error("{0}")]
    Structure(#[from] StructureError),
}

/// One meaningful source line with its comment removed.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line<'a> {
    pub number: usize,
    raw: &'a str,
    pub text: &'a str,
}

impl<'a> Line<'a> {
    /// Column (1-based, in characters) of `at`, which must lie inside this
    /// line.
    pub fn column(&self, at: &str) -> usize {
        let base = self.raw.as_ptr() as usize;
        let offset = (at.as_ptr() as usize)
            .saturating_sub(base)
            .min(self.raw.len());
        self.raw[..offset].chars().count() + 1
    }

    pub fn error(&self, at: &str, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column: self.column(at),
            message: message.into(),
        }
    }

    pub fn raw(&self) -> &'a str {
        self.raw
    }

    pub fn name(&self, token: &'a str) -> Result<Name, ParseError> {
        Name::new(token).map_err(|e| self.error(token, e.to_string()))
    }

    pub fn element(&self, text: &'a str) -> Result<Element, ParseError> {
        let trimmed = text.trim();
        parse_element(trimmed).map_err(|e| {
            let at = trimmed.get(e.offset()..).unwrap_or(trimmed);
            self.error(at, e.to_string())
        })
    }

    /// Splits off the first whitespace-delimited word.
    pub fn keyword(&self) -> (&'a str, &'a str) {
        let t = self.text.trim_start();
        match t.find(char::is_whitespace) {
            Some(k) => (&t[..k], &t[k..]),
            None => (t, &t[t.len()..]),
        }
    }

    /// Splits `text` at the first `sep`, or reports it missing.
    pub fn split(&self, text: &'a str, sep: &str) -> Result<(&'a str, &'a str), ParseError> {
        text.find(sep)
            .map(|k| (&text[..k], &text[k + sep.len()..]))
            .ok_or_else(|| self.error(text, format!("expected `{sep}`")))
    }
}

pub(crate) fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let body = match raw.find('#') {
            Some(c) => &raw[..c],
            None => raw,
        };
        (!body.trim().is_empty()).then_some(Line {
            number: k + 1,
            raw,
            text: body,
        })
    })
}

type Options<'a> = Vec<(&'a str, &'a str)>;

/// Removes the `-- key value` options trailing a script line.
pub(crate) fn split_options<'a>(
    line: &Line<'a>,
    text: &'a str,
) -> Result<(&'a str, Options<'a>), ParseError> {
    let mut parts = text.split("--");
    let head = parts.next().unwrap_or("");
    let mut opts = Vec::new();
    for p in parts {
        let p = p.trim();
        let (k, v) = match p.find(char::is_whitespace) {
            Some(i) => (&p[..i], p[i..].trim()),
            None => (p, ""),
        };
        if k.is_empty() {
            return Err(line.error(p, "empty option"));
        }
        opts.push((k, v));
    }
    Ok((head, opts))
}
