use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::name::{Name, NameError};

/// An element of the free abelian monoid on a set of generators, i.e. a
/// finitely supported multiset.
///
/// Only positive multiplicities are stored, so structural equality is
/// equality in the free monoid.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    terms: BTreeMap<Name, u64>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn generator(x: Name) -> Self {
        Element::from_terms([(x, 1)])
    }

    /// Builds an element from `(generator, multiplicity)` pairs; repeated
    /// generators accumulate and zero multiplicities are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Name, u64)>) -> Self {
        let mut e = Element::zero();
        for (x, m) in terms {
            e.add_generator(x, m);
        }
        e
    }

    /// Builds an element from a list of generators with repetition.
    pub fn from_generators(gens: impl IntoIterator<Item = Name>) -> Self {
        Element::from_terms(gens.into_iter().map(|x| (x, 1)))
    }

    pub fn add_generator(&mut self, x: Name, m: u64) {
        if m > 0 {
            *self.terms.entry(x).or_insert(0) += m;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, x: &str) -> u64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn contains_generator(&self, x: &str) -> bool {
        self.terms.contains_key(x)
    }

    /// Total degree: the sum of all multiplicities.
    pub fn degree(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &Name> + '_ {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, u64)> + '_ {
        self.terms.iter().map(|(x, &m)| (x, m))
    }

    /// Whether every multiplicity is one.
    pub fn is_set(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }

    /// If `self` is a single generator with multiplicity one, returns it.
    pub fn as_single_generator(&self) -> Option<&Name> {
        match self.terms.iter().next() {
            Some((x, 1)) if self.terms.len() == 1 => Some(x),
            _ => None,
        }
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (x, m) in other.iter() {
            out.add_generator(x.clone(), m);
        }
        out
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &Element) -> bool {
        other
            .iter()
            .all(|(x, m)| self.multiplicity(x.as_str()) >= m)
    }

    /// `self - other` if `other ≤ self` componentwise.
    pub fn checked_minus(&self, other: &Element) -> Option<Element> {
        if !self.dominates(other) {
            return None;
        }
        let mut out = self.clone();
        for (x, m) in other.iter() {
            let slot = out.terms.get_mut(x).expect("dominated");
            *slot -= m;
            if *slot == 0 {
                out.terms.remove(x);
            }
        }
        Some(out)
    }

    pub fn scaled(&self, k: u64) -> Element {
        if k == 0 {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(x, &m)| (x.clone(), m * k))
                .collect(),
        }
    }

    /// Removes every occurrence of `x`, returning its multiplicity.
    pub fn remove_generator(&mut self, x: &str) -> u64 {
        self.terms.remove(x).unwrap_or(0)
    }

    /// Replaces each of the `m` occurrences of `x` by `repl`.
    pub fn substitute(&self, x: &str, repl: &Element) -> Element {
        let mut out = self.clone();
        let m = out.remove_generator(x);
        out.plus(&repl.scaled(m))
    }

    /// Applies a generator-wise map; generators missing from `map` are kept.
    pub fn map_generators(&self, map: &BTreeMap<Name, Element>) -> Element {
        let mut out = Element::zero();
        for (x, m) in self.iter() {
            match map.get(x) {
                Some(image) => out = out.plus(&image.scaled(m)),
                None => out.add_generator(x.clone(), m),
            }
        }
        out
    }

    /// Renders the element listing generators in the given order; any
    /// generator missing from `order` follows in name order.
    pub fn display_in<'a>(&'a self, order: &'a [Name], style: ElementStyle) -> OrderedDisplay<'a> {
        OrderedDisplay {
            element: self,
            order,
            style,
        }
    }

    pub(crate) fn ordered_terms<'a>(&'a self, order: &'a [Name]) -> Vec<(&'a Name, u64)> {
        let mut out: Vec<(&Name, u64)> = order
            .iter()
            .filter_map(|x| self.terms.get_key_value(x).map(|(k, &m)| (k, m)))
            .collect();
        if out.len() < self.terms.len() {
            for (x, &m) in &self.terms {
                if !order.contains(x) {
                    out.push((x, m));
                }
            }
        }
        out
    }
}

/// Text layout for elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementStyle {
    /// `3 x + y`
    Spaced,
    /// `3x+y`
    Compact,
}

pub struct OrderedDisplay<'a> {
    element: &'a Element,
    order: &'a [Name],
    style: ElementStyle,
}

impl fmt::Display for OrderedDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.element.ordered_terms(self.order), self.style)
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(&Name, u64)],
    style: ElementStyle,
) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    let (sep, coef_sep) = match style {
        ElementStyle::Spaced => (" + ", " "),
        ElementStyle::Compact => ("+", ""),
    };
    for (k, (x, m)) in terms.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        if *m == 1 {
            write!(f, "{x}")?;
        } else {
            write!(f, "{m}{coef_sep}{x}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.iter().collect();
        write_terms(f, &terms, ElementStyle::Spaced)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ElementParseError {
    #[error("empty term at offset {0}")]
    EmptyTerm(usize),
    #[error("bad coefficient `{text}` at offset {offset}")]
    BadCoefficient { text: String, offset: usize },
    #[error("bad generator at offset {offset}: {source}")]
    BadName { offset: usize, source: NameError },
    #[error("unexpected text `{text}` at offset {offset}")]
    Unexpected { text: String, offset: usize },
}

impl ElementParseError {
    /// Byte offset of the problem within the parsed text.
    pub fn offset(&self) -> usize {
        match self {
            ElementParseError::EmptyTerm(o) => *o,
            ElementParseError::BadCoefficient { offset, .. }
            | ElementParseError::BadName { offset, .. }
            | ElementParseError::Unexpected { offset, .. } => *offset,
        }
    }
}

/// Parses the linear-combination syntax `3 x + y + 2 z`.
///
/// A coefficient may be separated from its generator by whitespace or
/// written directly in front of it (`2v`); the lone token `0` is the zero
/// element.
pub fn parse_element(text: &str) -> Result<Element, ElementParseError> {
    if text.trim() == "0" {
        return Ok(Element::zero());
    }
    let mut out = Element::zero();
    let mut offset = 0;
    for piece in text.split('+') {
        let start = offset + (piece.len() - piece.trim_start().len());
        offset += piece.len() + 1;
        let term = piece.trim();
        if term.is_empty() {
            return Err(ElementParseError::EmptyTerm(start));
        }
        let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
        let (coef, rest) = term.split_at(digits);
        let m = if coef.is_empty() {
            1
        } else {
            coef.parse::<u64>()
                .map_err(|_| ElementParseError::BadCoefficient {
                    text: coef.to_string(),
                    offset: start,
                })?
        };
        let name_text = rest.trim_start();
        let name_offset = start + digits + (rest.len() - name_text.len());
        if name_text.is_empty() {
            return Err(ElementParseError::Unexpected {
                text: term.to_string(),
                offset: start,
            });
        }
        let x = Name::new(name_text).map_err(|source| ElementParseError::BadName {
            offset: name_offset,
            source,
        })?;
        if m == 0 {
            return Err(ElementParseError::BadCoefficient {
                text: coef.to_string(),
                offset: start,
            });
        }
        out.add_generator(x, m);
    }
    Ok(out)
}

impl FromStr for Element {
    type Err = ElementParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_element(s)
    }
}
