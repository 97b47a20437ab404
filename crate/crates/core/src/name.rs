use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Characters that carry meaning in one of the text formats and therefore
/// cannot appear inside a generator, vertex or label name.
const RESERVED: &[char] = &[
    '+', '=', ':', '#', '[', ']', '(', ')', '|', ',', ';', '*', '^', '/', '<', '>', '-', '"', '\\',
    '{', '}',
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NameError {
    #[error("empty name")]
    Empty,
    #[error("name `{0}` starts with a digit")]
    LeadingDigit(String),
    #[error("name `{name}` contains reserved character `{ch}`")]
    Reserved { name: String, ch: char },
    #[error("name `{0}` contains whitespace")]
    Whitespace(String),
}

/// A validated identifier token.
///
/// Used for generators, vertices and relation/hyperedge labels. Names are
/// nonempty, contain no whitespace or format punctuation and do not start
/// with a digit (so that `3x` reads as three times `x`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(String);

pub type GeneratorId = Name;
pub type VertexId = Name;
pub type Label = Name;

impl Name {
    pub fn new(s: impl Into<String>) -> Result<Self, NameError> {
        let s = s.into();
        let Some(first) = s.chars().next() else {
            return Err(NameError::Empty);
        };
        if first.is_ascii_digit() {
            return Err(NameError::LeadingDigit(s));
        }
        for ch in s.chars() {
            if ch.is_whitespace() {
                return Err(NameError::Whitespace(s));
            }
            if RESERVED.contains(&ch) {
                return Err(NameError::Reserved { name: s, ch });
            }
        }
        Ok(Name(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for Name {
    type Err = NameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Name::new(s)
    }
}

impl TryFrom<&str> for Name {
    type Error = NameError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        Name::new(s)
    }
}

impl Borrow<str> for Name {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Name {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Picks `stem_1`, `stem_2`, ... until `taken` rejects none.
pub fn fresh_name(stem: &str, mut taken: impl FnMut(&str) -> bool) -> Name {
    (1u64..)
        .map(|k| format!("{stem}_{k}"))
        .find(|candidate| !taken(candidate))
        .map(|s| Name::new(s).expect("stem is a valid name"))
        .expect("unbounded search")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_ordinary_tokens() {
        for s in ["x", "x0_1", "v'", "h''", "u.1x", "alpha"] {
            assert!(Name::new(s).is_ok(), "{s}");
        }
    }

    #[test]
    fn rejects_reserved_and_malformed() {
        assert_eq!(Name::new(""), Err(NameError::Empty));
        assert!(matches!(Name::new("2v"), Err(NameError::LeadingDigit(_))));
        assert!(matches!(Name::new("a b"), Err(NameError::Whitespace(_))));
        for s in ["a+b", "a=b", "r:", "#x", "h[u]", "x^", "a-b", "a/b"] {
            assert!(
                matches!(Name::new(s), Err(NameError::Reserved { .. })),
                "{s}"
            );
        }
    }

    #[test]
    fn fresh_name_skips_taken() {
        let taken = ["x_1", "x_2"];
        assert_eq!(fresh_name("x", |c| taken.contains(&c)).as_str(), "x_3");
    }
}
