//! Bergman presentations and Bergman graphs.

mod digraph;
mod graph;
mod homomorphism;
mod presentation;

use std::fmt;

use thiserror::Error;

use crate::name::{Label, Name};

pub use digraph::{digraph_to_bergman, Digraph, DigraphEdge};
pub use graph::{
    graph_to_pres, pres_to_graph, validate_graph, vmonoid_presentation, BergmanGraph, Hyperedge,
    RawGraph,
};
pub use homomorphism::{
    check_homomorphism, check_presentation_homomorphism, StructureHomomorphism,
};
pub use presentation::{
    validate_presentation, BergmanPresentation, ColouredRelation, RawPresentation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Blue,
    Red,
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Blue => "blue",
            Colour::Red => "red",
        })
    }
}

/// One failed clause of the definition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    DuplicateGenerator(Name),
    DuplicateLabel(Label),
    ZeroSide(Label),
    UndeclaredGenerator {
        label: Label,
        generator: Name,
    },
    /// Clause (i): a blue rhs has a repeated generator.
    BlueRangeNotSet(Label),
    /// Clause (i): a blue rhs has fewer than two generators.
    BlueRangeTooSmall(Label),
    /// Clause (i): two blue ranges share a generator.
    BlueRangesOverlap {
        first: Label,
        second: Label,
        generator: Name,
    },
    /// Clause (ii): these blue relations can never be placed.
    NoAdmissibleOrdering(Vec<Label>),
}

impl Violation {
    /// `"good"`, `"(i)"` or `"(ii)"`.
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::BlueRangeNotSet(_)
            | Violation::BlueRangeTooSmall(_)
            | Violation::BlueRangesOverlap { .. } => "(i)",
            Violation::NoAdmissibleOrdering(_) => "(ii)",
            _ => "good",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateGenerator(x) => write!(f, "generator `{x}` declared twice"),
            Violation::DuplicateLabel(l) => write!(f, "label `{l}` used twice"),
            Violation::ZeroSide(l) => write!(f, "relation `{l}` has a zero side"),
            Violation::UndeclaredGenerator { label, generator } => {
                write!(
                    f,
                    "relation `{label}` uses undeclared generator `{generator}`"
                )
            }
            Violation::BlueRangeNotSet(l) => {
                write!(f, "clause (i): rhs of blue `{l}` repeats a generator")
            }
            Violation::BlueRangeTooSmall(l) => write!(
                f,
                "clause (i): rhs of blue `{l}` has fewer than 2 generators"
            ),
            Violation::BlueRangesOverlap {
                first,
                second,
                generator,
            } => write!(
                f,
                "clause (i): blue `{first}` and `{second}` share `{generator}`"
            ),
            Violation::NoAdmissibleOrdering(stuck) => {
                write!(f, "clause (ii): no admissible ordering; stuck on ")?;
                for (k, l) in stuck.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "`{l}`")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        f.write_str("invalid")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(Name),
    #[error("label `{0}` used twice")]
    DuplicateLabel(Label),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(Name),
}
