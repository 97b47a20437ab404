//! Moves on Bergman presentations, lifted to Bergman graphs, together with
//! the factorisations of collapsing and insplitting.
//!
//! Every move returns a fresh presentation that has been revalidated; moves
//! whose preconditions are equalities in a monoid carry the certificates that
//! establish them.

mod factor;
mod local;
mod shadow;
mod shift;
mod split;

use std::fmt;

use thiserror::Error;

use crate::monoid::Element;
use crate::monoid::{EqualityCertificate, MonoidError};
use crate::name::{fresh_name, GeneratorId, Label, Name};
use crate::structures::{
    graph_to_pres, pres_to_graph, BergmanGraph, BergmanPresentation, Colour, RawPresentation,
    ValidationReport,
};

pub use factor::{factor_collapse, factor_insplit};
pub use local::{collapse, enqueue, extend, find_lonely, lonely_eliminate};
pub use shadow::{
    red_shift_as_tietze, vmonoid_correspondence, vmonoid_shadow, Correspondence, ShadowReport,
};
pub use shift::{blue_shift, blue_shift_restriction, red_shift, Restriction};
pub use split::{insplit, insplit_index_set, outsplit};

/// Entry `(j, k)` of the insplit index set: the `k`-th copy (1-based) of the
/// split generator inside the rhs of relation `j`.
pub type SplitIndex = (Label, u64);

/// How an equality precondition is to be established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Search each required equality with this degree bound.
    Bound(u64),
    /// Replay these chains, in the order the move documents.
    Certificates(Vec<EqualityCertificate>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    RedShift,
    BlueShift,
    Enqueue,
    Outsplit,
    LonelyEliminate,
    Extend,
    Collapse,
    Insplit,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::RedShift => "red shift",
            MoveKind::BlueShift => "blue shift",
            MoveKind::Enqueue => "enqueue",
            MoveKind::Outsplit => "outsplit",
            MoveKind::LonelyEliminate => "lonely elimination",
            MoveKind::Extend => "extension",
            MoveKind::Collapse => "collapse",
            MoveKind::Insplit => "insplit",
        })
    }
}

/// A move together with all of its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Replace red relation `label` by `lhs = rhs`. Certificates: old lhs to
    /// `lhs`, then old rhs to `rhs`.
    RedShift {
        label: Label,
        lhs: Element,
        rhs: Element,
    },
    /// Replace the lhs of blue relation `label`. `ordering` fixes the
    /// admissible ordering whose prefix bounds the allowed generators;
    /// without it the largest possible prefix is used. Certificate: old lhs
    /// to `lhs`.
    BlueShift {
        label: Label,
        lhs: Element,
        ordering: Option<Vec<Label>>,
    },
    Enqueue {
        label: Label,
    },
    Outsplit {
        label: Label,
        parts: Vec<Element>,
        names: Vec<GeneratorId>,
    },
    LonelyEliminate {
        generator: GeneratorId,
    },
    Extend {
        generator: GeneratorId,
        rhs: Element,
        label: Label,
    },
    Collapse {
        generator: GeneratorId,
        label: Label,
    },
    /// `names` are the new generators `x_2, ..., x_t`.
    Insplit {
        generator: GeneratorId,
        label: Label,
        partition: Vec<Vec<SplitIndex>>,
        names: Vec<GeneratorId>,
    },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::RedShift { .. } => MoveKind::RedShift,
            Move::BlueShift { .. } => MoveKind::BlueShift,
            Move::Enqueue { .. } => MoveKind::Enqueue,
            Move::Outsplit { .. } => MoveKind::Outsplit,
            Move::LonelyEliminate { .. } => MoveKind::LonelyEliminate,
            Move::Extend { .. } => MoveKind::Extend,
            Move::Collapse { .. } => MoveKind::Collapse,
            Move::Insplit { .. } => MoveKind::Insplit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("no relation labelled `{0}`")]
    UnknownLabel(String),
    #[error("no generator `{0}`")]
    UnknownGenerator(String),
    #[error("relation `{label}` is not {expected}")]
    WrongColour { label: Label, expected: Colour },
    #[error("the presentation is not basic")]
    NotBasic,
    #[error("a new relation side is zero")]
    ZeroSide,
    #[error("{which} equality not found within degree bound {bound} (unknown, not refuted)")]
    NotCertified { which: &'static str, bound: u64 },
    #[error("invalid certificate: {0}")]
    BadCertificate(String),
    #[error("`{generator}` lies outside the generators allowed for `{label}`")]
    OutsideAllowedSet { label: Label, generator: Name },
    #[error("lhs of `{0}` is not a single generator")]
    NotSingleGenerator(Label),
    #[error("name `{0}` is already in use")]
    NameClash(Name),
    #[error("`{generator}` is not lonely: {reason}")]
    NotLonely { generator: Name, reason: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("the output is not a Bergman presentation ({0})")]
    InvariantViolation(ValidationReport),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// One executed move: parameters, input, output and the certificates that
/// justified it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveRecord {
    pub mv: Move,
    pub input: BergmanPresentation,
    pub output: BergmanPresentation,
    pub certificates: Vec<EqualityCertificate>,
}

impl MoveRecord {
    /// Re-executes the move from its certificates and checks the output.
    pub fn replay(&self) -> Result<BergmanPresentation, MoveError> {
        let again = apply_move(
            &self.input,
            &self.mv,
            &Evidence::Certificates(self.certificates.clone()),
        )?;
        if again.output != self.output {
            return Err(MoveError::Precondition(
                "replay produced a different presentation".into(),
            ));
        }
        Ok(again.output)
    }
}

/// A chain of moves starting from `initial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    pub initial: BergmanPresentation,
    pub records: Vec<MoveRecord>,
}

impl MoveSequence {
    pub fn new(initial: BergmanPresentation) -> Self {
        MoveSequence {
            initial,
            records: Vec::new(),
        }
    }

    /// The presentation after the last move.
    pub fn current(&self) -> &BergmanPresentation {
        self.records
            .last()
            .map(|r| &r.output)
            .unwrap_or(&self.initial)
    }

    /// Applies a move to the current presentation and records it.
    pub fn push(&mut self, mv: Move, evidence: &Evidence) -> Result<&MoveRecord, MoveError> {
        let rec = apply_move(self.current(), &mv, evidence)?;
        self.records.push(rec);
        Ok(self.records.last().expect("just pushed"))
    }

    /// Replays every record in order, checking that they chain.
    pub fn replay(&self) -> Result<BergmanPresentation, MoveError> {
        let mut current = self.initial.clone();
        for rec in &self.records {
            if rec.input != current {
                return Err(MoveError::Precondition("records do not chain".into()));
            }
            current = rec.replay()?;
        }
        Ok(current)
    }

    pub fn kinds(&self) -> Vec<MoveKind> {
        self.records.iter().map(|r| r.mv.kind()).collect()
    }
}

/// Dispatches a move. `evidence` is only consulted by the shifts.
pub fn apply_move(
    p: &BergmanPresentation,
    mv: &Move,
    evidence: &Evidence,
) -> Result<MoveRecord, MoveError> {
    let (output, certificates) = match mv {
        Move::RedShift { label, lhs, rhs } => red_shift(p, label.as_str(), lhs, rhs, evidence)?,
        Move::BlueShift {
            label,
            lhs,
            ordering,
        } => blue_shift(p, label.as_str(), lhs, ordering.as_deref(), evidence)?,
        Move::Enqueue { label } => (enqueue(p, label.as_str())?, Vec::new()),
        Move::Outsplit {
            label,
            parts,
            names,
        } => (outsplit(p, label.as_str(), parts, names)?, Vec::new()),
        Move::LonelyEliminate { generator } => {
            (lonely_eliminate(p, generator.as_str())?, Vec::new())
        }
        Move::Extend {
            generator,
            rhs,
            label,
        } => (extend(p, generator, rhs, label)?, Vec::new()),
        Move::Collapse { generator, label } => {
            (collapse(p, generator.as_str(), label.as_str())?, Vec::new())
        }
        Move::Insplit {
            generator,
            label,
            partition,
            names,
        } => (
            insplit(p, generator.as_str(), label.as_str(), partition, names)?,
            Vec::new(),
        ),
    };
    Ok(MoveRecord {
        mv: mv.clone(),
        input: p.clone(),
        output,
        certificates,
    })
}

/// The graph-level move: the same move on the corresponding presentation.
pub fn apply_move_to_graph(
    g: &BergmanGraph,
    mv: &Move,
    evidence: &Evidence,
) -> Result<BergmanGraph, MoveError> {
    let rec = apply_move(&graph_to_pres(g), mv, evidence)?;
    Ok(pres_to_graph(&rec.output))
}

/// Validates a move's output.
pub(crate) fn finish(raw: RawPresentation) -> Result<BergmanPresentation, MoveError> {
    BergmanPresentation::new(raw).map_err(MoveError::InvariantViolation)
}

pub(crate) fn relation_of<'a>(
    p: &'a BergmanPresentation,
    label: &str,
) -> Result<(usize, &'a crate::structures::ColouredRelation), MoveError> {
    let k = p
        .relation_index(label)
        .ok_or_else(|| MoveError::UnknownLabel(label.to_string()))?;
    Ok((k, &p.relations()[k]))
}

pub(crate) fn require_basic(p: &BergmanPresentation) -> Result<(), MoveError> {
    if p.is_basic() {
        Ok(())
    } else {
        Err(MoveError::NotBasic)
    }
}

pub(crate) fn require_declared(p: &BergmanPresentation, e: &Element) -> Result<(), MoveError> {
    match e.support().find(|x| !p.has_generator(x.as_str())) {
        Some(x) => Err(MoveError::UnknownGenerator(x.to_string())),
        None => Ok(()),
    }
}

/// `preferred` if no relation uses it, otherwise `preferred_1`, ... .
pub(crate) fn pick_label(taken: &dyn Fn(&str) -> bool, preferred: &str) -> Label {
    if !taken(preferred) {
        Name::new(preferred).expect("label built from valid names")
    } else {
        fresh_name(preferred, taken)
    }
}

/// `count` generator names `stem_1, stem_2, ...` not used by `p`.
pub fn fresh_generators(p: &BergmanPresentation, stem: &str, count: usize) -> Vec<GeneratorId> {
    let mut out: Vec<GeneratorId> = Vec::new();
    for _ in 0..count {
        let name = fresh_name(stem, |c| {
            p.has_generator(c) || out.iter().any(|x| x.as_str() == c)
        });
        out.push(name);
    }
    out
}
