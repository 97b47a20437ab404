use std::fmt;

use super::certificate::{verify_certificate, EqualityCertificate};
use super::congruence::{congruence_equal, Congruence};
use super::element::Element;
use super::presentation::{MonoidPresentation, Relation};
use super::MonoidError;
use crate::name::{GeneratorId, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TietzeKind {
    A,
    B,
    C,
    D,
}

impl fmt::Display for TietzeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TietzeKind::A => "A",
            TietzeKind::B => "B",
            TietzeKind::C => "C",
            TietzeKind::D => "D",
        })
    }
}

/// How a superfluousness claim is to be established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Search with this degree bound.
    Bound(u64),
    /// Replay this chain.
    Certificate(EqualityCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeTransformation {
    /// Add generator `generator` together with the relation `generator = value`.
    AddGenerator {
        generator: GeneratorId,
        label: Label,
        value: Element,
    },
    /// Remove `generator` and its defining relation `generator = b`.
    RemoveGenerator { generator: GeneratorId },
    /// Add a relation that already holds.
    AddRelation {
        relation: Relation,
        evidence: Evidence,
    },
    /// Remove a relation implied by the others.
    RemoveRelation { label: Label, evidence: Evidence },
}

impl TietzeTransformation {
    pub fn kind(&self) -> TietzeKind {
        match self {
            TietzeTransformation::AddGenerator { .. } => TietzeKind::A,
            TietzeTransformation::RemoveGenerator { .. } => TietzeKind::B,
            TietzeTransformation::AddRelation { .. } => TietzeKind::C,
            TietzeTransformation::RemoveRelation { .. } => TietzeKind::D,
        }
    }
}

fn fail(kind: TietzeKind, detail: impl Into<String>) -> MonoidError {
    MonoidError::Tietze {
        kind,
        detail: detail.into(),
    }
}

/// Checks `lhs = rhs` in `p`, returning the certificate used.
fn establish(
    kind: TietzeKind,
    p: &MonoidPresentation,
    lhs: &Element,
    rhs: &Element,
    evidence: &Evidence,
) -> Result<EqualityCertificate, MonoidError> {
    match evidence {
        Evidence::Certificate(c) => {
            if &c.start != lhs || &c.end != rhs {
                return Err(fail(
                    kind,
                    "certificate endpoints do not match the relation",
                ));
            }
            if !verify_certificate(p, c) {
                return Err(fail(kind, "certificate does not replay"));
            }
            Ok(c.clone())
        }
        Evidence::Bound(n) => {
            let bound = (*n).max(lhs.degree()).max(rhs.degree());
            match congruence_equal(p, lhs, rhs, bound)? {
                Congruence::Equal(c) => Ok(c),
                Congruence::NotEqualUpToBound => Err(fail(
                    kind,
                    format!("relation not derivable within degree bound {bound}"),
                )),
            }
        }
    }
}

/// Applies one Tietze transformation, returning the new presentation and,
/// for kinds C and D, the superfluousness certificate that justified it.
pub fn apply_tietze(
    p: &MonoidPresentation,
    t: &TietzeTransformation,
) -> Result<(MonoidPresentation, Option<EqualityCertificate>), MonoidError> {
    let kind = t.kind();
    match t {
        TietzeTransformation::AddGenerator {
            generator,
            label,
            value,
        } => {
            if p.has_generator(generator.as_str()) {
                return Err(fail(
                    kind,
                    format!("generator `{generator}` already exists"),
                ));
            }
            if value.is_zero() {
                return Err(fail(kind, "the defining value is zero"));
            }
            p.check_element(value)?;
            let mut gens = p.generators().to_vec();
            gens.push(generator.clone());
            let mut rels = p.relations().to_vec();
            rels.push(Relation::new(
                label.clone(),
                Element::generator(generator.clone()),
                value.clone(),
            ));
            Ok((MonoidPresentation::new(gens, rels)?, None))
        }
        TietzeTransformation::RemoveGenerator { generator } => {
            let x = generator.as_str();
            if !p.has_generator(x) {
                return Err(MonoidError::UndeclaredGenerator(generator.clone()));
            }
            let defining: Vec<&Relation> = p
                .relations()
                .iter()
                .filter(|r| {
                    r.lhs.as_single_generator().map(|g| g.as_str()) == Some(x)
                        && !r.rhs.contains_generator(x)
                })
                .collect();
            let Some(def) = defining.first() else {
                return Err(fail(
                    kind,
                    format!("no relation `{x} = b` with b free of `{x}`"),
                ));
            };
            if let Some(other) = p
                .relations()
                .iter()
                .find(|r| r.label != def.label && r.mentions(x))
            {
                return Err(fail(
                    kind,
                    format!("`{x}` also occurs in relation `{}`", other.label),
                ));
            }
            let gens = p
                .generators()
                .iter()
                .filter(|g| g.as_str() != x)
                .cloned()
                .collect();
            let rels = p
                .relations()
                .iter()
                .filter(|r| r.label != def.label)
                .cloned()
                .collect();
            Ok((MonoidPresentation::new(gens, rels)?, None))
        }
        TietzeTransformation::AddRelation { relation, evidence } => {
            if p.relation(relation.label.as_str()).is_some() {
                return Err(MonoidError::DuplicateLabel(relation.label.clone()));
            }
            let cert = establish(kind, p, &relation.lhs, &relation.rhs, evidence)?;
            let mut rels = p.relations().to_vec();
            rels.push(relation.clone());
            Ok((
                MonoidPresentation::new(p.generators().to_vec(), rels)?,
                Some(cert),
            ))
        }
        TietzeTransformation::RemoveRelation { label, evidence } => {
            let rest = p.without_relation(label.as_str())?;
            let r = p.relation(label.as_str()).expect("label exists");
            let cert = establish(kind, &rest, &r.lhs, &r.rhs, evidence)?;
            Ok((rest, Some(cert)))
        }
    }
}
