//! Free abelian monoids, finitely presented quotients and their word
//! problem.

mod certificate;
mod congruence;
mod element;
mod presentation;
mod tietze;

use thiserror::Error;

use crate::name::Name;

pub use certificate::{
    apply_step, verify_certificate, CertificateDisplay, Direction, EqualityCertificate, Step,
};
pub use congruence::{congruence_equal, is_superfluous, Congruence, Superfluity};
pub use element::{parse_element, Element, ElementParseError, ElementStyle, OrderedDisplay};
pub use presentation::{MonoidPresentation, Relation};
pub use tietze::{apply_tietze, Evidence, TietzeKind, TietzeTransformation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(Name),
    #[error("relation label `{0}` used twice")]
    DuplicateLabel(Name),
    #[error("relation `{0}` has a zero side")]
    ZeroSide(Name),
    #[error("generator `{0}` is not declared")]
    UndeclaredGenerator(Name),
    #[error("no relation labelled `{0}`")]
    UnknownLabel(String),
    #[error("degree bound {bound} is below the degree {degree} of an endpoint")]
    BoundTooSmall { bound: u64, degree: u64 },
    #[error("Tietze ({kind}) precondition failed: {detail}")]
    Tietze { kind: TietzeKind, detail: String },
}
