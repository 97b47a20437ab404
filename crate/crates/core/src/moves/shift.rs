use std::collections::BTreeSet;

use crate::monoid::{
    congruence_equal, verify_certificate, Congruence, Element, EqualityCertificate,
    MonoidPresentation, Relation,
};
use crate::name::{GeneratorId, Label};
use crate::structures::{BergmanPresentation, Colour};

use super::{finish, relation_of, require_declared, Evidence, MoveError};

/// Establishes `from = to` in `m`, either from the `slot`-th supplied
/// certificate or by a bounded search.
fn establish(
    m: &MonoidPresentation,
    from: &Element,
    to: &Element,
    which: &'static str,
    evidence: &Evidence,
    slot: usize,
) -> Result<EqualityCertificate, MoveError> {
    match evidence {
        Evidence::Certificates(certs) => {
            let c = certs
                .get(slot)
                .ok_or_else(|| MoveError::BadCertificate(format!("missing {which} certificate")))?;
            if &c.start != from || &c.end != to {
                return Err(MoveError::BadCertificate(format!(
                    "{which} certificate has the wrong endpoints"
                )));
            }
            if !verify_certificate(m, c) {
                return Err(MoveError::BadCertificate(format!(
                    "{which} certificate does not replay"
                )));
            }
            Ok(c.clone())
        }
        Evidence::Bound(n) => {
            let bound = (*n).max(from.degree()).max(to.degree());
            match congruence_equal(m, from, to, bound)? {
                Congruence::Equal(c) => Ok(c),
                Congruence::NotEqualUpToBound => Err(MoveError::NotCertified { which, bound }),
            }
        }
    }
}

/// Replaces red relation `label` by `lhs = rhs`, given `a_i = lhs` and
/// `b_i = rhs` in the monoid presented by the other relations.
pub fn red_shift(
    p: &BergmanPresentation,
    label: &str,
    lhs: &Element,
    rhs: &Element,
    evidence: &Evidence,
) -> Result<(BergmanPresentation, Vec<EqualityCertificate>), MoveError> {
    let (k, r) = relation_of(p, label)?;
    if r.colour != Colour::Red {
        return Err(MoveError::WrongColour {
            label: r.label.clone(),
            expected: Colour::Red,
        });
    }
    if lhs.is_zero() || rhs.is_zero() {
        return Err(MoveError::ZeroSide);
    }
    require_declared(p, lhs)?;
    require_declared(p, rhs)?;
    let rest = p.monoid().without_relation(label)?;
    let c_lhs = establish(&rest, &r.lhs, lhs, "lhs", evidence, 0)?;
    let c_rhs = establish(&rest, &r.rhs, rhs, "rhs", evidence, 1)?;
    let mut raw = p.to_raw();
    raw.relations[k].lhs = lhs.clone();
    raw.relations[k].rhs = rhs.clone();
    Ok((finish(raw)?, vec![c_lhs, c_rhs]))
}

/// The monoid in which a blue shift of one relation must be certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    /// Blue relations placed before the shifted one.
    pub prefix: Vec<Label>,
    /// Base generators plus the ranges of the prefix, in declaration order.
    pub allowed: Vec<GeneratorId>,
    /// The prefix relations and every red relation inside `allowed`.
    pub monoid: MonoidPresentation,
}

/// Computes the restricted monoid for shifting blue relation `label`.
///
/// With an explicit admissible `ordering` the prefix is everything before
/// `label`. Otherwise it is the largest set of blue relations that can be
/// placed admissibly without `label`, which gives the most room.
pub fn blue_shift_restriction(
    p: &BergmanPresentation,
    label: &str,
    ordering: Option<&[Label]>,
) -> Result<Restriction, MoveError> {
    let (_, r) = relation_of(p, label)?;
    if r.colour != Colour::Blue {
        return Err(MoveError::WrongColour {
            label: r.label.clone(),
            expected: Colour::Blue,
        });
    }
    let base: BTreeSet<GeneratorId> = p.base_generators().into_iter().collect();
    let mut available: BTreeSet<&str> = p
        .generators()
        .iter()
        .filter(|x| base.contains(*x))
        .map(|x| x.as_str())
        .collect();
    let prefix: Vec<Label> = match ordering {
        Some(order) => {
            if !p.is_admissible(order) {
                return Err(MoveError::Precondition(
                    "the given ordering is not admissible".into(),
                ));
            }
            let k = order
                .iter()
                .position(|l| l.as_str() == label)
                .expect("admissible ordering lists every blue label");
            order[..k].to_vec()
        }
        None => {
            let mut pending: Vec<_> = p.blue().filter(|b| b.label.as_str() != label).collect();
            let mut out = Vec::new();
            while let Some(pos) = pending
                .iter()
                .position(|b| b.lhs.support().all(|x| available.contains(x.as_str())))
            {
                let b = pending.remove(pos);
                available.extend(b.rhs.support().map(|x| x.as_str()));
                out.push(b.label.clone());
            }
            out
        }
    };
    if ordering.is_some() {
        for l in &prefix {
            let b = p.relation(l.as_str()).expect("prefix label exists");
            available.extend(b.rhs.support().map(|x| x.as_str()));
        }
    }
    let allowed: Vec<GeneratorId> = p
        .generators()
        .iter()
        .filter(|x| available.contains(x.as_str()))
        .cloned()
        .collect();
    let inside = |e: &Element| e.support().all(|x| available.contains(x.as_str()));
    let relations = p
        .relations()
        .iter()
        .filter(|c| match c.colour {
            Colour::Blue => prefix.contains(&c.label),
            Colour::Red => inside(&c.lhs) && inside(&c.rhs),
        })
        .map(|c| Relation::new(c.label.clone(), c.lhs.clone(), c.rhs.clone()))
        .collect();
    let monoid = MonoidPresentation::new(allowed.clone(), relations)?;
    Ok(Restriction {
        prefix,
        allowed,
        monoid,
    })
}

/// Replaces the lhs of blue relation `label` by `lhs`, given `a_i = lhs` in
/// the restricted monoid.
pub fn blue_shift(
    p: &BergmanPresentation,
    label: &str,
    lhs: &Element,
    ordering: Option<&[Label]>,
    evidence: &Evidence,
) -> Result<(BergmanPresentation, Vec<EqualityCertificate>), MoveError> {
    let restriction = blue_shift_restriction(p, label, ordering)?;
    if lhs.is_zero() {
        return Err(MoveError::ZeroSide);
    }
    require_declared(p, lhs)?;
    if let Some(x) = lhs.support().find(|x| !restriction.allowed.contains(x)) {
        return Err(MoveError::OutsideAllowedSet {
            label: crate::Name::new(label).expect("existing label"),
            generator: x.clone(),
        });
    }
    let (k, r) = relation_of(p, label)?;
    let cert = establish(&restriction.monoid, &r.lhs, lhs, "lhs", evidence, 0)?;
    let mut raw = p.to_raw();
    raw.relations[k].lhs = lhs.clone();
    Ok((finish(raw)?, vec![cert]))
}
