use std::collections::BTreeMap;

use crate::monoid::{
    apply_tietze, congruence_equal, Direction, Element, EqualityCertificate,
    Evidence as TietzeEvidence, MonoidPresentation, Relation, Step, TietzeTransformation,
};
use crate::name::{fresh_name, Label, Name};

use super::{Move, MoveError, MoveRecord};

/// Generator maps between the monoids of a move's input and output.
/// Generators missing from a map are sent to themselves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Correspondence {
    /// input generators to output elements
    pub forward: BTreeMap<Name, Element>,
    /// output generators to input elements
    pub backward: BTreeMap<Name, Element>,
}

/// The documented correspondence for each kind of move.
pub fn vmonoid_correspondence(rec: &MoveRecord) -> Correspondence {
    let mut c = Correspondence::default();
    let input = &rec.input;
    let defining = |x: &Name| -> Element {
        input
            .relations()
            .iter()
            .find(|r| r.lhs.as_single_generator() == Some(x))
            .map(|r| r.rhs.clone())
            .expect("move preconditions give x a defining relation")
    };
    match &rec.mv {
        Move::RedShift { .. } | Move::BlueShift { .. } => {}
        Move::Enqueue { label } => {
            let r = input.relation(label.as_str()).expect("recorded move");
            let x = r.lhs.as_single_generator().expect("enqueue lhs").clone();
            c.forward.insert(x, r.rhs.clone());
        }
        Move::LonelyEliminate { generator } => {
            c.forward.insert(generator.clone(), defining(generator));
        }
        Move::Collapse { generator, label } => {
            let r = input.relation(label.as_str()).expect("recorded move");
            c.forward.insert(generator.clone(), r.rhs.clone());
        }
        Move::Outsplit { parts, names, .. } => {
            for (x, part) in names.iter().zip(parts) {
                c.backward.insert(x.clone(), part.clone());
            }
        }
        Move::Extend { generator, rhs, .. } => {
            c.backward.insert(generator.clone(), rhs.clone());
        }
        Move::Insplit {
            generator, names, ..
        } => {
            for x in names {
                c.backward
                    .insert(x.clone(), Element::generator(generator.clone()));
            }
        }
    }
    c
}

/// Certificates that each relation on one side holds on the other side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowReport {
    /// input relations, mapped forward, checked in the output monoid
    pub forward: Vec<(Label, Option<EqualityCertificate>)>,
    /// output relations, mapped backward, checked in the input monoid
    pub backward: Vec<(Label, Option<EqualityCertificate>)>,
}

impl ShadowReport {
    pub fn holds(&self) -> bool {
        self.forward
            .iter()
            .chain(&self.backward)
            .all(|(_, c)| c.is_some())
    }

    pub fn failures(&self) -> Vec<&Label> {
        self.forward
            .iter()
            .chain(&self.backward)
            .filter(|(_, c)| c.is_none())
            .map(|(l, _)| l)
            .collect()
    }
}

fn transport_all(
    from: &MonoidPresentation,
    to: &MonoidPresentation,
    map: &BTreeMap<Name, Element>,
    bound: u64,
) -> Result<Vec<(Label, Option<EqualityCertificate>)>, MoveError> {
    from.relations()
        .iter()
        .map(|r| {
            let a = r.lhs.map_generators(map);
            let b = r.rhs.map_generators(map);
            let n = bound.max(a.degree()).max(b.degree());
            let c = congruence_equal(to, &a, &b, n)?;
            Ok((r.label.clone(), c.certificate().cloned()))
        })
        .collect()
}

/// Checks that the input and output monoids derive each other's relations
/// under the move's correspondence. The bound is raised to the degree of a
/// transported relation where that is larger.
pub fn vmonoid_shadow(rec: &MoveRecord, bound: u64) -> Result<ShadowReport, MoveError> {
    let c = vmonoid_correspondence(rec);
    let m_in = rec.input.monoid();
    let m_out = rec.output.monoid();
    Ok(ShadowReport {
        forward: transport_all(&m_in, &m_out, &c.forward, bound)?,
        backward: transport_all(&m_out, &m_in, &c.backward, bound)?,
    })
}

/// Replays a red shift as a Tietze addition (C) of the new relation followed
/// by a removal (D) of the old one, each justified by a certificate built
/// from the shift's own certificates. Returns the two transformations and
/// the resulting monoid presentation.
pub fn red_shift_as_tietze(
    rec: &MoveRecord,
) -> Result<(Vec<TietzeTransformation>, MonoidPresentation), MoveError> {
    let Move::RedShift { label, lhs, rhs } = &rec.mv else {
        return Err(MoveError::Precondition("not a red shift".into()));
    };
    let [c_lhs, c_rhs] = rec.certificates.as_slice() else {
        return Err(MoveError::BadCertificate(
            "a red shift carries two certificates".into(),
        ));
    };
    let m = rec.input.monoid();
    let old = m.relation(label.as_str()).expect("recorded move").clone();
    let new_label = fresh_name(label.as_str(), |c| m.relation(c).is_some());
    let apply = |l: &Label, direction| EqualityCertificate {
        start: Element::zero(),
        end: Element::zero(),
        steps: vec![Step {
            label: l.clone(),
            direction,
            context: Element::zero(),
        }],
    };

    // a ~> a_i -> b_i ~> b, in the input presentation
    let mut add = c_lhs.reversed();
    add.steps.extend(apply(label, Direction::Forward).steps);
    add.steps.extend(c_rhs.steps.iter().cloned());
    add.end = rhs.clone();
    let c = TietzeTransformation::AddRelation {
        relation: Relation::new(new_label.clone(), lhs.clone(), rhs.clone()),
        evidence: TietzeEvidence::Certificate(add),
    };
    let (with_both, _) = apply_tietze(&m, &c)?;

    // a_i ~> a -> b ~> b_i, without the old relation
    let mut remove = c_lhs.clone();
    remove
        .steps
        .extend(apply(&new_label, Direction::Forward).steps);
    remove.steps.extend(c_rhs.reversed().steps);
    remove.end = old.rhs.clone();
    let d = TietzeTransformation::RemoveRelation {
        label: label.clone(),
        evidence: TietzeEvidence::Certificate(remove),
    };
    let (result, _) = apply_tietze(&with_both, &d)?;

    let expected = rec.output.monoid();
    if result.generators() != expected.generators()
        || result.relation_multiset() != expected.relation_multiset()
    {
        return Err(MoveError::Precondition(
            "Tietze replay differs from the red shift output".into(),
        ));
    }
    Ok((vec![c, d], result))
}
