use std::collections::BTreeSet;

use crate::monoid::Element;
use crate::name::{GeneratorId, Label};
use crate::structures::{BergmanPresentation, Colour, ColouredRelation};

use super::{finish, pick_label, relation_of, require_basic, MoveError, SplitIndex};

fn check_new_names(p: &BergmanPresentation, names: &[GeneratorId]) -> Result<(), MoveError> {
    let mut seen = BTreeSet::new();
    for x in names {
        if p.has_generator(x.as_str()) || !seen.insert(x) {
            return Err(MoveError::NameClash(x.clone()));
        }
    }
    Ok(())
}

/// Splits red relation `label: a = b` with `a = c_1 + ... + c_t` into a blue
/// relation `b = x_1 + ... + x_t` and red relations `c_p = x_p`.
///
/// The new generators are appended; the blue relation is labelled
/// `{label}_0` and the red ones `{label}_1, ..., {label}_t`, falling back to
/// a fresh suffix on a clash.
pub fn outsplit(
    p: &BergmanPresentation,
    label: &str,
    parts: &[Element],
    names: &[GeneratorId],
) -> Result<BergmanPresentation, MoveError> {
    let (k, r) = relation_of(p, label)?;
    if r.colour != Colour::Red {
        return Err(MoveError::WrongColour {
            label: r.label.clone(),
            expected: Colour::Red,
        });
    }
    if parts.len() < 2 {
        return Err(MoveError::Precondition(
            "outsplitting needs at least two parts".into(),
        ));
    }
    if parts.iter().any(|c| c.is_zero()) {
        return Err(MoveError::ZeroSide);
    }
    let sum = parts.iter().fold(Element::zero(), |acc, c| acc.plus(c));
    if sum != r.lhs {
        return Err(MoveError::Precondition(format!(
            "the parts do not sum to the lhs of `{label}`"
        )));
    }
    if names.len() != parts.len() {
        return Err(MoveError::Precondition(format!(
            "{} parts but {} new generator names",
            parts.len(),
            names.len()
        )));
    }
    check_new_names(p, names)?;

    let mut raw = p.to_raw();
    let old = raw.relations.remove(k);
    raw.generators.extend(names.iter().cloned());
    let mut used: BTreeSet<String> = raw.relations.iter().map(|r| r.label.to_string()).collect();
    let mut label_for = |suffix: usize| {
        let l = pick_label(&|c: &str| used.contains(c), &format!("{label}_{suffix}"));
        used.insert(l.to_string());
        l
    };
    let blue_label = label_for(0);
    raw.relations.push(ColouredRelation::blue(
        blue_label,
        old.rhs.clone(),
        Element::from_generators(names.iter().cloned()),
    ));
    for (p_idx, (c, x)) in parts.iter().zip(names).enumerate() {
        let l = label_for(p_idx + 1);
        raw.relations.push(ColouredRelation::red(
            l,
            c.clone(),
            Element::generator(x.clone()),
        ));
    }
    finish(raw)
}

/// The set `S` of copies of `x` inside relation right-hand sides, in relation
/// order.
pub fn insplit_index_set(p: &BergmanPresentation, x: &str) -> Vec<SplitIndex> {
    p.relations()
        .iter()
        .flat_map(|r| (1..=r.rhs.multiplicity(x)).map(move |k| (r.label.clone(), k)))
        .collect()
}

/// Splits `x_1` (the lhs of `label`) into `t` generators according to a
/// partition of its occurrences in right-hand sides.
///
/// `names` are the new generators `x_2, ..., x_t`, inserted right after
/// `x_1`. Relation `label` becomes `t` relations `x_p = b'_i`: the first keeps
/// the label and the others, labelled `{label}_p`, follow it directly.
pub fn insplit(
    p: &BergmanPresentation,
    x1: &str,
    label: &str,
    partition: &[Vec<SplitIndex>],
    names: &[GeneratorId],
) -> Result<BergmanPresentation, MoveError> {
    require_basic(p)?;
    let (i, r) = relation_of(p, label)?;
    if r.lhs.as_single_generator().map(|g| g.as_str()) != Some(x1) {
        return Err(MoveError::Precondition(format!(
            "lhs of `{label}` is not `{x1}`"
        )));
    }
    if let Some(other) = p
        .relations()
        .iter()
        .enumerate()
        .find(|(j, o)| *j != i && o.lhs.contains_generator(x1))
    {
        return Err(MoveError::Precondition(format!(
            "`{x1}` is a summand of the lhs of `{}`",
            other.1.label
        )));
    }
    let s = insplit_index_set(p, x1);
    if s.is_empty() {
        return Err(MoveError::Precondition(format!(
            "`{x1}` occurs in no right-hand side"
        )));
    }
    let t = partition.len();
    if partition.iter().any(|part| part.is_empty()) {
        return Err(MoveError::Precondition(
            "partition has an empty part".into(),
        ));
    }
    let mut covered = BTreeSet::new();
    for part in partition {
        for idx in part {
            if !s.contains(idx) {
                return Err(MoveError::Precondition(format!(
                    "({},{}) is not in the index set",
                    idx.0, idx.1
                )));
            }
            if !covered.insert(idx.clone()) {
                return Err(MoveError::Precondition(format!(
                    "({},{}) appears twice",
                    idx.0, idx.1
                )));
            }
        }
    }
    if covered.len() != s.len() {
        return Err(MoveError::Precondition(
            "partition does not cover the index set".into(),
        ));
    }
    if names.len() + 1 != t {
        return Err(MoveError::Precondition(format!(
            "{t} parts need {} new names",
            t - 1
        )));
    }
    check_new_names(p, names)?;

    let x_of = |part: usize| -> GeneratorId {
        if part == 0 {
            r.lhs.as_single_generator().expect("checked").clone()
        } else {
            names[part - 1].clone()
        }
    };
    let phi = |idx: &SplitIndex| {
        partition
            .iter()
            .position(|part| part.contains(idx))
            .expect("covered")
    };
    let split_rhs = |rel: &ColouredRelation| -> Element {
        let mut out = rel.rhs.clone();
        let n = out.remove_generator(x1);
        for k in 1..=n {
            out.add_generator(x_of(phi(&(rel.label.clone(), k))), 1);
        }
        out
    };

    let mut raw = p.to_raw();
    let pos = raw
        .generators
        .iter()
        .position(|g| g.as_str() == x1)
        .expect("x1 declared");
    for (off, x) in names.iter().enumerate() {
        raw.generators.insert(pos + 1 + off, x.clone());
    }
    let b_prime = split_rhs(r);
    let mut relations = Vec::with_capacity(raw.relations.len() + t - 1);
    let mut used: BTreeSet<String> = p.relations().iter().map(|r| r.label.to_string()).collect();
    for (j, rel) in p.relations().iter().enumerate() {
        if j != i {
            relations.push(ColouredRelation::red(
                rel.label.clone(),
                rel.lhs.clone(),
                split_rhs(rel),
            ));
            continue;
        }
        relations.push(ColouredRelation::red(
            rel.label.clone(),
            rel.lhs.clone(),
            b_prime.clone(),
        ));
        for part in 1..t {
            let l: Label = pick_label(
                &|c: &str| used.contains(c),
                &format!("{label}_{}", part + 1),
            );
            used.insert(l.to_string());
            relations.push(ColouredRelation::red(
                l,
                Element::generator(x_of(part)),
                b_prime.clone(),
            ));
        }
    }
    raw.relations = relations;
    finish(raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::testing::{bp, e, n};

    #[test]
    fn outsplit_first_example() {
        let p = bp("u1 u2 u3", &[('r', "h", "u1 + u2", "u3")]);
        let q = outsplit(&p, "h", &[e("u1"), e("u2")], &[n("v1"), n("v2")]).unwrap();
        assert_eq!(
            q,
            bp(
                "u1 u2 u3 v1 v2",
                &[
                    ('b', "h_0", "u3", "v1 + v2"),
                    ('r', "h_1", "u1", "v1"),
                    ('r', "h_2", "u2", "v2")
                ]
            )
        );
    }

    #[test]
    fn outsplit_second_example() {
        let p = bp("u1 u2 u3 u4", &[('r', "h", "u1 + u2", "u3 + u4")]);
        let q = outsplit(&p, "h", &[e("u1"), e("u2")], &[n("v1"), n("v2")]).unwrap();
        assert_eq!(q.relation("h_0").unwrap().lhs, e("u3 + u4"));
        assert_eq!(q.greedy_ordering(), vec![n("h_0")]);
    }

    #[test]
    fn outsplit_equal_parts() {
        let p = bp("x b", &[('r', "r", "2x", "b")]);
        let q = outsplit(&p, "r", &[e("x"), e("x")], &[n("v1"), n("v2")]).unwrap();
        assert_eq!(q.relation("r_1").unwrap().lhs, e("x"));
        assert_eq!(q.relation("r_2").unwrap().lhs, e("x"));
    }

    #[test]
    fn outsplit_rejections() {
        let p = bp("u1 u2 u3", &[('r', "h", "u1 + u2", "u3")]);
        assert!(outsplit(&p, "h", &[e("u1"), e("u1")], &[n("v1"), n("v2")]).is_err());
        assert!(outsplit(&p, "h", &[e("u1 + u2")], &[n("v1")]).is_err());
        assert!(matches!(
            outsplit(&p, "h", &[e("u1"), e("u2")], &[n("u3"), n("v2")]),
            Err(MoveError::NameClash(_))
        ));
    }

    #[test]
    fn outsplit_label_clash_falls_back() {
        let p = bp(
            "u1 u2 u3",
            &[('r', "h", "u1 + u2", "u3"), ('r', "h_1", "u3", "u3")],
        );
        let q = outsplit(&p, "h", &[e("u1"), e("u2")], &[n("v1"), n("v2")]).unwrap();
        let labels: Vec<&str> = q.relations().iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, vec!["h_1", "h_0", "h_1_1", "h_2"]);
    }

    pub(crate) fn insplit_example() -> BergmanPresentation {
        bp(
            "u x v1 w",
            &[('r', "g", "u + x", "x + 2 v1"), ('r', "h1", "v1", "v1 + w")],
        )
    }

    #[test]
    fn insplit_worked_example() {
        let p = insplit_example();
        assert_eq!(
            insplit_index_set(&p, "v1"),
            vec![(n("g"), 1), (n("g"), 2), (n("h1"), 1)]
        );
        let partition = vec![vec![(n("g"), 1)], vec![(n("g"), 2)], vec![(n("h1"), 1)]];
        let q = insplit(&p, "v1", "h1", &partition, &[n("v2"), n("v3")]).unwrap();
        assert_eq!(
            q,
            bp(
                "u x v1 v2 v3 w",
                &[
                    ('r', "g", "u + x", "x + v1 + v2"),
                    ('r', "h1", "v1", "w + v3"),
                    ('r', "h1_2", "v2", "w + v3"),
                    ('r', "h1_3", "v3", "w + v3"),
                ]
            )
        );
    }

    #[test]
    fn insplit_single_part_is_identity() {
        let p = insplit_example();
        let all = vec![insplit_index_set(&p, "v1")];
        assert_eq!(insplit(&p, "v1", "h1", &all, &[]).unwrap(), p);
    }

    #[test]
    fn insplit_rejections() {
        let p = bp("a b", &[('r', "r", "a", "b")]);
        assert!(insplit(&p, "a", "r", &[], &[]).is_err());
        let q = insplit_example();
        let missing = vec![vec![(n("g"), 1)], vec![(n("g"), 2)]];
        assert!(insplit(&q, "v1", "h1", &missing, &[n("v2")]).is_err());
        let bogus = vec![
            vec![(n("g"), 1), (n("g"), 3)],
            vec![(n("g"), 2), (n("h1"), 1)],
        ];
        assert!(insplit(&q, "v1", "h1", &bogus, &[n("v2")]).is_err());
    }
}
