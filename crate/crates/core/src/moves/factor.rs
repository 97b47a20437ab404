use crate::monoid::{Direction, Element, EqualityCertificate, Step};
use crate::name::GeneratorId;
use crate::structures::BergmanPresentation;

use super::{relation_of, require_basic, Evidence, Move, MoveError, MoveSequence};

/// The chain `e -> e[x ↦ b]` applying `label: x = b` forward once per copy
/// of `x`.
fn unfold(
    label: &crate::name::Label,
    x: &GeneratorId,
    b: &Element,
    e: &Element,
) -> EqualityCertificate {
    let mut cert = EqualityCertificate::reflexive(e.clone());
    let single = Element::generator(x.clone());
    for _ in 0..e.multiplicity(x.as_str()) {
        let context = cert
            .end
            .checked_minus(&single)
            .expect("a copy of x remains");
        cert.end = context.plus(b);
        cert.steps.push(Step {
            label: label.clone(),
            direction: Direction::Forward,
            context,
        });
    }
    cert
}

/// Collapsing as red shifts followed by one lonely elimination.
///
/// Every other relation mentioning `x` is red-shifted to its substituted
/// form, with certificates that apply `label` forward; `x` is then lonely.
pub fn factor_collapse(
    p: &BergmanPresentation,
    x: &str,
    label: &str,
) -> Result<MoveSequence, MoveError> {
    require_basic(p)?;
    let (i, r) = relation_of(p, label)?;
    let gen = r
        .lhs
        .as_single_generator()
        .filter(|g| g.as_str() == x)
        .ok_or_else(|| MoveError::Precondition(format!("lhs of `{label}` is not `{x}`")))?
        .clone();
    if r.rhs.contains_generator(x) {
        return Err(MoveError::Precondition(format!(
            "`{x}` is a summand of the rhs of `{label}`"
        )));
    }
    let b = r.rhs.clone();
    let rel_label = r.label.clone();
    let mut seq = MoveSequence::new(p.clone());
    for (j, other) in p.relations().iter().enumerate() {
        if j == i || !other.mentions(x) {
            continue;
        }
        let c_lhs = unfold(&rel_label, &gen, &b, &other.lhs);
        let c_rhs = unfold(&rel_label, &gen, &b, &other.rhs);
        let mv = Move::RedShift {
            label: other.label.clone(),
            lhs: c_lhs.end.clone(),
            rhs: c_rhs.end.clone(),
        };
        seq.push(mv, &Evidence::Certificates(vec![c_lhs, c_rhs]))?;
    }
    seq.push(
        Move::LonelyEliminate { generator: gen },
        &Evidence::Certificates(Vec::new()),
    )?;
    Ok(seq)
}

/// Undoes an insplit as `t - 1` red shifts followed by `t - 1` collapses.
///
/// `split` is the insplit output, `x1` and `label` its split generator and
/// relation, `names` the generators `x_2, ..., x_t` it introduced. For each
/// `p ≥ 2` the relation `x_p = b'` is shifted to `x_p = x_1` (the rhs
/// certificate applies `label: x_1 = b'` backward) and then collapsed.
pub fn factor_insplit(
    split: &BergmanPresentation,
    x1: &str,
    label: &str,
    names: &[GeneratorId],
) -> Result<MoveSequence, MoveError> {
    require_basic(split)?;
    let (_, r1) = relation_of(split, label)?;
    let g1 = r1
        .lhs
        .as_single_generator()
        .filter(|g| g.as_str() == x1)
        .ok_or_else(|| MoveError::Precondition(format!("lhs of `{label}` is not `{x1}`")))?
        .clone();
    let b_prime = r1.rhs.clone();
    let label1 = r1.label.clone();

    let mut copies = Vec::new();
    for x in names {
        let rel = split
            .relations()
            .iter()
            .find(|c| c.lhs.as_single_generator() == Some(x))
            .ok_or_else(|| MoveError::Precondition(format!("no relation has lhs `{x}`")))?;
        if rel.rhs != b_prime {
            return Err(MoveError::Precondition(format!(
                "relation `{}` does not share the rhs of `{label}`",
                rel.label
            )));
        }
        copies.push((x.clone(), rel.label.clone()));
    }

    let mut seq = MoveSequence::new(split.clone());
    let target = Element::generator(g1.clone());
    for (x, l) in &copies {
        let c_lhs = EqualityCertificate::reflexive(Element::generator(x.clone()));
        let c_rhs = EqualityCertificate {
            start: b_prime.clone(),
            end: target.clone(),
            steps: vec![Step {
                label: label1.clone(),
                direction: Direction::Backward,
                context: Element::zero(),
            }],
        };
        let mv = Move::RedShift {
            label: l.clone(),
            lhs: Element::generator(x.clone()),
            rhs: target.clone(),
        };
        seq.push(mv, &Evidence::Certificates(vec![c_lhs, c_rhs]))?;
    }
    for (x, l) in copies {
        seq.push(
            Move::Collapse {
                generator: x,
                label: l,
            },
            &Evidence::Certificates(Vec::new()),
        )?;
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::testing::{bp, n};
    use crate::moves::{collapse, insplit, MoveKind};

    #[test]
    fn collapse_example_is_one_shift_and_one_elimination() {
        let p = bp(
            "u v w",
            &[
                ('r', "e", "u", "u + w"),
                ('r', "f", "w", "u"),
                ('r', "h", "v", "u + w"),
                ('r', "g", "v", "w + v"),
            ],
        );
        let seq = factor_collapse(&p, "v", "h").unwrap();
        assert_eq!(
            seq.kinds(),
            vec![MoveKind::RedShift, MoveKind::LonelyEliminate]
        );
        assert_eq!(seq.current(), &collapse(&p, "v", "h").unwrap());
        assert_eq!(seq.replay().unwrap(), *seq.current());
    }

    #[test]
    fn collapse_of_isolated_generator() {
        let p = bp("a b", &[('r', "r", "a", "2b")]);
        let seq = factor_collapse(&p, "a", "r").unwrap();
        assert_eq!(seq.kinds(), vec![MoveKind::LonelyEliminate]);
    }

    #[test]
    fn collapse_into_three_relations() {
        let p = bp(
            "x a b",
            &[
                ('r', "d", "x", "a + b"),
                ('r', "p", "2x", "a"),
                ('r', "q", "b", "x + a"),
                ('r', "s", "x + b", "3x"),
            ],
        );
        let seq = factor_collapse(&p, "x", "d").unwrap();
        assert_eq!(seq.records.len(), 4);
        assert_eq!(seq.current(), &collapse(&p, "x", "d").unwrap());
    }

    #[test]
    fn insplit_example_is_two_shifts_and_two_collapses() {
        let p = bp(
            "u x v1 w",
            &[('r', "g", "u + x", "x + 2 v1"), ('r', "h1", "v1", "v1 + w")],
        );
        let partition = vec![vec![(n("g"), 1)], vec![(n("g"), 2)], vec![(n("h1"), 1)]];
        let names = [n("v2"), n("v3")];
        let split = insplit(&p, "v1", "h1", &partition, &names).unwrap();
        let seq = factor_insplit(&split, "v1", "h1", &names).unwrap();
        assert_eq!(
            seq.kinds(),
            vec![
                MoveKind::RedShift,
                MoveKind::RedShift,
                MoveKind::Collapse,
                MoveKind::Collapse
            ]
        );
        assert_eq!(seq.current(), &p);
        assert_eq!(seq.replay().unwrap(), p);
    }

    #[test]
    fn trivial_insplit_has_empty_factorisation() {
        let p = bp("a b", &[('r', "r", "a", "a + b")]);
        let seq = factor_insplit(&p, "a", "r", &[]).unwrap();
        assert!(seq.records.is_empty());
    }
}
