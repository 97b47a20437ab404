use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::certificate::{Direction, EqualityCertificate, Step};
use super::element::Element;
use super::presentation::MonoidPresentation;
use super::MonoidError;
use crate::name::Name;

/// Outcome of a bounded equality search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Congruence {
    Equal(EqualityCertificate),
    /// No chain inside the degree bound. This is not a proof of inequality.
    NotEqualUpToBound,
}

impl Congruence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Congruence::Equal(_))
    }

    pub fn certificate(&self) -> Option<&EqualityCertificate> {
        match self {
            Congruence::Equal(c) => Some(c),
            Congruence::NotEqualUpToBound => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Superfluity {
    Superfluous(EqualityCertificate),
    UnknownAtBound,
}

type State = Vec<u32>;

struct Rule {
    label: usize,
    direction: Direction,
    from: State,
    to: State,
}

/// Dense coordinates over the declared generators.
struct Space<'a> {
    gens: &'a [Name],
    rules: Vec<Rule>,
    labels: Vec<Name>,
}

impl<'a> Space<'a> {
    fn new(p: &'a MonoidPresentation) -> Self {
        let gens = p.generators();
        let mut rules = Vec::new();
        let mut labels = Vec::new();
        for (k, r) in p.relations().iter().enumerate() {
            labels.push(r.label.clone());
            let lhs = dense(gens, &r.lhs);
            let rhs = dense(gens, &r.rhs);
            rules.push(Rule {
                label: k,
                direction: Direction::Forward,
                from: lhs.clone(),
                to: rhs.clone(),
            });
            rules.push(Rule {
                label: k,
                direction: Direction::Backward,
                from: rhs,
                to: lhs,
            });
        }
        Space {
            gens,
            rules,
            labels,
        }
    }

    fn sparse(&self, s: &[u32]) -> Element {
        Element::from_terms(
            self.gens
                .iter()
                .zip(s)
                .filter(|(_, &m)| m > 0)
                .map(|(x, &m)| (x.clone(), m as u64)),
        )
    }

    /// Successors of `s` with total degree at most `bound`, sorted by
    /// (degree, coordinates) and then by rule order.
    fn successors(&self, s: &[u32], bound: u64) -> Vec<(State, usize)> {
        let deg: u64 = s.iter().map(|&m| m as u64).sum();
        let mut out = Vec::new();
        for (k, rule) in self.rules.iter().enumerate() {
            if rule.from.iter().zip(s).any(|(f, m)| f > m) {
                continue;
            }
            let from_deg: u64 = rule.from.iter().map(|&m| m as u64).sum();
            let to_deg: u64 = rule.to.iter().map(|&m| m as u64).sum();
            if deg - from_deg + to_deg > bound {
                continue;
            }
            let next: State = s
                .iter()
                .zip(&rule.from)
                .zip(&rule.to)
                .map(|((m, f), t)| m - f + t)
                .collect();
            out.push((next, k));
        }
        out.sort_by(|(a, ka), (b, kb)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            (da, a, ka).cmp(&(db, b, kb))
        });
        out
    }
}

fn dense(gens: &[Name], e: &Element) -> State {
    gens.iter()
        .map(|x| e.multiplicity(x.as_str()) as u32)
        .collect()
}

/// Bounded search for a chain of relation applications from `a` to `b`.
///
/// Every element visited has total degree at most `degree_bound`. The search
/// runs breadth-first from both ends at once, expanding the smaller frontier a
/// level at a time. Results are deterministic.
pub fn congruence_equal(
    p: &MonoidPresentation,
    a: &Element,
    b: &Element,
    degree_bound: u64,
) -> Result<Congruence, MonoidError> {
    p.check_element(a)?;
    p.check_element(b)?;
    let degree = a.degree().max(b.degree());
    if degree_bound < degree {
        return Err(MonoidError::BoundTooSmall {
            bound: degree_bound,
            degree,
        });
    }
    if a == b {
        return Ok(Congruence::Equal(EqualityCertificate::reflexive(a.clone())));
    }

    let space = Space::new(p);
    let start = dense(space.gens, a);
    let goal = dense(space.gens, b);

    // parent links: state -> (previous state, rule index); roots map to None
    let mut fwd: HashMap<State, Option<(State, usize)>> = HashMap::new();
    let mut bwd: HashMap<State, Option<(State, usize)>> = HashMap::new();
    fwd.insert(start.clone(), None);
    bwd.insert(goal.clone(), None);
    let mut fwd_frontier = vec![start];
    let mut bwd_frontier = vec![goal];

    let meeting = loop {
        if fwd_frontier.is_empty() || bwd_frontier.is_empty() {
            return Ok(Congruence::NotEqualUpToBound);
        }
        let forward = fwd_frontier.len() <= bwd_frontier.len();
        let (frontier, seen, other) = if forward {
            (&mut fwd_frontier, &mut fwd, &bwd)
        } else {
            (&mut bwd_frontier, &mut bwd, &fwd)
        };
        let mut next_frontier = Vec::new();
        let mut found: Option<State> = None;
        for s in frontier.iter() {
            for (t, k) in space.successors(s, degree_bound) {
                if let Entry::Vacant(slot) = seen.entry(t.clone()) {
                    slot.insert(Some((s.clone(), k)));
                    if other.contains_key(&t) && found.is_none() {
                        found = Some(t.clone());
                    }
                    next_frontier.push(t);
                }
            }
            if found.is_some() {
                break;
            }
        }
        if let Some(m) = found {
            break m;
        }
        *frontier = next_frontier;
    };

    let mut steps = chain_to(&space, &fwd, &meeting);
    let mut back = chain_to(&space, &bwd, &meeting);
    back.reverse();
    for step in back {
        steps.push(Step {
            direction: step.direction.flipped(),
            ..step
        });
    }
    Ok(Congruence::Equal(EqualityCertificate {
        start: a.clone(),
        end: b.clone(),
        steps,
    }))
}

/// Steps from the root of `tree` to `target`, in order.
fn chain_to(
    space: &Space<'_>,
    tree: &HashMap<State, Option<(State, usize)>>,
    target: &State,
) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut cur = target.clone();
    while let Some(Some((prev, k))) = tree.get(&cur) {
        let rule = &space.rules[*k];
        let context: State = prev.iter().zip(&rule.from).map(|(m, f)| m - f).collect();
        steps.push(Step {
            label: space.labels[rule.label].clone(),
            direction: rule.direction,
            context: space.sparse(&context),
        });
        cur = prev.clone();
    }
    steps.reverse();
    steps
}

/// Decides, up to the bound, whether the labelled relation already follows
/// from the others.
pub fn is_superfluous(
    p: &MonoidPresentation,
    label: &str,
    degree_bound: u64,
) -> Result<Superfluity, MonoidError> {
    let rest = p.without_relation(label)?;
    let r = p.relation(label).expect("checked by without_relation");
    let bound = degree_bound.max(r.lhs.degree()).max(r.rhs.degree());
    Ok(match congruence_equal(&rest, &r.lhs, &r.rhs, bound)? {
        Congruence::Equal(c) => Superfluity::Superfluous(c),
        Congruence::NotEqualUpToBound => Superfluity::UnknownAtBound,
    })
}
