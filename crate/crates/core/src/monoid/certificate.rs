use std::fmt;

use super::element::Element;
use super::presentation::MonoidPresentation;
use crate::name::Label;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `context + lhs  ->  context + rhs`
    Forward,
    /// `context + rhs  ->  context + lhs`
    Backward,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

/// One application of a labelled relation inside an untouched context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub label: Label,
    pub direction: Direction,
    pub context: Element,
}

/// A replayable chain of single-relation rewrites from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EqualityCertificate {
    pub start: Element,
    pub end: Element,
    pub steps: Vec<Step>,
}

impl EqualityCertificate {
    /// The empty chain witnessing `e = e`.
    pub fn reflexive(e: Element) -> Self {
        EqualityCertificate {
            start: e.clone(),
            end: e,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The same chain read backwards.
    pub fn reversed(&self) -> Self {
        EqualityCertificate {
            start: self.end.clone(),
            end: self.start.clone(),
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step {
                    label: s.label.clone(),
                    direction: s.direction.flipped(),
                    context: s.context.clone(),
                })
                .collect(),
        }
    }

    /// Concatenates `self: a -> b` with `next: b -> c`.
    pub fn then(&self, next: &EqualityCertificate) -> Option<Self> {
        if self.end != next.start {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        Some(EqualityCertificate {
            start: self.start.clone(),
            end: next.end.clone(),
            steps,
        })
    }

    /// The chain `a + c -> b + c` obtained by adding `c` to every context.
    pub fn shifted(&self, c: &Element) -> Self {
        EqualityCertificate {
            start: self.start.plus(c),
            end: self.end.plus(c),
            steps: self
                .steps
                .iter()
                .map(|s| Step {
                    label: s.label.clone(),
                    direction: s.direction,
                    context: s.context.plus(c),
                })
                .collect(),
        }
    }

    /// Appends one step to a chain, computing the new end point. Returns
    /// `None` if the step does not apply.
    pub fn push_step(&mut self, p: &MonoidPresentation, step: Step) -> Option<()> {
        let next = apply_step(p, &self.end, &step)?;
        self.end = next;
        self.steps.push(step);
        Some(())
    }

    pub fn display_in<'a>(&'a self, p: &'a MonoidPresentation) -> CertificateDisplay<'a> {
        CertificateDisplay { cert: self, p }
    }
}

/// Applies one step to `current`, checking that `current` is exactly the
/// step's context plus the consumed side.
pub fn apply_step(p: &MonoidPresentation, current: &Element, step: &Step) -> Option<Element> {
    let r = p.relation(step.label.as_str())?;
    let (from, to) = match step.direction {
        Direction::Forward => (&r.lhs, &r.rhs),
        Direction::Backward => (&r.rhs, &r.lhs),
    };
    if &step.context.plus(from) != current {
        return None;
    }
    Some(step.context.plus(to))
}

/// Replays a certificate against `p` without any search.
pub fn verify_certificate(p: &MonoidPresentation, c: &EqualityCertificate) -> bool {
    let mut current = c.start.clone();
    for step in &c.steps {
        match apply_step(p, &current, step) {
            Some(next) => current = next,
            None => return false,
        }
    }
    current == c.end
}

pub struct CertificateDisplay<'a> {
    cert: &'a EqualityCertificate,
    p: &'a MonoidPresentation,
}

impl fmt::Display for CertificateDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use super::element::ElementStyle::Spaced;
        let order = self.p.generators();
        write!(
            f,
            "certificate: {} ~> {} ({} step{})",
            self.cert.start.display_in(order, Spaced),
            self.cert.end.display_in(order, Spaced),
            self.cert.steps.len(),
            if self.cert.steps.len() == 1 { "" } else { "s" }
        )?;
        let mut current = self.cert.start.clone();
        for (k, step) in self.cert.steps.iter().enumerate() {
            let next = apply_step(self.p, &current, step);
            write!(
                f,
                "\n  {}. {} {}, context {}: {} -> ",
                k + 1,
                step.label,
                step.direction,
                step.context.display_in(order, Spaced),
                current.display_in(order, Spaced),
            )?;
            match next {
                Some(n) => {
                    write!(f, "{}", n.display_in(order, Spaced))?;
                    current = n;
                }
                None => f.write_str("<invalid step>")?,
            }
        }
        Ok(())
    }
}
