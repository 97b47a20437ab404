use std::collections::BTreeSet;
use std::fmt;

use super::element::{Element, ElementStyle};
use super::MonoidError;
use crate::name::{GeneratorId, Label};

/// A labelled relation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub label: Label,
    pub lhs: Element,
    pub rhs: Element,
}

impl Relation {
    pub fn new(label: Label, lhs: Element, rhs: Element) -> Self {
        Relation { label, lhs, rhs }
    }

    pub fn mentions(&self, x: &str) -> bool {
        self.lhs.contains_generator(x) || self.rhs.contains_generator(x)
    }
}

/// A finite and good abelian monoid presentation `⟨X | R⟩`.
///
/// Generators and relations keep declaration order. Every relation side is
/// nonzero and only uses declared generators; labels are unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidPresentation {
    generators: Vec<GeneratorId>,
    relations: Vec<Relation>,
}

impl MonoidPresentation {
    pub fn new(
        generators: Vec<GeneratorId>,
        relations: Vec<Relation>,
    ) -> Result<Self, MonoidError> {
        let mut seen = BTreeSet::new();
        for x in &generators {
            if !seen.insert(x.clone()) {
                return Err(MonoidError::DuplicateGenerator(x.clone()));
            }
        }
        let mut labels = BTreeSet::new();
        for r in &relations {
            if !labels.insert(r.label.clone()) {
                return Err(MonoidError::DuplicateLabel(r.label.clone()));
            }
            if r.lhs.is_zero() || r.rhs.is_zero() {
                return Err(MonoidError::ZeroSide(r.label.clone()));
            }
            for x in r.lhs.support().chain(r.rhs.support()) {
                if !seen.contains(x) {
                    return Err(MonoidError::UndeclaredGenerator(x.clone()));
                }
            }
        }
        Ok(MonoidPresentation {
            generators,
            relations,
        })
    }

    /// The free abelian monoid on `generators`.
    pub fn free(generators: Vec<GeneratorId>) -> Result<Self, MonoidError> {
        MonoidPresentation::new(generators, Vec::new())
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, label: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.label.as_str() == label)
    }

    pub fn has_generator(&self, x: &str) -> bool {
        self.generators.iter().any(|g| g.as_str() == x)
    }

    /// Checks that `e` only uses declared generators.
    pub fn check_element(&self, e: &Element) -> Result<(), MonoidError> {
        match e.support().find(|x| !self.has_generator(x.as_str())) {
            Some(x) => Err(MonoidError::UndeclaredGenerator(x.clone())),
            None => Ok(()),
        }
    }

    /// The presentation with the labelled relation removed.
    pub fn without_relation(&self, label: &str) -> Result<Self, MonoidError> {
        if self.relation(label).is_none() {
            return Err(MonoidError::UnknownLabel(label.to_string()));
        }
        Ok(MonoidPresentation {
            generators: self.generators.clone(),
            relations: self
                .relations
                .iter()
                .filter(|r| r.label.as_str() != label)
                .cloned()
                .collect(),
        })
    }

    /// Largest degree of any relation side (zero if there are none).
    pub fn max_side_degree(&self) -> u64 {
        self.relations
            .iter()
            .map(|r| r.lhs.degree().max(r.rhs.degree()))
            .max()
            .unwrap_or(0)
    }

    /// Default search cap for deciding `a = b`:
    /// `max(deg a, deg b) + 16 · (max relation-side degree)`.
    pub fn default_bound(&self, a: &Element, b: &Element) -> u64 {
        a.degree().max(b.degree()) + 2 * self.max_side_degree() * 8
    }

    /// Relations as unordered-label pairs, for comparing presentations that
    /// differ only in labels and relation order.
    pub fn relation_multiset(&self) -> Vec<(Element, Element)> {
        let mut out: Vec<_> = self
            .relations
            .iter()
            .map(|r| (r.lhs.clone(), r.rhs.clone()))
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for MonoidPresentation {
    /// `⟨u,v | u = u+v⟩`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (k, x) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(" | ")?;
        for (k, r) in self.relations.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{} = {}",
                r.lhs.display_in(&self.generators, ElementStyle::Compact),
                r.rhs.display_in(&self.generators, ElementStyle::Compact)
            )?;
        }
        f.write_str("⟩")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Name;

    fn n(s: &str) -> Name {
        Name::new(s).unwrap()
    }

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn renders_compact_form() {
        let p = MonoidPresentation::new(
            vec![n("u"), n("v")],
            vec![Relation::new(n("h"), e("u"), e("u + v"))],
        )
        .unwrap();
        assert_eq!(p.to_string(), "⟨u,v | u = u+v⟩");
        let q = MonoidPresentation::new(
            vec![n("v")],
            vec![Relation::new(n("h"), e("2 v"), e("3 v"))],
        )
        .unwrap();
        assert_eq!(q.to_string(), "⟨v | 2v = 3v⟩");
    }

    #[test]
    fn rejects_bad_presentations() {
        assert_eq!(
            MonoidPresentation::new(vec![n("u"), n("u")], vec![]),
            Err(MonoidError::DuplicateGenerator(n("u")))
        );
        assert_eq!(
            MonoidPresentation::new(vec![n("u")], vec![Relation::new(n("r"), e("u"), e("w"))]),
            Err(MonoidError::UndeclaredGenerator(n("w")))
        );
        assert_eq!(
            MonoidPresentation::new(
                vec![n("u")],
                vec![Relation::new(n("r"), e("u"), Element::zero())]
            ),
            Err(MonoidError::ZeroSide(n("r")))
        );
        assert_eq!(
            MonoidPresentation::new(
                vec![n("u")],
                vec![
                    Relation::new(n("r"), e("u"), e("u")),
                    Relation::new(n("r"), e("u"), e("2u"))
                ]
            ),
            Err(MonoidError::DuplicateLabel(n("r")))
        );
    }
}
