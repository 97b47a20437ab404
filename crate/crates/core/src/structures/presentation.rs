use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::monoid::{Element, MonoidPresentation, Relation};
use crate::name::{GeneratorId, Label};

use super::{Colour, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColouredRelation {
    pub label: Label,
    pub colour: Colour,
    pub lhs: Element,
    pub rhs: Element,
}

impl ColouredRelation {
    pub fn new(label: Label, colour: Colour, lhs: Element, rhs: Element) -> Self {
        ColouredRelation {
            label,
            colour,
            lhs,
            rhs,
        }
    }

    pub fn blue(label: Label, lhs: Element, rhs: Element) -> Self {
        ColouredRelation::new(label, Colour::Blue, lhs, rhs)
    }

    pub fn red(label: Label, lhs: Element, rhs: Element) -> Self {
        ColouredRelation::new(label, Colour::Red, lhs, rhs)
    }

    pub fn is_blue(&self) -> bool {
        self.colour == Colour::Blue
    }

    pub fn mentions(&self, x: &str) -> bool {
        self.lhs.contains_generator(x) || self.rhs.contains_generator(x)
    }
}

/// A coloured presentation that has not been validated yet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RawPresentation {
    pub generators: Vec<GeneratorId>,
    pub relations: Vec<ColouredRelation>,
}

impl RawPresentation {
    pub fn new(generators: Vec<GeneratorId>, relations: Vec<ColouredRelation>) -> Self {
        RawPresentation {
            generators,
            relations,
        }
    }

    pub fn relation(&self, label: &str) -> Option<&ColouredRelation> {
        self.relations.iter().find(|r| r.label.as_str() == label)
    }
}

/// Checks every clause of the definition and reports all failures.
pub fn validate_presentation(p: &RawPresentation) -> ValidationReport {
    let mut violations = Vec::new();

    let mut declared = BTreeSet::new();
    for x in &p.generators {
        if !declared.insert(x.as_str()) {
            violations.push(Violation::DuplicateGenerator(x.clone()));
        }
    }
    let mut labels = BTreeSet::new();
    for r in &p.relations {
        if !labels.insert(r.label.as_str()) {
            violations.push(Violation::DuplicateLabel(r.label.clone()));
        }
        if r.lhs.is_zero() || r.rhs.is_zero() {
            violations.push(Violation::ZeroSide(r.label.clone()));
        }
        for x in r.lhs.support().chain(r.rhs.support()) {
            if !declared.contains(x.as_str()) {
                violations.push(Violation::UndeclaredGenerator {
                    label: r.label.clone(),
                    generator: x.clone(),
                });
            }
        }
    }

    // clause (i)
    let mut owner: BTreeMap<&str, &Label> = BTreeMap::new();
    for r in p.relations.iter().filter(|r| r.is_blue()) {
        if !r.rhs.is_set() {
            violations.push(Violation::BlueRangeNotSet(r.label.clone()));
        } else if r.rhs.degree() < 2 {
            violations.push(Violation::BlueRangeTooSmall(r.label.clone()));
        }
        for x in r.rhs.support() {
            if let Some(first) = owner.insert(x.as_str(), &r.label) {
                violations.push(Violation::BlueRangesOverlap {
                    first: first.clone(),
                    second: r.label.clone(),
                    generator: x.clone(),
                });
            }
        }
    }

    // clause (ii)
    if let Err(stuck) = greedy_ordering(&p.relations) {
        violations.push(Violation::NoAdmissibleOrdering(stuck));
    }

    ValidationReport { violations }
}

fn blue_range_union(relations: &[ColouredRelation]) -> BTreeSet<&str> {
    relations
        .iter()
        .filter(|r| r.is_blue())
        .flat_map(|r| r.rhs.support().map(|x| x.as_str()))
        .collect()
}

/// Greedy admissibility: repeatedly place the first blue relation (in
/// declaration order) whose lhs uses only available generators. Returns the
/// ordering found, or the blue labels that could never be placed.
fn greedy_ordering(relations: &[ColouredRelation]) -> Result<Vec<Label>, Vec<Label>> {
    let ranges = blue_range_union(relations);
    let available = |x: &str, placed: &BTreeSet<&str>| !ranges.contains(x) || placed.contains(x);
    let mut pending: Vec<&ColouredRelation> = relations.iter().filter(|r| r.is_blue()).collect();
    let mut placed: BTreeSet<&str> = BTreeSet::new();
    let mut order = Vec::new();
    while !pending.is_empty() {
        let next = pending
            .iter()
            .position(|r| r.lhs.support().all(|x| available(x.as_str(), &placed)));
        match next {
            Some(k) => {
                let r = pending.remove(k);
                placed.extend(r.rhs.support().map(|x| x.as_str()));
                order.push(r.label.clone());
            }
            None => return Err(pending.iter().map(|r| r.label.clone()).collect()),
        }
    }
    Ok(order)
}

/// A validated Bergman presentation.
///
/// Generators and relations keep declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BergmanPresentation {
    generators: Vec<GeneratorId>,
    relations: Vec<ColouredRelation>,
}

impl BergmanPresentation {
    pub fn new(raw: RawPresentation) -> Result<Self, ValidationReport> {
        let report = validate_presentation(&raw);
        if !report.is_valid() {
            return Err(report);
        }
        Ok(BergmanPresentation {
            generators: raw.generators,
            relations: raw.relations,
        })
    }

    /// The basic presentation with all relations red.
    pub fn basic(monoid: &MonoidPresentation) -> Self {
        BergmanPresentation {
            generators: monoid.generators().to_vec(),
            relations: monoid
                .relations()
                .iter()
                .map(|r| ColouredRelation::red(r.label.clone(), r.lhs.clone(), r.rhs.clone()))
                .collect(),
        }
    }

    pub fn empty() -> Self {
        BergmanPresentation {
            generators: Vec::new(),
            relations: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn relations(&self) -> &[ColouredRelation] {
        &self.relations
    }

    pub fn relation(&self, label: &str) -> Option<&ColouredRelation> {
        self.relations.iter().find(|r| r.label.as_str() == label)
    }

    pub fn relation_index(&self, label: &str) -> Option<usize> {
        self.relations
            .iter()
            .position(|r| r.label.as_str() == label)
    }

    pub fn has_generator(&self, x: &str) -> bool {
        self.generators.iter().any(|g| g.as_str() == x)
    }

    pub fn has_label(&self, label: &str) -> bool {
        self.relation(label).is_some()
    }

    pub fn blue(&self) -> impl Iterator<Item = &ColouredRelation> {
        self.relations.iter().filter(|r| r.colour == Colour::Blue)
    }

    pub fn red(&self) -> impl Iterator<Item = &ColouredRelation> {
        self.relations.iter().filter(|r| r.colour == Colour::Red)
    }

    pub fn is_basic(&self) -> bool {
        self.blue().next().is_none()
    }

    /// Generators outside every blue range, in declaration order.
    pub fn base_generators(&self) -> Vec<GeneratorId> {
        let ranges = blue_range_union(&self.relations);
        self.generators
            .iter()
            .filter(|x| !ranges.contains(x.as_str()))
            .cloned()
            .collect()
    }

    /// The admissible ordering chosen greedily in declaration order.
    pub fn greedy_ordering(&self) -> Vec<Label> {
        greedy_ordering(&self.relations).expect("validated presentation")
    }

    /// Whether `ordering` lists every blue label once, admissibly.
    pub fn is_admissible(&self, ordering: &[Label]) -> bool {
        let blue: BTreeSet<&str> = self.blue().map(|r| r.label.as_str()).collect();
        let listed: BTreeSet<&str> = ordering.iter().map(|l| l.as_str()).collect();
        if listed != blue || listed.len() != ordering.len() {
            return false;
        }
        let ranges = blue_range_union(&self.relations);
        let mut placed: BTreeSet<&str> = BTreeSet::new();
        for label in ordering {
            let r = self.relation(label.as_str()).expect("listed blue label");
            if !r
                .lhs
                .support()
                .all(|x| !ranges.contains(x.as_str()) || placed.contains(x.as_str()))
            {
                return false;
            }
            placed.extend(r.rhs.support().map(|x| x.as_str()));
        }
        true
    }

    /// Every admissible ordering, in lexicographic order of declaration
    /// position.
    pub fn admissible_orderings(&self) -> Vec<Vec<Label>> {
        let ranges = blue_range_union(&self.relations);
        let blue: Vec<&ColouredRelation> = self.blue().collect();
        let mut out = Vec::new();
        let mut used = vec![false; blue.len()];
        let mut prefix = Vec::new();
        let mut placed = BTreeSet::new();
        enumerate(
            &blue,
            &ranges,
            &mut used,
            &mut prefix,
            &mut placed,
            &mut out,
        );
        out
    }

    /// The uncoloured monoid presentation `⟨X | R⟩`.
    pub fn monoid(&self) -> MonoidPresentation {
        MonoidPresentation::new(
            self.generators.clone(),
            self.relations
                .iter()
                .map(|r| Relation::new(r.label.clone(), r.lhs.clone(), r.rhs.clone()))
                .collect(),
        )
        .expect("validated presentation is a good monoid presentation")
    }

    pub fn to_raw(&self) -> RawPresentation {
        RawPresentation::new(self.generators.clone(), self.relations.clone())
    }

    pub fn into_raw(self) -> RawPresentation {
        RawPresentation::new(self.generators, self.relations)
    }
}

fn enumerate<'a>(
    blue: &[&'a ColouredRelation],
    ranges: &BTreeSet<&str>,
    used: &mut Vec<bool>,
    prefix: &mut Vec<Label>,
    placed: &mut BTreeSet<&'a str>,
    out: &mut Vec<Vec<Label>>,
) {
    if prefix.len() == blue.len() {
        out.push(prefix.clone());
        return;
    }
    for k in 0..blue.len() {
        if used[k] {
            continue;
        }
        let r = blue[k];
        if !r
            .lhs
            .support()
            .all(|x| !ranges.contains(x.as_str()) || placed.contains(x.as_str()))
        {
            continue;
        }
        used[k] = true;
        prefix.push(r.label.clone());
        let added: Vec<&str> = r.rhs.support().map(|x| x.as_str()).collect();
        placed.extend(added.iter().copied());
        enumerate(blue, ranges, used, prefix, placed, out);
        for x in added {
            placed.remove(x);
        }
        prefix.pop();
        used[k] = false;
    }
}

impl fmt::Display for BergmanPresentation {
    /// The `.bp` rendering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_bp(self))
    }
}
