use std::collections::BTreeSet;

use crate::monoid::{Element, MonoidPresentation, Relation};
use crate::name::{Label, VertexId};

use super::presentation::{BergmanPresentation, ColouredRelation, RawPresentation};
use super::{Colour, ValidationReport, Violation};

/// A hyperedge with multiset source and range.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    pub label: Label,
    pub colour: Colour,
    pub source: Element,
    pub range: Element,
}

impl Hyperedge {
    pub fn new(label: Label, colour: Colour, source: Element, range: Element) -> Self {
        Hyperedge {
            label,
            colour,
            source,
            range,
        }
    }
}

/// A coloured hypergraph that has not been validated yet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RawGraph {
    pub vertices: Vec<VertexId>,
    pub hyperedges: Vec<Hyperedge>,
}

impl RawGraph {
    pub fn new(vertices: Vec<VertexId>, hyperedges: Vec<Hyperedge>) -> Self {
        RawGraph {
            vertices,
            hyperedges,
        }
    }
}

/// Checks the Bergman graph conditions directly on vertex sets.
pub fn validate_graph(g: &RawGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let mut vertex_set: BTreeSet<&VertexId> = BTreeSet::new();
    for v in &g.vertices {
        if !vertex_set.insert(v) {
            violations.push(Violation::DuplicateGenerator(v.clone()));
        }
    }
    let mut seen_labels: BTreeSet<&Label> = BTreeSet::new();
    for h in &g.hyperedges {
        if !seen_labels.insert(&h.label) {
            violations.push(Violation::DuplicateLabel(h.label.clone()));
        }
        if h.source.is_zero() || h.range.is_zero() {
            violations.push(Violation::ZeroSide(h.label.clone()));
        }
        let mut touched: Vec<&VertexId> = h.source.support().collect();
        touched.extend(h.range.support());
        for v in touched {
            if !vertex_set.contains(v) {
                violations.push(Violation::UndeclaredGenerator {
                    label: h.label.clone(),
                    generator: v.clone(),
                });
            }
        }
    }

    let blue: Vec<&Hyperedge> = g
        .hyperedges
        .iter()
        .filter(|h| h.colour == Colour::Blue)
        .collect();
    for h in &blue {
        if h.range.iter().any(|(_, m)| m > 1) {
            violations.push(Violation::BlueRangeNotSet(h.label.clone()));
        } else if h.range.support().count() < 2 {
            violations.push(Violation::BlueRangeTooSmall(h.label.clone()));
        }
    }
    for (k, h) in blue.iter().enumerate() {
        for earlier in &blue[..k] {
            if let Some(v) = h
                .range
                .support()
                .find(|v| earlier.range.contains_generator(v.as_str()))
            {
                violations.push(Violation::BlueRangesOverlap {
                    first: earlier.label.clone(),
                    second: h.label.clone(),
                    generator: v.clone(),
                });
            }
        }
    }

    // fixpoint: a blue hyperedge becomes reachable once its source lies in
    // the base vertices plus the ranges of reachable blue hyperedges
    let non_base: BTreeSet<&VertexId> = blue.iter().flat_map(|h| h.range.support()).collect();
    let mut reached: BTreeSet<&VertexId> = vertex_set
        .iter()
        .copied()
        .filter(|v| !non_base.contains(v))
        .collect();
    let mut done = vec![false; blue.len()];
    loop {
        let mut changed = false;
        for (k, h) in blue.iter().enumerate() {
            if !done[k]
                && h.source
                    .support()
                    .all(|v| reached.contains(v) || !non_base.contains(v))
            {
                done[k] = true;
                reached.extend(h.range.support());
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let stuck: Vec<Label> = blue
        .iter()
        .zip(&done)
        .filter(|(_, d)| !**d)
        .map(|(h, _)| h.label.clone())
        .collect();
    if !stuck.is_empty() {
        violations.push(Violation::NoAdmissibleOrdering(stuck));
    }

    ValidationReport { violations }
}

/// A validated Bergman graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BergmanGraph {
    vertices: Vec<VertexId>,
    hyperedges: Vec<Hyperedge>,
}

impl BergmanGraph {
    pub fn new(raw: RawGraph) -> Result<Self, ValidationReport> {
        let report = validate_graph(&raw);
        if !report.is_valid() {
            return Err(report);
        }
        Ok(BergmanGraph {
            vertices: raw.vertices,
            hyperedges: raw.hyperedges,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    pub fn hyperedge(&self, label: &str) -> Option<&Hyperedge> {
        self.hyperedges.iter().find(|h| h.label.as_str() == label)
    }

    pub fn is_basic(&self) -> bool {
        self.hyperedges.iter().all(|h| h.colour == Colour::Red)
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph::new(self.vertices.clone(), self.hyperedges.clone())
    }
}

/// The functor from presentations to graphs.
pub fn pres_to_graph(p: &BergmanPresentation) -> BergmanGraph {
    BergmanGraph {
        vertices: p.generators().to_vec(),
        hyperedges: p
            .relations()
            .iter()
            .map(|r| Hyperedge::new(r.label.clone(), r.colour, r.lhs.clone(), r.rhs.clone()))
            .collect(),
    }
}

/// The functor from graphs to presentations.
pub fn graph_to_pres(g: &BergmanGraph) -> BergmanPresentation {
    let raw = RawPresentation::new(
        g.vertices.clone(),
        g.hyperedges
            .iter()
            .map(|h| {
                ColouredRelation::new(h.label.clone(), h.colour, h.source.clone(), h.range.clone())
            })
            .collect(),
    );
    BergmanPresentation::new(raw).expect("a valid graph gives a valid presentation")
}

/// `⟨H⁰ | Σ s(h) = Σ r(h)⟩`, one relation per hyperedge.
pub fn vmonoid_presentation(g: &BergmanGraph) -> MonoidPresentation {
    MonoidPresentation::new(
        g.vertices.clone(),
        g.hyperedges
            .iter()
            .map(|h| Relation::new(h.label.clone(), h.source.clone(), h.range.clone()))
            .collect(),
    )
    .expect("validated graph")
}
