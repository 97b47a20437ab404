use std::collections::BTreeSet;

use crate::monoid::Element;
use crate::name::{Label, VertexId};

use super::graph::{BergmanGraph, Hyperedge, RawGraph};
use super::{Colour, StructureError};

/// A labelled directed edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigraphEdge {
    pub label: Label,
    pub source: VertexId,
    pub target: VertexId,
}

/// An ordinary finite directed graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertices: Vec<VertexId>,
    edges: Vec<DigraphEdge>,
}

impl Digraph {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<DigraphEdge>) -> Result<Self, StructureError> {
        let mut set = BTreeSet::new();
        for v in &vertices {
            if !set.insert(v) {
                return Err(StructureError::DuplicateVertex(v.clone()));
            }
        }
        let mut labels = BTreeSet::new();
        for e in &edges {
            if !labels.insert(&e.label) {
                return Err(StructureError::DuplicateLabel(e.label.clone()));
            }
            for v in [&e.source, &e.target] {
                if !set.contains(v) {
                    return Err(StructureError::UnknownVertex(v.clone()));
                }
            }
        }
        Ok(Digraph { vertices, edges })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[DigraphEdge] {
        &self.edges
    }
}

/// One red hyperedge per regular vertex `v`, labelled `v`, with source `v`
/// and range counting the edges from `v` into each vertex.
pub fn digraph_to_bergman(d: &Digraph) -> BergmanGraph {
    let hyperedges = d
        .vertices
        .iter()
        .filter_map(|v| {
            let range = Element::from_generators(
                d.edges
                    .iter()
                    .filter(|e| &e.source == v)
                    .map(|e| e.target.clone()),
            );
            (!range.is_zero()).then(|| {
                Hyperedge::new(v.clone(), Colour::Red, Element::generator(v.clone()), range)
            })
        })
        .collect();
    BergmanGraph::new(RawGraph::new(d.vertices.clone(), hyperedges))
        .expect("digraph embedding is a basic Bergman graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Name;

    fn n(s: &str) -> Name {
        Name::new(s).unwrap()
    }

    fn edge(l: &str, s: &str, t: &str) -> DigraphEdge {
        DigraphEdge {
            label: n(l),
            source: n(s),
            target: n(t),
        }
    }

    #[test]
    fn toeplitz_digraph() {
        let d = Digraph::new(
            vec![n("u"), n("v")],
            vec![edge("e", "u", "u"), edge("f", "u", "v")],
        )
        .unwrap();
        let g = digraph_to_bergman(&d);
        assert_eq!(g.hyperedges().len(), 1);
        let h = &g.hyperedges()[0];
        assert_eq!(h.source, "u".parse().unwrap());
        assert_eq!(h.range, "u + v".parse().unwrap());
        assert!(g.is_basic());
    }

    #[test]
    fn rose_with_two_petals() {
        let d = Digraph::new(vec![n("v")], vec![edge("a", "v", "v"), edge("b", "v", "v")]).unwrap();
        let g = digraph_to_bergman(&d);
        assert_eq!(g.hyperedges()[0].range, "2v".parse().unwrap());
    }

    #[test]
    fn no_edges() {
        let d = Digraph::new(vec![n("a"), n("b")], vec![]).unwrap();
        assert!(digraph_to_bergman(&d).hyperedges().is_empty());
    }

    #[test]
    fn rejects_unknown_vertex() {
        assert!(Digraph::new(vec![n("a")], vec![edge("e", "a", "b")]).is_err());
    }
}
