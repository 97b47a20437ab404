use std::collections::{BTreeMap, BTreeSet};

use crate::monoid::Element;
use crate::name::{Label, Name, VertexId};

use super::graph::BergmanGraph;
use super::pres_to_graph;
use super::presentation::BergmanPresentation;

/// A vertex map and an edge map between two structures of the same kind.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructureHomomorphism {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: BTreeMap<Label, Label>,
}

impl StructureHomomorphism {
    pub fn identity(g: &BergmanGraph) -> Self {
        StructureHomomorphism {
            vertex_map: g
                .vertices()
                .iter()
                .map(|v| (v.clone(), v.clone()))
                .collect(),
            edge_map: g
                .hyperedges()
                .iter()
                .map(|h| (h.label.clone(), h.label.clone()))
                .collect(),
        }
    }

    fn transport(&self, e: &Element) -> Option<Element> {
        let mut out = Element::zero();
        for (v, m) in e.iter() {
            out.add_generator(self.vertex_map.get(v)?.clone(), m);
        }
        Some(out)
    }
}

/// Checks `h: from -> to` against the definition of a graph homomorphism.
pub fn check_homomorphism(
    h: &StructureHomomorphism,
    from: &BergmanGraph,
    to: &BergmanGraph,
) -> bool {
    let target_vertices: BTreeSet<&Name> = to.vertices().iter().collect();
    let mut images = BTreeSet::new();
    for v in from.vertices() {
        let Some(image) = h.vertex_map.get(v) else {
            return false;
        };
        if !target_vertices.contains(image) || !images.insert(image) {
            return false;
        }
    }
    if h.vertex_map.len() != from.vertices().len() {
        return false;
    }
    if h.edge_map.len() != from.hyperedges().len() {
        return false;
    }
    for e in from.hyperedges() {
        let Some(image) = h
            .edge_map
            .get(&e.label)
            .and_then(|l| to.hyperedge(l.as_str()))
        else {
            return false;
        };
        if image.colour != e.colour {
            return false;
        }
        if h.transport(&e.source).as_ref() != Some(&image.source)
            || h.transport(&e.range).as_ref() != Some(&image.range)
        {
            return false;
        }
    }
    true
}

/// The presentation version, checked through the graph functor.
pub fn check_presentation_homomorphism(
    h: &StructureHomomorphism,
    from: &BergmanPresentation,
    to: &BergmanPresentation,
) -> bool {
    check_homomorphism(h, &pres_to_graph(from), &pres_to_graph(to))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{Colour, Hyperedge, RawGraph};

    fn n(s: &str) -> Name {
        Name::new(s).unwrap()
    }

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn graph(vertices: &str, edges: &[(&str, &str, &str)]) -> BergmanGraph {
        BergmanGraph::new(RawGraph::new(
            vertices.split_whitespace().map(n).collect(),
            edges
                .iter()
                .map(|(l, s, r)| Hyperedge::new(n(l), Colour::Red, e(s), e(r)))
                .collect(),
        ))
        .unwrap()
    }

    #[test]
    fn identity_is_a_homomorphism() {
        let g = graph("u v", &[("h", "u", "u + v")]);
        assert!(check_homomorphism(
            &StructureHomomorphism::identity(&g),
            &g,
            &g
        ));
    }

    #[test]
    fn collapsing_vertices_fails() {
        let g = graph("u v", &[]);
        let h = StructureHomomorphism {
            vertex_map: [(n("u"), n("u")), (n("v"), n("u"))].into_iter().collect(),
            edge_map: BTreeMap::new(),
        };
        assert!(!check_homomorphism(&h, &g, &g));
    }

    #[test]
    fn subgraph_inclusion_needs_total_edge_map() {
        // from: a -> b via p; to: a -> b via p and b -> a via q
        let small = graph("a b", &[("p", "a", "b")]);
        let big = graph("a b", &[("p", "a", "b"), ("q", "b", "a")]);
        let vertex_map: BTreeMap<_, _> = [(n("a"), n("a")), (n("b"), n("b"))].into_iter().collect();
        let incl = StructureHomomorphism {
            vertex_map: vertex_map.clone(),
            edge_map: [(n("p"), n("p"))].into_iter().collect(),
        };
        assert!(check_homomorphism(&incl, &small, &big));
        // the reverse direction has no image for q
        assert!(!check_homomorphism(&incl, &big, &small));
        let swapped = StructureHomomorphism {
            vertex_map,
            edge_map: [(n("p"), n("q"))].into_iter().collect(),
        };
        assert!(!check_homomorphism(&swapped, &small, &big));
    }

    #[test]
    fn image_may_not_touch_extra_vertices() {
        let small = graph("a", &[("p", "a", "a")]);
        let big = graph("a c", &[("p", "a", "a + c")]);
        let h = StructureHomomorphism {
            vertex_map: [(n("a"), n("a"))].into_iter().collect(),
            edge_map: [(n("p"), n("p"))].into_iter().collect(),
        };
        assert!(!check_homomorphism(&h, &small, &big));
    }
}
