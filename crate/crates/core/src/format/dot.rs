use std::fmt::Write;

use crate::structures::{BergmanGraph, Colour};

/// Graphviz rendering. Vertices are circles and each hyperedge is a point
/// node; blue hyperedges are dashed. A connector runs from every source
/// vertex into the point, and one arrow per copy runs out to each range
/// vertex.
pub fn dot_export(g: &BergmanGraph) -> String {
    let mut out = String::from("digraph bergman {\n");
    for v in g.vertices() {
        writeln!(out, "  \"{v}\" [shape=circle];").unwrap();
    }
    for h in g.hyperedges() {
        let style = match h.colour {
            Colour::Blue => "dashed",
            Colour::Red => "solid",
        };
        let node = format!("\"{}#{}\"", h.colour, h.label);
        writeln!(out, "  {node} [shape=point, xlabel=\"{}\"];", h.label).unwrap();
        for (x, m) in h.source.iter() {
            for _ in 0..m {
                writeln!(out, "  \"{x}\" -> {node} [arrowhead=none, style={style}];").unwrap();
            }
        }
        for (x, m) in h.range.iter() {
            for _ in 0..m {
                writeln!(out, "  {node} -> \"{x}\" [style={style}];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
