use std::fmt::Write;

use crate::monoid::{Element, ElementStyle};
use crate::name::{Name, VertexId};
use crate::structures::{
    BergmanGraph, BergmanPresentation, Colour, ColouredRelation, Digraph, DigraphEdge, Hyperedge,
    RawGraph, RawPresentation,
};

use super::{lines, Line, LoadError, ParseError};

fn colour(line: &Line, word: &str) -> Result<Colour, ParseError> {
    match word {
        "blue" => Ok(Colour::Blue),
        "red" => Ok(Colour::Red),
        _ => Err(line.error(word, format!("unknown keyword `{word}`"))),
    }
}

fn names<'a>(line: &Line<'a>, text: &'a str) -> Result<Vec<Name>, ParseError> {
    text.split_whitespace().map(|t| line.name(t)).collect()
}

fn once<T>(
    slot: &mut Option<T>,
    value: T,
    line: &Line,
    at: &str,
    what: &str,
) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(line.error(at, format!("second `{what}` line")));
    }
    *slot = Some(value);
    Ok(())
}

/// Parses `.bp` text without validating it.
pub fn parse_bp(text: &str) -> Result<RawPresentation, ParseError> {
    let mut gens = None;
    let mut relations = Vec::new();
    for line in lines(text) {
        let (word, rest) = line.keyword();
        if word == "gens" {
            once(&mut gens, names(&line, rest)?, &line, word, "gens")?;
            continue;
        }
        let c = colour(&line, word)?;
        let (label, body) = line.split(rest, ":")?;
        let label = line.name(label.trim())?;
        let (lhs, rhs) = line.split(body, "=")?;
        relations.push(ColouredRelation::new(
            label,
            c,
            line.element(lhs)?,
            line.element(rhs)?,
        ));
    }
    Ok(RawPresentation::new(gens.unwrap_or_default(), relations))
}

pub fn read_bp(text: &str) -> Result<BergmanPresentation, LoadError> {
    BergmanPresentation::new(parse_bp(text)?).map_err(LoadError::Invalid)
}

pub fn write_bp(p: &BergmanPresentation) -> String {
    let mut out = String::from("gens");
    for x in p.generators() {
        write!(out, " {x}").unwrap();
    }
    out.push('\n');
    for r in p.relations() {
        writeln!(
            out,
            "{} {}: {} = {}",
            r.colour,
            r.label,
            r.lhs.display_in(p.generators(), ElementStyle::Spaced),
            r.rhs.display_in(p.generators(), ElementStyle::Spaced)
        )
        .unwrap();
    }
    out
}

fn multiset(line: &Line, text: &str) -> Result<Element, ParseError> {
    let mut e = Element::zero();
    for t in text.split_whitespace() {
        e.add_generator(line.name(t)?, 1);
    }
    Ok(e)
}

/// Parses `.bg` text without validating it.
pub fn parse_bg(text: &str) -> Result<RawGraph, ParseError> {
    let mut vertices = None;
    let mut hyperedges = Vec::new();
    for line in lines(text) {
        let (word, rest) = line.keyword();
        if word == "vertices" {
            once(&mut vertices, names(&line, rest)?, &line, word, "vertices")?;
            continue;
        }
        let c = colour(&line, word)?;
        let (label, body) = line.split(rest, ":")?;
        let label = line.name(label.trim())?;
        let (s, r) = line.split(body, "->")?;
        hyperedges.push(Hyperedge::new(
            label,
            c,
            multiset(&line, s)?,
            multiset(&line, r)?,
        ));
    }
    Ok(RawGraph::new(vertices.unwrap_or_default(), hyperedges))
}

pub fn read_bg(text: &str) -> Result<BergmanGraph, LoadError> {
    BergmanGraph::new(parse_bg(text)?).map_err(LoadError::Invalid)
}

fn write_multiset(out: &mut String, e: &Element, order: &[VertexId]) {
    for x in order {
        for _ in 0..e.multiplicity(x.as_str()) {
            write!(out, " {x}").unwrap();
        }
    }
}

pub fn write_bg(g: &BergmanGraph) -> String {
    let mut out = String::from("vertices");
    for v in g.vertices() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    for h in g.hyperedges() {
        write!(out, "{} {}:", h.colour, h.label).unwrap();
        write_multiset(&mut out, &h.source, g.vertices());
        out.push_str(" ->");
        write_multiset(&mut out, &h.range, g.vertices());
        out.push('\n');
    }
    out
}

/// Parses `.dg` text. Vertices not declared on a `vertices` line are added
/// in order of first appearance.
pub fn parse_dg(text: &str) -> Result<(Vec<VertexId>, Vec<DigraphEdge>), ParseError> {
    let mut declared = None;
    let mut seen: Vec<VertexId> = Vec::new();
    let mut edges = Vec::new();
    for line in lines(text) {
        let (word, rest) = line.keyword();
        match word {
            "vertices" => once(&mut declared, names(&line, rest)?, &line, word, "vertices")?,
            "edge" => {
                let (label, body) = line.split(rest, ":")?;
                let label = line.name(label.trim())?;
                let (s, t) = line.split(body, "->")?;
                let (s, t) = (line.name(s.trim())?, line.name(t.trim())?);
                for v in [&s, &t] {
                    if !seen.contains(v) {
                        seen.push(v.clone());
                    }
                }
                edges.push(DigraphEdge {
                    label,
                    source: s,
                    target: t,
                });
            }
            _ => return Err(line.error(word, format!("unknown keyword `{word}`"))),
        }
    }
    let mut vertices = declared.unwrap_or_default();
    for v in seen {
        if !vertices.contains(&v) {
            vertices.push(v);
        }
    }
    Ok((vertices, edges))
}

pub fn read_dg(text: &str) -> Result<Digraph, LoadError> {
    let (vertices, edges) = parse_dg(text)?;
    Ok(Digraph::new(vertices, edges)?)
}

pub fn write_dg(d: &Digraph) -> String {
    let mut out = String::from("vertices");
    for v in d.vertices() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    for e in d.edges() {
        writeln!(out, "edge {}: {} -> {}", e.label, e.source, e.target).unwrap();
    }
    out
}
