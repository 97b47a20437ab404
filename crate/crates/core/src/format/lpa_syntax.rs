//! Element syntax for Leavitt path algebras.
//!
//! A term is an optional rational coefficient followed by `*`-separated
//! letters: a vertex `u`, an edge `h[u.1][v.2]` (source index, range index)
//! or a ghost edge `h[u.1][v.2]^`. Terms are joined by `+` and `-`; `0` is
//! the zero element.

use std::fmt::Write;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::write_rational;
use crate::lpa::{AnchorChoice, EdgeRef, Hypergraph, Index, Letter, LpaElement};

use super::{Line, ParseError};

fn whole(text: &str) -> Line<'_> {
    Line {
        number: 1,
        raw: text,
        text,
    }
}

fn rational(line: &Line, t: &str) -> Result<BigRational, ParseError> {
    let bad = || line.error(t, format!("bad coefficient `{t}`"));
    let (n, d) = t.split_once('/').unwrap_or((t, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() || n.sign() == Sign::Minus || d.sign() == Sign::Minus {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn index(line: &Line, g: &Hypergraph, h: u32, text: &str, range: bool) -> Result<u32, ParseError> {
    let bad = |msg: String| line.error(text, msg);
    let (v, k) = text
        .rsplit_once('.')
        .ok_or_else(|| bad(format!("index `{text}` must look like `v.1`")))?;
    let vertex = g
        .vertex_index(v)
        .ok_or_else(|| bad(format!("unknown vertex `{v}`")))?;
    let counter = k
        .parse::<u32>()
        .map_err(|_| bad(format!("bad copy number `{k}`")))?;
    g.position(h, Index { vertex, counter }, range)
        .ok_or_else(|| {
            let side = if range { "range" } else { "source" };
            bad(format!(
                "`{text}` is not a {side} index of `{}`",
                g.label(h)
            ))
        })
}

/// One pair of brackets at the start of `t`: `(inside, rest)`.
fn bracket<'a>(line: &Line<'a>, t: &'a str) -> Result<(&'a str, &'a str), ParseError> {
    let inner = t
        .strip_prefix('[')
        .ok_or_else(|| line.error(t, "expected `[`"))?;
    let close = inner
        .find(']')
        .ok_or_else(|| line.error(t, "unclosed `[`"))?;
    Ok((inner[..close].trim(), &inner[close + 1..]))
}

fn letter<'a>(line: &Line<'a>, g: &Hypergraph, t: &'a str) -> Result<Letter, ParseError> {
    let Some(open) = t.find('[') else {
        return g
            .vertex_index(t)
            .map(Letter::Vertex)
            .ok_or_else(|| line.error(t, format!("unknown vertex `{t}`")));
    };
    let label = t[..open].trim();
    let h = g
        .hyperedge_index(label)
        .ok_or_else(|| line.error(t, format!("unknown hyperedge `{label}`")))?;
    let (src, rest) = bracket(line, &t[open..])?;
    let (rng, rest) = bracket(line, rest.trim_start())?;
    let e = EdgeRef {
        h,
        i: index(line, g, h, src, false)?,
        j: index(line, g, h, rng, true)?,
    };
    match rest.trim() {
        "" => Ok(Letter::Edge(e)),
        "^" => Ok(Letter::Star(e)),
        other => Err(line.error(other, format!("unexpected `{other}`"))),
    }
}

fn products_in<'a>(
    line: &Line<'a>,
    g: &Hypergraph,
    text: &'a str,
) -> Result<Vec<(BigRational, Vec<Letter>)>, ParseError> {
    let t = text.trim();
    if t == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = t;
    let mut negative = false;
    if let Some(r) = rest.strip_prefix('-') {
        negative = true;
        rest = r;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        if term.is_empty() {
            return Err(line.error(&rest[..end], "empty term"));
        }
        let mut coeff = BigRational::one();
        let mut letters = Vec::new();
        for (k, f) in term.split('*').map(str::trim).enumerate() {
            if f.is_empty() {
                return Err(line.error(term, "empty factor"));
            }
            if k == 0 && f.starts_with(|c: char| c.is_ascii_digit()) {
                coeff = rational(line, f)?;
            } else {
                letters.push(letter(line, g, f)?);
            }
        }
        if letters.is_empty() {
            return Err(line.error(term, "a term needs at least one letter"));
        }
        out.push((if negative { -coeff } else { coeff }, letters));
        if end == rest.len() {
            return Ok(out);
        }
        negative = rest[end..].starts_with('-');
        rest = &rest[end + 1..];
    }
}

/// The terms as written, before any normalisation.
pub fn parse_lpa_products(
    g: &Hypergraph,
    text: &str,
) -> Result<Vec<(BigRational, Vec<Letter>)>, ParseError> {
    products_in(&whole(text), g, text)
}

/// Parses and normalises the paths (products that are not paths vanish),
/// without applying the rewrite rules.
pub fn parse_lpa_element(g: &Hypergraph, text: &str) -> Result<LpaElement, ParseError> {
    let mut out = LpaElement::zero();
    for (c, letters) in parse_lpa_products(g, text)? {
        if let Some(w) = g.normalize(&letters) {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

fn write_letter(out: &mut String, g: &Hypergraph, l: Letter) {
    let edge = |out: &mut String, e: EdgeRef| {
        write!(
            out,
            "{}[{}][{}]",
            g.label(e.h),
            g.index_name(g.sources(e.h)[e.i as usize]),
            g.index_name(g.ranges(e.h)[e.j as usize])
        )
        .unwrap()
    };
    match l {
        Letter::Vertex(v) => out.push_str(g.vertices()[v as usize].as_str()),
        Letter::Edge(e) => edge(out, e),
        Letter::Star(e) => {
            edge(out, e);
            out.push('^');
        }
    }
}

pub fn write_lpa_element(g: &Hypergraph, x: &LpaElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (w, c)) in x.terms().enumerate() {
        match (k, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        write_rational(&mut out, &c.abs()).unwrap();
        for &l in w.letters() {
            out.push_str(" * ");
            write_letter(&mut out, g, l);
        }
    }
    out
}

/// Parses `h[u.1][v.1], g[w.2][u.1]`. Hyperedges not mentioned keep the
/// default anchors.
pub fn parse_anchors(g: &Hypergraph, text: &str) -> Result<AnchorChoice, ParseError> {
    let line = whole(text);
    let mut anchors = AnchorChoice::default_for(g);
    let mut seen = vec![false; g.hyperedge_count()];
    for item in text
        .split([',', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        let Letter::Edge(e) = letter(&line, g, item)? else {
            return Err(line.error(item, "expected an edge `h[u.1][v.1]`"));
        };
        if std::mem::replace(&mut seen[e.h as usize], true) {
            return Err(line.error(item, format!("`{}` anchored twice", g.label(e.h))));
        }
        anchors.set(e.h, e.i, e.j);
    }
    Ok(anchors)
}

pub fn write_anchors(g: &Hypergraph, anchors: &AnchorChoice) -> String {
    let mut out = String::new();
    for h in 0..g.hyperedge_count() as u32 {
        if h > 0 {
            out.push_str(", ");
        }
        let (i, j) = anchors.get(h);
        write_letter(&mut out, g, Letter::Edge(EdgeRef { h, i, j }));
    }
    out
}
