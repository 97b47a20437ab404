use std::collections::HashMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraPresentation, Monomial, Poly};

use super::{lines, Line, ParseError};

/// `.alg` text read back: symbol names and relations over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedAlgebra {
    pub symbols: Vec<String>,
    pub relations: Vec<ParsedRelation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedRelation {
    pub lhs: Poly,
    pub rhs: Poly,
    pub trivial: bool,
}

/// One `gen` line per symbol, then one `rel` line per scalar equation,
/// grouped under a comment naming the matrix relation it came from.
pub fn write_alg(a: &AlgebraPresentation) -> String {
    let names = a.symbol_names();
    let mut out = String::new();
    writeln!(
        out,
        "# {} symbols, {} relations ({} trivial)",
        names.len(),
        a.relations.len(),
        a.trivial_count()
    )
    .unwrap();
    for s in &names {
        writeln!(out, "gen {s}").unwrap();
    }
    let mut last = None;
    for r in &a.relations {
        if last != Some(&r.origin) {
            writeln!(out, "# {}", r.origin).unwrap();
            last = Some(&r.origin);
        }
        write!(
            out,
            "rel: {} = {}",
            r.lhs.display(&names),
            r.rhs.display(&names)
        )
        .unwrap();
        out.push_str(if r.trivial { "  # trivial\n" } else { "\n" });
    }
    out
}

fn rational(line: &Line, t: &str) -> Result<BigRational, ParseError> {
    let bad = || line.error(t, format!("bad coefficient `{t}`"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() || n.sign() == num_bigint::Sign::Minus || d.sign() == num_bigint::Sign::Minus {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn poly<'a>(
    line: &Line<'a>,
    text: &'a str,
    symbols: &HashMap<&str, u32>,
) -> Result<Poly, ParseError> {
    let t = text.trim();
    if t == "0" {
        return Ok(Poly::zero());
    }
    let mut out = Poly::zero();
    let mut rest = t;
    let mut negative = false;
    if let Some(r) = rest.strip_prefix('-') {
        negative = true;
        rest = r.trim_start();
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        if term.is_empty() {
            return Err(line.error(&rest[..end], "empty term"));
        }
        let mut coeff = BigRational::one();
        let mut word = Vec::new();
        for (k, f) in term.split('*').map(str::trim).enumerate() {
            if f.is_empty() {
                return Err(line.error(term, "empty factor"));
            }
            if k == 0 && f.starts_with(|c: char| c.is_ascii_digit()) {
                coeff = rational(line, f)?;
            } else {
                let s = symbols
                    .get(f)
                    .ok_or_else(|| line.error(f, format!("undeclared symbol `{f}`")))?;
                word.push(*s);
            }
        }
        if negative {
            coeff = -coeff;
        }
        out.add_term(Monomial(word), coeff);
        if end == rest.len() {
            return Ok(out);
        }
        negative = rest[end..].starts_with('-');
        rest = &rest[end + 1..];
    }
}

pub fn parse_alg(text: &str) -> Result<ParsedAlgebra, ParseError> {
    let mut symbols: Vec<String> = Vec::new();
    let mut index: HashMap<&str, u32> = HashMap::new();
    let mut relations = Vec::new();
    for line in lines(text) {
        let (word, rest) = line.keyword();
        match word {
            "gen" => {
                let s = rest.trim();
                if s.is_empty()
                    || s.contains(char::is_whitespace)
                    || s.contains(['*', '+', '-', '='])
                {
                    return Err(line.error(rest, "expected one symbol"));
                }
                if index.insert(s, symbols.len() as u32).is_some() {
                    return Err(line.error(s, format!("symbol `{s}` declared twice")));
                }
                symbols.push(s.to_string());
            }
            "rel:" => {
                let (l, r) = line.split(rest, "=")?;
                let (lhs, rhs) = (poly(&line, l, &index)?, poly(&line, r, &index)?);
                let trivial =
                    line.raw()[line.text.len()..].trim_start_matches('#').trim() == "trivial";
                relations.push(ParsedRelation { lhs, rhs, trivial });
            }
            _ => return Err(line.error(word, format!("unknown keyword `{word}`"))),
        }
    }
    Ok(ParsedAlgebra { symbols, relations })
}
