use std::fmt::Write;

use crate::monoid::{Evidence, Relation, TietzeTransformation};
use crate::moves::{Move, SplitIndex};
use crate::name::{GeneratorId, Label, Name};

use super::{lines, split_options, Line, ParseError};

/// One line of a move script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptCommand {
    Move(Move),
    FactorCollapse {
        generator: GeneratorId,
        label: Label,
    },
    /// `names` are the generators the insplit introduced.
    FactorInsplit {
        generator: GeneratorId,
        label: Label,
        names: Vec<GeneratorId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptStep {
    pub line: usize,
    pub command: ScriptCommand,
    /// `-- bound N`; the caller's default applies when absent
    pub bound: Option<u64>,
}

fn bound_option(
    line: &Line,
    opts: &[(&str, &str)],
    allowed: &[&str],
) -> Result<Option<u64>, ParseError> {
    let mut bound = None;
    for (k, v) in opts {
        if !allowed.contains(k) {
            return Err(line.error(k, format!("unknown option `{k}`")));
        }
        if *k == "bound" {
            let n = v
                .parse::<u64>()
                .map_err(|_| line.error(v, format!("bad bound `{v}`")))?;
            bound = Some(n);
        }
    }
    Ok(bound)
}

fn ordering_option(line: &Line, opts: &[(&str, &str)]) -> Result<Option<Vec<Label>>, ParseError> {
    let Some((_, v)) = opts.iter().find(|(k, _)| *k == "ordering") else {
        return Ok(None);
    };
    let inner = v
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| line.error(v, "ordering must look like (r1,r2)"))?;
    inner
        .split(',')
        .map(|t| line.name(t.trim()))
        .collect::<Result<_, _>>()
        .map(Some)
}

fn name_list<'a>(line: &Line<'a>, text: &'a str) -> Result<Vec<Name>, ParseError> {
    text.split_whitespace().map(|t| line.name(t)).collect()
}

/// `[c1 | c2 | ...]`
fn bracketed<'a>(line: &Line<'a>, text: &'a str) -> Result<(&'a str, &'a str), ParseError> {
    let t = text.trim_start();
    let inner = t
        .strip_prefix('[')
        .ok_or_else(|| line.error(t, "expected `[`"))?;
    let close = inner
        .find(']')
        .ok_or_else(|| line.error(t, "unclosed `[`"))?;
    Ok((&inner[..close], &inner[close + 1..]))
}

fn as_names<'a>(line: &Line<'a>, text: &'a str) -> Result<Vec<Name>, ParseError> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let rest = t
        .strip_prefix("as")
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace));
    let rest = rest.ok_or_else(|| line.error(t, "expected `as`"))?;
    name_list(line, rest)
}

/// `(g,1) (h,2)` inside one part of an insplit partition.
fn split_indices<'a>(line: &Line<'a>, text: &'a str) -> Result<Vec<SplitIndex>, ParseError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| line.error(rest, "expected `(label,k)`"))?;
        let close = body
            .find(')')
            .ok_or_else(|| line.error(rest, "unclosed `(`"))?;
        let (l, k) = line.split(&body[..close], ",")?;
        let k = k.trim();
        let k = k
            .parse::<u64>()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| line.error(k, format!("bad copy number `{k}`")))?;
        out.push((line.name(l.trim())?, k));
        rest = body[close + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
    }
    Ok(out)
}

fn via<'a>(line: &Line<'a>, text: &'a str) -> Result<(Name, Name, &'a str), ParseError> {
    let (x, rest) = line.split(text, " via ")?;
    let rest = rest.trim_start();
    let end = rest
        .find(|c: char| c == ':' || c.is_whitespace())
        .unwrap_or(rest.len());
    Ok((line.name(x.trim())?, line.name(&rest[..end])?, &rest[end..]))
}

fn parse_move_line(line: &Line) -> Result<ScriptStep, ParseError> {
    let (word, rest) = line.keyword();
    let (rest, opts) = split_options(line, rest)?;
    let mut allowed = vec!["bound"];
    let command = match word {
        "redshift" => {
            let (label, body) = line.split(rest, ":")?;
            let (lhs, rhs) = line.split(body, "=")?;
            ScriptCommand::Move(Move::RedShift {
                label: line.name(label.trim())?,
                lhs: line.element(lhs)?,
                rhs: line.element(rhs)?,
            })
        }
        "blueshift" => {
            allowed.push("ordering");
            let (label, lhs) = line.split(rest, ":")?;
            ScriptCommand::Move(Move::BlueShift {
                label: line.name(label.trim())?,
                lhs: line.element(lhs)?,
                ordering: ordering_option(line, &opts)?,
            })
        }
        "enqueue" => ScriptCommand::Move(Move::Enqueue {
            label: line.name(rest.trim())?,
        }),
        "outsplit" => {
            let (label, body) = line.split(rest, ":")?;
            let (inner, tail) = bracketed(line, body)?;
            let parts = inner
                .split('|')
                .map(|c| line.element(c))
                .collect::<Result<_, _>>()?;
            ScriptCommand::Move(Move::Outsplit {
                label: line.name(label.trim())?,
                parts,
                names: as_names(line, tail)?,
            })
        }
        "eliminate" => ScriptCommand::Move(Move::LonelyEliminate {
            generator: line.name(rest.trim())?,
        }),
        "extend" => {
            let (g, body) = line.split(rest, "=")?;
            let generator = line.name(g.trim())?;
            let (rhs, label) = match body.find(" as ") {
                Some(k) => (&body[..k], line.name(body[k + 4..].trim())?),
                None => (body, generator.clone()),
            };
            ScriptCommand::Move(Move::Extend {
                generator,
                rhs: line.element(rhs)?,
                label,
            })
        }
        "collapse" => {
            let (generator, label, tail) = via(line, rest)?;
            if !tail.trim().is_empty() {
                return Err(line.error(tail.trim(), "unexpected text"));
            }
            ScriptCommand::Move(Move::Collapse { generator, label })
        }
        "insplit" => {
            let (generator, label, tail) = via(line, rest)?;
            let body = tail
                .trim_start()
                .strip_prefix(':')
                .ok_or_else(|| line.error(tail, "expected `:`"))?;
            let (inner, tail) = bracketed(line, body)?;
            let partition = inner
                .split(['|', ';'])
                .map(|p| split_indices(line, p))
                .collect::<Result<_, _>>()?;
            ScriptCommand::Move(Move::Insplit {
                generator,
                label,
                partition,
                names: as_names(line, tail)?,
            })
        }
        "factor-collapse" => {
            let (generator, label, _) = via(line, rest)?;
            ScriptCommand::FactorCollapse { generator, label }
        }
        "factor-insplit" => {
            let (generator, label, tail) = via(line, rest)?;
            ScriptCommand::FactorInsplit {
                generator,
                label,
                names: as_names(line, tail)?,
            }
        }
        _ => return Err(line.error(word, format!("unknown move `{word}`"))),
    };
    Ok(ScriptStep {
        line: line.number,
        command,
        bound: bound_option(line, &opts, &allowed)?,
    })
}

pub fn parse_mv(text: &str) -> Result<Vec<ScriptStep>, ParseError> {
    lines(text).map(|l| parse_move_line(&l)).collect()
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn write_mv(steps: &[ScriptStep]) -> String {
    let mut out = String::new();
    for s in steps {
        match &s.command {
            ScriptCommand::Move(m) => match m {
                Move::RedShift { label, lhs, rhs } => {
                    write!(out, "redshift {label}: {lhs} = {rhs}")
                }
                Move::BlueShift {
                    label,
                    lhs,
                    ordering,
                } => {
                    write!(out, "blueshift {label}: {lhs}").unwrap();
                    match ordering {
                        Some(o) => write!(out, " -- ordering ({})", join(o, ",")),
                        None => Ok(()),
                    }
                }
                Move::Enqueue { label } => write!(out, "enqueue {label}"),
                Move::Outsplit {
                    label,
                    parts,
                    names,
                } => {
                    write!(
                        out,
                        "outsplit {label}: [{}] as {}",
                        join(parts, " | "),
                        join(names, " ")
                    )
                }
                Move::LonelyEliminate { generator } => write!(out, "eliminate {generator}"),
                Move::Extend {
                    generator,
                    rhs,
                    label,
                } => write!(out, "extend {generator} = {rhs} as {label}"),
                Move::Collapse { generator, label } => {
                    write!(out, "collapse {generator} via {label}")
                }
                Move::Insplit {
                    generator,
                    label,
                    partition,
                    names,
                } => {
                    let parts: Vec<String> = partition
                        .iter()
                        .map(|p| {
                            p.iter()
                                .map(|(l, k)| format!("({l},{k})"))
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect();
                    write!(
                        out,
                        "insplit {generator} via {label}: [{}]",
                        parts.join(" | ")
                    )
                    .unwrap();
                    if names.is_empty() {
                        Ok(())
                    } else {
                        write!(out, " as {}", join(names, " "))
                    }
                }
            },
            ScriptCommand::FactorCollapse { generator, label } => {
                write!(out, "factor-collapse {generator} via {label}")
            }
            ScriptCommand::FactorInsplit {
                generator,
                label,
                names,
            } => {
                write!(out, "factor-insplit {generator} via {label}").unwrap();
                if names.is_empty() {
                    Ok(())
                } else {
                    write!(out, " as {}", join(names, " "))
                }
            }
        }
        .unwrap();
        if let Some(b) = s.bound {
            write!(out, " -- bound {b}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// One line of a Tietze script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TzStep {
    pub line: usize,
    pub transformation: TietzeTransformation,
}

/// Parses a Tietze script:
///
/// ```text
/// add-generator g = u + v as d      # A
/// remove-generator g                # B
/// add-relation s: u = u + 2v -- bound 8
/// remove-relation s -- bound 8      # D
/// ```
///
/// Relations without a `-- bound` use `default_bound`.
pub fn parse_tz(text: &str, default_bound: u64) -> Result<Vec<TzStep>, ParseError> {
    let mut out = Vec::new();
    for line in lines(text) {
        let (word, rest) = line.keyword();
        let (rest, opts) = split_options(&line, rest)?;
        let evidence =
            Evidence::Bound(bound_option(&line, &opts, &["bound"])?.unwrap_or(default_bound));
        let transformation = match word {
            "add-generator" => {
                let (g, body) = line.split(rest, "=")?;
                let (value, label) = line.split(body, " as ")?;
                TietzeTransformation::AddGenerator {
                    generator: line.name(g.trim())?,
                    label: line.name(label.trim())?,
                    value: line.element(value)?,
                }
            }
            "remove-generator" => TietzeTransformation::RemoveGenerator {
                generator: line.name(rest.trim())?,
            },
            "add-relation" => {
                let (label, body) = line.split(rest, ":")?;
                let (lhs, rhs) = line.split(body, "=")?;
                TietzeTransformation::AddRelation {
                    relation: Relation::new(
                        line.name(label.trim())?,
                        line.element(lhs)?,
                        line.element(rhs)?,
                    ),
                    evidence,
                }
            }
            "remove-relation" => TietzeTransformation::RemoveRelation {
                label: line.name(rest.trim())?,
                evidence,
            },
            _ => return Err(line.error(word, format!("unknown transformation `{word}`"))),
        };
        out.push(TzStep {
            line: line.number,
            transformation,
        });
    }
    Ok(out)
}

pub fn write_tz(steps: &[TzStep]) -> String {
    let mut out = String::new();
    let bound = |e: &Evidence| match e {
        Evidence::Bound(b) => format!(" -- bound {b}"),
        Evidence::Certificate(_) => String::new(),
    };
    for s in steps {
        match &s.transformation {
            TietzeTransformation::AddGenerator {
                generator,
                label,
                value,
            } => {
                writeln!(out, "add-generator {generator} = {value} as {label}")
            }
            TietzeTransformation::RemoveGenerator { generator } => {
                writeln!(out, "remove-generator {generator}")
            }
            TietzeTransformation::AddRelation { relation, evidence } => writeln!(
                out,
                "add-relation {}: {} = {}{}",
                relation.label,
                relation.lhs,
                relation.rhs,
                bound(evidence)
            ),
            TietzeTransformation::RemoveRelation { label, evidence } => {
                writeln!(out, "remove-relation {label}{}", bound(evidence))
            }
        }
        .unwrap();
    }
    out
}
