//! The `bergman` command line tool.
//!
//! [`run_args`] parses arguments and runs one subcommand, returning the exit
//! code and the text for stdout and stderr; `main` only forwards them. Exit
//! codes: 0 on success, 1 when the input is invalid or a precondition fails
//! (including "not found within the bound"), 2 on usage errors and
//! unreadable files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use bergman_core::algebra::build_algebra_presentation_with;
use bergman_core::format::{
    dot_export, parse_anchors, parse_lpa_element, parse_mv, parse_tz, read_bg, read_bp, read_dg,
    write_alg, write_bg, write_bp, LoadError, ScriptCommand, ScriptStep,
};
use bergman_core::lpa::{lonely_corner_certify, AnchorChoice, Hypergraph, Lpa};
use bergman_core::monoid::{
    apply_tietze, congruence_equal, parse_element, Congruence, MonoidPresentation,
};
use bergman_core::moves::{
    apply_move, factor_collapse, factor_insplit, Evidence, MoveRecord, MoveSequence,
};
use bergman_core::structures::{
    digraph_to_bergman, graph_to_pres, pres_to_graph, vmonoid_presentation, BergmanGraph,
    BergmanPresentation,
};
use bergman_core::Name;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bergman",
    version,
    about = "Bergman presentations, their moves, algebras and Leavitt path algebras"
)]
pub struct Cli {
    /// Degree bound for congruence searches
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    /// Anchor edges for LPA normal forms, e.g. `h[u.1][v.1], g[w.1][u.2]`
    #[arg(long, global = true)]
    pub anchors: Option<String>,
    /// Write the main output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format for `convert`
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Bp,
    Bg,
    Dot,
    Alg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a .bp, .bg or .dg file and list its admissible orderings
    Validate { input: PathBuf },
    /// Rewrite a structure in another format
    Convert { input: PathBuf },
    /// List every admissible ordering of the blue relations
    Orderings { input: PathBuf },
    /// Print the V-monoid presentation
    Vmonoid { input: PathBuf },
    /// Decide equality of two elements of the V-monoid, up to the bound
    Meq {
        input: PathBuf,
        a: String,
        b: String,
    },
    /// Run a Tietze script against the V-monoid presentation
    Tietze { input: PathBuf, script: PathBuf },
    /// Run a move script
    Move { input: PathBuf, script: PathBuf },
    /// Factor a collapse or undo an insplit by elementary moves
    #[command(subcommand)]
    Factor(FactorCommand),
    /// Print the scalar presentation of the Bergman algebra
    Algebra {
        input: PathBuf,
        /// Admissible ordering, e.g. `r1,r3,r2`; the greedy one by default
        #[arg(long)]
        ordering: Option<String>,
    },
    /// Compute in the Leavitt path algebra of the hypergraph
    #[command(subcommand)]
    Lpa(LpaCommand),
    /// Graphviz rendering of the Bergman graph
    Dot { input: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum FactorCommand {
    /// Collapse `generator` via `label` as a red shift then a lonely elimination
    Collapse {
        input: PathBuf,
        generator: String,
        label: String,
    },
    /// Undo an insplit: `generator` and `label` name the split relation,
    /// `names` the generators the insplit introduced
    Insplit {
        input: PathBuf,
        generator: String,
        label: String,
        names: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LpaCommand {
    /// Normal form of an element
    Reduce { input: PathBuf, element: String },
    /// Normal form of a product
    Mul {
        input: PathBuf,
        a: String,
        b: String,
    },
    /// Reduce every defining relation and report residues
    Check { input: PathBuf },
    /// Finite certificate for eliminating a lonely vertex
    Corner {
        input: PathBuf,
        vertex: String,
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// exit 1
    Failed(String),
    /// exit 2
    Usage(String),
}

type Run = Result<String, Failure>;

fn failed(e: impl std::fmt::Display) -> Failure {
    Failure::Failed(e.to_string())
}

/// A structure read from disk, in the dialect of its file extension.
enum Input {
    Presentation(BergmanPresentation),
    Graph(BergmanGraph),
}

impl Input {
    fn presentation(&self) -> BergmanPresentation {
        match self {
            Input::Presentation(p) => p.clone(),
            Input::Graph(g) => graph_to_pres(g),
        }
    }

    fn graph(&self) -> BergmanGraph {
        match self {
            Input::Presentation(p) => pres_to_graph(p),
            Input::Graph(g) => g.clone(),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_error(path: &Path, e: LoadError) -> Failure {
    Failure::Failed(format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<Input, Failure> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let text = read_text(path)?;
    match ext {
        "bp" => read_bp(&text).map(Input::Presentation),
        "bg" => read_bg(&text).map(Input::Graph),
        "dg" => read_dg(&text).map(|d| Input::Graph(digraph_to_bergman(&d))),
        _ => {
            return Err(Failure::Usage(format!(
                "{}: expected a .bp, .bg or .dg file",
                path.display()
            )))
        }
    }
    .map_err(|e| load_error(path, e))
}

fn orderings_text(p: &BergmanPresentation) -> String {
    p.admissible_orderings()
        .iter()
        .map(|o| {
            format!(
                "({})",
                o.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn validate(input: &Path) -> Run {
    let p = load(input)?.presentation();
    Ok(format!(
        "valid; admissible orderings: {}\n",
        orderings_text(&p)
    ))
}

fn convert(input: &Path, format: Option<Format>) -> Run {
    let loaded = load(input)?;
    let format = format.unwrap_or(match loaded {
        Input::Presentation(_) => Format::Bg,
        Input::Graph(_) => Format::Bp,
    });
    Ok(match format {
        Format::Bp => write_bp(&loaded.presentation()),
        Format::Bg => write_bg(&loaded.graph()),
        Format::Dot => dot_export(&loaded.graph()),
        Format::Alg => write_alg(&bergman_core::algebra::build_algebra_presentation(
            &loaded.presentation(),
        )),
    })
}

fn orderings(input: &Path) -> Run {
    let p = load(input)?.presentation();
    let mut out = String::new();
    for o in p.admissible_orderings() {
        writeln!(
            out,
            "({})",
            o.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(",")
        )
        .unwrap();
    }
    Ok(out)
}

fn element_in(
    m: &MonoidPresentation,
    text: &str,
) -> Result<bergman_core::monoid::Element, Failure> {
    let e = parse_element(text).map_err(|e| Failure::Usage(format!("element `{text}`: {e}")))?;
    m.check_element(&e)
        .map_err(|e| Failure::Usage(format!("element `{text}`: {e}")))?;
    Ok(e)
}

fn meq(input: &Path, a: &str, b: &str, bound: u64) -> Run {
    let m = vmonoid_presentation(&load(input)?.graph());
    let (x, y) = (element_in(&m, a)?, element_in(&m, b)?);
    match congruence_equal(&m, &x, &y, bound).map_err(failed)? {
        Congruence::Equal(cert) => Ok(format!("EQUAL\n{}\n", cert.display_in(&m))),
        Congruence::NotEqualUpToBound => Err(Failure::Failed(format!(
            "UNKNOWN: no chain within degree bound {bound} (not a proof of inequality)"
        ))),
    }
}

fn tietze(input: &Path, script: &Path, bound: u64) -> Run {
    let mut m = vmonoid_presentation(&load(input)?.graph());
    let steps = parse_tz(&read_text(script)?, bound)
        .map_err(|e| failed(format!("{}: {e}", script.display())))?;
    let mut out = format!("start: {m}\n");
    for (k, step) in steps.iter().enumerate() {
        let (next, cert) = apply_tietze(&m, &step.transformation).map_err(|e| {
            Failure::Failed(format!("{out}step {} (line {}): {e}", k + 1, step.line))
        })?;
        writeln!(
            out,
            "step {} (line {}): type ({})",
            k + 1,
            step.line,
            step.transformation.kind()
        )
        .unwrap();
        if let Some(c) = cert {
            // the certificate lives in whichever side still has the relation
            let home = if c
                .steps
                .iter()
                .all(|s| next.relation(s.label.as_str()).is_some())
            {
                &next
            } else {
                &m
            };
            writeln!(out, "{}", c.display_in(home)).unwrap();
        }
        writeln!(out, "result: {next}").unwrap();
        m = next;
    }
    Ok(out)
}

fn write_record(out: &mut String, k: usize, line: Option<usize>, rec: &MoveRecord) {
    match line {
        Some(line) => writeln!(out, "step {k} (line {line}): {}", rec.mv.kind()),
        None => writeln!(out, "step {k}: {}", rec.mv.kind()),
    }
    .unwrap();
    let m = rec.input.monoid();
    for c in &rec.certificates {
        let home = if c
            .steps
            .iter()
            .all(|s| m.relation(s.label.as_str()).is_some())
        {
            m.clone()
        } else {
            rec.output.monoid()
        };
        writeln!(out, "{}", c.display_in(&home)).unwrap();
    }
    out.push_str(&write_bp(&rec.output));
}

fn run_script(start: BergmanPresentation, steps: &[ScriptStep], bound: u64) -> Run {
    let mut out = String::from("start:\n");
    out.push_str(&write_bp(&start));
    let mut current = start;
    let mut k = 0;
    for step in steps {
        let fail = |out: &str, e: &dyn std::fmt::Display| {
            Failure::Failed(format!("{out}line {}: {e}", step.line))
        };
        let evidence = Evidence::Bound(step.bound.unwrap_or(bound));
        let records: Vec<MoveRecord> = match &step.command {
            ScriptCommand::Move(mv) => {
                vec![apply_move(&current, mv, &evidence).map_err(|e| fail(&out, &e))?]
            }
            ScriptCommand::FactorCollapse { generator, label } => {
                factor_collapse(&current, generator.as_str(), label.as_str())
                    .map_err(|e| fail(&out, &e))?
                    .records
            }
            ScriptCommand::FactorInsplit {
                generator,
                label,
                names,
            } => {
                factor_insplit(&current, generator.as_str(), label.as_str(), names)
                    .map_err(|e| fail(&out, &e))?
                    .records
            }
        };
        for rec in records {
            k += 1;
            write_record(&mut out, k, Some(step.line), &rec);
            current = rec.output;
        }
    }
    Ok(out)
}

fn moves(input: &Path, script: &Path, bound: u64) -> Run {
    let p = load(input)?.presentation();
    let steps =
        parse_mv(&read_text(script)?).map_err(|e| failed(format!("{}: {e}", script.display())))?;
    run_script(p, &steps, bound)
}

fn names(list: &[String]) -> Result<Vec<Name>, Failure> {
    list.iter()
        .map(|s| Name::new(s).map_err(|e| Failure::Usage(format!("`{s}`: {e}"))))
        .collect()
}

fn factor(cmd: &FactorCommand) -> Run {
    let seq: MoveSequence = match cmd {
        FactorCommand::Collapse {
            input,
            generator,
            label,
        } => factor_collapse(&load(input)?.presentation(), generator, label).map_err(failed)?,
        FactorCommand::Insplit {
            input,
            generator,
            label,
            names: new,
        } => factor_insplit(&load(input)?.presentation(), generator, label, &names(new)?)
            .map_err(failed)?,
    };
    let mut out = String::from("start:\n");
    out.push_str(&write_bp(&seq.initial));
    for (k, rec) in seq.records.iter().enumerate() {
        write_record(&mut out, k + 1, None, rec);
    }
    Ok(out)
}

fn algebra(input: &Path, ordering: Option<&str>) -> Run {
    let p = load(input)?.presentation();
    let ordering = match ordering {
        Some(o) => names(
            &o.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>(),
        )?,
        None => p.greedy_ordering(),
    };
    let a = build_algebra_presentation_with(&p, &ordering).map_err(failed)?;
    Ok(write_alg(&a))
}

fn lpa_for(input: &Path, anchors: Option<&str>) -> Result<Lpa, Failure> {
    let g = Hypergraph::from_graph(&load(input)?.graph());
    let anchors = match anchors {
        Some(text) => {
            parse_anchors(&g, text).map_err(|e| Failure::Usage(format!("--anchors: {e}")))?
        }
        None => AnchorChoice::default_for(&g),
    };
    Lpa::new(g, anchors).map_err(failed)
}

fn lpa(cmd: &LpaCommand, anchors: Option<&str>) -> Run {
    let element = |lpa: &Lpa, text: &str| {
        parse_lpa_element(lpa.graph(), text)
            .map_err(|e| Failure::Usage(format!("element `{text}`: {e}")))
    };
    match cmd {
        LpaCommand::Reduce { input, element: x } => {
            let lpa = lpa_for(input, anchors)?;
            let r = lpa.reduce(&element(&lpa, x)?).map_err(failed)?;
            Ok(format!("{}\n", r.display(lpa.graph())))
        }
        LpaCommand::Mul { input, a, b } => {
            let lpa = lpa_for(input, anchors)?;
            let r = lpa
                .multiply(&element(&lpa, a)?, &element(&lpa, b)?)
                .map_err(failed)?;
            Ok(format!("{}\n", r.display(lpa.graph())))
        }
        LpaCommand::Check { input } => {
            let lpa = lpa_for(input, anchors)?;
            let rep = lpa.check_defining_relations().map_err(failed)?;
            let mut out = format!(
                "{} relation instances, {} nonzero residues\n",
                rep.instances,
                rep.residues.len()
            );
            for (name, r) in &rep.residues {
                writeln!(out, "  {name}: {}", r.display(lpa.graph())).unwrap();
            }
            if rep.holds() {
                Ok(out)
            } else {
                Err(Failure::Failed(out))
            }
        }
        LpaCommand::Corner {
            input,
            vertex,
            length,
        } => {
            let lpa = lpa_for(input, anchors)?;
            let rep = lonely_corner_certify(&lpa, vertex, *length).map_err(failed)?;
            let mark = |b: bool| if b { "pass" } else { "FAIL" };
            let mut out = format!(
                "length bound {}\n(a) injective: {}\n(b) corner: {} ({} corner words, {} images)\n(c) full: {}\n",
                rep.length_bound,
                mark(rep.injective),
                mark(rep.corner),
                rep.corner_words,
                rep.image_words,
                mark(rep.full)
            );
            for n in &rep.notes {
                writeln!(out, "note: {n}").unwrap();
            }
            if rep.passes() {
                Ok(out)
            } else {
                Err(Failure::Failed(out))
            }
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Validate { input } => validate(input),
        Command::Convert { input } => convert(input, cli.format),
        Command::Orderings { input } => orderings(input),
        Command::Vmonoid { input } => {
            load(input).map(|i| format!("{}\n", vmonoid_presentation(&i.graph())))
        }
        Command::Meq { input, a, b } => meq(input, a, b, cli.bound),
        Command::Tietze { input, script } => tietze(input, script, cli.bound),
        Command::Move { input, script } => moves(input, script, cli.bound),
        Command::Factor(cmd) => factor(cmd),
        Command::Algebra { input, ordering } => algebra(input, ordering.as_deref()),
        Command::Lpa(cmd) => lpa(cmd, cli.anchors.as_deref()),
        Command::Dot { input } => load(input).map(|i| dot_export(&i.graph())),
    };
    match result {
        Ok(text) => match &cli.out {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => Outcome {
                    code: 0,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("cannot write {}: {e}\n", path.display()),
                },
            },
            None => Outcome {
                code: 0,
                stdout: text,
                stderr: String::new(),
            },
        },
        Err(Failure::Failed(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("{}\n", msg.trim_end()),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("{}\n", msg.trim_end()),
        },
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}
