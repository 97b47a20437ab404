use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use super::{AnchorChoice, EdgeRef, Hypergraph, Letter, Lpa, LpaElement, LpaError, Word};

/// Residues of the defining relations after reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub instances: usize,
    /// `(relation instance, nonzero residue)`
    pub residues: Vec<(String, LpaElement)>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.residues.is_empty()
    }
}

impl Lpa {
    /// Reduces `lhs - rhs` for every instance of relations (i)-(iv).
    pub fn check_defining_relations(&self) -> Result<RelationReport, LpaError> {
        let g = &self.graph;
        let one = BigRational::one();
        let neg = -BigRational::one();
        let mut report = RelationReport {
            instances: 0,
            residues: Vec::new(),
        };
        let mut check =
            |name: String, terms: Vec<(BigRational, Vec<Letter>)>| -> Result<(), LpaError> {
                report.instances += 1;
                let r = self.reduce(&self.from_products(&terms))?;
                if !r.is_zero() {
                    report.residues.push((name, r));
                }
                Ok(())
            };
        let nv = g.vertices().len() as u32;
        for u in 0..nv {
            for v in 0..nv {
                let mut terms = vec![(one.clone(), vec![Letter::Vertex(u), Letter::Vertex(v)])];
                if u == v {
                    terms.push((neg.clone(), vec![Letter::Vertex(u)]));
                }
                check(
                    format!(
                        "(i) {} {}",
                        g.vertices()[u as usize],
                        g.vertices()[v as usize]
                    ),
                    terms,
                )?;
            }
        }
        for e in g.edges() {
            let (s, r) = (
                g.letter_source(Letter::Edge(e)),
                g.letter_range(Letter::Edge(e)),
            );
            let (x, y) = (Letter::Edge(e), Letter::Star(e));
            let name = |k: &str| {
                format!(
                    "(ii) {k} {}[{}][{}]",
                    g.label(e.h),
                    g.index_name(g.sources(e.h)[e.i as usize]),
                    g.index_name(g.ranges(e.h)[e.j as usize])
                )
            };
            check(
                name("s h"),
                vec![
                    (one.clone(), vec![Letter::Vertex(s), x]),
                    (neg.clone(), vec![x]),
                ],
            )?;
            check(
                name("h r"),
                vec![
                    (one.clone(), vec![x, Letter::Vertex(r)]),
                    (neg.clone(), vec![x]),
                ],
            )?;
            check(
                name("r h*"),
                vec![
                    (one.clone(), vec![Letter::Vertex(r), y]),
                    (neg.clone(), vec![y]),
                ],
            )?;
            check(
                name("h* s"),
                vec![
                    (one.clone(), vec![y, Letter::Vertex(s)]),
                    (neg.clone(), vec![y]),
                ],
            )?;
        }
        for h in 0..g.hyperedge_count() as u32 {
            let (ni, nj) = (g.sources(h).len() as u32, g.ranges(h).len() as u32);
            for i in 0..ni {
                for i2 in 0..ni {
                    let mut terms: Vec<_> = (0..nj)
                        .map(|j| {
                            (
                                one.clone(),
                                vec![
                                    Letter::Edge(EdgeRef { h, i, j }),
                                    Letter::Star(EdgeRef { h, i: i2, j }),
                                ],
                            )
                        })
                        .collect();
                    if i == i2 {
                        terms.push((
                            neg.clone(),
                            vec![Letter::Vertex(g.sources(h)[i as usize].vertex)],
                        ));
                    }
                    check(
                        format!(
                            "(iii) {} {} {}",
                            g.label(h),
                            g.index_name(g.sources(h)[i as usize]),
                            g.index_name(g.sources(h)[i2 as usize])
                        ),
                        terms,
                    )?;
                }
            }
            for j in 0..nj {
                for j2 in 0..nj {
                    let mut terms: Vec<_> = (0..ni)
                        .map(|i| {
                            (
                                one.clone(),
                                vec![
                                    Letter::Star(EdgeRef { h, i, j }),
                                    Letter::Edge(EdgeRef { h, i, j: j2 }),
                                ],
                            )
                        })
                        .collect();
                    if j == j2 {
                        terms.push((
                            neg.clone(),
                            vec![Letter::Vertex(g.ranges(h)[j as usize].vertex)],
                        ));
                    }
                    check(
                        format!(
                            "(iv) {} {} {}",
                            g.label(h),
                            g.index_name(g.ranges(h)[j as usize]),
                            g.index_name(g.ranges(h)[j2 as usize])
                        ),
                        terms,
                    )?;
                }
            }
        }
        Ok(report)
    }
}

/// Finite checks behind eliminating a lonely vertex `v` via hyperedge `h`,
/// with `H'` the hypergraph without `v` and `h` and `e = Σ_{u ≠ v} u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerReport {
    pub length_bound: usize,
    /// (a) distinct `H'`-basis words map to distinct `H`-basis words
    pub injective: bool,
    /// (b) `H`-basis words from and to vertices other than `v` avoid the
    /// letters of `h`, and are exactly the images from (a)
    pub corner: bool,
    /// (c) `Σ_j h_{i_h j} h_{i_h j}*` reduces to `v` and every summand passes
    /// through a vertex other than `v`
    pub full: bool,
    pub image_words: usize,
    pub corner_words: usize,
    pub notes: Vec<String>,
}

impl CornerReport {
    pub fn passes(&self) -> bool {
        self.injective && self.corner && self.full
    }
}

fn lonely_hyperedge(g: &Hypergraph, v: u32) -> Result<u32, String> {
    let name = g.vertices()[v as usize].as_str();
    let h = (0..g.hyperedge_count() as u32)
        .find(|&h| g.source(h).as_single_generator().map(|x| x.as_str()) == Some(name))
        .ok_or_else(|| format!("no hyperedge has source exactly {{{name}}}"))?;
    if g.range(h).contains_generator(name) {
        return Err(format!("`{name}` is a range of `{}`", g.label(h)));
    }
    if let Some(other) = (0..g.hyperedge_count() as u32).find(|&k| {
        k != h && (g.source(k).contains_generator(name) || g.range(k).contains_generator(name))
    }) {
        return Err(format!("`{name}` also meets `{}`", g.label(other)));
    }
    Ok(h)
}

/// Checks (a), (b) and (c) of [`CornerReport`] on basis words of length at
/// most `length_bound`.
pub fn lonely_corner_certify(
    lpa: &Lpa,
    v: &str,
    length_bound: usize,
) -> Result<CornerReport, LpaError> {
    let g = lpa.graph();
    let vi = g
        .vertex_index(v)
        .ok_or_else(|| LpaError::NoSuchVertex(v.to_string()))?;
    let h = lonely_hyperedge(g, vi).map_err(|reason| LpaError::NotLonely {
        vertex: v.to_string(),
        reason,
    })?;

    let vertex_map: Vec<u32> = (0..g.vertices().len() as u32)
        .filter(|&u| u != vi)
        .collect();
    let edge_map: Vec<u32> = (0..g.hyperedge_count() as u32)
        .filter(|&k| k != h)
        .collect();
    let sub = Hypergraph::new(
        vertex_map
            .iter()
            .map(|&u| g.vertices()[u as usize].clone())
            .collect(),
        edge_map
            .iter()
            .map(|&k| (g.label(k).clone(), g.source(k).clone(), g.range(k).clone()))
            .collect(),
    )?;
    let sub_anchors = AnchorChoice::from_positions(
        &sub,
        edge_map.iter().map(|&k| lpa.anchors().get(k)).collect(),
    )?;
    let sub_lpa = Lpa::new(sub, sub_anchors)?.with_budget(lpa.budget());

    let lift = |l: Letter| match l {
        Letter::Vertex(u) => Letter::Vertex(vertex_map[u as usize]),
        Letter::Edge(e) => Letter::Edge(EdgeRef {
            h: edge_map[e.h as usize],
            ..e
        }),
        Letter::Star(e) => Letter::Star(EdgeRef {
            h: edge_map[e.h as usize],
            ..e
        }),
    };
    let mut notes = Vec::new();

    let sub_words = sub_lpa.basis_words(length_bound);
    let mut images: BTreeSet<Word> = BTreeSet::new();
    let mut injective = true;
    for w in &sub_words {
        let image = g.word(w.letters().iter().map(|&l| lift(l)).collect());
        match image {
            Ok(img) if lpa.is_basis_word(&img) => {
                if !images.insert(img) {
                    injective = false;
                    notes.push("two H' basis words share an image".into());
                }
            }
            _ => {
                injective = false;
                notes.push("an H' basis word does not map to an H basis word".into());
            }
        }
    }

    let mut corner = true;
    let mut corner_set: BTreeSet<Word> = BTreeSet::new();
    for w in lpa.basis_words(length_bound) {
        let (first, last) = (w.letters()[0], *w.letters().last().expect("nonempty"));
        if g.letter_source(first) == vi || g.letter_range(last) == vi {
            continue;
        }
        let touches_h = w
            .letters()
            .iter()
            .any(|l| matches!(l, Letter::Edge(e) | Letter::Star(e) if e.h == h));
        if touches_h {
            corner = false;
            notes.push("a corner basis word uses a letter of the eliminated hyperedge".into());
        }
        corner_set.insert(w);
    }
    if corner_set != images {
        corner = false;
        notes.push(format!(
            "{} corner words against {} images",
            corner_set.len(),
            images.len()
        ));
    }

    let ih = lpa.anchors().get(h).0;
    let nj = g.ranges(h).len() as u32;
    let sum = lpa.from_products(
        &(0..nj)
            .map(|j| {
                (
                    BigRational::one(),
                    vec![
                        Letter::Edge(EdgeRef { h, i: ih, j }),
                        Letter::Star(EdgeRef { h, i: ih, j }),
                    ],
                )
            })
            .collect::<Vec<_>>(),
    );
    let reduces_to_v = lpa.reduce(&sum)? == lpa.vertex(vi);
    let through_other = g.ranges(h).iter().all(|j| j.vertex != vi);
    if !reduces_to_v {
        notes.push("the range sum does not reduce to v".into());
    }
    if !through_other {
        notes.push("a summand passes through v".into());
    }

    Ok(CornerReport {
        length_bound,
        injective,
        corner,
        full: reduces_to_v && through_other,
        image_words: images.len(),
        corner_words: corner_set.len(),
        notes,
    })
}

impl LpaElement {
    /// Whether every supported word is a basis word.
    pub fn is_normal(&self, lpa: &Lpa) -> bool {
        self.terms().all(|(w, _)| lpa.is_basis_word(w))
    }
}
