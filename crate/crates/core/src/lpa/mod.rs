//! Exact arithmetic in the Leavitt path algebra `L(H)` of a hypergraph.
//!
//! A hyperedge `h` with source multiset `s` and range multiset `r` unrolls
//! into index sets `I_h = {(u,k) : k ≤ s(u)}` and `J_h = {(v,l) : l ≤ r(v)}`
//! and edges `h_ij`. Elements are rational combinations of paths in the
//! double graph, and [`Lpa::reduce`] rewrites them onto the basis of paths
//! avoiding `h_{i j_h} h_{i' j_h}*` and `h_{i_h j}* h_{i_h j'}` for chosen
//! anchors `(i_h, j_h)`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::monoid::Element;
use crate::name::{Label, VertexId};
use crate::structures::{BergmanGraph, BergmanPresentation};

mod certify;
mod reduce;

pub use certify::{lonely_corner_certify, CornerReport, RelationReport};
pub use reduce::DEFAULT_BUDGET;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpaError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(VertexId),
    #[error("duplicate hyperedge `{0}`")]
    DuplicateHyperedge(Label),
    #[error("hyperedge `{label}` mentions undeclared vertex `{vertex}`")]
    UnknownVertex { label: Label, vertex: VertexId },
    #[error("hyperedge `{0}` has an empty source or range")]
    EmptySide(Label),
    #[error("unknown vertex `{0}`")]
    NoSuchVertex(String),
    #[error("unknown hyperedge `{0}`")]
    NoSuchHyperedge(String),
    #[error("index ({vertex},{counter}) does not belong to `{label}`")]
    NoSuchIndex {
        label: String,
        vertex: String,
        counter: u32,
    },
    #[error("letters do not form a path at position {0}")]
    NotAPath(usize),
    #[error("empty word")]
    EmptyWord,
    #[error("rewrite budget of {0} steps exhausted")]
    BudgetExhausted(u64),
    #[error("rewriting revisits a word; no normal form along this strategy")]
    Cycle,
    #[error("vertex `{vertex}` is not lonely: {reason}")]
    NotLonely { vertex: String, reason: String },
}

/// A position in `I_h` or `J_h`: the `counter`-th copy of `vertex`
/// (1-based counter).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index {
    pub vertex: u32,
    pub counter: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct HyperedgeData {
    label: Label,
    source: Element,
    range: Element,
    sources: Vec<Index>,
    ranges: Vec<Index>,
}

/// An uncoloured hypergraph with the index sets unrolled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<VertexId>,
    edges: Vec<HyperedgeData>,
}

fn unroll(vertices: &[VertexId], e: &Element) -> Vec<Index> {
    vertices
        .iter()
        .enumerate()
        .flat_map(|(k, v)| {
            (1..=e.multiplicity(v.as_str()) as u32).map(move |c| Index {
                vertex: k as u32,
                counter: c,
            })
        })
        .collect()
}

impl Hypergraph {
    pub fn new(
        vertices: Vec<VertexId>,
        hyperedges: Vec<(Label, Element, Element)>,
    ) -> Result<Self, LpaError> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(LpaError::DuplicateVertex(v.clone()));
            }
        }
        let mut labels = std::collections::BTreeSet::new();
        let mut edges = Vec::with_capacity(hyperedges.len());
        for (label, source, range) in hyperedges {
            if !labels.insert(label.clone()) {
                return Err(LpaError::DuplicateHyperedge(label));
            }
            if source.is_zero() || range.is_zero() {
                return Err(LpaError::EmptySide(label));
            }
            if let Some(v) = source
                .support()
                .chain(range.support())
                .find(|v| !seen.contains(v))
            {
                return Err(LpaError::UnknownVertex {
                    label: label.clone(),
                    vertex: v.clone(),
                });
            }
            edges.push(HyperedgeData {
                sources: unroll(&vertices, &source),
                ranges: unroll(&vertices, &range),
                label,
                source,
                range,
            });
        }
        Ok(Hypergraph { vertices, edges })
    }

    /// Forgets colours.
    pub fn from_graph(g: &BergmanGraph) -> Self {
        let edges = g
            .hyperedges()
            .iter()
            .map(|h| (h.label.clone(), h.source.clone(), h.range.clone()))
            .collect();
        Hypergraph::new(g.vertices().to_vec(), edges)
            .expect("a valid Bergman graph is a hypergraph")
    }

    pub fn from_presentation(p: &BergmanPresentation) -> Self {
        let edges = p
            .relations()
            .iter()
            .map(|r| (r.label.clone(), r.lhs.clone(), r.rhs.clone()))
            .collect();
        Hypergraph::new(p.generators().to_vec(), edges)
            .expect("a valid presentation is a hypergraph")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: &str) -> Option<u32> {
        self.vertices
            .iter()
            .position(|x| x.as_str() == v)
            .map(|k| k as u32)
    }

    pub fn hyperedge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn hyperedge_index(&self, label: &str) -> Option<u32> {
        self.edges
            .iter()
            .position(|h| h.label.as_str() == label)
            .map(|k| k as u32)
    }

    pub fn label(&self, h: u32) -> &Label {
        &self.edges[h as usize].label
    }

    pub fn source(&self, h: u32) -> &Element {
        &self.edges[h as usize].source
    }

    pub fn range(&self, h: u32) -> &Element {
        &self.edges[h as usize].range
    }

    /// `I_h` in declaration order.
    pub fn sources(&self, h: u32) -> &[Index] {
        &self.edges[h as usize].sources
    }

    /// `J_h` in declaration order.
    pub fn ranges(&self, h: u32) -> &[Index] {
        &self.edges[h as usize].ranges
    }

    /// Position of `index` in `I_h` (or `J_h` when `range` is set).
    pub fn position(&self, h: u32, index: Index, range: bool) -> Option<u32> {
        let set = if range {
            self.ranges(h)
        } else {
            self.sources(h)
        };
        set.iter().position(|x| *x == index).map(|k| k as u32)
    }

    /// Every edge `h_ij` of the associated graph.
    pub fn edges(&self) -> Vec<EdgeRef> {
        (0..self.edges.len() as u32)
            .flat_map(|h| {
                let (ni, nj) = (self.sources(h).len() as u32, self.ranges(h).len() as u32);
                (0..ni).flat_map(move |i| (0..nj).map(move |j| EdgeRef { h, i, j }))
            })
            .collect()
    }

    /// Every letter of the double graph except vertices: each `h_ij` followed
    /// by its star.
    pub fn letters(&self) -> Vec<Letter> {
        self.edges()
            .into_iter()
            .flat_map(|e| [Letter::Edge(e), Letter::Star(e)])
            .collect()
    }

    fn check_edge(&self, e: EdgeRef) -> bool {
        (e.h as usize) < self.edges.len()
            && (e.i as usize) < self.sources(e.h).len()
            && (e.j as usize) < self.ranges(e.h).len()
    }

    pub fn letter_source(&self, l: Letter) -> u32 {
        match l {
            Letter::Vertex(v) => v,
            Letter::Edge(e) => self.sources(e.h)[e.i as usize].vertex,
            Letter::Star(e) => self.ranges(e.h)[e.j as usize].vertex,
        }
    }

    pub fn letter_range(&self, l: Letter) -> u32 {
        match l {
            Letter::Vertex(v) => v,
            Letter::Edge(e) => self.ranges(e.h)[e.j as usize].vertex,
            Letter::Star(e) => self.sources(e.h)[e.i as usize].vertex,
        }
    }

    /// Applies relations (i) and (ii) to a product of generators: the
    /// result is the path it equals, or `None` when the product is zero.
    pub fn normalize(&self, letters: &[Letter]) -> Option<Word> {
        let mut path: Vec<Letter> = Vec::with_capacity(letters.len());
        let mut at: Option<u32> = None;
        for &l in letters {
            if let Some(v) = at {
                if self.letter_source(l) != v {
                    return None;
                }
            }
            at = Some(self.letter_range(l));
            if !matches!(l, Letter::Vertex(_)) {
                path.push(l);
            }
        }
        match (path.is_empty(), at) {
            (true, Some(v)) => Some(Word(vec![Letter::Vertex(v)])),
            (false, _) => Some(Word(path)),
            (true, None) => None,
        }
    }

    /// Checks that `letters` is a stored word: one vertex, or a nonempty path
    /// of edges and starred edges.
    pub fn word(&self, letters: Vec<Letter>) -> Result<Word, LpaError> {
        for l in &letters {
            let ok = match *l {
                Letter::Vertex(v) => (v as usize) < self.vertices.len(),
                Letter::Edge(e) | Letter::Star(e) => self.check_edge(e),
            };
            if !ok {
                return Err(LpaError::NoSuchHyperedge(format!("{l:?}")));
            }
        }
        match letters.as_slice() {
            [] => Err(LpaError::EmptyWord),
            [Letter::Vertex(_)] => Ok(Word(letters)),
            _ => {
                for (k, pair) in letters.windows(2).enumerate() {
                    if self.letter_range(pair[0]) != self.letter_source(pair[1]) {
                        return Err(LpaError::NotAPath(k + 1));
                    }
                }
                if let Some(k) = letters.iter().position(|l| matches!(l, Letter::Vertex(_))) {
                    return Err(LpaError::NotAPath(k));
                }
                Ok(Word(letters))
            }
        }
    }

    /// The index `(vertex, counter)` as text, e.g. `u.1`.
    pub fn index_name(&self, x: Index) -> String {
        format!("{}.{}", self.vertices[x.vertex as usize], x.counter)
    }
}

/// An edge `h_ij` by positions in `I_h` and `J_h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub h: u32,
    pub i: u32,
    pub j: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Vertex(u32),
    Edge(EdgeRef),
    Star(EdgeRef),
}

/// A path in the double graph: a single vertex, or edge letters only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Path length; a vertex has length 0.
    pub fn len(&self) -> usize {
        match self.0.as_slice() {
            [Letter::Vertex(_)] => 0,
            l => l.len(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self.0.as_slice(), [Letter::Vertex(_)])
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Anchor positions `(i_h, j_h)` into `I_h` and `J_h`, one per hyperedge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnchorChoice(Vec<(u32, u32)>);

impl AnchorChoice {
    /// The first index of each set: least vertex, counter 1.
    pub fn default_for(g: &Hypergraph) -> Self {
        AnchorChoice(vec![(0, 0); g.hyperedge_count()])
    }

    pub fn from_positions(g: &Hypergraph, positions: Vec<(u32, u32)>) -> Result<Self, LpaError> {
        if positions.len() != g.hyperedge_count() {
            return Err(LpaError::NoSuchHyperedge(format!(
                "{} anchors for {} hyperedges",
                positions.len(),
                g.hyperedge_count()
            )));
        }
        for (h, &(i, j)) in positions.iter().enumerate() {
            let h = h as u32;
            if i as usize >= g.sources(h).len() || j as usize >= g.ranges(h).len() {
                return Err(LpaError::NoSuchHyperedge(g.label(h).to_string()));
            }
        }
        Ok(AnchorChoice(positions))
    }

    pub fn get(&self, h: u32) -> (u32, u32) {
        self.0[h as usize]
    }

    pub fn set(&mut self, h: u32, i: u32, j: u32) {
        self.0[h as usize] = (i, j);
    }

    pub fn positions(&self) -> &[(u32, u32)] {
        &self.0
    }

    /// Every anchor choice for `g`, in lexicographic order.
    pub fn all(g: &Hypergraph) -> Vec<AnchorChoice> {
        let mut out = vec![Vec::new()];
        for h in 0..g.hyperedge_count() as u32 {
            let (ni, nj) = (g.sources(h).len() as u32, g.ranges(h).len() as u32);
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<(u32, u32)>| {
                    (0..ni)
                        .flat_map(move |i| (0..nj).map(move |j| (i, j)))
                        .map(move |ij| {
                            let mut p = prefix.clone();
                            p.push(ij);
                            p
                        })
                })
                .collect();
        }
        out.into_iter().map(AnchorChoice).collect()
    }
}

/// A finite rational combination of words; zero coefficients are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LpaElement {
    terms: BTreeMap<Word, BigRational>,
}

impl LpaElement {
    pub fn zero() -> Self {
        LpaElement::default()
    }

    pub fn word(w: Word) -> Self {
        LpaElement::term(BigRational::one(), w)
    }

    pub fn term(c: BigRational, w: Word) -> Self {
        let mut x = LpaElement::zero();
        x.add_term(w, c);
        x
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scaled(&self, q: &BigRational) -> Self {
        let mut out = LpaElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * q);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        add(self, other)
    }

    pub fn minus(&self, other: &Self) -> Self {
        add(self, &other.scaled(&-BigRational::one()))
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, BigRational> {
        self.terms
    }
}

/// Sum of two elements, merging coefficients.
pub fn add(x: &LpaElement, y: &LpaElement) -> LpaElement {
    let mut out = x.clone();
    for (w, c) in &y.terms {
        out.add_term(w.clone(), c.clone());
    }
    out
}

/// A hypergraph with a fixed anchor choice and rewrite budget.
#[derive(Debug, Clone)]
pub struct Lpa {
    graph: Hypergraph,
    anchors: AnchorChoice,
    budget: u64,
}

impl Lpa {
    pub fn new(graph: Hypergraph, anchors: AnchorChoice) -> Result<Self, LpaError> {
        let anchors = AnchorChoice::from_positions(&graph, anchors.0)?;
        Ok(Lpa {
            graph,
            anchors,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_default_anchors(graph: Hypergraph) -> Self {
        let anchors = AnchorChoice::default_for(&graph);
        Lpa {
            graph,
            anchors,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn anchors(&self) -> &AnchorChoice {
        &self.anchors
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// The element given by rational combinations of generator products.
    pub fn from_products(&self, terms: &[(BigRational, Vec<Letter>)]) -> LpaElement {
        let mut out = LpaElement::zero();
        for (c, letters) in terms {
            if let Some(w) = self.graph.normalize(letters) {
                out.add_term(w, c.clone());
            }
        }
        out
    }

    pub fn vertex(&self, v: u32) -> LpaElement {
        LpaElement::word(Word(vec![Letter::Vertex(v)]))
    }

    /// `Σ_v v`, the unit of `L(H)` for finite `H`.
    pub fn unit(&self) -> LpaElement {
        (0..self.graph.vertices.len() as u32)
            .fold(LpaElement::zero(), |acc, v| add(&acc, &self.vertex(v)))
    }
}

/// Text rendering in the CLI element syntax.
pub struct ElementDisplay<'a> {
    pub(crate) graph: &'a Hypergraph,
    pub(crate) element: &'a LpaElement,
}

impl LpaElement {
    pub fn display<'a>(&'a self, graph: &'a Hypergraph) -> ElementDisplay<'a> {
        ElementDisplay {
            graph,
            element: self,
        }
    }
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_lpa_element(self.graph, self.element))
    }
}
