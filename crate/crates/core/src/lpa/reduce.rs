use std::collections::{BTreeSet, HashMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{add, EdgeRef, Letter, Lpa, LpaElement, LpaError, Word};

/// Rewrite steps allowed per [`Lpa::reduce`] call.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// The two forbidden patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Redex {
    /// `h_{i j_h} h_{i' j_h}*`
    Range { h: u32, i: u32, i2: u32 },
    /// `h_{i_h j}* h_{i_h j'}`
    Source { h: u32, j: u32, j2: u32 },
}

impl Lpa {
    fn redex(&self, a: Letter, b: Letter) -> Option<Redex> {
        match (a, b) {
            (Letter::Edge(x), Letter::Star(y))
                if x.h == y.h && x.j == y.j && x.j == self.anchors.get(x.h).1 =>
            {
                Some(Redex::Range {
                    h: x.h,
                    i: x.i,
                    i2: y.i,
                })
            }
            (Letter::Star(x), Letter::Edge(y))
                if x.h == y.h && x.i == y.i && x.i == self.anchors.get(x.h).0 =>
            {
                Some(Redex::Source {
                    h: x.h,
                    j: x.j,
                    j2: y.j,
                })
            }
            _ => None,
        }
    }

    /// Positions `p` such that letters `p, p+1` form a forbidden pattern.
    pub fn redexes(&self, w: &Word) -> Vec<usize> {
        w.letters()
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| self.redex(pair[0], pair[1]).is_some())
            .map(|(p, _)| p)
            .collect()
    }

    /// Whether a stored word avoids both forbidden patterns.
    pub fn is_basis_word(&self, w: &Word) -> bool {
        self.redexes(w).is_empty()
    }

    /// [`Lpa::is_basis_word`] for unchecked letters; errors on non-paths.
    pub fn is_basis_letters(&self, letters: &[Letter]) -> Result<bool, LpaError> {
        let w = self.graph.word(letters.to_vec())?;
        Ok(self.is_basis_word(&w))
    }

    /// Rewrites the redex at `p` by solving relation (iii) or (iv) for the
    /// forbidden product.
    pub fn rewrite_at(&self, w: &Word, p: usize) -> LpaElement {
        let letters = w.letters();
        let redex = self
            .redex(letters[p], letters[p + 1])
            .expect("rewrite_at needs a redex");
        let (prefix, suffix) = (&letters[..p], &letters[p + 2..]);
        let splice = |middle: &[Letter]| -> Option<Word> {
            let mut v = prefix.to_vec();
            v.extend_from_slice(middle);
            v.extend_from_slice(suffix);
            self.graph.normalize(&v)
        };
        let mut out = LpaElement::zero();
        let minus_one = -BigRational::one();
        match redex {
            Redex::Range { h, i, i2 } => {
                if i == i2 {
                    let u = self.graph.sources(h)[i as usize].vertex;
                    if let Some(w) = splice(&[Letter::Vertex(u)]) {
                        out.add_term(w, BigRational::one());
                    }
                }
                let jh = self.anchors.get(h).1;
                for j in (0..self.graph.ranges(h).len() as u32).filter(|&j| j != jh) {
                    let pair = [
                        Letter::Edge(EdgeRef { h, i, j }),
                        Letter::Star(EdgeRef { h, i: i2, j }),
                    ];
                    if let Some(w) = splice(&pair) {
                        out.add_term(w, minus_one.clone());
                    }
                }
            }
            Redex::Source { h, j, j2 } => {
                if j == j2 {
                    let v = self.graph.ranges(h)[j as usize].vertex;
                    if let Some(w) = splice(&[Letter::Vertex(v)]) {
                        out.add_term(w, BigRational::one());
                    }
                }
                let ih = self.anchors.get(h).0;
                for i in (0..self.graph.sources(h).len() as u32).filter(|&i| i != ih) {
                    let pair = [
                        Letter::Star(EdgeRef { h, i, j }),
                        Letter::Edge(EdgeRef { h, i, j: j2 }),
                    ];
                    if let Some(w) = splice(&pair) {
                        out.add_term(w, minus_one.clone());
                    }
                }
            }
        }
        out
    }

    /// Normal form: rewrites the leftmost redex of each word until only
    /// basis words remain.
    pub fn reduce(&self, x: &LpaElement) -> Result<LpaElement, LpaError> {
        let mut pending = x.clone().into_terms();
        let mut result = LpaElement::zero();
        let mut steps = 0u64;
        while let Some((w, c)) = pending.pop_first() {
            let Some(&p) = self.redexes(&w).first() else {
                result.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > self.budget {
                return Err(LpaError::BudgetExhausted(self.budget));
            }
            for (w2, c2) in self.rewrite_at(&w, p).into_terms() {
                let slot = pending.entry(w2.clone()).or_insert_with(BigRational::zero);
                *slot += &c * c2;
                if slot.is_zero() {
                    pending.remove(&w2);
                }
            }
        }
        Ok(result)
    }

    /// Concatenation followed by reduction.
    pub fn multiply(&self, x: &LpaElement, y: &LpaElement) -> Result<LpaElement, LpaError> {
        let mut prod = LpaElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let mut letters = a.letters().to_vec();
                letters.extend_from_slice(b.letters());
                if let Some(w) = self.graph.normalize(&letters) {
                    prod.add_term(w, ca * cb);
                }
            }
        }
        self.reduce(&prod)
    }

    pub fn add(&self, x: &LpaElement, y: &LpaElement) -> LpaElement {
        add(x, y)
    }

    /// All basis words of path length at most `max_len`, shortest first.
    pub fn basis_words(&self, max_len: usize) -> Vec<Word> {
        let g = &self.graph;
        let mut out: Vec<Word> = (0..g.vertices().len() as u32)
            .map(|v| Word(vec![Letter::Vertex(v)]))
            .collect();
        let letters = g.letters();
        let mut frontier: Vec<Vec<Letter>> = Vec::new();
        if max_len >= 1 {
            frontier = letters.iter().map(|&l| vec![l]).collect();
        }
        for len in 1..=max_len {
            out.extend(frontier.iter().map(|l| Word(l.clone())));
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for path in &frontier {
                let last = *path.last().expect("nonempty");
                let at = g.letter_range(last);
                for &l in &letters {
                    if g.letter_source(l) == at && self.redex(last, l).is_none() {
                        let mut p = path.clone();
                        p.push(l);
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// The normal forms reachable from `w` when any redex of any word may be
    /// rewritten at each step. A singleton for a confluent system.
    pub fn all_normal_forms(&self, w: &Word) -> Result<Vec<LpaElement>, LpaError> {
        let mut memo = HashMap::new();
        let mut visiting = HashSet::new();
        let mut steps = 0u64;
        self.normal_forms_rec(w, &mut memo, &mut visiting, &mut steps)
    }

    fn normal_forms_rec(
        &self,
        w: &Word,
        memo: &mut HashMap<Word, Vec<LpaElement>>,
        visiting: &mut HashSet<Word>,
        steps: &mut u64,
    ) -> Result<Vec<LpaElement>, LpaError> {
        if let Some(r) = memo.get(w) {
            return Ok(r.clone());
        }
        let positions = self.redexes(w);
        if positions.is_empty() {
            return Ok(vec![LpaElement::word(w.clone())]);
        }
        if !visiting.insert(w.clone()) {
            return Err(LpaError::Cycle);
        }
        let mut results: BTreeSet<Vec<(Word, BigRational)>> = BTreeSet::new();
        for p in positions {
            *steps += 1;
            if *steps > self.budget {
                return Err(LpaError::BudgetExhausted(self.budget));
            }
            let mut combos = vec![LpaElement::zero()];
            for (t, c) in self.rewrite_at(w, p).terms() {
                let forms = self.normal_forms_rec(t, memo, visiting, steps)?;
                let mut next = Vec::new();
                for acc in &combos {
                    for f in &forms {
                        next.push(add(acc, &f.scaled(c)));
                    }
                }
                next.sort_by_key(canonical);
                next.dedup();
                combos = next;
            }
            results.extend(combos.iter().map(canonical));
        }
        visiting.remove(w);
        let forms: Vec<LpaElement> = results
            .into_iter()
            .map(|terms| {
                let mut x = LpaElement::zero();
                for (w, c) in terms {
                    x.add_term(w, c);
                }
                x
            })
            .collect();
        memo.insert(w.clone(), forms.clone());
        Ok(forms)
    }
}

fn canonical(x: &LpaElement) -> Vec<(Word, BigRational)> {
    x.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}
