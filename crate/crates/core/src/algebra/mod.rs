//! Scalar generators and relations for the Bergman algebra of a
//! presentation.
//!
//! Every generator `x` gets a square idempotent matrix `ε_x`, built level by
//! level along an admissible ordering of the blue relations: base
//! generators get `1×1` matrices, and the generators introduced by a blue
//! relation `a = x_1 + ... + x_t` get matrices of the size of `ε_a`. The last
//! generator of each level gets the complement matrix rather than fresh
//! symbols. Each red relation `a = b` adds a rectangular pair `σ`, `σ'`
//! witnessing `ε_a ~ ε_b`. All matrix relations are expanded entrywise.

use std::collections::BTreeMap;
use std::fmt;

use crate::monoid::Element;
use crate::name::{GeneratorId, Label};
use crate::structures::BergmanPresentation;

mod matrix;
mod poly;

pub use matrix::{expand_matrix_relation, SymbolicMatrix};
pub(crate) use poly::write_rational;
pub use poly::{Monomial, Poly, PolyDisplay};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {}x{} against {}x{}", left.0, left.1, right.0, right.1)]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ordering ({}) is not admissible", .0.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(","))]
    NotAdmissible(Vec<Label>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolKind {
    /// entry of `ε_x` for a generator introduced at `level`
    Epsilon {
        level: usize,
        generator: GeneratorId,
    },
    Sigma {
        label: Label,
    },
    SigmaPrime {
        label: Label,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarSymbol {
    pub name: String,
    pub kind: SymbolKind,
}

/// One step of the construction: the base generators (`relation: None`) or
/// the range of one blue relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub relation: Option<Label>,
    pub generators: Vec<GeneratorId>,
    pub dimension: usize,
}

/// The matrices `ε_x` for every generator.
#[derive(Debug, Clone)]
pub struct Epsilons {
    order: Vec<GeneratorId>,
    matrices: BTreeMap<GeneratorId, SymbolicMatrix>,
    levels: Vec<Level>,
    symbols: Vec<ScalarSymbol>,
}

impl Epsilons {
    pub fn generator(&self, x: &str) -> Option<&SymbolicMatrix> {
        self.matrices.get(x)
    }

    /// `ε_c`: the direct sum over the summands of `c`, in declaration order
    /// with multiplicity.
    pub fn of(&self, c: &Element) -> SymbolicMatrix {
        let blocks = self
            .order
            .iter()
            .filter(|x| c.contains_generator(x.as_str()))
            .flat_map(|x| {
                std::iter::repeat_n(&self.matrices[x], c.multiplicity(x.as_str()) as usize)
            });
        SymbolicMatrix::direct_sum(blocks)
    }

    pub fn dimension(&self, c: &Element) -> usize {
        c.iter()
            .map(|(x, m)| self.matrices[x].rows() * m as usize)
            .sum()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn symbols(&self) -> &[ScalarSymbol] {
        &self.symbols
    }
}

fn fresh_square(
    symbols: &mut Vec<ScalarSymbol>,
    level: usize,
    x: &GeneratorId,
    dim: usize,
) -> SymbolicMatrix {
    SymbolicMatrix::from_fn(dim, dim, |r, c| {
        let idx = symbols.len() as u32;
        symbols.push(ScalarSymbol {
            name: format!("eps[{x}][{},{}]", r + 1, c + 1),
            kind: SymbolKind::Epsilon {
                level,
                generator: x.clone(),
            },
        });
        Poly::symbol(idx)
    })
}

/// Builds `ε_x` for every generator along an admissible `ordering`.
pub fn build_epsilons(
    p: &BergmanPresentation,
    ordering: &[Label],
) -> Result<Epsilons, AlgebraError> {
    if !p.is_admissible(ordering) {
        return Err(AlgebraError::NotAdmissible(ordering.to_vec()));
    }
    let mut eps = Epsilons {
        order: p.generators().to_vec(),
        matrices: BTreeMap::new(),
        levels: Vec::new(),
        symbols: Vec::new(),
    };
    build_level(
        &mut eps,
        0,
        &p.base_generators(),
        &SymbolicMatrix::identity(1),
        None,
    );
    for (k, label) in ordering.iter().enumerate() {
        let r = p
            .relation(label.as_str())
            .expect("admissible ordering names blue relations");
        let gens: Vec<GeneratorId> = p
            .generators()
            .iter()
            .filter(|x| r.rhs.contains_generator(x.as_str()))
            .cloned()
            .collect();
        // earlier levels are complete by admissibility, so ε_a is available
        let whole = eps.of(&r.lhs);
        build_level(&mut eps, k + 1, &gens, &whole, Some(label.clone()));
    }
    Ok(eps)
}

fn build_level(
    eps: &mut Epsilons,
    level: usize,
    gens: &[GeneratorId],
    whole: &SymbolicMatrix,
    relation: Option<Label>,
) {
    let dim = whole.rows();
    eps.levels.push(Level {
        relation,
        generators: gens.to_vec(),
        dimension: dim,
    });
    let Some((last, free)) = gens.split_last() else {
        return;
    };
    let mut rest = whole.clone();
    for x in free {
        let m = fresh_square(&mut eps.symbols, level, x, dim);
        rest = rest.sub(&m).expect("square of the level dimension");
        eps.matrices.insert(x.clone(), m);
    }
    eps.matrices.insert(last.clone(), rest);
}

/// Which matrix relation a scalar equation comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// `ε_x ε_y = δ ε_x` among the fresh matrices of a level
    Orthogonality { level: usize },
    /// `ε_a ε_x ε_a = ε_x` for a fresh matrix of a level `k ≥ 1`
    Conjugation {
        level: usize,
        generator: GeneratorId,
    },
    /// `ε_a σ ε_b = σ`
    SigmaCorner { label: Label },
    /// `ε_b σ' ε_a = σ'`
    SigmaPrimeCorner { label: Label },
    /// `σ σ' = ε_a`
    SigmaSigmaPrime { label: Label },
    /// `σ' σ = ε_b`
    SigmaPrimeSigma { label: Label },
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Orthogonality { level } => write!(f, "level {level}: orthogonal idempotents"),
            Origin::Conjugation { level, generator } => {
                write!(f, "level {level}: conjugation of eps[{generator}]")
            }
            Origin::SigmaCorner { label } => write!(f, "{label}: eps_a sig eps_b = sig"),
            Origin::SigmaPrimeCorner { label } => write!(f, "{label}: eps_b sigp eps_a = sigp"),
            Origin::SigmaSigmaPrime { label } => write!(f, "{label}: sig sigp = eps_a"),
            Origin::SigmaPrimeSigma { label } => write!(f, "{label}: sigp sig = eps_b"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarRelation {
    pub lhs: Poly,
    pub rhs: Poly,
    /// both sides are the same polynomial
    pub trivial: bool,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub symbols: Vec<ScalarSymbol>,
    pub relations: Vec<ScalarRelation>,
}

impl AlgebraPresentation {
    pub fn symbol_names(&self) -> Vec<String> {
        self.symbols.iter().map(|s| s.name.clone()).collect()
    }

    pub fn trivial_count(&self) -> usize {
        self.relations.iter().filter(|r| r.trivial).count()
    }

    /// Every symbol used in a relation is declared.
    pub fn is_closed(&self) -> bool {
        let n = self.symbols.len() as u32;
        self.relations
            .iter()
            .flat_map(|r| [r.lhs.max_symbol(), r.rhs.max_symbol()])
            .flatten()
            .all(|s| s < n)
    }
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_alg(self))
    }
}

fn push_matrix_relation(
    out: &mut Vec<ScalarRelation>,
    lhs: &SymbolicMatrix,
    rhs: &SymbolicMatrix,
    origin: Origin,
) {
    for (l, r) in expand_matrix_relation(lhs, rhs).expect("construction keeps shapes consistent") {
        out.push(ScalarRelation {
            trivial: l == r,
            lhs: l,
            rhs: r,
            origin: origin.clone(),
        });
    }
}

/// The presentation along the greedy admissible ordering.
pub fn build_algebra_presentation(p: &BergmanPresentation) -> AlgebraPresentation {
    build_algebra_presentation_with(p, &p.greedy_ordering())
        .expect("the greedy ordering of a valid presentation is admissible")
}

pub fn build_algebra_presentation_with(
    p: &BergmanPresentation,
    ordering: &[Label],
) -> Result<AlgebraPresentation, AlgebraError> {
    let eps = build_epsilons(p, ordering)?;
    let mut symbols = eps.symbols.clone();
    let mut relations = Vec::new();

    for (k, level) in eps.levels.iter().enumerate() {
        let free = &level.generators[..level.generators.len().saturating_sub(1)];
        if let Some(label) = &level.relation {
            let a = eps.of(&p.relation(label.as_str()).expect("ordered label").lhs);
            for x in free {
                let ex = &eps.matrices[x];
                let conj = a
                    .mul(ex)
                    .and_then(|m| m.mul(&a))
                    .expect("square of the level dimension");
                push_matrix_relation(
                    &mut relations,
                    &conj,
                    ex,
                    Origin::Conjugation {
                        level: k,
                        generator: x.clone(),
                    },
                );
            }
        }
        for x in free {
            for y in free {
                let (ex, ey) = (&eps.matrices[x], &eps.matrices[y]);
                let rhs = if x == y {
                    ex.clone()
                } else {
                    SymbolicMatrix::zero(ex.rows(), ex.cols())
                };
                push_matrix_relation(
                    &mut relations,
                    &ex.mul(ey).expect("same level"),
                    &rhs,
                    Origin::Orthogonality { level: k },
                );
            }
        }
    }

    for r in p.red() {
        let (ea, eb) = (eps.of(&r.lhs), eps.of(&r.rhs));
        let mut fresh = |rows: usize, cols: usize, stem: &str, kind: SymbolKind| {
            SymbolicMatrix::from_fn(rows, cols, |i, j| {
                let idx = symbols.len() as u32;
                symbols.push(ScalarSymbol {
                    name: format!("{stem}[{}][{},{}]", r.label, i + 1, j + 1),
                    kind: kind.clone(),
                });
                Poly::symbol(idx)
            })
        };
        let sig = fresh(
            ea.rows(),
            eb.rows(),
            "sig",
            SymbolKind::Sigma {
                label: r.label.clone(),
            },
        );
        let sigp = fresh(
            eb.rows(),
            ea.rows(),
            "sigp",
            SymbolKind::SigmaPrime {
                label: r.label.clone(),
            },
        );
        let label = r.label.clone();
        let corner = ea.mul(&sig).and_then(|m| m.mul(&eb)).expect("shapes");
        push_matrix_relation(
            &mut relations,
            &corner,
            &sig,
            Origin::SigmaCorner {
                label: label.clone(),
            },
        );
        let corner = eb.mul(&sigp).and_then(|m| m.mul(&ea)).expect("shapes");
        push_matrix_relation(
            &mut relations,
            &corner,
            &sigp,
            Origin::SigmaPrimeCorner {
                label: label.clone(),
            },
        );
        push_matrix_relation(
            &mut relations,
            &sig.mul(&sigp).expect("shapes"),
            &ea,
            Origin::SigmaSigmaPrime {
                label: label.clone(),
            },
        );
        push_matrix_relation(
            &mut relations,
            &sigp.mul(&sig).expect("shapes"),
            &eb,
            Origin::SigmaPrimeSigma { label },
        );
    }
    Ok(AlgebraPresentation { symbols, relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::parse_element;
    use crate::structures::{ColouredRelation, RawPresentation};
    use crate::Name;

    fn n(s: &str) -> Name {
        Name::new(s).unwrap()
    }

    fn bp(gens: &str, rels: &[(char, &str, &str, &str)]) -> BergmanPresentation {
        let relations = rels
            .iter()
            .map(|&(c, l, a, b)| {
                let (a, b) = (parse_element(a).unwrap(), parse_element(b).unwrap());
                if c == 'b' {
                    ColouredRelation::blue(n(l), a, b)
                } else {
                    ColouredRelation::red(n(l), a, b)
                }
            })
            .collect();
        BergmanPresentation::new(RawPresentation::new(
            gens.split_whitespace().map(n).collect(),
            relations,
        ))
        .unwrap()
    }

    #[test]
    fn toeplitz_epsilons() {
        let p = bp("u v", &[('r', "h", "u", "u + v")]);
        let eps = build_epsilons(&p, &[]).unwrap();
        assert_eq!(
            eps.generator("u").unwrap(),
            &SymbolicMatrix::from_fn(1, 1, |_, _| Poly::symbol(0))
        );
        let complement = &Poly::one() - &Poly::symbol(0);
        assert_eq!(eps.generator("v").unwrap().get(0, 0), &complement);
        let uv = eps.of(&parse_element("u + v").unwrap());
        assert_eq!((uv.rows(), uv.cols()), (2, 2));
        assert!(uv.get(0, 1).is_zero());
    }

    #[test]
    fn single_base_generator_is_identity() {
        let p = bp("v", &[('r', "h", "2v", "3v")]);
        let eps = build_epsilons(&p, &[]).unwrap();
        assert_eq!(eps.generator("v").unwrap(), &SymbolicMatrix::identity(1));
        assert_eq!(
            eps.of(&parse_element("3v").unwrap()),
            SymbolicMatrix::identity(3)
        );
        assert!(eps.symbols().is_empty());
    }

    #[test]
    fn weighted_levels() {
        let p = bp(
            "v01 v11 v12 v21 v22",
            &[
                ('b', "e", "v01", "v11 + v12"),
                ('b', "f", "v01 + v12", "v21 + v22"),
            ],
        );
        let eps = build_epsilons(&p, &[n("e"), n("f")]).unwrap();
        let dims: Vec<usize> = eps.levels().iter().map(|l| l.dimension).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        assert!(build_epsilons(&p, &[n("f"), n("e")]).is_err());
    }

    #[test]
    fn leavitt_two_three() {
        let p = bp("v", &[('r', "h", "2v", "3v")]);
        let alg = build_algebra_presentation(&p);
        assert_eq!(alg.symbols.len(), 12);
        assert_eq!(alg.relations.len(), 6 + 6 + 4 + 9);
        assert_eq!(alg.trivial_count(), 12);
        assert!(alg.is_closed());
    }

    #[test]
    fn toeplitz_counts() {
        let p = bp("u v", &[('r', "h", "u", "u + v")]);
        let alg = build_algebra_presentation(&p);
        assert_eq!(alg.symbols.len(), 5);
        assert_eq!(alg.relations.len(), 10);
    }

    #[test]
    fn product_of_fields() {
        let p = bp("a b c d", &[]);
        let alg = build_algebra_presentation(&p);
        assert_eq!(alg.symbols.len(), 3);
        assert_eq!(alg.relations.len(), 9);
        let idempotent = alg.relations.iter().filter(|r| !r.rhs.is_zero()).count();
        assert_eq!(idempotent, 3);
    }
}
