//! Seeded generators and independent oracles shared by the integration
//! tests and the acceptance run.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use bergman_core::lpa::{Hypergraph, Letter};
use bergman_core::monoid::{verify_certificate, Element, MonoidPresentation};
use bergman_core::moves::{
    blue_shift_restriction, find_lonely, fresh_generators, insplit_index_set, Evidence, Move,
    MoveRecord, SplitIndex,
};
use bergman_core::structures::{BergmanPresentation, ColouredRelation, RawPresentation};
use bergman_core::{Label, Name};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn n(s: &str) -> Name {
    Name::new(s).unwrap()
}

/// Sum of `degree` generators drawn from `pool` with replacement.
pub fn element_of_degree(rng: &mut TestRng, pool: &[Name], degree: u64) -> Element {
    let mut e = Element::zero();
    for _ in 0..degree {
        e.add_generator(pool.choose(rng).unwrap().clone(), 1);
    }
    e
}

pub fn random_element(rng: &mut TestRng, pool: &[Name], max_degree: u64) -> Element {
    let d = rng.gen_range(1..=max_degree);
    element_of_degree(rng, pool, d)
}

/// Size limits for [`random_presentation`].
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_generators: usize,
    pub max_relations: usize,
    pub max_blue: usize,
    pub max_degree: u64,
}

impl Shape {
    pub const GRAPH: Shape = Shape {
        max_generators: 8,
        max_relations: 6,
        max_blue: 3,
        max_degree: 3,
    };
    pub const SMALL: Shape = Shape {
        max_generators: 6,
        max_relations: 4,
        max_blue: 2,
        max_degree: 2,
    };
    pub const BASIC: Shape = Shape {
        max_generators: 5,
        max_relations: 4,
        max_blue: 0,
        max_degree: 2,
    };
}

/// A valid Bergman presentation. Blue relations are built in an admissible
/// order and then everything is shuffled, so declaration order carries no
/// hint. Left-hand sides are a single generator about half the time.
pub fn random_presentation(rng: &mut TestRng, shape: Shape) -> BergmanPresentation {
    let mut counter = 0;
    let mut fresh = || {
        counter += 1;
        n(&format!("g{counter}"))
    };
    let base = rng.gen_range(1..=shape.max_generators.min(3));
    let mut gens: Vec<Name> = (0..base).map(|_| fresh()).collect();
    let mut available = gens.clone();
    let mut relations = Vec::new();
    let blue = rng.gen_range(0..=shape.max_blue);
    for _ in 0..blue {
        let room = shape.max_generators - gens.len();
        if room < 2 || relations.len() >= shape.max_relations {
            break;
        }
        let t = rng.gen_range(2..=room.min(3));
        let lhs = if rng.gen_bool(0.5) {
            Element::generator(available.choose(rng).unwrap().clone())
        } else {
            random_element(rng, &available, shape.max_degree)
        };
        let range: Vec<Name> = (0..t).map(|_| fresh()).collect();
        relations.push((true, lhs, Element::from_generators(range.iter().cloned())));
        available.extend(range.iter().cloned());
        gens.extend(range);
    }
    let red = rng.gen_range(0..=shape.max_relations - relations.len());
    for _ in 0..red {
        let lhs = if rng.gen_bool(0.5) {
            Element::generator(gens.choose(rng).unwrap().clone())
        } else {
            random_element(rng, &gens, shape.max_degree)
        };
        let rhs = random_element(rng, &gens, shape.max_degree);
        relations.push((false, lhs, rhs));
    }
    relations.shuffle(rng);
    gens.shuffle(rng);
    let relations = relations
        .into_iter()
        .enumerate()
        .map(|(k, (blue, lhs, rhs))| {
            let label = n(&format!("r{}", k + 1));
            if blue {
                ColouredRelation::blue(label, lhs, rhs)
            } else {
                ColouredRelation::red(label, lhs, rhs)
            }
        })
        .collect();
    BergmanPresentation::new(RawPresentation::new(gens, relations))
        .expect("generator builds valid presentations")
}

/// A presentation satisfying the range conditions whose blue left-hand
/// sides are arbitrary, so admissibility may fail.
pub fn random_unchecked_blue(rng: &mut TestRng, max_blue: usize) -> RawPresentation {
    let base: Vec<Name> = (0..rng.gen_range(1..=2))
        .map(|k| n(&format!("b{k}")))
        .collect();
    let blue = rng.gen_range(0..=max_blue);
    let ranges: Vec<Vec<Name>> = (0..blue)
        .map(|i| {
            (0..rng.gen_range(2..=3))
                .map(|k| n(&format!("x{i}_{k}")))
                .collect()
        })
        .collect();
    let mut gens = base.clone();
    gens.extend(ranges.iter().flatten().cloned());
    let mut relations = Vec::new();
    for (i, range) in ranges.iter().enumerate() {
        let pool = if rng.gen_bool(0.4) { &base } else { &gens };
        let lhs = random_element(rng, pool, 2);
        relations.push(ColouredRelation::blue(
            n(&format!("b{i}")),
            lhs,
            Element::from_generators(range.iter().cloned()),
        ));
    }
    if rng.gen_bool(0.5) {
        let lhs = random_element(rng, &gens, 2);
        let rhs = random_element(rng, &gens, 2);
        relations.push(ColouredRelation::red(n("r"), lhs, rhs));
    }
    relations.shuffle(rng);
    gens.shuffle(rng);
    RawPresentation::new(gens, relations)
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

/// Every admissible ordering, by trying all permutations of the blue
/// relations.
pub fn brute_force_orderings(p: &RawPresentation) -> BTreeSet<Vec<Label>> {
    let blue: Vec<&ColouredRelation> = p.relations.iter().filter(|r| r.is_blue()).collect();
    let ranges: BTreeSet<&Name> = blue.iter().flat_map(|r| r.rhs.support()).collect();
    let base: BTreeSet<&Name> = p
        .generators
        .iter()
        .filter(|x| !ranges.contains(x))
        .collect();
    permutations(&blue)
        .into_iter()
        .filter(|order| {
            let mut available = base.clone();
            order.iter().all(|r| {
                let ok = r.lhs.support().all(|x| available.contains(x));
                available.extend(r.rhs.support());
                ok
            })
        })
        .map(|order| order.iter().map(|r| r.label.clone()).collect())
        .collect()
}

/// The results of applying one relation once, in either direction, to `e`.
pub fn one_step(m: &MonoidPresentation, e: &Element) -> Vec<Element> {
    let mut out = Vec::new();
    for r in m.relations() {
        for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
            if let Some(rest) = e.checked_minus(from) {
                out.push(rest.plus(to));
            }
        }
    }
    out
}

/// Exhaustive reachability inside degree `bound`.
pub fn reachable(m: &MonoidPresentation, a: &Element, b: &Element, bound: u64) -> bool {
    if a.degree() > bound || b.degree() > bound {
        return false;
    }
    let mut seen = BTreeSet::from([a.clone()]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(x) = queue.pop_front() {
        if &x == b {
            return true;
        }
        for y in one_step(m, &x) {
            if y.degree() <= bound && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    false
}

/// A short random walk of single rewrites from `e`, staying within degree
/// `cap`. Returns the endpoint and the largest degree visited.
pub fn random_walk(
    rng: &mut TestRng,
    m: &MonoidPresentation,
    e: &Element,
    steps: usize,
    cap: u64,
) -> (Element, u64) {
    let mut current = e.clone();
    let mut top = e.degree();
    for _ in 0..steps {
        let next: Vec<Element> = one_step(m, &current)
            .into_iter()
            .filter(|y| y.degree() <= cap)
            .collect();
        let Some(y) = next.choose(rng) else { break };
        current = y.clone();
        top = top.max(current.degree());
    }
    (current, top)
}

/// Splits a multiset into `parts` nonzero pieces (`parts <= degree`).
pub fn random_split(rng: &mut TestRng, e: &Element, parts: usize) -> Vec<Element> {
    let mut copies: Vec<Name> = e
        .iter()
        .flat_map(|(x, m)| std::iter::repeat_n(x.clone(), m as usize))
        .collect();
    copies.shuffle(rng);
    let mut out: Vec<Element> = copies[..parts]
        .iter()
        .map(|x| Element::generator(x.clone()))
        .collect();
    for x in &copies[parts..] {
        let k = rng.gen_range(0..parts);
        out[k].add_generator(x.clone(), 1);
    }
    out
}

/// Relations `x = b` that insplitting may act on, with the copies of `x` in
/// right-hand sides (at least two, so a nontrivial partition exists).
pub fn insplit_candidates(p: &BergmanPresentation) -> Vec<(Name, Label, Vec<SplitIndex>)> {
    if !p.is_basic() {
        return Vec::new();
    }
    p.relations()
        .iter()
        .filter_map(|r| {
            let x = r.lhs.as_single_generator()?;
            let elsewhere = p
                .relations()
                .iter()
                .any(|o| o.label != r.label && o.lhs.contains_generator(x.as_str()));
            let s = insplit_index_set(p, x.as_str());
            (!elsewhere && s.len() >= 2).then(|| (x.clone(), r.label.clone(), s))
        })
        .collect()
}

/// Relations `x = b` with `x` absent from `b`.
pub fn collapse_candidates(p: &BergmanPresentation) -> Vec<(Name, Label)> {
    if !p.is_basic() {
        return Vec::new();
    }
    p.relations()
        .iter()
        .filter_map(|r| {
            let x = r.lhs.as_single_generator()?;
            (!r.rhs.contains_generator(x.as_str())).then(|| (x.clone(), r.label.clone()))
        })
        .collect()
}

/// A random partition of `s` into between 2 and `min(3, |s|)` nonempty parts.
pub fn random_partition<T: Clone>(rng: &mut TestRng, s: &[T]) -> Vec<Vec<T>> {
    let t = rng.gen_range(2..=s.len().min(3));
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.shuffle(rng);
    let mut parts: Vec<Vec<usize>> = order[..t].iter().map(|&k| vec![k]).collect();
    for &k in &order[t..] {
        parts[rng.gen_range(0..t)].push(k);
    }
    parts
        .into_iter()
        .map(|mut part| {
            part.sort();
            part.into_iter().map(|k| s[k].clone()).collect()
        })
        .collect()
}

fn fresh_label(p: &BergmanPresentation, stem: &str) -> Label {
    bergman_core::fresh_name(stem, |c| p.has_label(c))
}

/// Some applicable move on `p` with evidence for it, or `None` if the
/// chosen kind does not apply.
pub fn random_move(rng: &mut TestRng, p: &BergmanPresentation) -> Option<(Move, Evidence)> {
    let none = Evidence::Bound(0);
    match rng.gen_range(0..8) {
        0 => {
            let r = p.red().collect::<Vec<_>>().choose(rng).copied()?.clone();
            let rest = p.monoid().without_relation(r.label.as_str()).ok()?;
            let (lhs, a) = random_walk(rng, &rest, &r.lhs, 2, 5);
            let (rhs, b) = random_walk(rng, &rest, &r.rhs, 2, 5);
            let mv = Move::RedShift {
                label: r.label,
                lhs,
                rhs,
            };
            Some((mv, Evidence::Bound(a.max(b))))
        }
        1 => {
            let r = p.blue().collect::<Vec<_>>().choose(rng).copied()?.clone();
            let restriction = blue_shift_restriction(p, r.label.as_str(), None).ok()?;
            let (lhs, a) = random_walk(rng, &restriction.monoid, &r.lhs, 2, 5);
            let mv = Move::BlueShift {
                label: r.label,
                lhs,
                ordering: None,
            };
            Some((mv, Evidence::Bound(a)))
        }
        2 => {
            let r = p
                .blue()
                .filter(|r| r.lhs.as_single_generator().is_some())
                .collect::<Vec<_>>();
            let label = r.choose(rng)?.label.clone();
            Some((Move::Enqueue { label }, none))
        }
        3 => {
            let r = p
                .red()
                .filter(|r| r.lhs.degree() >= 2)
                .collect::<Vec<_>>()
                .choose(rng)
                .copied()?
                .clone();
            let t = rng.gen_range(2..=r.lhs.degree().min(3) as usize);
            let parts = random_split(rng, &r.lhs, t);
            let names = fresh_generators(p, "o", t);
            Some((
                Move::Outsplit {
                    label: r.label,
                    parts,
                    names,
                },
                none,
            ))
        }
        4 => {
            let lonely = find_lonely(p).ok()?;
            let (generator, _) = lonely.choose(rng)?.clone();
            Some((Move::LonelyEliminate { generator }, none))
        }
        5 => {
            if !p.is_basic() || p.generators().is_empty() {
                return None;
            }
            let generator = fresh_generators(p, "e", 1).remove(0);
            let rhs = random_element(rng, p.generators(), 2);
            let label = fresh_label(p, "ext");
            Some((
                Move::Extend {
                    generator,
                    rhs,
                    label,
                },
                none,
            ))
        }
        6 => {
            let (generator, label) = collapse_candidates(p).choose(rng)?.clone();
            Some((Move::Collapse { generator, label }, none))
        }
        _ => {
            let (generator, label, s) = insplit_candidates(p).choose(rng)?.clone();
            let partition = random_partition(rng, &s);
            let names = fresh_generators(p, generator.as_str(), partition.len() - 1);
            Some((
                Move::Insplit {
                    generator,
                    label,
                    partition,
                    names,
                },
                none,
            ))
        }
    }
}

/// A hypergraph on `v1..` with random hyperedges `h1..`; every index set
/// has between 1 and `max_index` elements.
pub fn random_hypergraph(
    rng: &mut TestRng,
    max_vertices: usize,
    max_edges: usize,
    max_index: u64,
) -> Hypergraph {
    let vertices: Vec<Name> = (1..=rng.gen_range(1..=max_vertices))
        .map(|k| n(&format!("v{k}")))
        .collect();
    let edges = (1..=rng.gen_range(1..=max_edges))
        .map(|k| {
            (
                n(&format!("h{k}")),
                random_element(rng, &vertices, max_index),
                random_element(rng, &vertices, max_index),
            )
        })
        .collect();
    Hypergraph::new(vertices, edges).unwrap()
}

/// A hypergraph with a lonely vertex `z`: the single hyperedge `hz` leaves
/// `{z}` for other vertices, and nothing else meets `z`.
pub fn random_lonely_hypergraph(rng: &mut TestRng) -> Hypergraph {
    let others: Vec<Name> = (1..=rng.gen_range(1..=2))
        .map(|k| n(&format!("v{k}")))
        .collect();
    let mut edges = vec![(
        n("hz"),
        Element::generator(n("z")),
        random_element(rng, &others, 2),
    )];
    for k in 1..=rng.gen_range(0..=2) {
        edges.push((
            n(&format!("h{k}")),
            random_element(rng, &others, 2),
            random_element(rng, &others, 2),
        ));
    }
    let mut vertices = others;
    vertices.insert(rng.gen_range(0..=vertices.len()), n("z"));
    Hypergraph::new(vertices, edges).unwrap()
}

/// `x ↦ image` applied to every relation of `from`, as pairs.
pub fn transported(
    from: &MonoidPresentation,
    map: &BTreeMap<Name, Element>,
) -> Vec<(Element, Element)> {
    from.relations()
        .iter()
        .map(|r| (r.lhs.map_generators(map), r.rhs.map_generators(map)))
        .collect()
}

/// Checks each certificate in the monoid the move documents for it.
pub fn certificates_verify(rec: &MoveRecord) -> bool {
    match &rec.mv {
        Move::RedShift { label, lhs, rhs } => {
            let old = rec.input.relation(label.as_str()).unwrap();
            let m = rec.input.monoid().without_relation(label.as_str()).unwrap();
            let [a, b] = &rec.certificates[..] else {
                return false;
            };
            (&a.start, &a.end, &b.start, &b.end) == (&old.lhs, lhs, &old.rhs, rhs)
                && verify_certificate(&m, a)
                && verify_certificate(&m, b)
        }
        Move::BlueShift {
            label,
            lhs,
            ordering,
        } => {
            let old = rec.input.relation(label.as_str()).unwrap();
            let Ok(restriction) =
                blue_shift_restriction(&rec.input, label.as_str(), ordering.as_deref())
            else {
                return false;
            };
            let [a] = &rec.certificates[..] else {
                return false;
            };
            (&a.start, &a.end) == (&old.lhs, lhs) && verify_certificate(&restriction.monoid, a)
        }
        _ => rec.certificates.is_empty(),
    }
}

/// Every path of at most `max_len` letters.
pub fn paths(g: &Hypergraph, max_len: usize) -> Vec<Vec<Letter>> {
    let letters = g.letters();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Letter>> = letters.iter().map(|&l| vec![l]).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let at = g.letter_range(*p.last().unwrap());
            for &l in &letters {
                if g.letter_source(l) == at {
                    let mut q = p.clone();
                    q.push(l);
                    next.push(q);
                }
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out
}
