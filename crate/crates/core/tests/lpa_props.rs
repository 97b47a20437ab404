mod common;

use std::collections::BTreeMap;

use bergman_core::format::{parse_lpa_element, write_lpa_element};
use bergman_core::lpa::{AnchorChoice, Hypergraph, Lpa, LpaElement, Word};
use common::{random_hypergraph, rng, TestRng};

fn paths(g: &Hypergraph, max_len: usize) -> Vec<Word> {
    common::paths(g, max_len)
        .into_iter()
        .map(|p| g.word(p).unwrap())
        .collect()
}
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Rewrites a redex chosen at random until none is left.
fn random_strategy(lpa: &Lpa, x: &LpaElement, r: &mut TestRng) -> LpaElement {
    let mut current = x.clone();
    loop {
        let reducible: Vec<Word> = current
            .terms()
            .filter(|(w, _)| !lpa.redexes(w).is_empty())
            .map(|(w, _)| w.clone())
            .collect();
        let Some(w) = reducible.choose(r) else {
            return current;
        };
        let c = current.coefficient(w);
        let p = *lpa.redexes(w).choose(r).unwrap();
        let replaced = lpa.rewrite_at(w, p).scaled(&c);
        current = current
            .minus(&LpaElement::term(c, w.clone()))
            .plus(&replaced);
    }
}

fn random_combination(r: &mut TestRng, words: &[Word]) -> LpaElement {
    let mut x = LpaElement::zero();
    for _ in 0..r.gen_range(1..=4) {
        let c = BigRational::new(
            BigInt::from(r.gen_range(-5..=5)),
            BigInt::from(r.gen_range(1..=3)),
        );
        x.add_term(words.choose(r).unwrap().clone(), c);
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn reduction_is_a_linear_projection(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lpa = Lpa::with_default_anchors(random_hypergraph(&mut r, 3, 3, 2));
        let words = paths(lpa.graph(), 3);
        let (x, y) = (random_combination(&mut r, &words), random_combination(&mut r, &words));
        let q = BigRational::new(BigInt::from(r.gen_range(-4..=4)), BigInt::from(r.gen_range(1..=4)));
        let rx = lpa.reduce(&x).unwrap();
        prop_assert_eq!(lpa.reduce(&rx).unwrap(), rx.clone());
        prop_assert_eq!(lpa.reduce(&x.plus(&y)).unwrap(), rx.plus(&lpa.reduce(&y).unwrap()));
        prop_assert_eq!(lpa.reduce(&x.scaled(&q)).unwrap(), rx.scaled(&q));
        prop_assert!(rx.terms().all(|(w, _)| lpa.is_basis_word(w)));
    }

    #[test]
    fn strategies_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lpa = Lpa::with_default_anchors(random_hypergraph(&mut r, 2, 2, 2));
        for w in paths(lpa.graph(), 4) {
            let x = LpaElement::word(w.clone());
            let nf = lpa.reduce(&x).unwrap();
            prop_assert_eq!(lpa.all_normal_forms(&w).unwrap(), vec![nf.clone()]);
            prop_assert_eq!(random_strategy(&lpa, &x, &mut r), nf);
        }
    }

    #[test]
    fn multiplication_associates(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lpa = Lpa::with_default_anchors(random_hypergraph(&mut r, 3, 3, 2));
        let basis = lpa.basis_words(2);
        for _ in 0..20 {
            let [a, b, c] = [0; 3].map(|_| LpaElement::word(basis.choose(&mut r).unwrap().clone()));
            let left = lpa.multiply(&lpa.multiply(&a, &b).unwrap(), &c).unwrap();
            let right = lpa.multiply(&a, &lpa.multiply(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
        let unit = lpa.unit();
        let x = LpaElement::word(basis.choose(&mut r).unwrap().clone());
        prop_assert_eq!(lpa.multiply(&unit, &x).unwrap(), x.clone());
        prop_assert_eq!(lpa.multiply(&x, &unit).unwrap(), x);
    }

    #[test]
    fn defining_relations_hold(seed in any::<u64>()) {
        let lpa = Lpa::with_default_anchors(random_hypergraph(&mut rng(seed), 3, 3, 3));
        let report = lpa.check_defining_relations().unwrap();
        prop_assert!(report.holds(), "{:?}", report.residues);
    }

    #[test]
    fn basis_size_ignores_anchors(seed in any::<u64>()) {
        let g = random_hypergraph(&mut rng(seed), 2, 2, 2);
        let count = |lpa: &Lpa| {
            let mut by_len = BTreeMap::new();
            for w in lpa.basis_words(4) {
                *by_len.entry(w.len()).or_insert(0usize) += 1;
            }
            by_len
        };
        let reference = count(&Lpa::with_default_anchors(g.clone()));
        for anchors in AnchorChoice::all(&g) {
            prop_assert_eq!(count(&Lpa::new(g.clone(), anchors).unwrap()), reference.clone());
        }
    }

    #[test]
    fn element_text_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lpa = Lpa::with_default_anchors(random_hypergraph(&mut r, 3, 2, 2));
        let words = paths(lpa.graph(), 3);
        let x = random_combination(&mut r, &words);
        let text = write_lpa_element(lpa.graph(), &x);
        prop_assert_eq!(parse_lpa_element(lpa.graph(), &text).unwrap(), x.clone());
        prop_assert_eq!(x.is_zero(), text == "0");
    }
}
