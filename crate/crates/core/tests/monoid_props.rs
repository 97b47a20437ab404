mod common;

use bergman_core::monoid::{
    apply_tietze, congruence_equal, verify_certificate, Congruence, Element, MonoidPresentation,
    Relation, TietzeTransformation,
};
use common::{n, random_element, random_walk, reachable, rng, TestRng};
use proptest::prelude::*;
use rand::Rng;

/// At most 3 generators and total relation degree at most 4.
fn tiny_presentation(rng: &mut TestRng) -> MonoidPresentation {
    let gens: Vec<_> = ["a", "b", "c"][..rng.gen_range(1..=3)]
        .iter()
        .map(|s| n(s))
        .collect();
    let mut budget = 4u64;
    let mut relations = Vec::new();
    while budget >= 2 && relations.len() < 2 && rng.gen_bool(0.8) {
        let l = rng.gen_range(1..=budget - 1);
        let r = rng.gen_range(1..=(budget - l).min(2));
        budget -= l + r;
        relations.push(Relation::new(
            n(&format!("r{}", relations.len() + 1)),
            common::element_of_degree(rng, &gens, l),
            common::element_of_degree(rng, &gens, r),
        ));
    }
    MonoidPresentation::new(gens, relations).unwrap()
}

fn small_presentation(rng: &mut TestRng) -> MonoidPresentation {
    common::random_presentation(rng, common::Shape::SMALL).monoid()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn agrees_with_exhaustive_reachability(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = tiny_presentation(&mut r);
        let bound = r.gen_range(1..=6);
        let a = random_element(&mut r, m.generators(), bound);
        let b = random_element(&mut r, m.generators(), bound);
        let got = congruence_equal(&m, &a, &b, bound).unwrap();
        prop_assert_eq!(got.is_equal(), reachable(&m, &a, &b, bound));
        if let Congruence::Equal(c) = got {
            prop_assert!(verify_certificate(&m, &c));
            prop_assert_eq!((&c.start, &c.end), (&a, &b));
        }
    }

    #[test]
    fn reflexive_symmetric_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = small_presentation(&mut r);
        let a = random_element(&mut r, m.generators(), 3);
        let (b, top) = random_walk(&mut r, &m, &a, 3, 5);
        prop_assert!(congruence_equal(&m, &a, &a, a.degree()).unwrap().is_equal());
        let forward = congruence_equal(&m, &a, &b, top).unwrap();
        prop_assert!(forward.is_equal());
        prop_assert!(congruence_equal(&m, &b, &a, top).unwrap().is_equal());
        for extra in 1..=2 {
            prop_assert!(congruence_equal(&m, &a, &b, top + extra).unwrap().is_equal());
        }
        let c = forward.certificate().unwrap();
        prop_assert!(verify_certificate(&m, c));
        prop_assert!(verify_certificate(&m, &c.reversed()));
    }

    #[test]
    fn certificates_compose(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = small_presentation(&mut r);
        let a = random_element(&mut r, m.generators(), 3);
        let (b, t1) = random_walk(&mut r, &m, &a, 2, 5);
        let (c, t2) = random_walk(&mut r, &m, &b, 2, 5);
        let ab = congruence_equal(&m, &a, &b, t1).unwrap();
        let bc = congruence_equal(&m, &b, &c, t2).unwrap();
        let joined = ab.certificate().unwrap().then(bc.certificate().unwrap()).unwrap();
        prop_assert!(verify_certificate(&m, &joined));
        prop_assert_eq!((&joined.start, &joined.end), (&a, &c));
    }

    #[test]
    fn add_then_remove_generator_is_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = small_presentation(&mut r);
        prop_assume!(!m.generators().is_empty());
        let value = random_element(&mut r, m.generators(), 3);
        let add = TietzeTransformation::AddGenerator { generator: n("fresh"), label: n("def"), value };
        let (bigger, cert) = apply_tietze(&m, &add).unwrap();
        prop_assert!(cert.is_none());
        let remove = TietzeTransformation::RemoveGenerator { generator: n("fresh") };
        let (back, _) = apply_tietze(&bigger, &remove).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn distinct_free_elements_stay_apart() {
    let m = MonoidPresentation::free(vec![n("u"), n("v")]).unwrap();
    let a = Element::generator(n("u"));
    let b = Element::generator(n("v"));
    assert_eq!(
        congruence_equal(&m, &a, &b, 8).unwrap(),
        Congruence::NotEqualUpToBound
    );
}
