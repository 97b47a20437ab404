mod common;

use bergman_core::moves::{
    apply_move, collapse, extend, factor_collapse, factor_insplit, find_lonely, insplit,
    lonely_eliminate, vmonoid_shadow, Evidence, Move, MoveRecord,
};
use bergman_core::structures::BergmanPresentation;
use common::{
    certificates_verify, collapse_candidates, insplit_candidates, n, random_element, random_move,
    random_partition, random_presentation, rng, Shape, TestRng,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn some_move(r: &mut TestRng, p: &BergmanPresentation) -> Option<MoveRecord> {
    for _ in 0..20 {
        if let Some((mv, ev)) = random_move(r, p) {
            return Some(apply_move(p, &mv, &ev).expect("generated moves apply"));
        }
    }
    None
}

fn start(r: &mut TestRng) -> BergmanPresentation {
    let shape = if r.gen_bool(0.5) {
        Shape::SMALL
    } else {
        Shape::BASIC
    };
    random_presentation(r, shape)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moves_are_closed_and_replay(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = start(&mut r);
        let Some(rec) = some_move(&mut r, &p) else { return Ok(()) };
        let basic_kept = !p.is_basic() || rec.output.is_basic()
            || matches!(rec.mv, Move::Outsplit { .. });
        prop_assert!(basic_kept);
        prop_assert!(certificates_verify(&rec));
        prop_assert_eq!(rec.replay().unwrap(), rec.output.clone());
    }

    #[test]
    fn shadow_holds(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_presentation(&mut r, Shape::BASIC);
        let Some(rec) = some_move(&mut r, &p) else { return Ok(()) };
        let report = vmonoid_shadow(&rec, 12).unwrap();
        prop_assert!(report.holds(), "{:?} fails {:?}", rec.mv, report.failures());
    }

    #[test]
    fn extend_and_eliminate_are_inverse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_presentation(&mut r, Shape::BASIC);
        let rhs = random_element(&mut r, p.generators(), 2);
        let q = extend(&p, &n("new"), &rhs, &n("def")).unwrap();
        prop_assert_eq!(lonely_eliminate(&q, "new").unwrap(), p.clone());
        for (x, label) in find_lonely(&p).unwrap() {
            let r = p.relation(label.as_str()).unwrap();
            let q = lonely_eliminate(&p, x.as_str()).unwrap();
            let back = extend(&q, &x, &r.rhs, &label).unwrap();
            // extension appends, so compare as sets of parts
            prop_assert_eq!(sorted(&back), sorted(&p));
        }
    }

    #[test]
    fn factored_collapse_is_collapse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_presentation(&mut r, Shape::BASIC);
        let Some((x, label)) = collapse_candidates(&p).choose(&mut r).cloned() else { return Ok(()) };
        let seq = factor_collapse(&p, x.as_str(), label.as_str()).unwrap();
        prop_assert_eq!(seq.replay().unwrap(), collapse(&p, x.as_str(), label.as_str()).unwrap());
    }

    #[test]
    fn factored_insplit_undoes_insplit(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_presentation(&mut r, Shape::BASIC);
        let Some((x, label, s)) = insplit_candidates(&p).choose(&mut r).cloned() else { return Ok(()) };
        let partition = random_partition(&mut r, &s);
        let names: Vec<_> = (2..=partition.len()).map(|k| n(&format!("split{k}"))).collect();
        let q = insplit(&p, x.as_str(), label.as_str(), &partition, &names).unwrap();
        let seq = factor_insplit(&q, x.as_str(), label.as_str(), &names).unwrap();
        prop_assert_eq!(seq.replay().unwrap(), p);
    }
}

fn sorted(p: &BergmanPresentation) -> (Vec<String>, Vec<String>) {
    let mut g: Vec<String> = p.generators().iter().map(|x| x.to_string()).collect();
    let mut r: Vec<String> = p.relations().iter().map(|r| format!("{r:?}")).collect();
    g.sort();
    r.sort();
    (g, r)
}

#[test]
fn shift_with_explicit_certificates_replays() {
    let p =
        bergman_core::format::read_bp("gens u v\nred g: u = u + v\nred h: v = u + v\n").unwrap();
    let mv = Move::RedShift {
        label: n("h"),
        lhs: bergman_core::monoid::parse_element("v").unwrap(),
        rhs: bergman_core::monoid::parse_element("u").unwrap(),
    };
    let rec = apply_move(&p, &mv, &Evidence::Bound(4)).unwrap();
    assert!(certificates_verify(&rec));
    let again = apply_move(&p, &mv, &Evidence::Certificates(rec.certificates.clone())).unwrap();
    assert_eq!(again.output, rec.output);
}
