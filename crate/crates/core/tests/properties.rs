mod common;

use proptest::prelude::*;
use skewbrace::brace::{are_isomorphic_braces, describe, yb_map};
use skewbrace::db::{format_db, pack, parse_db, unpack, Database};
use skewbrace::ideal::{
    ideal_closure, ideal_intersection, ideal_masks, ideal_sum, is_ideal, is_ideal_by_definition, is_left_ideal,
    quotient,
};
use skewbrace::{Permutation, SkewBrace, SubsetMask};

fn brace() -> impl Strategy<Value = &'static SkewBrace> {
    let all: Vec<&'static SkewBrace> = common::up_to(12).collect();
    proptest::sample::select(all)
}

fn with_elements(k: usize) -> impl Strategy<Value = (&'static SkewBrace, Vec<usize>)> {
    brace().prop_flat_map(move |a| (Just(a), proptest::collection::vec(0..a.order(), k)))
}

fn with_subset() -> impl Strategy<Value = (&'static SkewBrace, SubsetMask)> {
    brace().prop_flat_map(|a| {
        let n = a.order();
        (Just(a), proptest::collection::btree_set(0..n, 0..=n).prop_map(move |s| SubsetMask::from_elements(n, s)))
    })
}

fn with_relabeling() -> impl Strategy<Value = (&'static SkewBrace, Permutation)> {
    brace().prop_flat_map(|a| {
        let rest: Vec<usize> = (1..a.order()).collect();
        (Just(a), Just(rest).prop_shuffle())
            .prop_map(|(a, rest)| (a, Permutation::from_images([0].into_iter().chain(rest).collect()).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lambda_is_a_homomorphism_into_automorphisms((a, e) in with_elements(3)) {
        let (x, y, z) = (e[0], e[1], e[2]);
        prop_assert_eq!(a.lambda_at(a.circ(x, y), z), a.lambda_at(x, a.lambda_at(y, z)));
        prop_assert_eq!(a.lambda_at(x, a.plus(y, z)), a.plus(a.lambda_at(x, y), a.lambda_at(x, z)));
        prop_assert_eq!(a.circ(x, y), a.plus(x, a.lambda_at(x, y)));
        prop_assert_eq!(a.lambda_at(x, 0), 0);
        prop_assert_eq!(a.circ(x, a.plus(y, z)), a.plus(a.minus(a.circ(x, y), x), a.circ(x, z)));
    }

    #[test]
    fn braid_relation_on_random_triples((a, e) in with_elements(3)) {
        let r = yb_map(a);
        let r1 = |(x, y, z): (usize, usize, usize)| { let (u, v) = r.apply(x, y); (u, v, z) };
        let r2 = |(x, y, z): (usize, usize, usize)| { let (u, v) = r.apply(y, z); (x, u, v) };
        let t = (e[0], e[1], e[2]);
        prop_assert_eq!(r1(r2(r1(t))), r2(r1(r2(t))));
    }

    #[test]
    fn relabelled_copies_are_isomorphic((a, phi) in with_relabeling()) {
        let b = a.relabel(&phi).unwrap();
        prop_assert_eq!(describe(a), describe(&b));
        let w = are_isomorphic_braces(a, &b);
        prop_assert!(w.is_some());
        let w = w.unwrap();
        for x in 0..a.order() {
            for y in 0..a.order() {
                prop_assert_eq!(w.apply(a.circ(x, y)), b.circ(w.apply(x), w.apply(y)));
                prop_assert_eq!(w.apply(a.plus(x, y)), b.plus(w.apply(x), w.apply(y)));
            }
        }
    }

    #[test]
    fn packing_relabelled_copies_round_trips((a, phi) in with_relabeling()) {
        let b = a.relabel(&phi).unwrap();
        let back = unpack(&pack(&b)).unwrap();
        prop_assert_eq!(back.table_key(), b.table_key());
    }

    #[test]
    fn closure_is_an_idempotent_ideal_cover((a, s) in with_subset()) {
        let c = ideal_closure(a, &s);
        prop_assert!(s.is_subset(&c));
        prop_assert!(is_ideal_by_definition(a, &c));
        prop_assert_eq!(ideal_closure(a, &c), c.clone());
        prop_assert!(ideal_masks(a).contains(&c));
    }

    #[test]
    fn ideal_criterion_agrees_with_definition((a, s) in with_subset()) {
        let ideal = is_ideal(a, &s);
        prop_assert_eq!(ideal, is_ideal_by_definition(a, &s));
        if ideal {
            prop_assert!(is_left_ideal(a, &s));
        }
    }

    #[test]
    fn lattice_operations_and_quotients((a, picks) in with_elements(2)) {
        let lattice = ideal_masks(a);
        let i = &lattice[picks[0] % lattice.len()];
        let j = &lattice[picks[1] % lattice.len()];
        prop_assert!(lattice.contains(&ideal_sum(a, i, j).unwrap()));
        prop_assert!(lattice.contains(&ideal_intersection(a, i, j).unwrap()));
        let q = quotient(a, i).unwrap();
        prop_assert_eq!(q.brace.order() * i.len(), a.order());
        let p = |x: usize| q.projection[x];
        for x in 0..a.order() {
            for y in 0..a.order() {
                prop_assert_eq!(p(a.plus(x, y)), q.brace.plus(p(x), p(y)));
                prop_assert_eq!(p(a.circ(x, y)), q.brace.circ(p(x), p(y)));
            }
        }
    }

    #[test]
    fn database_text_is_a_fixpoint(picks in proptest::collection::vec(brace(), 0..12)) {
        let braces: Vec<SkewBrace> = picks.into_iter().cloned().collect();
        let text = format_db(&Database::from_braces(&braces));
        let db = parse_db(&text).unwrap();
        prop_assert_eq!(format_db(&db), text);
        db.verify().unwrap();
    }
}
