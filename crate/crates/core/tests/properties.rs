use blackburn::autos::{inner_automorphism, is_class_preserving, is_inner, InnerIndex};
use blackburn::catalog::{permutation_group, resolve};
use blackburn::classify::{r_of, r_of_lattice};
use blackburn::cli::{parse_cayley, parse_permgen, serialize_cayley};
use blackburn::products::direct_product;
use blackburn::{Group, GroupMap};
use proptest::prelude::*;

const SMALL: &[&str] = &["C1", "C2", "C3", "C4", "C2^2", "S3", "C5", "D8", "Q8", "C7", "D10", "A4", "Q16"];

fn small_group() -> impl Strategy<Value = Group> {
    prop::sample::select(SMALL).prop_map(|n| resolve(n).unwrap())
}

/// Direct products of two small groups, at most order 64.
fn product_group() -> impl Strategy<Value = Group> {
    (small_group(), small_group()).prop_filter_map("order above 64", |(a, b)| {
        (a.order() * b.order() <= 64).then(|| direct_product(&a, &b).unwrap())
    })
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    Just((0..5).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn class_sizes_sum_to_order_and_divide_it(g in product_group()) {
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
        prop_assert!(classes.iter().all(|c| g.order() % c.len() == 0));
        prop_assert_eq!(classes.iter().filter(|c| c.len() == 1).count(), g.center().order());
    }

    #[test]
    fn cayley_round_trip(g in product_group()) {
        let back = parse_cayley(&serialize_cayley(&g)).unwrap();
        prop_assert_eq!(back.rows(), g.rows());
    }

    #[test]
    fn direct_product_order_and_commutativity(a in small_group(), b in small_group()) {
        let p = direct_product(&a, &b).unwrap();
        prop_assert_eq!(p.order(), a.order() * b.order());
        prop_assert_eq!(p.is_abelian(), a.is_abelian() && b.is_abelian());
        prop_assert_eq!(p.center().order(), a.center().order() * b.center().order());
    }

    #[test]
    fn conjugations_are_inner_class_preserving_automorphisms(g in product_group(), k in 0usize..64) {
        let x = k % g.order();
        let c = inner_automorphism(&g, x);
        prop_assert!(c.is_automorphism(&g));
        prop_assert!(is_class_preserving(&g, &c).unwrap());
        prop_assert!(is_inner(&g, &c));
        let index = InnerIndex::new(&g, &g.generators());
        prop_assert_eq!(index.len(), g.order() / g.center().order());
    }

    #[test]
    fn map_composition_and_inverse(g in small_group(), a in 0usize..16, b in 0usize..16) {
        let f = inner_automorphism(&g, a % g.order());
        let h = inner_automorphism(&g, b % g.order());
        prop_assert!(f.then(&f.inverse()).is_identity());
        let fh = f.then(&h);
        for x in 0..g.order() {
            prop_assert_eq!(fh.apply(x), h.apply(f.apply(x)));
        }
        prop_assert!(f.pow(f.order() as u64).is_identity());
    }

    #[test]
    fn r_oracles_agree(g in product_group()) {
        prop_assert_eq!(r_of(&g).unwrap(), r_of_lattice(&g).unwrap());
    }

    #[test]
    fn subgroup_lattice_is_closed(g in small_group()) {
        for s in g.all_subgroups().unwrap() {
            prop_assert!(s.check_invariants(&g));
            prop_assert_eq!(g.closure(s.members()), s.clone());
            prop_assert_eq!(g.order() % s.order(), 0);
        }
    }

    #[test]
    fn permutation_closures_divide_120(gens in prop::collection::vec(permutation(), 1..3)) {
        let g = permutation_group(5, &gens, 120).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        let text = format!(
            "permgen 1\ndegree 5\n{}",
            gens.iter().map(|p| format!("gen {}\n", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))).collect::<String>()
        );
        prop_assert_eq!(parse_permgen(&text).unwrap().rows(), g.rows());
    }

    #[test]
    fn cayley_parser_never_panics(text in "(cayley 1\norder [0-3]\n)?([0-3 #a-z]{0,8}\n){0,4}") {
        let _ = parse_cayley(&text);
    }
}

#[test]
fn identity_map_is_inner() {
    let g = resolve("S4").unwrap();
    assert!(is_inner(&g, &GroupMap::identity(g.order())));
}
