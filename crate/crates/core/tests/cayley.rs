mod common;

use common::*;
use planar_blocks::blocks2::triblock_tree;
use planar_blocks::cayley::{
    cayley_graph, cayley_violations, coset_enumerate, surface_presentation, Presentation,
};
use planar_blocks::error::Error;
use planar_blocks::planar::is_planar;
use proptest::prelude::*;

fn load(name: &str) -> Presentation {
    Presentation::parse(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

#[test]
fn bundled_groups_give_planar_conforming_cayley_graphs() {
    for (name, order) in [
        ("z6.pres", 6),
        ("d3.pres", 6),
        ("a4.pres", 12),
        ("s4.pres", 24),
        ("a5.pres", 60),
    ] {
        let pr = load(name);
        let tbl = coset_enumerate(&pr, 5000).unwrap();
        assert_eq!(tbl.order(), order, "{name}");
        let x = cayley_graph(&tbl);
        assert!(cayley_violations(&tbl, &pr, &x).is_empty(), "{name}");
        assert!(is_planar(&x), "{name}");
        let t = triblock_tree(&x).unwrap();
        assert!(
            t.violations(&x).is_empty(),
            "{name}: {:?}",
            t.violations(&x)
        );
    }
}

#[test]
fn icosahedral_order_matches_permutation_oracle() {
    assert_eq!(von_dyck_permutation_oracle(5, 5), 60);
}

#[test]
fn infinite_and_invalid_presentations() {
    assert!(matches!(
        coset_enumerate(&load("torus.pres"), 1000),
        Err(Error::Overflow(_))
    ));
    assert!(matches!(
        surface_presentation(0, &[2, 1], 0, &[]),
        Err(Error::BadExponent(1))
    ));
    assert!(matches!(
        surface_presentation(0, &[2, 2], 1, &[("e1*e2".into(), 0)]),
        Err(Error::BadExponent(0))
    ));
    assert!(matches!(
        Presentation::parse("surface(0, [2, 3, 1], 0)"),
        Err(Error::BadExponent(1))
    ));
}

#[test]
fn extras_add_power_relators() {
    let pr = surface_presentation(0, &[2, 2], 1, &[("e1*e2".into(), 4)]).unwrap();
    assert_eq!(coset_enumerate(&pr, 100).unwrap().order(), 8);
}

proptest! {
    #[test]
    fn display_round_trips(p in 0usize..=2, m in proptest::collection::vec(2i64..=6, 0..=3), s in 0usize..=2) {
        let pr = surface_presentation(p, &m, s, &[]).unwrap();
        prop_assert_eq!(Presentation::parse(&pr.to_string()).unwrap(), pr);
    }

    #[test]
    fn cyclic_groups_have_the_right_order(n in 2i64..=40) {
        let pr = Presentation::parse(&format!("gens: a; rels: a^{n}")).unwrap();
        let tbl = coset_enumerate(&pr, 100).unwrap();
        prop_assert_eq!(tbl.order() as i64, n);
        prop_assert!(tbl.relator_violations(&pr).is_empty());
    }
}

#[test]
fn trivial_group() {
    let pr = surface_presentation(0, &[], 0, &[]).unwrap();
    let tbl = coset_enumerate(&pr, 1).unwrap();
    assert_eq!(tbl.order(), 1);
    assert_eq!(cayley_graph(&tbl).vertex_count(), 1);
}
