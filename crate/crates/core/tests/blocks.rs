mod common;

use std::collections::BTreeSet;

use common::*;
use planar_blocks::blocks1::{b1_family, block_cut_tree};
use planar_blocks::graph::{homeomorphic_reduce, Edge, Graph};
use planar_blocks::separation::Separation;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn connected(max: u32) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 2u32..=max, 0.0f64..0.4).prop_map(|(seed, n, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_connected(&mut rng, n, p)
    })
}

/// Edges `e`, `f` share a block iff no single vertex separates their
/// remaining ends.
fn same_block(g: &Graph, e: Edge, f: Edge) -> bool {
    if e == f {
        return true;
    }
    g.vertices().all(|z| {
        let a = if e.u() == z { e.v() } else { e.u() };
        let b = if f.u() == z { f.v() } else { f.u() };
        let comps = g.components_without(&[z]);
        comps.iter().any(|c| c.contains(&a) && c.contains(&b)) || (a == z || b == z)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn blocks_match_oracles(g in connected(14)) {
        let bct = block_cut_tree(&g).unwrap();
        prop_assert!(bct.violations(&g).is_empty(), "{:?}", bct.violations(&g));
        let ours: BTreeSet<BTreeSet<Edge>> =
            bct.blocks().into_iter().map(|(_, es)| es.into_iter().collect()).collect();
        prop_assert_eq!(&ours, &lowpoint_blocks(&g));
        let edges: Vec<Edge> = g.edges().iter().copied().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let together = ours.iter().any(|b| b.contains(&e) && b.contains(&f));
                prop_assert_eq!(together, same_block(&g, e, f), "{} {}", e, f);
            }
        }
    }

    #[test]
    fn reduction_is_idempotent_and_pulls_back(g in connected(12)) {
        let r = homeomorphic_reduce(&g).unwrap();
        let again = homeomorphic_reduce(&r.graph).unwrap();
        prop_assert_eq!(&again.graph, &r.graph);
        prop_assert!(r.graph.vertices().all(|v| r.graph.degree(v) != 2) || r.graph.is_cycle());
        if let Ok(fam) = b1_family(&r.graph) {
            for s in fam.elements() {
                let pulled = r.pull_back(s.edges());
                let back = Separation::from_edges(&g, pulled).unwrap();
                prop_assert!(back.validate(&g).is_ok());
            }
        }
    }
}

#[test]
fn bowtie_blocks() {
    let g = fixture("bowtie.edges");
    let bct = block_cut_tree(&g).unwrap();
    assert_eq!(bct.cut_points(), vec![2]);
    assert_eq!(bct.nodes.len(), 3);
    assert_eq!(b1_family(&g).unwrap().len(), 2);
}
