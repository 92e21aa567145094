//! Automorphism group, orbits, quotient and the action on the block-cut tree.

use planar_blocks::blocks1::block_cut_tree;
use planar_blocks::graph::parse_edge_list;
use planar_blocks::symmetry::{automorphism_group, quotient_graph, tree_action_check};

fn main() -> Result<(), planar_blocks::error::Error> {
    let g = parse_edge_list(include_str!("../fixtures/bowtie.edges"))?;
    let group = automorphism_group(&g)?;
    println!("order {}", group.order());
    for p in group.generators() {
        println!("generator {:?}", p.cycles());
    }
    println!("vertex orbits {:?}", group.orbits());
    let q = quotient_graph(&g, &group);
    for o in &q.edge_orbits {
        println!("edge orbit {:?} between vertex orbits {:?}", o.edges, o.ends);
    }
    let bct = block_cut_tree(&g)?;
    let report = tree_action_check(&bct.tree, &group);
    println!("action on the block-cut tree: {} violations", report.len());
    Ok(())
}
