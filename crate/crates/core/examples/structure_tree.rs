//! A nested family of separations and the tree it defines.

use std::collections::BTreeSet;

use planar_blocks::graph::{parse_edge_list, Edge};
use planar_blocks::separation::Separation;
use planar_blocks::tree::{build_structure_tree, verify_tree_correspondence, NestedFamily};

fn main() -> Result<(), planar_blocks::error::Error> {
    // The path 0-1-2-3-4 cut at vertices 1 and 3.
    let g = parse_edge_list("0 1\n1 2\n2 3\n3 4\n")?;
    let left = Separation::from_edges(&g, BTreeSet::from([Edge::new(0, 1)]))?;
    let right = Separation::from_edges(&g, BTreeSet::from([Edge::new(3, 4)]))?;
    let family = NestedFamily::closure(g, [left, right])?;
    let tree = build_structure_tree(&family)?;
    println!("{} separations, {} tree vertices", family.len(), tree.vertex_count());
    for v in 0..tree.vertex_count() {
        let (vertices, edges) = tree.core(v);
        println!("vertex {v}: members {:?}, core {vertices:?} / {} edges", tree.classes[v], edges.len());
    }
    assert!(verify_tree_correspondence(&tree, &family).is_empty());
    println!("{}", serde_json::to_string_pretty(&tree.to_json()).unwrap());
    Ok(())
}
