//! Cut points and 2-blocks of a graph with two cut vertices.

use planar_blocks::blocks1::{block_cut_tree, BlockNode};
use planar_blocks::graph::parse_edge_list;

fn main() -> Result<(), planar_blocks::error::Error> {
    // A triangle, a bridge 2-3, and a square hanging off vertex 3.
    let g = parse_edge_list("0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n5 6\n3 6\n")?;
    let bct = block_cut_tree(&g)?;
    for (i, node) in bct.nodes.iter().enumerate() {
        match node {
            BlockNode::CutPoint { vertex } => println!("node {i}: cut point {vertex}"),
            BlockNode::Block { vertices, edges } => {
                println!("node {i}: block on {vertices:?} with {} edges", edges.len())
            }
        }
    }
    for l in &bct.links {
        println!("{} -- {}", l.a, l.b);
    }
    assert!(bct.violations(&g).is_empty());
    print!("{}", bct.to_dot());
    Ok(())
}
