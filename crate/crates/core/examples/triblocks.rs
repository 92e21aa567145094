//! 3-block decomposition: torsos, virtual edges and subdivision witnesses.

use planar_blocks::blocks2::triblock_tree;
use planar_blocks::graph::parse_edge_list;

fn main() -> Result<(), planar_blocks::error::Error> {
    // Two copies of K4 sharing the edge 0-1, plus a pendant triangle at 3.
    let g = parse_edge_list(
        "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n0 5\n1 4\n1 5\n4 5\n3 6\n6 7\n3 7\n",
    )?;
    let t = triblock_tree(&g)?;
    for (i, node) in t.nodes.iter().enumerate() {
        print!("node {i}: {:?}", node.class);
        if let Some(torso) = &node.torso {
            print!(" on {:?}", torso.z.vertices().collect::<Vec<_>>());
            for (e, path) in torso.virtual_edges.iter().zip(&torso.witness_paths) {
                print!(", virtual {e} via {path:?}");
            }
        }
        println!();
    }
    assert!(t.violations(&g).is_empty());
    print!("{}", t.to_dot());
    Ok(())
}
