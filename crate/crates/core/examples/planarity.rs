//! Planarity certificates: a rotation system or a Kuratowski subgraph.

use planar_blocks::graph::parse_edge_list;
use planar_blocks::planar::{planarity_test, recognize_kuratowski, PlanarityResult};

fn main() -> Result<(), planar_blocks::error::Error> {
    let cube = parse_edge_list(include_str!("../fixtures/q3.edges"))?;
    let petersen = parse_edge_list(include_str!("../fixtures/petersen.edges"))?;
    for (name, g) in [("cube", cube), ("petersen", petersen)] {
        match planarity_test(&g)? {
            PlanarityResult::Embedding { rotation, faces } => {
                println!("{name}: planar, {} faces, genus {}", faces.len(), rotation.genus());
                for (v, order) in rotation.rotation() {
                    println!("  {v}: {order:?}");
                }
            }
            PlanarityResult::Witness { subgraph, kind } => {
                println!("{name}: nonplanar, subdivision of {kind:?} with {} edges", subgraph.edge_count());
                assert_eq!(recognize_kuratowski(&subgraph), Some(kind));
            }
        }
    }
    Ok(())
}
