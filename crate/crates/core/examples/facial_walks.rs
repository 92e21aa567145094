//! Faces by the sharp-left rule, preserved by every automorphism.

use planar_blocks::graph::parse_edge_list;
use planar_blocks::planar::{embed, face_multiset_uniqueness_check, facial_preservation_check, facial_walks};
use planar_blocks::symmetry::automorphism_group;

fn main() -> Result<(), planar_blocks::error::Error> {
    let g = parse_edge_list(include_str!("../fixtures/octahedron.edges"))?;
    let rotation = embed(&g).expect("the octahedron is planar");
    let faces = facial_walks(&rotation);
    println!("{} faces", faces.len());
    for f in &faces {
        println!("  {f:?}");
    }
    let group = automorphism_group(&g)?;
    let mut preserved = 0;
    for p in group.elements().unwrap_or_default() {
        if facial_preservation_check(&rotation, p)? {
            preserved += 1;
        }
    }
    println!("{preserved} of {} automorphisms map faces to faces", group.order());
    let report = face_multiset_uniqueness_check(&g)?;
    println!(
        "{} relabelings, face multisets {:?}, unique: {}",
        report.relabelings,
        report.multisets,
        report.unique()
    );
    Ok(())
}
