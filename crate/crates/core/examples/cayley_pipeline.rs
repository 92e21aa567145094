//! From a surface-form presentation to a planar Cayley graph and its 3-blocks.

use planar_blocks::blocks2::triblock_tree;
use planar_blocks::cayley::{cayley_graph, cayley_violations, coset_enumerate, surface_presentation};
use planar_blocks::planar::is_planar;

fn main() -> Result<(), planar_blocks::error::Error> {
    for m in [3, 4, 5] {
        let pr = surface_presentation(0, &[2, 3, m], 0, &[])?;
        let tbl = coset_enumerate(&pr, 1000)?;
        let x = cayley_graph(&tbl);
        let t = triblock_tree(&x)?;
        println!(
            "{pr}\n  order {}, {} edges, planar {}, {} torsos, violations {}",
            tbl.order(),
            x.edge_count(),
            is_planar(&x),
            t.torsos().count(),
            cayley_violations(&tbl, &pr, &x).len() + t.violations(&x).len()
        );
    }
    Ok(())
}
