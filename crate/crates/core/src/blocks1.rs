//! Cut-point decomposition and the block-cut tree.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::separation::Separation;
use crate::tree::{build_structure_tree, NestedFamily, StructureTree};

/// Vertices `v` with `X − v` disconnected, by direct removal.
pub fn cut_vertices(g: &Graph) -> Result<BTreeSet<VertexId>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(g.vertices()
        .filter(|&v| g.vertex_count() > 2 && g.components_without(&[v]).len() > 1)
        .collect())
}

/// One-vertex separations cut off by a single component at a cut vertex.
pub fn single_component_sides(g: &Graph, x: VertexId) -> Vec<Separation> {
    g.components_without(&[x])
        .into_iter()
        .map(|comp| {
            let edges: BTreeSet<Edge> = comp.iter().flat_map(|&v| g.incident_edges(v)).collect();
            Separation::from_edges(g, edges).expect("component side of a cut vertex")
        })
        .collect()
}

/// The cut-point family: at every cut vertex, each single-component side and
/// its complement.
///
/// At a cut vertex with exactly two components the two sides are each other's
/// complement, so they contribute one pair rather than two.
pub fn b1_family(g: &Graph) -> Result<NestedFamily> {
    let cuts = cut_vertices(g)?;
    let mut elements = BTreeSet::new();
    for x in cuts {
        for side in single_component_sides(g, x) {
            elements.insert(side.complement(g));
            elements.insert(side);
        }
    }
    NestedFamily::new(g.clone(), elements)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum BlockNode {
    CutPoint {
        vertex: VertexId,
    },
    Block {
        vertices: Vec<VertexId>,
        edges: Vec<Edge>,
    },
}

/// Undirected link of the block-cut tree, labelled with the family element
/// (one of the pair `A`, `A*`) it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockLink {
    pub a: usize,
    pub b: usize,
    pub separation: usize,
}

#[derive(Clone, Debug)]
pub struct BlockCutTree {
    pub tree: StructureTree,
    pub nodes: Vec<BlockNode>,
    /// Node of each structure-tree vertex.
    pub node_of_class: Vec<usize>,
    pub links: Vec<BlockLink>,
}

/// Builds the bipartite cut-point / 2-block tree from the cut-point family.
///
/// Classes whose core is a single vertex become cut-point nodes; the others
/// are blocks. A cut vertex with two components yields a tree edge joining two
/// blocks directly, which is subdivided by its cut-point node.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    let family = b1_family(g)?;
    let tree = build_structure_tree(&family)?;
    let mut nodes = Vec::new();
    let mut node_of_class = Vec::new();
    for v in 0..tree.vertex_count() {
        let (vertices, edges) = tree.core(v);
        let node = if !tree.classes[v].is_empty() && edges.is_empty() && vertices.len() == 1 {
            BlockNode::CutPoint {
                vertex: *vertices.iter().next().unwrap(),
            }
        } else {
            BlockNode::Block {
                vertices: vertices.into_iter().collect(),
                edges: edges.into_iter().collect(),
            }
        };
        node_of_class.push(nodes.len());
        nodes.push(node);
    }
    let mut links = Vec::new();
    for i in 0..family.len() {
        if i > tree.reversal[i] {
            continue;
        }
        let (p, q) = (
            node_of_class[tree.initial(i)],
            node_of_class[tree.terminal(i)],
        );
        let both_blocks = matches!(nodes[p], BlockNode::Block { .. })
            && matches!(nodes[q], BlockNode::Block { .. });
        if both_blocks {
            let cut = nodes.len();
            nodes.push(BlockNode::CutPoint {
                vertex: family.get(i).boundary()[0],
            });
            links.push(BlockLink {
                a: p,
                b: cut,
                separation: i,
            });
            links.push(BlockLink {
                a: cut,
                b: q,
                separation: i,
            });
        } else {
            links.push(BlockLink {
                a: p,
                b: q,
                separation: i,
            });
        }
    }
    Ok(BlockCutTree {
        tree,
        nodes,
        node_of_class,
        links,
    })
}

impl BlockCutTree {
    pub fn cut_points(&self) -> Vec<VertexId> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                BlockNode::CutPoint { vertex } => Some(*vertex),
                _ => None,
            })
            .collect()
    }

    pub fn blocks(&self) -> Vec<(Vec<VertexId>, Vec<Edge>)> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                BlockNode::Block { vertices, edges } => Some((vertices.clone(), edges.clone())),
                _ => None,
            })
            .collect()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.links
            .iter()
            .filter(|l| l.a == node || l.b == node)
            .count()
    }

    /// Invariant violations: bipartiteness, edge partition, and "in two or
    /// more blocks iff cut point".
    pub fn violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        for l in &self.links {
            let kinds = (
                matches!(self.nodes[l.a], BlockNode::CutPoint { .. }),
                matches!(self.nodes[l.b], BlockNode::CutPoint { .. }),
            );
            if kinds.0 == kinds.1 {
                out.push(format!(
                    "link {}-{} joins two nodes of the same kind",
                    l.a, l.b
                ));
            }
        }
        if self.links.len() + 1 != self.nodes.len() {
            out.push(format!(
                "{} nodes but {} links: not a tree",
                self.nodes.len(),
                self.links.len()
            ));
        }
        let blocks = self.blocks();
        for e in g.edges() {
            let count = blocks.iter().filter(|(_, es)| es.contains(e)).count();
            if count != 1 {
                out.push(format!("edge {e} lies in {count} blocks"));
            }
        }
        let cuts: BTreeSet<VertexId> = self.cut_points().into_iter().collect();
        let actual = cut_vertices(g).unwrap_or_default();
        if cuts != actual {
            out.push(format!(
                "cut nodes {cuts:?} differ from cut vertices {actual:?}"
            ));
        }
        for v in g.vertices() {
            let count = blocks.iter().filter(|(vs, _)| vs.contains(&v)).count();
            if count == 0 {
                out.push(format!("vertex {v} lies in no block"));
            }
            if (count > 1) != cuts.contains(&v) {
                out.push(format!("vertex {v} lies in {count} blocks"));
            }
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if let BlockNode::CutPoint { vertex } = node {
                let parts = g.components_without(&[*vertex]).len();
                if self.degree(i) != parts {
                    out.push(format!(
                        "cut point {vertex} has tree degree {} but {parts} components",
                        self.degree(i)
                    ));
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph block_cut_tree {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            match n {
                BlockNode::CutPoint { vertex } => {
                    out.push_str(&format!("  n{i} [shape=point,xlabel=\"{vertex}\"];\n"))
                }
                BlockNode::Block { vertices, .. } => {
                    out.push_str(&format!("  n{i} [shape=box,label=\"{vertices:?}\"];\n"))
                }
            }
        }
        for l in &self.links {
            out.push_str(&format!("  n{} -- n{};\n", l.a, l.b));
        }
        out.push_str("}\n");
        out
    }
}
