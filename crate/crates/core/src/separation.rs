//! Separations: subgraphs `A` whose attachment to the rest of the host is a
//! boundary of one or two vertices.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// A subgraph `A` of a host graph together with its boundary `δA`.
///
/// Interior vertices (those of `A` outside the boundary) carry all their host
/// edges inside `A`; each boundary vertex has some, but not all, of its host
/// edges inside `A`. Separations are compared as (vertex set, edge set), so two
/// separations with the same vertices but a different placement of a
/// boundary-to-boundary edge are distinct.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Separation {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
    boundary: Vec<VertexId>,
}

impl std::fmt::Debug for Separation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sep{:?}{:?}", self.boundary, self.edges)
    }
}

impl Ord for Separation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.vertices.cmp(&other.vertices))
            .then_with(|| self.boundary.cmp(&other.boundary))
    }
}

impl PartialOrd for Separation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Separation {
    /// Builds the separation spanned by `edges`, deriving the vertex set from
    /// the edge endpoints and the boundary from the vertices that keep host
    /// edges outside `edges`. Fails unless the result is a valid 1- or
    /// 2-separation.
    pub fn from_edges(host: &Graph, edges: BTreeSet<Edge>) -> Result<Separation> {
        let vertices: BTreeSet<VertexId> = edges.iter().flat_map(|e| e.ends()).collect();
        let boundary: Vec<VertexId> = vertices
            .iter()
            .copied()
            .filter(|&v| host.incident_edges(v).any(|e| !edges.contains(&e)))
            .collect();
        let sep = Separation {
            vertices,
            edges,
            boundary,
        };
        sep.validate(host)?;
        Ok(sep)
    }

    /// Unchecked constructor; pair with [`Separation::validate`].
    pub fn from_parts(
        vertices: BTreeSet<VertexId>,
        edges: BTreeSet<Edge>,
        boundary: impl IntoIterator<Item = VertexId>,
    ) -> Separation {
        let mut boundary: Vec<VertexId> = boundary.into_iter().collect();
        boundary.sort_unstable();
        boundary.dedup();
        Separation {
            vertices,
            edges,
            boundary,
        }
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Sorted boundary (`δA`); the hinge when it has two vertices.
    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn order(&self) -> usize {
        self.boundary.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.boundary.contains(&v)
    }

    pub fn interior(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices
            .iter()
            .copied()
            .filter(move |v| !self.boundary.contains(v))
    }

    /// Subgraph containment on both vertices and edges.
    pub fn is_subset(&self, other: &Separation) -> bool {
        self.edges.len() <= other.edges.len()
            && self.vertices.is_subset(&other.vertices)
            && self.edges.is_subset(&other.edges)
    }

    pub fn is_strict_subset(&self, other: &Separation) -> bool {
        self != other && self.is_subset(other)
    }

    /// `A*`: vertices `(VX − VA) ∪ δA`, edges `EX − EA`, same boundary.
    pub fn complement(&self, host: &Graph) -> Separation {
        let vertices = host
            .vertices()
            .filter(|v| !self.vertices.contains(v) || self.boundary.contains(v))
            .collect();
        let edges = host.edges().difference(&self.edges).copied().collect();
        Separation {
            vertices,
            edges,
            boundary: self.boundary.clone(),
        }
    }

    /// Image under a vertex map (typically an automorphism).
    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Separation {
        Separation::from_parts(
            self.vertices.iter().map(|&v| f(v)).collect(),
            self.edges.iter().map(|e| e.map(&f)).collect(),
            self.boundary.iter().map(|&v| f(v)),
        )
    }

    pub fn as_graph(&self) -> Graph {
        Graph::from_parts(self.vertices.iter().copied(), self.edges.clone())
    }

    /// Checks the separation axioms against `host`, naming the first failure.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSeparation(msg));
        if !(1..=2).contains(&self.boundary.len()) {
            return bad(format!(
                "boundary {:?} must have 1 or 2 vertices",
                self.boundary
            ));
        }
        for &v in &self.vertices {
            if !host.contains_vertex(v) {
                return bad(format!("vertex {v} not in host"));
            }
        }
        for e in &self.edges {
            if !host.edges().contains(e) {
                return bad(format!("edge {e} not in host"));
            }
            if !self.vertices.contains(&e.u()) || !self.vertices.contains(&e.v()) {
                return bad(format!("edge {e} has an endpoint outside the vertex set"));
            }
        }
        for &b in &self.boundary {
            if !self.vertices.contains(&b) {
                return bad(format!("boundary vertex {b} not in the vertex set"));
            }
            let inside = host
                .incident_edges(b)
                .filter(|e| self.edges.contains(e))
                .count();
            if inside == 0 || inside == host.degree(b) {
                return bad(format!(
                    "boundary vertex {b} must have some but not all of its edges inside"
                ));
            }
        }
        for v in self.interior() {
            if host.incident_edges(v).any(|e| !self.edges.contains(&e)) {
                return bad(format!("interior vertex {v} has an edge outside"));
            }
        }
        if self.boundary.len() == 2 {
            if self.edges.len() == 1 {
                return bad("a 2-separation may not be a single edge".into());
            }
            if self.edges.len() + 1 == host.edge_count()
                && self.vertices.len() == host.vertex_count()
            {
                return bad("a 2-separation may not be the host minus one edge".into());
            }
        }
        Ok(())
    }
}

/// Which of the four inclusions between `A`, `B` and their complements hold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Nesting {
    /// `A ⊆ B`
    pub a_in_b: bool,
    /// `A ⊆ B*`
    pub a_in_b_star: bool,
    /// `A* ⊆ B`
    pub a_star_in_b: bool,
    /// `A* ⊆ B*`
    pub a_star_in_b_star: bool,
}

impl Nesting {
    pub fn is_nested(self) -> bool {
        self.a_in_b || self.a_in_b_star || self.a_star_in_b || self.a_star_in_b_star
    }
}

/// Tests the four inclusions directly. `a_star`/`b_star` must be the
/// complements of `a`/`b` in the common host.
pub fn nesting_of(
    a: &Separation,
    a_star: &Separation,
    b: &Separation,
    b_star: &Separation,
) -> Nesting {
    Nesting {
        a_in_b: a.is_subset(b),
        a_in_b_star: a.is_subset(b_star),
        a_star_in_b: a_star.is_subset(b),
        a_star_in_b_star: a_star.is_subset(b_star),
    }
}
