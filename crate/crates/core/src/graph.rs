//! Finite simple undirected graphs with stable vertex ids.
//!
//! Every algorithm in the crate iterates vertices and neighbours in
//! ascending id order, so results are reproducible for a given input.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// An unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Panics on a loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: VertexId, b: VertexId) -> Edge {
        Edge::try_new(a, b).expect("loop edge")
    }

    pub fn try_new(a: VertexId, b: VertexId) -> Option<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> VertexId {
        self.0
    }

    pub fn v(self) -> VertexId {
        self.1
    }

    pub fn ends(self) -> [VertexId; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, x: VertexId) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: VertexId) -> VertexId {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }

    pub fn map(self, f: impl Fn(VertexId) -> VertexId) -> Edge {
        Edge::new(f(self.0), f(self.1))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Finite simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: BTreeMap<VertexId, Vec<VertexId>>,
    edges: BTreeSet<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.adjacency.keys().collect::<Vec<_>>())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from id pairs; duplicate pairs collapse.
    pub fn from_edges<I>(pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Graph::with_vertices(std::iter::empty(), pairs)
    }

    /// Like [`Graph::from_edges`], additionally declaring (possibly isolated) vertices.
    pub fn with_vertices<V, I>(vertices: V, pairs: I) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexId>,
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            let e = Edge::try_new(a, b)
                .ok_or_else(|| Error::MalformedInput(format!("loop at vertex {a}")))?;
            edges.insert(e);
        }
        Ok(Graph::from_parts(vertices, edges))
    }

    /// Trusted constructor: `edges` must not reference anything but simple pairs.
    pub fn from_parts<V>(vertices: V, edges: BTreeSet<Edge>) -> Graph
    where
        V: IntoIterator<Item = VertexId>,
    {
        let mut adjacency: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for v in vertices {
            adjacency.entry(v).or_default();
        }
        for e in &edges {
            adjacency.entry(e.0).or_default().push(e.1);
            adjacency.entry(e.1).or_default().push(e.0);
        }
        for list in adjacency.values_mut() {
            list.sort_unstable();
        }
        Graph { adjacency, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.adjacency.keys().copied().collect()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        Edge::try_new(a, b).is_some_and(|e| self.edges.contains(&e))
    }

    /// Sorted neighbour list; empty for unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adjacency.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = Edge> + '_ {
        self.neighbors(v).iter().map(move |&w| Edge::new(v, w))
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.adjacency.keys().next_back().copied()
    }

    /// Connected components of the graph with `removed` deleted, each sorted,
    /// ordered by smallest member.
    pub fn components_without(&self, removed: &[VertexId]) -> Vec<BTreeSet<VertexId>> {
        let mut seen: BTreeSet<VertexId> = removed.iter().copied().collect();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in self.neighbors(x) {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        self.components_without(&[])
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    pub fn is_connected_without(&self, removed: &[VertexId]) -> bool {
        self.components_without(removed).len() == 1
    }

    /// Subgraph on the given vertices (ids preserved).
    pub fn induced(&self, vertices: &BTreeSet<VertexId>) -> Graph {
        let edges = self
            .edges
            .iter()
            .filter(|e| vertices.contains(&e.0) && vertices.contains(&e.1))
            .copied()
            .collect();
        Graph::from_parts(vertices.iter().copied(), edges)
    }

    /// Subgraph spanned by an edge subset plus any extra vertices.
    pub fn edge_subgraph<'a, I>(&self, edges: I, extra: &[VertexId]) -> Graph
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let edges: BTreeSet<Edge> = edges
            .into_iter()
            .filter(|e| self.edges.contains(e))
            .copied()
            .collect();
        Graph::from_parts(extra.iter().copied(), edges)
    }

    /// Relabels vertices by `f`, which must be injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Graph {
        let edges = self.edges.iter().map(|e| e.map(&f)).collect();
        Graph::from_parts(self.vertices().map(&f), edges)
    }

    /// True when every vertex has degree exactly two and the graph is connected.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3
            && self.adjacency.values().all(|n| n.len() == 2)
            && self.is_connected()
    }

    /// Breadth-first shortest path from `from` to `to` whose intermediate
    /// vertices satisfy `inner`; neighbours are explored in id order.
    pub fn shortest_path(
        &self,
        from: VertexId,
        to: VertexId,
        inner: impl Fn(VertexId) -> bool,
        edge_ok: impl Fn(Edge) -> bool,
    ) -> Option<Vec<VertexId>> {
        if from == to {
            return Some(vec![from]);
        }
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        parent.insert(from, from);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if parent.contains_key(&y) || !edge_ok(Edge::new(x, y)) {
                    continue;
                }
                if y == to {
                    let mut path = vec![to, x];
                    let mut cur = x;
                    while cur != from {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                if inner(y) {
                    parent.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Vertices whose removal disconnects the graph: those lying in two or
    /// more blocks.
    pub fn articulation_points(&self) -> BTreeSet<VertexId> {
        let mut seen: BTreeMap<VertexId, usize> = BTreeMap::new();
        for block in self.biconnected_components() {
            let vs: BTreeSet<VertexId> = block.iter().flat_map(|e| e.ends()).collect();
            for v in vs {
                *seen.entry(v).or_default() += 1;
            }
        }
        seen.into_iter()
            .filter(|&(_, c)| c > 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Edge sets of the maximal 2-connected subgraphs (bridges are singleton
    /// blocks), ordered by smallest edge.
    pub fn biconnected_components(&self) -> Vec<BTreeSet<Edge>> {
        let mut disc: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut low: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut time = 0;
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<Edge> = Vec::new();
        for root in self.vertices() {
            if disc.contains_key(&root) {
                continue;
            }
            disc.insert(root, time);
            low.insert(root, time);
            time += 1;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(VertexId, Option<VertexId>, usize)> = vec![(root, None, 0)];
            while let Some(&mut (v, p, ref mut idx)) = stack.last_mut() {
                let nbrs = self.neighbors(v);
                if *idx < nbrs.len() {
                    let w = nbrs[*idx];
                    *idx += 1;
                    if Some(w) == p {
                        continue;
                    }
                    match disc.get(&w) {
                        None => {
                            edge_stack.push(Edge::new(v, w));
                            disc.insert(w, time);
                            low.insert(w, time);
                            time += 1;
                            stack.push((w, Some(v), 0));
                        }
                        Some(&dw) if dw < disc[&v] => {
                            edge_stack.push(Edge::new(v, w));
                            let lv = low.get_mut(&v).unwrap();
                            *lv = (*lv).min(dw);
                        }
                        Some(_) => {}
                    }
                } else {
                    stack.pop();
                    if let Some(p) = p {
                        let lv = low[&v];
                        let lp = low.get_mut(&p).unwrap();
                        *lp = (*lp).min(lv);
                        if lv >= disc[&p] {
                            let stop = Edge::new(p, v);
                            let mut block = BTreeSet::new();
                            while let Some(e) = edge_stack.pop() {
                                block.insert(e);
                                if e == stop {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }
}

/// Parses the edge-list text format: one `u v` pair per line, `#` starts a
/// comment, and an optional `vertices: n` header declares ids `0..n`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertices = Vec::new();
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        if let Some(rest) = line.strip_prefix("vertices:") {
            let n: VertexId = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad vertex count {:?}", rest.trim())))?;
            vertices.extend(0..n);
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(format!("expected `u v`, got {line:?}")));
        }
        let id = |s: &str| {
            s.parse::<VertexId>()
                .map_err(|_| parse_err(format!("bad vertex id {s:?}")))
        };
        let (a, b) = (id(fields[0])?, id(fields[1])?);
        if a == b {
            return Err(Error::MalformedInput(format!(
                "loop at vertex {a} (line {})",
                lineno + 1
            )));
        }
        pairs.push((a, b));
    }
    Graph::with_vertices(vertices, pairs)
}

/// Serializes a graph in the edge-list text format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let isolated: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
    if !isolated.is_empty() {
        for v in isolated {
            out.push_str(&format!("# isolated {v}\n"));
        }
    }
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Connectivity test in the Menger/cutset sense.
///
/// Implemented by cutset enumeration: `k = 1` checks connectivity, `k = 2`
/// removes each single vertex, and `k = 3` removes every vertex pair. Following
/// the convention used for 3-blocks, `k = 3` additionally requires at least
/// five vertices, and `k = 2` at least three.
pub fn is_k_connected(g: &Graph, k: u8) -> bool {
    let n = g.vertex_count();
    if !g.is_connected() {
        return false;
    }
    match k {
        0 | 1 => true,
        2 => n >= 3 && g.vertices().all(|v| g.is_connected_without(&[v])),
        3 => {
            if n < 5 {
                return false;
            }
            let vs: Vec<VertexId> = g.vertices().collect();
            if !vs.iter().all(|&v| g.is_connected_without(&[v])) {
                return false;
            }
            two_vertex_cut(g).is_none()
        }
        _ => panic!("is_k_connected supports k in 1..=3"),
    }
}

/// First vertex pair (lexicographic) whose removal disconnects `g`.
pub fn two_vertex_cut(g: &Graph) -> Option<(VertexId, VertexId)> {
    let vs: Vec<VertexId> = g.vertices().collect();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if g.vertex_count() > 2 && !g.is_connected_without(&[a, b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// How [`homeomorphic_reduce`] treated its input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionKind {
    /// Degree-2 vertices suppressed until none remain.
    Reduced,
    /// The input is 2-regular and was returned unchanged.
    Cycle,
}

/// Result of suppressing degree-2 vertices.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    /// Each original edge mapped to the reduced edge that absorbed it.
    pub edge_map: BTreeMap<Edge, Edge>,
    pub kind: ReductionKind,
}

impl Reduction {
    /// Edges of the original graph that map into `reduced`.
    pub fn pull_back(&self, reduced: &BTreeSet<Edge>) -> BTreeSet<Edge> {
        self.edge_map
            .iter()
            .filter(|(_, r)| reduced.contains(r))
            .map(|(o, _)| *o)
            .collect()
    }
}

/// Suppresses degree-2 vertices (smallest id first), collapsing any parallel
/// edges this creates, until no degree-2 vertex remains. Cycles are returned
/// unchanged. Paths reduce to a single edge.
pub fn homeomorphic_reduce(g: &Graph) -> Result<Reduction> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let identity: BTreeMap<Edge, Edge> = g.edges().iter().map(|&e| (e, e)).collect();
    if g.is_cycle() {
        return Ok(Reduction {
            graph: g.clone(),
            edge_map: identity,
            kind: ReductionKind::Cycle,
        });
    }
    let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> = g
        .vertices()
        .map(|v| (v, g.neighbors(v).iter().copied().collect()))
        .collect();
    let mut edge_map = identity;
    while let Some(v) = adjacency
        .iter()
        .find(|(_, n)| n.len() == 2)
        .map(|(&v, _)| v)
    {
        let nbrs: Vec<VertexId> = adjacency[&v].iter().copied().collect();
        let (x, y) = (nbrs[0], nbrs[1]);
        // A triangle x-v-y with x-y present would leave x-y alone; that still
        // removes v, so the loop terminates.
        adjacency.remove(&v);
        adjacency.get_mut(&x).unwrap().remove(&v);
        adjacency.get_mut(&y).unwrap().remove(&v);
        adjacency.get_mut(&x).unwrap().insert(y);
        adjacency.get_mut(&y).unwrap().insert(x);
        let merged = Edge::new(x, y);
        let (ev, ew) = (Edge::new(v, x), Edge::new(v, y));
        for target in edge_map.values_mut() {
            if *target == ev || *target == ew {
                *target = merged;
            }
        }
    }
    let edges: BTreeSet<Edge> = adjacency
        .iter()
        .flat_map(|(&v, n)| {
            n.iter()
                .filter(move |&&w| v < w)
                .map(move |&w| Edge::new(v, w))
        })
        .collect();
    Ok(Reduction {
        graph: Graph::from_parts(adjacency.keys().copied(), edges),
        edge_map,
        kind: ReductionKind::Reduced,
    })
}
