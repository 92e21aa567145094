//! Planarity testing with certificates, rotation systems and facial walks.
//!
//! Each 2-connected block is embedded by path addition (Demoucron, Malgrange
//! and Pertuiset): start from a cycle, repeatedly pick a fragment with the
//! fewest admissible faces and route one of its paths through a face. Block
//! rotations are concatenated at cut vertices. Non-planar inputs are reduced
//! to a Kuratowski subdivision by deleting every edge whose removal keeps
//! the graph non-planar.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::symmetry::{is_automorphism, Perm};

/// Cyclic order of neighbours around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    host: Graph,
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
}

/// A facial walk as its vertex sequence; the closing edge back to the first
/// vertex is implicit.
pub type Face = Vec<VertexId>;

impl RotationSystem {
    /// Fails unless each vertex's order is a permutation of its neighbours.
    pub fn new(host: Graph, rotation: BTreeMap<VertexId, Vec<VertexId>>) -> Result<RotationSystem> {
        for v in host.vertices() {
            let mut order = rotation.get(&v).cloned().unwrap_or_default();
            order.sort_unstable();
            if order != host.neighbors(v) {
                return Err(Error::MalformedInput(format!(
                    "rotation at {v} is not a permutation of its neighbours"
                )));
            }
        }
        if rotation.keys().any(|v| !host.contains_vertex(*v)) {
            return Err(Error::MalformedInput(
                "rotation mentions a vertex outside the host".into(),
            ));
        }
        Ok(RotationSystem { host, rotation })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn rotation(&self) -> &BTreeMap<VertexId, Vec<VertexId>> {
        &self.rotation
    }

    /// Neighbour following `from` in the cyclic order at `at`.
    pub fn successor(&self, at: VertexId, from: VertexId) -> VertexId {
        let order = &self.rotation[&at];
        let i = order
            .iter()
            .position(|&x| x == from)
            .expect("neighbour in rotation");
        order[(i + 1) % order.len()]
    }

    /// Number of faces, counting an isolated vertex as one face.
    pub fn face_count(&self) -> usize {
        let isolated = self
            .host
            .vertices()
            .filter(|&v| self.host.degree(v) == 0)
            .count();
        facial_walks(self).len() + isolated
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.host.vertex_count() as i64 - self.host.edge_count() as i64 + self.face_count() as i64
    }

    /// Orientable genus of the embedding of a connected host.
    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic()) / 2
    }
}

/// Traces every facial walk: leaving `v` after arriving from `u`, continue
/// to the successor of `u` in the rotation at `v`. Walks start at the least
/// unused dart, so the output is deterministic.
pub fn facial_walks(r: &RotationSystem) -> Vec<Face> {
    let mut used: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut out = Vec::new();
    for e in r.host.edges() {
        for (a, b) in [(e.u(), e.v()), (e.v(), e.u())] {
            if used.contains(&(a, b)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut v) = (a, b);
            while used.insert((u, v)) {
                walk.push(u);
                let w = r.successor(v, u);
                (u, v) = (v, w);
            }
            out.push(walk);
        }
    }
    out
}

/// Rotation of the cyclic sequence that is least under rotation and
/// reversal.
pub fn canonical_face(face: &[VertexId]) -> Face {
    let n = face.len();
    let mut best: Option<Face> = None;
    for seq in [face.to_vec(), face.iter().rev().copied().collect()] {
        for k in 0..n {
            let cand: Face = seq[k..].iter().chain(&seq[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Which Kuratowski graph a witness subdivides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kuratowski {
    K5,
    K33,
}

#[derive(Clone, Debug)]
pub enum PlanarityResult {
    Embedding {
        rotation: RotationSystem,
        faces: Vec<Face>,
    },
    Witness {
        subgraph: Graph,
        kind: Kuratowski,
    },
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Embedding { .. })
    }
}

/// Planarity test with certificate. Requires a connected input.
pub fn planarity_test(g: &Graph) -> Result<PlanarityResult> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    match embed(g) {
        Some(rotation) => {
            let faces = facial_walks(&rotation);
            Ok(PlanarityResult::Embedding { rotation, faces })
        }
        None => {
            let subgraph = kuratowski_subgraph(g);
            let kind = recognize_kuratowski(&subgraph).ok_or_else(|| {
                Error::Internal(
                    "minimal non-planar subgraph is not a Kuratowski subdivision".into(),
                )
            })?;
            Ok(PlanarityResult::Witness { subgraph, kind })
        }
    }
}

pub fn is_planar(g: &Graph) -> bool {
    embed(g).is_some()
}

/// A genus-0 rotation system for `g` (any number of components), or `None`.
pub fn embed(g: &Graph) -> Option<RotationSystem> {
    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> =
        g.vertices().map(|v| (v, Vec::new())).collect();
    for block in g.biconnected_components() {
        let vs: Vec<VertexId> = block.iter().flat_map(|e| e.ends()).collect();
        let bg = Graph::from_parts(vs, block);
        let part = if bg.edge_count() == 1 {
            bg.vertices()
                .map(|v| (v, bg.neighbors(v).to_vec()))
                .collect()
        } else {
            embed_block(&bg)?
        };
        for (v, order) in part {
            rotation.entry(v).or_default().extend(order);
        }
    }
    Some(RotationSystem {
        host: g.clone(),
        rotation,
    })
}

struct Fragment {
    edges: BTreeSet<Edge>,
    inner: BTreeSet<VertexId>,
    attachments: BTreeSet<VertexId>,
}

fn fragments(b: &Graph, placed_v: &BTreeSet<VertexId>, placed_e: &BTreeSet<Edge>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &e in b.edges() {
        if !placed_e.contains(&e) && placed_v.contains(&e.u()) && placed_v.contains(&e.v()) {
            out.push(Fragment {
                edges: BTreeSet::from([e]),
                inner: BTreeSet::new(),
                attachments: BTreeSet::from([e.u(), e.v()]),
            });
        }
    }
    let removed: Vec<VertexId> = placed_v.iter().copied().collect();
    for comp in b.components_without(&removed) {
        let edges: BTreeSet<Edge> = comp.iter().flat_map(|&v| b.incident_edges(v)).collect();
        let attachments = edges
            .iter()
            .flat_map(|e| e.ends())
            .filter(|v| placed_v.contains(v))
            .collect();
        out.push(Fragment {
            edges,
            inner: comp,
            attachments,
        });
    }
    out
}

/// Splits directed face `f` along path `p` joining two of its vertices.
fn split_face(f: &[VertexId], p: &[VertexId]) -> (Face, Face) {
    let (a, b) = (p[0], p[p.len() - 1]);
    let n = f.len();
    let i = f.iter().position(|&x| x == a).unwrap();
    let j = f.iter().position(|&x| x == b).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = vec![f[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % n;
            out.push(f[k]);
        }
        out
    };
    let interior = &p[1..p.len() - 1];
    let mut f1 = arc(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(interior);
    (f1, f2)
}

fn embed_block(b: &Graph) -> Option<BTreeMap<VertexId, Vec<VertexId>>> {
    let first = *b.edges().iter().next()?;
    let cycle = b.shortest_path(first.u(), first.v(), |_| true, |e| e != first)?;
    let mut placed_v: BTreeSet<VertexId> = cycle.iter().copied().collect();
    let mut placed_e: BTreeSet<Edge> = cycle.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
    placed_e.insert(first);
    let mut faces: Vec<Face> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    while placed_e.len() < b.edge_count() {
        let frags = fragments(b, &placed_v, &placed_e);
        let mut choice: Option<(usize, usize, usize)> = None;
        for (k, frag) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&fi| frag.attachments.iter().all(|a| faces[fi].contains(a)))
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if choice.is_none_or(|(_, _, c)| admissible.len() < c) {
                choice = Some((k, admissible[0], admissible.len()));
            }
        }
        let (k, fi, _) = choice?;
        let frag = &frags[k];
        let mut att = frag.attachments.iter().copied();
        let (a, z) = (att.next()?, att.next()?);
        let path = b.shortest_path(
            a,
            z,
            |v| frag.inner.contains(&v),
            |e| frag.edges.contains(&e),
        )?;
        let (f1, f2) = split_face(&faces[fi], &path);
        faces[fi] = f1;
        faces.push(f2);
        placed_v.extend(path.iter().copied());
        placed_e.extend(path.windows(2).map(|w| Edge::new(w[0], w[1])));
    }
    let mut next: BTreeMap<VertexId, BTreeMap<VertexId, VertexId>> = BTreeMap::new();
    for f in &faces {
        let n = f.len();
        for k in 0..n {
            let (u, v, w) = (f[k], f[(k + 1) % n], f[(k + 2) % n]);
            next.entry(v).or_default().insert(u, w);
        }
    }
    let mut rotation = BTreeMap::new();
    for (v, succ) in next {
        let start = *succ.keys().next()?;
        let mut order = vec![start];
        let mut cur = succ[&start];
        while cur != start {
            order.push(cur);
            cur = succ[&cur];
        }
        if order.len() != b.degree(v) {
            return None;
        }
        rotation.insert(v, order);
    }
    Some(rotation)
}

/// A minimal non-planar subgraph: drops every edge whose removal keeps the
/// graph non-planar, then isolated vertices.
pub fn kuratowski_subgraph(g: &Graph) -> Graph {
    let mut edges = g.edges().clone();
    for e in g.edges() {
        edges.remove(e);
        let h = Graph::from_parts(edges.iter().flat_map(|e| e.ends()), edges.clone());
        if is_planar(&h) {
            edges.insert(*e);
        }
    }
    let vs: Vec<VertexId> = edges.iter().flat_map(|e| e.ends()).collect();
    Graph::from_parts(vs, edges)
}

/// Recognizes a subdivision of K5 or K3,3 by suppressing degree-2 vertices
/// and inspecting what remains.
pub fn recognize_kuratowski(h: &Graph) -> Option<Kuratowski> {
    if !h.is_connected() || h.vertices().any(|v| h.degree(v) < 2) {
        return None;
    }
    let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = h
        .vertices()
        .map(|v| (v, h.neighbors(v).iter().copied().collect()))
        .collect();
    while let Some(v) = adj.iter().find(|(_, n)| n.len() == 2).map(|(v, _)| *v) {
        let ns: Vec<VertexId> = adj[&v].iter().copied().collect();
        let (a, b) = (ns[0], ns[1]);
        if adj[&a].contains(&b) {
            return None;
        }
        adj.remove(&v);
        for (x, y) in [(a, b), (b, a)] {
            let set = adj.get_mut(&x)?;
            set.remove(&v);
            set.insert(y);
        }
    }
    let n = adj.len();
    let degrees: BTreeSet<usize> = adj.values().map(|s| s.len()).collect();
    if n == 5 && degrees == BTreeSet::from([4]) {
        return Some(Kuratowski::K5);
    }
    if n == 6 && degrees == BTreeSet::from([3]) {
        // Bipartite with both sides of size three.
        let first = *adj.keys().next()?;
        let side: BTreeSet<VertexId> = adj[&first].clone();
        let other: BTreeSet<VertexId> = adj.keys().filter(|v| !side.contains(v)).copied().collect();
        let ok = side.len() == 3
            && other.iter().all(|v| adj[v] == side)
            && side.iter().all(|v| adj[v] == other);
        return ok.then_some(Kuratowski::K33);
    }
    None
}

/// True iff `sigma` maps every facial walk of `r` onto a facial walk, up to
/// rotation and reversal.
pub fn facial_preservation_check(r: &RotationSystem, sigma: &Perm) -> Result<bool> {
    if !is_automorphism(&r.host, sigma) {
        return Err(Error::NotAnAutomorphism(format!("{sigma:?}")));
    }
    let faces: BTreeSet<Face> = facial_walks(r).iter().map(|f| canonical_face(f)).collect();
    Ok(faces.iter().all(|f| {
        let image: Face = f.iter().map(|&v| sigma.apply(v)).collect();
        faces.contains(&canonical_face(&image))
    }))
}

/// Vertex counts up to this bound are checked under every relabeling.
pub const EXHAUSTIVE_RELABEL_MAX: usize = 8;
/// Relabelings tried above [`EXHAUSTIVE_RELABEL_MAX`].
pub const SAMPLED_RELABELINGS: usize = 5000;
const RELABEL_STRIDE: u64 = 1_000_003;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceMultisetReport {
    pub relabelings: usize,
    pub exhaustive: bool,
    /// Distinct sorted face-length lists seen.
    pub multisets: BTreeSet<Vec<usize>>,
    /// Distinct face sets seen, after mapping faces back to the original labels.
    pub face_sets: usize,
}

impl FaceMultisetReport {
    pub fn unique(&self) -> bool {
        self.multisets.len() == 1 && self.face_sets == 1
    }
}

/// The `rank`-th permutation of `0..n` in lexicographic order.
fn unrank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut fact: Vec<u64> = vec![1; n + 1];
    for i in 1..=n {
        fact[i] = fact[i - 1] * i as u64;
    }
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let k = (rank / fact[i]) as usize;
        rank %= fact[i];
        out.push(pool.remove(k));
    }
    out
}

/// Re-embeds `g` under vertex relabelings and compares the resulting face
/// structures. Graphs up to [`EXHAUSTIVE_RELABEL_MAX`] vertices are tried
/// under all `n!` relabelings; larger ones under [`SAMPLED_RELABELINGS`]
/// ranks spread by a fixed stride through the permutation order.
pub fn face_multiset_uniqueness_check(g: &Graph) -> Result<FaceMultisetReport> {
    let n = g.vertex_count();
    if n > 10 {
        return Err(Error::PreconditionViolated(format!(
            "{n} vertices exceeds 10"
        )));
    }
    if crate::blocks2::classify_torso(g)
        != Some(crate::blocks2::TorsoKind::ThreeConnected { tiny: n < 5 })
        || n < 4
    {
        return Err(Error::PreconditionViolated(
            "graph is not 3-connected".into(),
        ));
    }
    if !is_planar(g) {
        return Err(Error::PreconditionViolated("graph is not planar".into()));
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let total: u64 = (1..=n as u64).product();
    let exhaustive = n <= EXHAUSTIVE_RELABEL_MAX;
    let ranks: Vec<u64> = if exhaustive {
        (0..total).collect()
    } else {
        (0..SAMPLED_RELABELINGS as u64)
            .map(|k| (k * RELABEL_STRIDE) % total)
            .collect()
    };
    let mut multisets = BTreeSet::new();
    let mut face_sets: BTreeSet<BTreeSet<Face>> = BTreeSet::new();
    for &rank in &ranks {
        let perm = unrank(n, rank);
        let to: BTreeMap<VertexId, VertexId> = (0..n).map(|i| (ids[i], ids[perm[i]])).collect();
        let back: BTreeMap<VertexId, VertexId> = to.iter().map(|(&a, &b)| (b, a)).collect();
        let h = g.relabel(|v| to[&v]);
        let r = embed(&h)
            .ok_or_else(|| Error::Internal("relabeled planar graph failed to embed".into()))?;
        let faces = facial_walks(&r);
        let mut lengths: Vec<usize> = faces.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        multisets.insert(lengths);
        face_sets.insert(
            faces
                .iter()
                .map(|f| canonical_face(&f.iter().map(|v| back[v]).collect::<Vec<_>>()))
                .collect(),
        );
    }
    Ok(FaceMultisetReport {
        relabelings: ranks.len(),
        exhaustive,
        multisets,
        face_sets: face_sets.len(),
    })
}
