//! Two-vertex separations (hinges), nested families of them, torsos with
//! virtual edges, and the combined cut-point / 3-block tree.
//!
//! Enumeration is exhaustive per hinge pair: for a pair `{u, w}` the sides are
//! unions of components of `X − {u, w}`, with the edge `uw` (if present)
//! placed on either side. This is intended for graphs of desk scale.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::blocks1;
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, Edge, Graph, VertexId};
use crate::separation::{nesting_of, Nesting, Separation};
use crate::symmetry::{automorphism_generators, AutGroup, Perm};
use crate::tree::{build_structure_tree, NestedFamily, StructureTree};

/// Largest number of components of `X − {u, w}` for which side subsets are
/// enumerated.
pub const MAX_HINGE_COMPONENTS: usize = 16;

fn check_decomposable(g: &Graph) -> Result<()> {
    if g.vertex_count() < 4 {
        return Err(Error::PreconditionViolated(format!(
            "needs at least 4 vertices, got {}",
            g.vertex_count()
        )));
    }
    if g.is_cycle() {
        return Err(Error::PreconditionViolated("graph is a cycle".into()));
    }
    if !is_k_connected(g, 2) {
        return Err(Error::PreconditionViolated(
            "graph is not 2-connected".into(),
        ));
    }
    Ok(())
}

fn separations_at_pair(
    g: &Graph,
    u: VertexId,
    w: VertexId,
    out: &mut BTreeSet<Separation>,
) -> Result<()> {
    let comps = g.components_without(&[u, w]);
    if comps.len() < 2 {
        return Ok(());
    }
    if comps.len() > MAX_HINGE_COMPONENTS {
        return Err(Error::TooLarge(format!(
            "{} components at hinge {{{u}, {w}}}",
            comps.len()
        )));
    }
    let sides: Vec<BTreeSet<Edge>> = comps
        .iter()
        .map(|c| c.iter().flat_map(|&v| g.incident_edges(v)).collect())
        .collect();
    let direct = Edge::try_new(u, w).filter(|e| g.edges().contains(e));
    for mask in 1..(1u32 << comps.len()) - 1 {
        let base: BTreeSet<Edge> = (0..comps.len())
            .filter(|i| mask & (1 << i) != 0)
            .flat_map(|i| sides[i].iter().copied())
            .collect();
        let mut variants = vec![base.clone()];
        if let Some(e) = direct {
            let mut with = base;
            with.insert(e);
            variants.push(with);
        }
        for edges in variants {
            if let Ok(s) = Separation::from_edges(g, edges) {
                out.insert(s);
            }
        }
    }
    Ok(())
}

/// All 2-separations whose hinge contains `u`.
///
/// Requires `g` 2-connected, not a cycle, with at least four vertices.
/// Vertices of degree two are allowed.
pub fn enumerate_separations_at(g: &Graph, u: VertexId) -> Result<BTreeSet<Separation>> {
    check_decomposable(g)?;
    if !g.contains_vertex(u) {
        return Err(Error::MalformedInput(format!("vertex {u} not in graph")));
    }
    let mut out = BTreeSet::new();
    for w in g.vertices().filter(|&w| w != u) {
        separations_at_pair(g, u, w, &mut out)?;
    }
    Ok(out)
}

/// Every 2-separation of `g`.
pub fn all_separations(g: &Graph) -> Result<BTreeSet<Separation>> {
    check_decomposable(g)?;
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut out = BTreeSet::new();
    for (i, &u) in vs.iter().enumerate() {
        for &w in &vs[i + 1..] {
            separations_at_pair(g, u, w, &mut out)?;
        }
    }
    Ok(out)
}

/// Which of the four inclusions hold between `a` and `b` in `host`.
pub fn nested(host: &Graph, a: &Separation, b: &Separation) -> Nesting {
    nesting_of(a, &a.complement(host), b, &b.complement(host))
}

/// The members of `all` that are nested with every member of `all`.
pub fn totally_nested(host: &Graph, all: &BTreeSet<Separation>) -> BTreeSet<Separation> {
    let items: Vec<(&Separation, Separation)> =
        all.iter().map(|s| (s, s.complement(host))).collect();
    items
        .iter()
        .filter(|(a, a_star)| {
            items
                .iter()
                .all(|(b, b_star)| nesting_of(a, a_star, b, b_star).is_nested())
        })
        .map(|(a, _)| (*a).clone())
        .collect()
}

/// A smallest 2-separation with `x0` among its vertices: fewest edges, then
/// lexicographically least edge list. Such an element is ⊆-minimal.
pub fn minimal_separation_containing(g: &Graph, x0: VertexId) -> Result<Separation> {
    all_separations(g)?
        .into_iter()
        .find(|s| s.contains_vertex(x0))
        .ok_or(Error::NoSeparationExists(x0))
}

/// Classification of a torso.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum TorsoKind {
    Cycle,
    /// No cut vertex and no 2-vertex cut. `tiny` marks torsos with fewer
    /// than five vertices, which count as 3-connected by convention.
    ThreeConnected {
        tiny: bool,
    },
}

/// Classifies `z` by brute force, or `None` if it is neither a cycle nor
/// 3-connected.
pub fn classify_torso(z: &Graph) -> Option<TorsoKind> {
    if z.is_cycle() {
        return Some(TorsoKind::Cycle);
    }
    let n = z.vertex_count();
    if n <= 3 {
        return z
            .is_connected()
            .then_some(TorsoKind::ThreeConnected { tiny: true });
    }
    let vs: Vec<VertexId> = z.vertices().collect();
    let ok = z.is_connected()
        && vs.iter().all(|&a| z.is_connected_without(&[a]))
        && vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| z.is_connected_without(&[a, b])));
    ok.then_some(TorsoKind::ThreeConnected { tiny: n < 5 })
}

/// The graph attached to a structure-tree vertex.
#[derive(Clone, Debug)]
pub struct Torso {
    pub tree_vertex: usize,
    /// `Z' = ⋂ E*` over the members `E` of the vertex.
    pub z_prime: Graph,
    /// One edge per hinge not already joined in `Z'`.
    pub virtual_edges: Vec<Edge>,
    /// `Z'` plus the virtual edges.
    pub z: Graph,
    /// For each virtual edge, a host path between its ends through the
    /// interior of one member.
    pub witness_paths: Vec<Vec<VertexId>>,
    /// `Z'` plus the witness paths; a subgraph of the host.
    pub witness: Graph,
}

/// True when `v`'s core is exactly the common hinge of its 2-separation members.
pub fn is_hinge_vertex(tree: &StructureTree, v: usize) -> bool {
    let (vs, _) = tree.core(v);
    vs.len() == 2
        && tree.classes[v].iter().any(|&m| {
            let b = tree.family.get(m).boundary();
            b.len() == 2 && b.iter().all(|x| vs.contains(x))
        })
}

/// Torso of tree vertex `v`. Hinge vertices have none.
pub fn torso(tree: &StructureTree, v: usize) -> Result<Torso> {
    if v >= tree.vertex_count() {
        return Err(Error::MalformedInput(format!("no tree vertex {v}")));
    }
    if is_hinge_vertex(tree, v) {
        return Err(Error::HingeVertex(v));
    }
    build_torso(tree, v)
}

fn build_torso(tree: &StructureTree, v: usize) -> Result<Torso> {
    let fam = &tree.family;
    let host = fam.host();
    let (vertices, edges) = tree.core(v);
    let z_prime = Graph::from_parts(vertices.iter().copied(), edges.clone());
    let mut z_edges = edges.clone();
    let mut witness_edges = edges;
    let mut virtual_edges = Vec::new();
    let mut witness_paths = Vec::new();
    for &m in &tree.classes[v] {
        let e = fam.get(m);
        let &[x, y] = e.boundary() else { continue };
        let hinge = Edge::new(x, y);
        if z_edges.contains(&hinge) {
            continue;
        }
        let path = host
            .shortest_path(x, y, |w| !e.is_boundary(w), |f| e.edges().contains(&f))
            .ok_or_else(|| {
                Error::Internal(format!("no path across hinge {hinge} inside member {m}"))
            })?;
        z_edges.insert(hinge);
        virtual_edges.push(hinge);
        witness_edges.extend(path.windows(2).map(|p| Edge::new(p[0], p[1])));
        witness_paths.push(path);
    }
    let z = Graph::from_parts(vertices.iter().copied(), z_edges);
    let witness_vertices: BTreeSet<VertexId> = witness_edges
        .iter()
        .flat_map(|e| e.ends())
        .chain(vertices)
        .collect();
    let witness = Graph::from_parts(witness_vertices, witness_edges);
    Ok(Torso {
        tree_vertex: v,
        z_prime,
        virtual_edges,
        z,
        witness_paths,
        witness,
    })
}

fn first_bad_vertex(tree: &StructureTree) -> Result<Option<usize>> {
    for v in 0..tree.vertex_count() {
        if classify_torso(&build_torso(tree, v)?.z).is_none() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Record of a nested-family construction: the family and, per enlargement
/// round, the separation whose orbit was added.
#[derive(Clone, Debug)]
pub struct NestedBuild {
    pub family: NestedFamily,
    pub rounds: Vec<Separation>,
}

/// An `Aut(g)`-invariant nested family of 2-separations whose torsos are all
/// cycles or 3-connected.
///
/// Starting from the empty family, each round takes the lowest-numbered tree
/// vertex whose torso is neither, picks the smallest totally nested
/// separation located at that vertex, and adds its orbit with complements.
/// Totally nested separations are nested with every orbit image, so the
/// family stays nested.
pub fn build_nested_family(g: &Graph) -> Result<NestedFamily> {
    Ok(build_nested_family_traced(g)?.family)
}

pub fn build_nested_family_traced(g: &Graph) -> Result<NestedBuild> {
    check_decomposable(g)?;
    if classify_torso(g).is_some() {
        return Err(Error::PreconditionViolated(
            "graph is already 3-connected".into(),
        ));
    }
    let aut = automorphism_generators(g);
    enlarge(g, &aut)
}

fn enlarge(g: &Graph, aut: &AutGroup) -> Result<NestedBuild> {
    let candidates = totally_nested(g, &all_separations(g)?);
    let mut chosen: BTreeSet<Separation> = BTreeSet::new();
    let mut rounds = Vec::new();
    loop {
        let family = NestedFamily::new(g.clone(), chosen.iter().cloned())?;
        let tree = build_structure_tree(&family)?;
        let Some(v) = first_bad_vertex(&tree)? else {
            return Ok(NestedBuild { family, rounds });
        };
        let members: Vec<&Separation> = tree.classes[v].iter().map(|&m| family.get(m)).collect();
        let pick = candidates.iter().find(|s| {
            if chosen.contains(*s) {
                return false;
            }
            let star = s.complement(g);
            members.iter().all(|m| m.is_subset(s) || m.is_subset(&star))
        });
        let Some(s) = pick else {
            return Err(Error::Internal(format!(
                "torso of tree vertex {v} is neither a cycle nor 3-connected and no separation splits it"
            )));
        };
        for x in aut.orbit_of(s.clone(), |p, a| p.apply_separation(a)) {
            chosen.insert(x.complement(g));
            chosen.insert(x);
        }
        rounds.push(s.clone());
    }
}

/// Classification of a vertex of the combined tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum TriClass {
    CutPoint { vertex: VertexId },
    Cycle,
    ThreeConnected { tiny: bool },
}

#[derive(Clone, Debug)]
pub struct TriNode {
    pub class: TriClass,
    /// Core is a single hinge pair (a bond); its torso is a single edge.
    pub hinge: bool,
    /// Structure-tree vertex this node comes from; `None` for cut points
    /// inserted between two non-cut-point vertices.
    pub tree_vertex: Option<usize>,
    pub torso: Option<Torso>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriLink {
    pub a: usize,
    pub b: usize,
    pub separation: usize,
}

/// Tree of cut points, cycles and 3-connected torsos for a connected graph.
#[derive(Clone, Debug)]
pub struct TriBlockTree {
    pub tree: StructureTree,
    pub nodes: Vec<TriNode>,
    pub node_of_vertex: Vec<usize>,
    pub links: Vec<TriLink>,
    /// Separations whose orbits were added, per decomposed block, in order.
    pub rounds: Vec<Separation>,
}

/// Edges of `g` reachable from `w` without using an edge of `block`.
fn hanging_edges(g: &Graph, block: &BTreeSet<Edge>, w: VertexId) -> BTreeSet<Edge> {
    let mut seen = BTreeSet::from([w]);
    let mut stack = vec![w];
    let mut out = BTreeSet::new();
    while let Some(x) = stack.pop() {
        for e in g.incident_edges(x) {
            if block.contains(&e) {
                continue;
            }
            out.insert(e);
            let y = e.other(x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    out
}

/// Tree vertices of `t` on the far side of directed edge `e`.
fn far_side(t: &StructureTree, e: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([t.terminal(e)]);
    let mut stack = vec![t.terminal(e)];
    while let Some(x) = stack.pop() {
        for &f in t.out_edges(x) {
            if f == t.reversal[e] {
                continue;
            }
            if seen.insert(t.terminal(f)) {
                stack.push(t.terminal(f));
            }
        }
    }
    seen
}

/// Centre (one or two vertices) of the subtree of tree vertices whose core
/// contains `c`.
fn centre_at(t: &StructureTree, c: VertexId) -> BTreeSet<usize> {
    let mut alive: BTreeSet<usize> = (0..t.vertex_count())
        .filter(|&v| t.core(v).0.contains(&c))
        .collect();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&v| t.neighbors(v).iter().filter(|w| alive.contains(w)).count() <= 1)
            .collect();
        for v in leaves {
            alive.remove(&v);
        }
    }
    alive
}

/// Lifts the members of a block family to `g`. Branches hanging off an
/// interior vertex follow that vertex. Branches at a hinge vertex `c` go to
/// the side containing the centre of the block-tree region around `c`; when
/// that centre is split by the separation, they go to neither side.
fn lift_family(g: &Graph, block: &BTreeSet<Edge>, fam: &NestedFamily) -> Result<Vec<Separation>> {
    let t = build_structure_tree(fam)?;
    let mut centres: BTreeMap<VertexId, BTreeSet<usize>> = BTreeMap::new();
    let mut out = Vec::with_capacity(fam.len());
    for (i, s) in fam.elements().iter().enumerate() {
        let mut edges = s.edges().clone();
        for w in s.interior() {
            edges.extend(hanging_edges(g, block, w));
        }
        let side = far_side(&t, i);
        for &c in s.boundary() {
            let hanging = hanging_edges(g, block, c);
            if hanging.is_empty() {
                continue;
            }
            let centre = centres.entry(c).or_insert_with(|| centre_at(&t, c));
            if centre.is_subset(&side) {
                edges.extend(hanging);
            }
        }
        out.push(Separation::from_edges(g, edges)?);
    }
    Ok(out)
}

/// Finds an automorphism carrying `from` onto `to` within the orbit of
/// `from`, by breadth-first search over generator images.
fn transporter(aut: &AutGroup, from: &BTreeSet<Edge>, to: &BTreeSet<Edge>) -> Option<Perm> {
    let id = Perm::identity(aut.host().vertices());
    let mut seen: BTreeMap<BTreeSet<Edge>, Perm> = BTreeMap::from([(from.clone(), id.clone())]);
    let mut queue = std::collections::VecDeque::from([(from.clone(), id)]);
    while let Some((set, p)) = queue.pop_front() {
        if &set == to {
            return Some(p);
        }
        for g in aut.generators() {
            let image: BTreeSet<Edge> = set.iter().map(|&e| g.apply_edge(e)).collect();
            if !seen.contains_key(&image) {
                let q = g.compose(&p);
                seen.insert(image.clone(), q.clone());
                queue.push_back((image, q));
            }
        }
    }
    None
}

/// Builds the combined tree: cut-point separations plus, inside every
/// 2-block that is neither a cycle nor 3-connected, a nested family of
/// 2-separations lifted to the whole graph.
///
/// Degree-2 vertices are kept; subdivided paths end up in cycle torsos.
/// Blocks in one `Aut(g)` orbit receive transported copies of one family.
pub fn triblock_tree(g: &Graph) -> Result<TriBlockTree> {
    let mut elements: BTreeSet<Separation> =
        blocks1::b1_family(g)?.elements().iter().cloned().collect();
    let blocks: Vec<BTreeSet<Edge>> = g.biconnected_components();
    let mut aut: Option<AutGroup> = None;
    let mut done: Vec<(BTreeSet<Edge>, NestedFamily)> = Vec::new();
    let mut rounds = Vec::new();
    for block in &blocks {
        let bg = Graph::from_parts(block.iter().flat_map(|e| e.ends()), block.clone());
        if bg.vertex_count() < 4 || classify_torso(&bg).is_some() {
            continue;
        }
        let aut = aut.get_or_insert_with(|| automorphism_generators(g));
        let transported = done
            .iter()
            .find_map(|(rep, fam)| transporter(aut, rep, block).map(|p| (p, fam)));
        let family: Vec<Separation> = match transported {
            Some((p, fam)) => fam
                .elements()
                .iter()
                .map(|s| p.apply_separation(s))
                .collect(),
            None => {
                let built = build_nested_family_traced(&bg)?;
                rounds.extend(built.rounds);
                done.push((block.clone(), built.family.clone()));
                built.family.elements().to_vec()
            }
        };
        let family = NestedFamily::new(bg.clone(), family)?;
        for lifted in lift_family(g, block, &family)? {
            elements.insert(lifted.complement(g));
            elements.insert(lifted);
        }
    }
    let family = NestedFamily::new(g.clone(), elements)?;
    let tree = build_structure_tree(&family)?;
    assemble(tree, rounds)
}

fn assemble(tree: StructureTree, rounds: Vec<Separation>) -> Result<TriBlockTree> {
    let mut nodes = Vec::new();
    for v in 0..tree.vertex_count() {
        let (vs, es) = tree.core(v);
        if vs.len() == 1 && es.is_empty() && !tree.classes[v].is_empty() {
            nodes.push(TriNode {
                class: TriClass::CutPoint {
                    vertex: *vs.iter().next().unwrap(),
                },
                hinge: false,
                tree_vertex: Some(v),
                torso: None,
            });
            continue;
        }
        let t = build_torso(&tree, v)?;
        let class = match classify_torso(&t.z) {
            Some(TorsoKind::Cycle) => TriClass::Cycle,
            Some(TorsoKind::ThreeConnected { tiny }) => TriClass::ThreeConnected { tiny },
            None => {
                return Err(Error::Internal(format!(
                    "torso of tree vertex {v} is neither a cycle nor 3-connected"
                )))
            }
        };
        nodes.push(TriNode {
            class,
            hinge: is_hinge_vertex(&tree, v),
            tree_vertex: Some(v),
            torso: Some(t),
        });
    }
    let node_of_vertex: Vec<usize> = (0..nodes.len()).collect();
    let is_cut = |n: &TriNode| matches!(n.class, TriClass::CutPoint { .. });
    // Links at a cut vertex `c` between non-cut-point nodes are routed through
    // one inserted cut node per (node, c), keyed on the busier endpoint.
    let fam = &tree.family;
    let busy = |node: usize, c: VertexId| {
        tree.classes[node]
            .iter()
            .filter(|&&m| fam.get(m).boundary() == [c])
            .count()
    };
    let mut inserted: BTreeMap<(usize, VertexId), usize> = BTreeMap::new();
    let mut links = Vec::new();
    for i in 0..fam.len() {
        if i > tree.reversal[i] {
            continue;
        }
        let (p, q) = (tree.initial(i), tree.terminal(i));
        let b = fam.get(i).boundary();
        if b.len() == 1 && !is_cut(&nodes[p]) && !is_cut(&nodes[q]) {
            let c = b[0];
            let (hub, other) = if busy(q, c) > busy(p, c) {
                (q, p)
            } else {
                (p, q)
            };
            let cut = *inserted.entry((hub, c)).or_insert_with(|| {
                nodes.push(TriNode {
                    class: TriClass::CutPoint { vertex: c },
                    hinge: false,
                    tree_vertex: None,
                    torso: None,
                });
                links.push(TriLink {
                    a: hub,
                    b: nodes.len() - 1,
                    separation: i,
                });
                nodes.len() - 1
            });
            links.push(TriLink {
                a: cut,
                b: other,
                separation: i,
            });
        } else {
            links.push(TriLink {
                a: p,
                b: q,
                separation: i,
            });
        }
    }
    Ok(TriBlockTree {
        tree,
        nodes,
        node_of_vertex,
        links,
        rounds,
    })
}

/// Suppresses the internal vertices of each witness path, giving back a
/// graph on the torso's vertices.
pub fn contract_witness(t: &Torso) -> Graph {
    let keep = t.z_prime.vertex_set();
    let mut edges: BTreeSet<Edge> = t.z_prime.edges().clone();
    let mut covered: BTreeSet<Edge> = BTreeSet::new();
    for e in t.witness.edges() {
        if !t.z_prime.edges().contains(e) {
            covered.insert(*e);
        }
    }
    // Walk from each kept vertex along non-core edges until the next kept vertex.
    for &start in &keep {
        for first in t.witness.incident_edges(start) {
            if !covered.contains(&first) {
                continue;
            }
            let (mut prev, mut cur) = (start, first.other(start));
            while !keep.contains(&cur) {
                let next = t
                    .witness
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&n| n != prev);
                match next {
                    Some(n) => (prev, cur) = (cur, n),
                    None => break,
                }
            }
            if keep.contains(&cur) && cur != start {
                edges.insert(Edge::new(start, cur));
            }
        }
    }
    Graph::from_parts(keep, edges)
}

/// JSON view of a combined-tree node.
#[derive(Clone, Debug, Serialize)]
pub struct TriNodeJson {
    pub id: usize,
    #[serde(flatten)]
    pub class: TriClass,
    pub hinge: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torso: Option<TorsoJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsoJson {
    pub vertices: Vec<VertexId>,
    pub real_edges: Vec<Edge>,
    pub virtual_edges: Vec<Edge>,
    pub witness_paths: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TriBlockJson {
    pub nodes: Vec<TriNodeJson>,
    pub links: Vec<TriLink>,
}

impl TriBlockTree {
    pub fn torsos(&self) -> impl Iterator<Item = &Torso> {
        self.nodes.iter().filter_map(|n| n.torso.as_ref())
    }

    /// Invariant violations against the host: tree shape, edge coverage,
    /// classification, witness subgraphs and their contractions.
    pub fn violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        if self.links.len() + 1 != self.nodes.len() {
            out.push(format!(
                "{} nodes but {} links",
                self.nodes.len(),
                self.links.len()
            ));
        }
        for e in g.edges() {
            let n = self
                .torsos()
                .filter(|t| t.z_prime.edges().contains(e))
                .count();
            if n != 1 {
                out.push(format!("edge {e} is a real edge of {n} torsos"));
            }
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let Some(t) = &node.torso else { continue };
            let expected = match classify_torso(&t.z) {
                Some(TorsoKind::Cycle) => TriClass::Cycle,
                Some(TorsoKind::ThreeConnected { tiny }) => TriClass::ThreeConnected { tiny },
                None => {
                    out.push(format!(
                        "node {i}: torso is neither a cycle nor 3-connected"
                    ));
                    continue;
                }
            };
            if expected != node.class {
                out.push(format!(
                    "node {i}: classified {:?}, brute force says {expected:?}",
                    node.class
                ));
            }
            if !t.witness.edges().iter().all(|e| g.edges().contains(e)) {
                out.push(format!("node {i}: witness is not a subgraph of the host"));
            }
            if crate::symmetry::find_isomorphism(&contract_witness(t), &t.z).is_none() {
                out.push(format!("node {i}: witness does not contract to the torso"));
            }
        }
        out
    }

    pub fn to_json(&self) -> TriBlockJson {
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| TriNodeJson {
                id,
                class: n.class,
                hinge: n.hinge,
                torso: n.torso.as_ref().map(|t| TorsoJson {
                    vertices: t.z.vertices().collect(),
                    real_edges: t.z_prime.edges().iter().copied().collect(),
                    virtual_edges: t.virtual_edges.clone(),
                    witness_paths: t.witness_paths.clone(),
                }),
            })
            .collect();
        TriBlockJson {
            nodes,
            links: self.links.clone(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph triblocks {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let label = match (&n.class, &n.torso) {
                (TriClass::CutPoint { vertex }, _) => format!("cut {vertex}"),
                (c, Some(t)) => format!("{c:?} {:?}", t.z.vertices().collect::<Vec<_>>()),
                (c, None) => format!("{c:?}"),
            };
            let shape = if n.hinge { "diamond" } else { "box" };
            out.push_str(&format!("  n{i} [shape={shape},label=\"{label}\"];\n"));
        }
        for l in &self.links {
            out.push_str(&format!("  n{} -- n{};\n", l.a, l.b));
        }
        out.push_str("}\n");
        out
    }
}
