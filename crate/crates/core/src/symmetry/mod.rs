//! Automorphism groups, orbits, quotients, and the induced action on
//! structure trees.

mod search;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::separation::Separation;
use crate::tree::StructureTree;

pub(crate) use search::Indexed;

/// Default vertex bound for materializing a full automorphism group.
pub const DEFAULT_MAX_VERTICES: usize = 12;
/// Hard cap on materialized group elements.
pub const MAX_ELEMENTS: usize = 1_000_000;

/// A permutation of a graph's vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: BTreeMap<VertexId, VertexId>,
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let moved: Vec<_> = self.map.iter().filter(|(a, b)| a != b).collect();
        write!(f, "Perm{moved:?}")
    }
}

impl Perm {
    pub fn identity(vertices: impl IntoIterator<Item = VertexId>) -> Perm {
        Perm {
            map: vertices.into_iter().map(|v| (v, v)).collect(),
        }
    }

    /// Fails unless `map` is a bijection of its key set.
    pub fn from_map(map: BTreeMap<VertexId, VertexId>) -> Result<Perm> {
        let image: BTreeSet<VertexId> = map.values().copied().collect();
        let domain: BTreeSet<VertexId> = map.keys().copied().collect();
        if image != domain {
            return Err(Error::NotAnAutomorphism("map is not a permutation".into()));
        }
        Ok(Perm { map })
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.map.get(&v).copied().unwrap_or(v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            map: other
                .map
                .iter()
                .map(|(&k, &v)| (k, self.apply(v)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        Perm {
            map: self.map.iter().map(|(&k, &v)| (v, k)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(a, b)| a == b)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.map.iter().filter(|(a, b)| a == b).map(|(a, _)| *a)
    }

    pub fn as_map(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.map
    }

    /// Non-trivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.map.keys() {
            if seen.contains(&start) || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        e.map(|v| self.apply(v))
    }

    pub fn apply_separation(&self, a: &Separation) -> Separation {
        a.map(|v| self.apply(v))
    }
}

pub fn is_automorphism(g: &Graph, p: &Perm) -> bool {
    let domain: BTreeSet<VertexId> = p.map.keys().copied().collect();
    domain == g.vertex_set()
        && g.edges()
            .iter()
            .all(|&e| g.edges().contains(&p.apply_edge(e)))
}

/// An isomorphism `g1 → g2`, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Perm> {
    let (i1, i2) = (Indexed::new(g1), Indexed::new(g2));
    let m = search::search(&i1, &search::uniform(&i1), &i2, &search::uniform(&i2))?;
    Some(Perm {
        map: m
            .iter()
            .enumerate()
            .map(|(a, &b)| (i1.ids[a], i2.ids[b]))
            .collect(),
    })
}

/// A group of automorphisms of `host`, given by generators and optionally
/// materialized in full.
#[derive(Clone, Debug)]
pub struct AutGroup {
    host: Graph,
    generators: Vec<Perm>,
    elements: Option<Vec<Perm>>,
    order: u128,
}

/// Strong generating set of `Aut(g)` and its exact order, without
/// materializing elements. The search refines from the degree partition.
pub fn automorphism_generators(g: &Graph) -> AutGroup {
    let idx = Indexed::new(g);
    let (gens, orbits) = search::strong_generators(&idx);
    let order = orbits.iter().map(|&o| o as u128).product();
    let generators = gens
        .into_iter()
        .map(|m| Perm {
            map: m
                .iter()
                .enumerate()
                .map(|(a, &b)| (idx.ids[a], idx.ids[b]))
                .collect(),
        })
        .collect();
    AutGroup {
        host: g.clone(),
        generators,
        elements: None,
        order,
    }
}

/// Full automorphism group with every element materialized; inputs above
/// [`DEFAULT_MAX_VERTICES`] vertices are refused.
pub fn automorphism_group(g: &Graph) -> Result<AutGroup> {
    automorphism_group_with(g, DEFAULT_MAX_VERTICES)
}

pub fn automorphism_group_with(g: &Graph, max_vertices: usize) -> Result<AutGroup> {
    if g.vertex_count() > max_vertices {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the materialization bound {max_vertices}",
            g.vertex_count()
        )));
    }
    let mut group = automorphism_generators(g);
    group.materialize()?;
    Ok(group)
}

impl AutGroup {
    /// The subgroup generated by `generators`, materialized by closure.
    pub fn from_generators(host: &Graph, generators: Vec<Perm>) -> Result<AutGroup> {
        for (i, p) in generators.iter().enumerate() {
            if !is_automorphism(host, p) {
                return Err(Error::NotAnAutomorphism(format!("generator {i}")));
            }
        }
        let mut group = AutGroup {
            host: host.clone(),
            generators,
            elements: None,
            order: 0,
        };
        group.materialize()?;
        Ok(group)
    }

    pub fn trivial(host: &Graph) -> AutGroup {
        AutGroup {
            host: host.clone(),
            generators: Vec::new(),
            elements: Some(vec![Perm::identity(host.vertices())]),
            order: 1,
        }
    }

    /// Enumerates all elements by breadth-first closure over the generators.
    pub fn materialize(&mut self) -> Result<()> {
        if self.elements.is_some() {
            return Ok(());
        }
        let id = Perm::identity(self.host.vertices());
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if out.len() >= MAX_ELEMENTS {
                        return Err(Error::TooLarge(format!(
                            "group has more than {MAX_ELEMENTS} elements"
                        )));
                    }
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out.sort();
        if self.order != 0 && self.order != out.len() as u128 {
            return Err(Error::Internal(format!(
                "closure found {} elements, orbit product says {}",
                out.len(),
                self.order
            )));
        }
        self.order = out.len() as u128;
        self.elements = Some(out);
        Ok(())
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> Option<&[Perm]> {
        self.elements.as_deref()
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Vertex orbits, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.host.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let orbit = self.orbit(v);
            seen.extend(orbit.iter().copied());
            out.push(orbit.into_iter().collect());
        }
        out
    }

    pub fn orbit(&self, v: VertexId) -> BTreeSet<VertexId> {
        let mut orbit = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if orbit.insert(y) {
                    stack.push(y);
                }
            }
        }
        orbit
    }

    /// Orbit of an arbitrary object under the generators.
    pub fn orbit_of<T: Ord + Clone>(&self, x: T, act: impl Fn(&Perm, &T) -> T) -> BTreeSet<T> {
        let mut orbit = BTreeSet::from([x.clone()]);
        let mut stack = vec![x];
        while let Some(a) = stack.pop() {
            for g in &self.generators {
                let b = act(g, &a);
                if !orbit.contains(&b) {
                    orbit.insert(b.clone());
                    stack.push(b);
                }
            }
        }
        orbit
    }

    /// Elements fixing `v`; requires a materialized group.
    pub fn stabilizer(&self, v: VertexId) -> Option<Vec<&Perm>> {
        self.elements
            .as_ref()
            .map(|els| els.iter().filter(|p| p.apply(v) == v).collect())
    }

    /// True iff no non-identity element fixes a vertex. Requires elements.
    pub fn is_free(&self) -> Option<bool> {
        self.elements.as_ref().map(|els| {
            els.iter()
                .all(|p| p.is_identity() || p.fixed_points().next().is_none())
        })
    }

    pub fn is_transitive(&self) -> bool {
        self.host.vertex_count() <= 1 || self.orbits().len() == 1
    }

    /// Closure under composition and inverse, adjacency preservation, and
    /// orbit–stabilizer counts. Materialized groups only.
    pub fn closure_violations(&self) -> Vec<String> {
        let Some(els) = &self.elements else {
            return vec!["group is not materialized".into()];
        };
        let mut out = Vec::new();
        let set: HashSet<&Perm> = els.iter().collect();
        for p in els {
            if !is_automorphism(&self.host, p) {
                out.push(format!("{p:?} does not preserve adjacency"));
            }
            if !set.contains(&p.inverse()) {
                out.push(format!("inverse of {p:?} missing"));
            }
        }
        if els.len() <= 10_000 {
            for p in els {
                for g in &self.generators {
                    if !set.contains(&g.compose(p)) {
                        out.push(format!("product {g:?}∘{p:?} missing"));
                    }
                }
            }
        }
        for v in self.host.vertices() {
            let orbit = self.orbit(v).len() as u128;
            let stab = self.stabilizer(v).map_or(0, |s| s.len()) as u128;
            if orbit * stab != self.order {
                out.push(format!(
                    "orbit–stabilizer fails at {v}: {orbit}·{stab} ≠ {}",
                    self.order
                ));
            }
        }
        out
    }
}

/// Orbit graph `G\X`: vertex orbits, edge orbits and their incidences. Loops
/// and repeated orbit pairs are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub vertex_orbits: Vec<Vec<VertexId>>,
    pub edge_orbits: Vec<EdgeOrbit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeOrbit {
    pub edges: Vec<Edge>,
    /// Vertex-orbit indices of the endpoints; equal for a loop.
    pub ends: [usize; 2],
}

impl Quotient {
    /// Number of edge orbits joining vertex orbits `a` and `b`.
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        let key = [a.min(b), a.max(b)];
        self.edge_orbits.iter().filter(|o| o.ends == key).count()
    }

    pub fn loops(&self) -> usize {
        self.edge_orbits
            .iter()
            .filter(|o| o.ends[0] == o.ends[1])
            .count()
    }
}

pub fn quotient_graph(g: &Graph, h: &AutGroup) -> Quotient {
    let vertex_orbits = h.orbits();
    let orbit_index: BTreeMap<VertexId, usize> = vertex_orbits
        .iter()
        .enumerate()
        .flat_map(|(i, o)| o.iter().map(move |&v| (v, i)))
        .collect();
    let mut seen: BTreeSet<Edge> = BTreeSet::new();
    let mut edge_orbits = Vec::new();
    for &e in g.edges() {
        if seen.contains(&e) {
            continue;
        }
        let orbit = h.orbit_of(e, |p, &x| p.apply_edge(x));
        seen.extend(orbit.iter().copied());
        let (a, b) = (orbit_index[&e.u()], orbit_index[&e.v()]);
        edge_orbits.push(EdgeOrbit {
            edges: orbit.into_iter().collect(),
            ends: [a.min(b), a.max(b)],
        });
    }
    Quotient {
        vertex_orbits,
        edge_orbits,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TreeActionViolation {
    /// `σ(A)` is not a family member.
    MissingImage { generator: usize, element: usize },
    /// `σ` does not commute with complementation on this element.
    ComplementBroken { generator: usize, element: usize },
    /// Members of one class land in different classes.
    ClassSplit { generator: usize, class: usize },
    /// Induced map on tree vertices is not a bijection.
    NotBijective { generator: usize },
    /// A group element fixing tree vertex `vertex` moves its core.
    TorsoMoved { vertex: usize },
}

/// Checks that the group acts on the tree: `σ(ℰ) = ℰ` for each generator,
/// the induced vertex map is a tree automorphism, and vertex stabilizers
/// preserve their cores. Stabilizers are taken from the materialized elements
/// when available, otherwise from the generators.
pub fn tree_action_check(tree: &StructureTree, h: &AutGroup) -> Vec<TreeActionViolation> {
    let fam = &tree.family;
    let mut out = Vec::new();
    let mut vertex_maps: Vec<Vec<usize>> = Vec::new();
    for (gi, g) in h.generators().iter().enumerate() {
        let mut images = Vec::with_capacity(fam.len());
        for i in 0..fam.len() {
            match fam.index_of(&g.apply_separation(fam.get(i))) {
                Some(j) => images.push(j),
                None => out.push(TreeActionViolation::MissingImage {
                    generator: gi,
                    element: i,
                }),
            }
        }
        if images.len() != fam.len() {
            continue;
        }
        for i in 0..fam.len() {
            if images[fam.complement_of(i)] != fam.complement_of(images[i]) {
                out.push(TreeActionViolation::ComplementBroken {
                    generator: gi,
                    element: i,
                });
            }
        }
        let mut vmap = vec![usize::MAX; tree.vertex_count()];
        for (c, members) in tree.classes.iter().enumerate() {
            let targets: BTreeSet<usize> =
                members.iter().map(|&m| tree.class_of[images[m]]).collect();
            match targets.len() {
                0 => vmap[c] = c,
                1 => vmap[c] = *targets.iter().next().unwrap(),
                _ => out.push(TreeActionViolation::ClassSplit {
                    generator: gi,
                    class: c,
                }),
            }
        }
        let distinct: BTreeSet<usize> = vmap.iter().copied().collect();
        if distinct.len() != vmap.len() || distinct.contains(&usize::MAX) {
            out.push(TreeActionViolation::NotBijective { generator: gi });
        }
        vertex_maps.push(vmap);
    }
    if !out.is_empty() {
        return out;
    }
    let candidates: Vec<&Perm> = match h.elements() {
        Some(els) => els.iter().collect(),
        None => h.generators().iter().collect(),
    };
    let cores: Vec<_> = (0..tree.vertex_count()).map(|v| tree.core(v)).collect();
    let mut moved = BTreeSet::new();
    for p in candidates {
        for v in 0..tree.vertex_count() {
            let members: BTreeSet<usize> = tree.classes[v].iter().copied().collect();
            let fixes = tree.classes[v].iter().all(|&m| {
                fam.index_of(&p.apply_separation(fam.get(m)))
                    .is_some_and(|j| members.contains(&j))
            });
            if !fixes {
                continue;
            }
            let (vs, es) = &cores[v];
            let vs2: BTreeSet<VertexId> = vs.iter().map(|&x| p.apply(x)).collect();
            let es2: BTreeSet<Edge> = es.iter().map(|&e| p.apply_edge(e)).collect();
            if &vs2 != vs || &es2 != es {
                moved.insert(v);
            }
        }
    }
    out.extend(
        moved
            .into_iter()
            .map(|vertex| TreeActionViolation::TorsoMoved { vertex }),
    );
    out
}
