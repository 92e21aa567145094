//! Trees from nested separation families.
//!
//! A complement-closed family in which every pair is nested is the directed
//! edge set of a tree. Tree vertices are the classes of the relation
//! `A ~ B` iff `A = B`, or `A ⊂ B*` with no family member strictly between
//! them. The directed edge of `A` starts at the class of `A` and ends at the
//! class of `A*`. Equivalently, a vertex is the set of directed edges leaving
//! it, which is the form used when the tree is built from orientations.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::separation::{nesting_of, Nesting, Separation};

/// A complement-closed, pairwise nested family of separations of one host.
/// Elements are kept in canonical order (fewest edges first).
#[derive(Clone, Debug)]
pub struct NestedFamily {
    host: Graph,
    elements: Vec<Separation>,
    complement: Vec<usize>,
    index: HashMap<Separation, usize>,
}

impl NestedFamily {
    pub fn empty(host: Graph) -> NestedFamily {
        NestedFamily {
            host,
            elements: Vec::new(),
            complement: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Validates every element and checks closure under complement and the
    /// four-inclusion nesting condition for every pair.
    pub fn new(
        host: Graph,
        elements: impl IntoIterator<Item = Separation>,
    ) -> Result<NestedFamily> {
        let family = NestedFamily::unchecked(host, elements)?;
        family.check_nested()?;
        Ok(family)
    }

    /// Adds missing complements, then behaves like [`NestedFamily::new`].
    pub fn closure(
        host: Graph,
        elements: impl IntoIterator<Item = Separation>,
    ) -> Result<NestedFamily> {
        let mut all: BTreeSet<Separation> = BTreeSet::new();
        for a in elements {
            all.insert(a.complement(&host));
            all.insert(a);
        }
        NestedFamily::new(host, all)
    }

    /// Closure and validity are checked; nesting is not.
    pub(crate) fn unchecked(
        host: Graph,
        elements: impl IntoIterator<Item = Separation>,
    ) -> Result<NestedFamily> {
        let elements: Vec<Separation> = elements
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for a in &elements {
            a.validate(&host)?;
        }
        let index: HashMap<Separation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        let mut complement = Vec::with_capacity(elements.len());
        for (i, a) in elements.iter().enumerate() {
            match index.get(&a.complement(&host)) {
                Some(&j) => complement.push(j),
                None => return Err(Error::NotClosed(i)),
            }
        }
        Ok(NestedFamily {
            host,
            elements,
            complement,
            index,
        })
    }

    fn check_nested(&self) -> Result<()> {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if !self.nesting(i, j).is_nested() {
                    return Err(Error::NotNested(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn elements(&self) -> &[Separation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Separation {
        &self.elements[i]
    }

    pub fn complement_of(&self, i: usize) -> usize {
        self.complement[i]
    }

    pub fn index_of(&self, a: &Separation) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn contains(&self, a: &Separation) -> bool {
        self.index.contains_key(a)
    }

    pub fn nesting(&self, i: usize, j: usize) -> Nesting {
        nesting_of(
            &self.elements[i],
            &self.elements[self.complement[i]],
            &self.elements[j],
            &self.elements[self.complement[j]],
        )
    }

    /// `strict[i][j]` iff element `i` is a proper subgraph of element `j`.
    pub fn strict_containment(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut m = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = i != j && self.elements[i].is_subset(&self.elements[j]);
            }
        }
        m
    }

    /// Number of members `C` with `A ⊆ C ⊆ B` (finite for any finite family).
    pub fn interval_size(&self, a: usize, b: usize) -> usize {
        (0..self.len())
            .filter(|&c| {
                self.elements[a].is_subset(&self.elements[c])
                    && self.elements[c].is_subset(&self.elements[b])
            })
            .count()
    }
}

/// The raw `~` relation of a nested family, reflexive by definition.
pub fn sim_relation(family: &NestedFamily) -> Vec<Vec<bool>> {
    let strict = family.strict_containment();
    sim_from_containment(family, &strict)
}

fn sim_from_containment(family: &NestedFamily, strict: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = family.len();
    let mut sim = vec![vec![false; n]; n];
    for a in 0..n {
        sim[a][a] = true;
        for b in 0..n {
            let b_star = family.complement_of(b);
            if a == b || !strict[a][b_star] {
                continue;
            }
            let between = (0..n).any(|c| strict[a][c] && strict[c][b_star]);
            if !between {
                sim[a][b] = true;
            }
        }
    }
    sim
}

/// Tree whose directed edges are the members of a nested family.
#[derive(Clone, Debug)]
pub struct StructureTree {
    pub family: NestedFamily,
    /// Tree vertex (class) of each element; the initial vertex of its edge.
    pub class_of: Vec<usize>,
    /// Members of each class, ascending.
    pub classes: Vec<Vec<usize>>,
    /// Reverse of each directed edge; equals the complement in a well-formed tree.
    pub reversal: Vec<usize>,
}

/// Builds `T(ℰ)`. The empty family gives a single vertex.
///
/// Classes are computed from the definition of `~` directly, in
/// `O(|ℰ|³)` after an `O(|ℰ|²)` containment table.
// TODO: derive the classes from the Hasse diagram of the containment order to drop the cubic step.
pub fn build_structure_tree(family: &NestedFamily) -> Result<StructureTree> {
    family.check_nested()?;
    let n = family.len();
    if n == 0 {
        return Ok(StructureTree {
            family: family.clone(),
            class_of: Vec::new(),
            classes: vec![Vec::new()],
            reversal: Vec::new(),
        });
    }
    let strict = family.strict_containment();
    let sim = sim_from_containment(family, &strict);

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for a in 0..n {
        for b in 0..n {
            if sim[a][b] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut class_id: BTreeMap<usize, usize> = BTreeMap::new();
    let mut class_of = vec![0; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (a, slot) in class_of.iter_mut().enumerate() {
        let r = find(&mut parent, a);
        let id = *class_id.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(a);
        *slot = id;
    }
    let reversal = (0..n).map(|i| family.complement_of(i)).collect();
    Ok(StructureTree {
        family: family.clone(),
        class_of,
        classes,
        reversal,
    })
}

impl StructureTree {
    pub fn vertex_count(&self) -> usize {
        self.classes.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.reversal.len() / 2
    }

    pub fn initial(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    pub fn terminal(&self, edge: usize) -> usize {
        self.class_of[self.reversal[edge]]
    }

    /// Directed edges leaving `v`, i.e. the members of class `v`.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.classes[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.classes[v].iter().map(|&e| self.terminal(e)).collect()
    }

    /// Directed edges along the tree path from `from` to `to`.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut via: Vec<Option<usize>> = vec![None; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &e in &self.classes[x] {
                let y = self.terminal(e);
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut out = Vec::new();
        let mut cur = to;
        while cur != from {
            let e = via[cur]?;
            out.push(e);
            cur = self.initial(e);
        }
        out.reverse();
        Some(out)
    }

    /// `Z' = ⋂_{E ∈ v} E*` as (vertices, edges); the whole host for an empty class.
    pub fn core(&self, v: usize) -> (BTreeSet<VertexId>, BTreeSet<Edge>) {
        let host = self.family.host();
        let mut vertices = host.vertex_set();
        let mut edges = host.edges().clone();
        for &e in &self.classes[v] {
            let star = self.family.get(self.family.complement_of(e));
            vertices.retain(|x| star.vertices().contains(x));
            edges.retain(|x| star.edges().contains(x));
        }
        (vertices, edges)
    }

    /// Coherence predicate: `A ⊆ B` holds iff this returns true, for `A ≠ B`.
    pub fn precedes(&self, b: usize, a: usize) -> bool {
        match self.path(self.initial(b), self.terminal(a)) {
            Some(p) => p.first() == Some(&b) && p.last() == Some(&a),
            None => false,
        }
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            vertices: self
                .classes
                .iter()
                .enumerate()
                .map(|(id, members)| TreeVertexJson {
                    id,
                    members: members.clone(),
                })
                .collect(),
            edges: (0..self.reversal.len())
                .filter(|&i| i < self.reversal[i])
                .map(|i| TreeEdgeJson {
                    separation: i,
                    reverse: self.reversal[i],
                    from: self.initial(i),
                    to: self.terminal(i),
                    boundary: self.family.get(i).boundary().to_vec(),
                })
                .collect(),
            separations: self
                .family
                .elements()
                .iter()
                .enumerate()
                .map(|(id, s)| SeparationJson::new(id, s))
                .collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph structure_tree {\n");
        for (id, members) in self.classes.iter().enumerate() {
            out.push_str(&format!("  t{id} [label=\"{id}: {members:?}\"];\n"));
        }
        for i in 0..self.reversal.len() {
            if i < self.reversal[i] {
                out.push_str(&format!(
                    "  t{} -- t{} [label=\"{}|{}\"];\n",
                    self.initial(i),
                    self.terminal(i),
                    i,
                    self.reversal[i]
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeJson {
    pub vertices: Vec<TreeVertexJson>,
    pub edges: Vec<TreeEdgeJson>,
    pub separations: Vec<SeparationJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeVertexJson {
    pub id: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeEdgeJson {
    pub separation: usize,
    pub reverse: usize,
    pub from: usize,
    pub to: usize,
    pub boundary: Vec<VertexId>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparationJson {
    pub id: usize,
    pub boundary: Vec<VertexId>,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

impl SeparationJson {
    pub fn new(id: usize, s: &Separation) -> SeparationJson {
        SeparationJson {
            id,
            boundary: s.boundary().to_vec(),
            vertices: s.vertices().iter().copied().collect(),
            edges: s.edges().iter().map(|e| e.ends()).collect(),
        }
    }
}

/// A broken invariant found by [`verify_tree_correspondence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TreeViolation {
    NotATree {
        vertices: usize,
        edges: usize,
    },
    ReversalMismatch {
        edge: usize,
        reversal: usize,
        complement: usize,
    },
    ReversalNotInvolution {
        edge: usize,
    },
    LoopEdge {
        edge: usize,
    },
    ClassCount {
        classes: usize,
        expected: usize,
    },
    OrderIncoherent {
        a: usize,
        b: usize,
        contained: bool,
    },
    IntervalOffPath {
        a: usize,
        b: usize,
        c: usize,
    },
}

/// Checks that `tree` realizes `family`: the underlying graph is a tree,
/// reversal equals complement, and containment matches coherent tree paths.
pub fn verify_tree_correspondence(
    tree: &StructureTree,
    family: &NestedFamily,
) -> Vec<TreeViolation> {
    let mut out = Vec::new();
    let n = family.len();
    let vcount = tree.vertex_count();
    if tree.reversal.len() != n || tree.class_of.len() != n {
        out.push(TreeViolation::ClassCount {
            classes: tree.class_of.len(),
            expected: n,
        });
        return out;
    }
    let expected_classes = if n == 0 {
        1
    } else {
        class_count_oracle(family)
    };
    if vcount != expected_classes {
        out.push(TreeViolation::ClassCount {
            classes: vcount,
            expected: expected_classes,
        });
    }
    for i in 0..n {
        let r = tree.reversal[i];
        if r != family.complement_of(i) {
            out.push(TreeViolation::ReversalMismatch {
                edge: i,
                reversal: r,
                complement: family.complement_of(i),
            });
        }
        if tree.reversal.get(r) != Some(&i) {
            out.push(TreeViolation::ReversalNotInvolution { edge: i });
        }
        if tree.initial(i) == tree.terminal(i) {
            out.push(TreeViolation::LoopEdge { edge: i });
        }
    }
    // Undirected graph on classes must be a tree.
    let undirected: BTreeSet<(usize, usize)> = (0..n)
        .map(|i| {
            let (a, b) = (tree.initial(i), tree.terminal(i));
            (a.min(b), a.max(b))
        })
        .collect();
    let connected = {
        let mut seen = vec![false; vcount];
        let mut stack = vec![0];
        if vcount > 0 {
            seen[0] = true;
        }
        while let Some(x) = stack.pop() {
            for &(a, b) in &undirected {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    if !connected || undirected.len() + 1 != vcount || n != 2 * undirected.len() {
        out.push(TreeViolation::NotATree {
            vertices: vcount,
            edges: undirected.len(),
        });
        return out;
    }
    if !out.is_empty() {
        return out;
    }
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let contained = family.get(a).is_subset(family.get(b));
            let coherent = tree.precedes(b, a);
            if contained != coherent {
                out.push(TreeViolation::OrderIncoherent { a, b, contained });
                continue;
            }
            if contained {
                let path: BTreeSet<usize> = tree
                    .path(tree.initial(b), tree.terminal(a))
                    .unwrap_or_default()
                    .into_iter()
                    .collect();
                for c in 0..n {
                    if family.get(a).is_subset(family.get(c))
                        && family.get(c).is_subset(family.get(b))
                        && !path.contains(&c)
                    {
                        out.push(TreeViolation::IntervalOffPath { a, b, c });
                    }
                }
            }
        }
    }
    out
}

/// Counts `~` classes by a separate closure computation (Warshall).
fn class_count_oracle(family: &NestedFamily) -> usize {
    let mut r = sim_relation(family);
    let n = r.len();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n).filter(|&i| (0..i).all(|j| !r[i][j])).count()
}
