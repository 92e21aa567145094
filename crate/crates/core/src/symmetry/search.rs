//! Individualization–refinement search for isomorphisms between two graphs.
//!
//! Colourings start from the degree partition and are refined jointly on both
//! sides, so colour ids are comparable. A branch dies as soon as the colour
//! histograms differ.

use std::collections::BTreeMap;

use crate::graph::{Graph, VertexId};

/// Graph with vertices renumbered `0..n` in ascending id order.
pub(crate) struct Indexed {
    pub ids: Vec<VertexId>,
    pub adj: Vec<Vec<usize>>,
    pub edge_count: usize,
}

impl Indexed {
    pub fn new(g: &Graph) -> Indexed {
        let ids: Vec<VertexId> = g.vertices().collect();
        let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().map(|w| pos[w]).collect())
            .collect();
        Indexed {
            ids,
            adj,
            edge_count: g.edge_count(),
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }
}

pub(crate) type Colouring = Vec<u32>;

/// Refines both colourings to a common equitable partition. Returns `None`
/// when the two sides become distinguishable.
pub(crate) fn refine(
    g1: &Indexed,
    c1: &Colouring,
    g2: &Indexed,
    c2: &Colouring,
) -> Option<(Colouring, Colouring)> {
    let mut c1 = c1.clone();
    let mut c2 = c2.clone();
    let count = |c: &Colouring| {
        let mut v = c.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let mut classes = count(&c1);
    loop {
        let key = |g: &Indexed, c: &Colouring, v: usize| {
            let mut nb: Vec<u32> = g.adj[v].iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let k1: Vec<(u32, Vec<u32>)> = (0..g1.len()).map(|v| key(g1, &c1, v)).collect();
        let k2: Vec<(u32, Vec<u32>)> = (0..g2.len()).map(|v| key(g2, &c2, v)).collect();
        let mut all: Vec<&(u32, Vec<u32>)> = k1.iter().chain(k2.iter()).collect();
        all.sort();
        all.dedup();
        let id = |k: &(u32, Vec<u32>)| all.binary_search(&k).unwrap() as u32;
        let n1: Colouring = k1.iter().map(id).collect();
        let n2: Colouring = k2.iter().map(id).collect();
        let mut h1 = n1.clone();
        let mut h2 = n2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        c1 = n1;
        c2 = n2;
        let now = count(&c1);
        if now == classes {
            return Some((c1, c2));
        }
        classes = now;
    }
}

pub(crate) fn individualize(c: &Colouring, v: usize) -> Colouring {
    let fresh = c.iter().copied().max().map_or(0, |m| m + 1);
    let mut out = c.clone();
    out[v] = fresh;
    out
}

/// Smallest colour whose class has more than one member.
fn target_cell(c: &Colouring) -> Option<u32> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in c {
        *counts.entry(x).or_default() += 1;
    }
    counts.into_iter().find(|&(_, n)| n > 1).map(|(col, _)| col)
}

/// First isomorphism `g1 → g2` (as index map) respecting the colourings.
pub(crate) fn search(
    g1: &Indexed,
    c1: &Colouring,
    g2: &Indexed,
    c2: &Colouring,
) -> Option<Vec<usize>> {
    if g1.len() != g2.len() || g1.edge_count != g2.edge_count {
        return None;
    }
    let (c1, c2) = refine(g1, c1, g2, c2)?;
    match target_cell(&c1) {
        None => {
            let mut by_colour: BTreeMap<u32, usize> = BTreeMap::new();
            for (w, &col) in c2.iter().enumerate() {
                by_colour.insert(col, w);
            }
            let map: Vec<usize> = c1.iter().map(|col| by_colour[col]).collect();
            let ok = (0..g1.len()).all(|a| g1.adj[a].iter().all(|&b| g2.has_edge(map[a], map[b])));
            ok.then_some(map)
        }
        Some(cell) => {
            let v = c1.iter().position(|&x| x == cell).unwrap();
            let c1v = individualize(&c1, v);
            for w in (0..g2.len()).filter(|&w| c2[w] == cell) {
                if let Some(m) = search(g1, &c1v, g2, &individualize(&c2, w)) {
                    return Some(m);
                }
            }
            None
        }
    }
}

/// Uniform starting colouring.
pub(crate) fn uniform(g: &Indexed) -> Colouring {
    vec![0; g.len()]
}

/// A strong generating set for the automorphism group, together with the
/// basic orbit lengths (whose product is the group order).
pub(crate) fn strong_generators(g: &Indexed) -> (Vec<Vec<usize>>, Vec<usize>) {
    let start = uniform(g);
    let (mut c, _) = refine(g, &start, g, &start).expect("graph is isomorphic to itself");
    let mut base = Vec::new();
    let mut levels = Vec::new();
    while let Some(cell) = target_cell(&c) {
        let b = c.iter().position(|&x| x == cell).unwrap();
        base.push(b);
        levels.push(c.clone());
        let cb = individualize(&c, b);
        c = refine(g, &cb, g, &cb).unwrap().0;
    }
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut orbit_sizes = vec![0; base.len()];
    for i in (0..base.len()).rev() {
        let c = &levels[i];
        let b = base[i];
        let mut orbit = orbit_of(b, &gens, g.len());
        let cb = individualize(c, b);
        for w in 0..g.len() {
            if c[w] != c[b] || orbit[w] {
                continue;
            }
            if let Some(m) = search(g, &cb, g, &individualize(c, w)) {
                gens.push(m);
                orbit = orbit_of(b, &gens, g.len());
            }
        }
        orbit_sizes[i] = orbit.iter().filter(|&&x| x).count();
    }
    (gens, orbit_sizes)
}

fn orbit_of(b: usize, gens: &[Vec<usize>], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[b] = true;
    let mut stack = vec![b];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g[x];
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}
