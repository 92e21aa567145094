//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use planar_blocks::graph::{parse_edge_list, Edge, Graph, VertexId};
use planar_blocks::separation::Separation;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> Graph {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_edge_list(&text).unwrap()
}

pub fn graph(pairs: &[(VertexId, VertexId)]) -> Graph {
    Graph::from_edges(pairs.iter().copied()).unwrap()
}

/// Random connected graph: a random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: u32, p: f64) -> Graph {
    let mut pairs = Vec::new();
    let mut order: Vec<u32> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n as usize {
        let j = rng.gen_range(0..i);
        pairs.push((order[i], order[j]));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    Graph::with_vertices(0..n, pairs).unwrap()
}

/// Random 2-connected graph by ear decomposition: a cycle, then open ears
/// between distinct vertices until `n` vertices exist, then `extra` chords.
pub fn random_two_connected(rng: &mut impl Rng, n: u32, extra: usize) -> Graph {
    let n = n.max(3);
    let k = rng.gen_range(3..=n);
    let mut pairs: BTreeSet<(u32, u32)> = (0..k).map(|i| ordered(i, (i + 1) % k)).collect();
    let mut next = k;
    while next < n {
        let a = rng.gen_range(0..next);
        let mut b = rng.gen_range(0..next);
        while b == a {
            b = rng.gen_range(0..next);
        }
        let len = rng.gen_range(1..=(n - next).min(3));
        let mut prev = a;
        for _ in 0..len {
            pairs.insert(ordered(prev, next));
            prev = next;
            next += 1;
        }
        pairs.insert(ordered(prev, b));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            pairs.insert(ordered(a, b));
        }
    }
    Graph::from_edges(pairs).unwrap()
}

fn ordered(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// Blocks by Tarjan's lowpoint recursion with an edge stack; bridges are
/// single-edge blocks.
pub fn lowpoint_blocks(g: &Graph) -> BTreeSet<BTreeSet<Edge>> {
    struct St<'a> {
        g: &'a Graph,
        num: BTreeMap<VertexId, usize>,
        low: BTreeMap<VertexId, usize>,
        stack: Vec<Edge>,
        out: BTreeSet<BTreeSet<Edge>>,
    }
    fn dfs(s: &mut St, v: VertexId, parent: Option<VertexId>) {
        let t = s.num.len();
        s.num.insert(v, t);
        s.low.insert(v, t);
        for &w in s.g.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            match s.num.get(&w).copied() {
                None => {
                    s.stack.push(Edge::new(v, w));
                    dfs(s, w, Some(v));
                    let lw = s.low[&w];
                    if lw < s.low[&v] {
                        s.low.insert(v, lw);
                    }
                    if lw >= s.num[&v] {
                        let mut block = BTreeSet::new();
                        while let Some(e) = s.stack.pop() {
                            block.insert(e);
                            if e == Edge::new(v, w) {
                                break;
                            }
                        }
                        s.out.insert(block);
                    }
                }
                Some(nw) if nw < s.num[&v] => {
                    s.stack.push(Edge::new(v, w));
                    if nw < s.low[&v] {
                        s.low.insert(v, nw);
                    }
                }
                Some(_) => {}
            }
        }
    }
    let mut s = St {
        g,
        num: BTreeMap::new(),
        low: BTreeMap::new(),
        stack: Vec::new(),
        out: BTreeSet::new(),
    };
    for v in g.vertices() {
        if !s.num.contains_key(&v) {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

fn connected_avoiding(g: &Graph, removed: &[VertexId]) -> bool {
    let rest: Vec<VertexId> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let Some(&start) = rest.first() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut todo = vec![start];
    while let Some(v) = todo.pop() {
        for &w in g.neighbors(v) {
            if !removed.contains(&w) && seen.insert(w) {
                todo.push(w);
            }
        }
    }
    seen.len() == rest.len()
}

/// 3-connectivity by removing every vertex subset of size at most 2.
/// Graphs on 4 or fewer vertices count as 3-connected when complete.
pub fn brute_three_connected(g: &Graph) -> bool {
    let vs: Vec<VertexId> = g.vertices().collect();
    let n = vs.len();
    if n <= 4 {
        return n >= 2 && g.edge_count() == n * (n - 1) / 2;
    }
    if !connected_avoiding(g, &[]) {
        return false;
    }
    for i in 0..n {
        if !connected_avoiding(g, &[vs[i]]) {
            return false;
        }
        for j in i + 1..n {
            if !connected_avoiding(g, &[vs[i], vs[j]]) {
                return false;
            }
        }
    }
    true
}

/// Planarity of a connected graph by trying every rotation system and
/// counting faces, or `None` when there are more than `budget` systems.
pub fn brute_planar(g: &Graph, budget: u64) -> Option<bool> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut total: u64 = 1;
    for &v in &vs {
        let d = g.degree(v) as u64;
        total = total.saturating_mul((1..d.max(1)).product::<u64>().max(1));
    }
    if total > budget {
        return None;
    }
    let choices: Vec<Vec<Vec<VertexId>>> =
        vs.iter().map(|&v| cyclic_orders(g.neighbors(v))).collect();
    let target = 2 + g.edge_count() as i64 - vs.len() as i64;
    let mut idx = vec![0usize; vs.len()];
    loop {
        let rot: BTreeMap<VertexId, &Vec<VertexId>> = vs
            .iter()
            .zip(&idx)
            .enumerate()
            .map(|(i, (&v, &k))| (v, &choices[i][k]))
            .collect();
        if count_faces(&rot) as i64 == target {
            return Some(true);
        }
        let mut i = 0;
        loop {
            if i == idx.len() {
                return Some(false);
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn cyclic_orders(nb: &[VertexId]) -> Vec<Vec<VertexId>> {
    if nb.len() <= 2 {
        return vec![nb.to_vec()];
    }
    let (first, rest) = (nb[0], &nb[1..]);
    permutations(rest)
        .into_iter()
        .map(|p| std::iter::once(first).chain(p).collect())
        .collect()
}

pub fn permutations<T: Clone>(xs: &[T]) -> Vec<Vec<T>> {
    if xs.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

/// Faces of a rotation system: dart `(u, v)` is followed by `(v, w)` with
/// `w` the successor of `u` around `v`.
pub fn count_faces(rot: &BTreeMap<VertexId, &Vec<VertexId>>) -> usize {
    let mut seen = BTreeSet::new();
    let mut faces = 0;
    for (&u, nb) in rot {
        for &v in nb.iter() {
            if seen.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                let around = rot[&b];
                let i = around.iter().position(|&x| x == a).unwrap();
                let c = around[(i + 1) % around.len()];
                (a, b) = (b, c);
            }
        }
    }
    faces
}

/// Random tree on `n` vertices: vertex `i` attaches to a random earlier one.
pub fn random_tree(rng: &mut impl Rng, n: u32) -> Graph {
    let pairs: Vec<(u32, u32)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::with_vertices(0..n, pairs).unwrap()
}

fn tree_path(t: &Graph, from: VertexId, to: VertexId) -> Vec<VertexId> {
    let mut prev = BTreeMap::from([(from, from)]);
    let mut todo = vec![from];
    while let Some(v) = todo.pop() {
        for &w in t.neighbors(v) {
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(w) {
                e.insert(v);
                todo.push(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Nested family on a random tree host, built by recursive path splitting:
/// take a random path inside the current region, split at an interior
/// vertex `v`, add every single-component side at `v` with its complement,
/// and recurse into the pieces. At most `max_elements` elements.
pub fn random_nested_family(
    rng: &mut impl Rng,
    n: u32,
    max_elements: usize,
) -> (Graph, BTreeSet<Separation>) {
    let host = random_tree(rng, n);
    let mut family = BTreeSet::new();
    let mut regions = vec![host.vertex_set()];
    while let Some(region) = regions.pop() {
        let vs: Vec<VertexId> = region.iter().copied().collect();
        if vs.len() < 3 {
            continue;
        }
        let a = *vs.choose(rng).unwrap();
        let b = *vs.choose(rng).unwrap();
        let path = tree_path(&host, a, b);
        if path.len() < 3 {
            regions.push(region);
            if rng.gen_bool(0.3) {
                regions.pop();
            }
            continue;
        }
        let v = path[rng.gen_range(1..path.len() - 1)];
        let mut sides = BTreeSet::new();
        for comp in host.components_without(&[v]) {
            let edges: BTreeSet<Edge> = host
                .edges()
                .iter()
                .copied()
                .filter(|e| comp.contains(&e.u()) || comp.contains(&e.v()))
                .collect();
            let side = Separation::from_edges(&host, edges).unwrap();
            sides.insert(side.complement(&host));
            sides.insert(side);
        }
        if family.len() + sides.len() > max_elements {
            break;
        }
        family.extend(sides);
        for comp in host.components_without(&[v]) {
            let mut piece: BTreeSet<VertexId> = comp.intersection(&region).copied().collect();
            if !piece.is_empty() {
                piece.insert(v);
                regions.push(piece);
            }
        }
        regions.shuffle(rng);
    }
    (host, family)
}

/// Order of the permutation group generated by `gens` (images of `0..n`),
/// by breadth-first closure.
pub fn perm_group_order(gens: &[Vec<usize>]) -> usize {
    let n = gens[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut todo = vec![id];
    while let Some(x) = todo.pop() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                todo.push(y);
            }
        }
    }
    seen.len()
}

pub fn perm_order(p: &[usize]) -> usize {
    let mut x = p.to_vec();
    let mut k = 1;
    while x.iter().enumerate().any(|(i, &y)| i != y) {
        x = x.iter().map(|&i| p[i]).collect();
        k += 1;
    }
    k
}

/// Largest group `⟨x, y⟩ ≤ S_n` with `x² = y³ = (xy)^m = 1`, over all such
/// pairs. A lower bound for the order of the von Dyck group `(2, 3, m)`.
pub fn von_dyck_permutation_oracle(n: usize, m: usize) -> usize {
    let all = permutations(&(0..n).collect::<Vec<_>>());
    let twos: Vec<&Vec<usize>> = all.iter().filter(|p| perm_order(p) == 2).collect();
    let threes: Vec<&Vec<usize>> = all.iter().filter(|p| perm_order(p) == 3).collect();
    let mut best = 0;
    for x in &twos {
        for y in &threes {
            let xy: Vec<usize> = (0..n).map(|i| y[x[i]]).collect();
            if perm_order(&xy) == m {
                best = best.max(perm_group_order(&[x.to_vec(), y.to_vec()]));
            }
        }
    }
    best
}
