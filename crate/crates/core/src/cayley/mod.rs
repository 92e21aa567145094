//! Finite groups from presentations and their Cayley graphs.

mod presentation;

pub use presentation::{inverse, power, reduce, surface_presentation, Letter, Presentation, Word};

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::symmetry::Perm;

/// Default bound on the group order.
pub const DEFAULT_LIMIT: usize = 5000;

/// Coset table of the trivial subgroup: right multiplication of each
/// element by each generator. Element `0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    /// `mult[g][x]` is `g · x` for generator `x`.
    mult: Vec<Vec<usize>>,
    /// `inv_mult[g][x]` is `g · x⁻¹`.
    inv_mult: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator_count(&self) -> usize {
        self.mult.first().map_or(0, Vec::len)
    }

    pub fn mult(&self, g: usize, x: usize) -> usize {
        self.mult[g][x]
    }

    pub fn apply_letter(&self, g: usize, l: Letter) -> usize {
        if l.inverse {
            self.inv_mult[g][l.generator]
        } else {
            self.mult[g][l.generator]
        }
    }

    /// `g · w`.
    pub fn apply_word(&self, g: usize, w: &[Letter]) -> usize {
        w.iter().fold(g, |h, &l| self.apply_letter(h, l))
    }

    /// A shortest word for each element, by breadth-first search over
    /// generators then inverses in index order.
    pub fn words(&self) -> Vec<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.order()];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0]);
        while let Some(g) = queue.pop_front() {
            let base = words[g].clone().unwrap();
            for inverse in [false, true] {
                for generator in 0..self.generator_count() {
                    let l = Letter { generator, inverse };
                    let h = self.apply_letter(g, l);
                    if words[h].is_none() {
                        let mut w = base.clone();
                        w.push(l);
                        words[h] = Some(w);
                        queue.push_back(h);
                    }
                }
            }
        }
        words.into_iter().map(|w| w.unwrap_or_default()).collect()
    }

    /// Full product `g · h`.
    pub fn product(&self, g: usize, h: usize, words: &[Word]) -> usize {
        self.apply_word(g, &words[h])
    }

    /// Pairs (relator, element) where the relator, traced from the element,
    /// fails to return to it.
    pub fn relator_violations(&self, pr: &Presentation) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (ri, r) in pr.relators().iter().enumerate() {
            for g in 0..self.order() {
                if self.apply_word(g, r) != g {
                    out.push((ri, g));
                }
            }
        }
        out
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    capacity: usize,
}

impl Enumerator {
    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, col: usize) -> Result<()> {
        if self.table.len() >= self.capacity {
            return Err(Error::Overflow(self.capacity));
        }
        let d = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.parent.push(d);
        self.table[c][col] = Some(d);
        self.table[d][col ^ 1] = Some(c);
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = (a.min(b), a.max(b));
        self.parent[drop] = keep;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let Some(f) = self.table[e][x] else { continue };
                if self.table[f][x ^ 1] == Some(e) {
                    self.table[f][x ^ 1] = None;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                if let Some(t) = self.table[e1][x] {
                    self.merge(f1, t, &mut queue);
                } else if let Some(t) = self.table[f1][x ^ 1] {
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = Some(f1);
                    self.table[f1][x ^ 1] = Some(e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (alpha, alpha);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                match self.table[f][w[i]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                match self.table[b][w[j as usize] ^ 1] {
                    Some(n) => {
                        b = n;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.table[f][w[i]] = Some(b);
                self.table[b][w[i] ^ 1] = Some(f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup (Haselgrove–Leech–Trotter
/// order, with coincidence processing).
///
/// Returns [`Error::Overflow`] when the group order exceeds `limit` or the
/// working table outgrows `32·limit` rows; neither proves the group infinite.
/// The result depends only on the presentation, so it is deterministic.
pub fn coset_enumerate(pr: &Presentation, limit: usize) -> Result<GroupTable> {
    if limit == 0 {
        return Err(Error::MalformedInput("limit must be positive".into()));
    }
    let k = pr.generators().len();
    let cols = 2 * k;
    let relators: Vec<Vec<usize>> = pr
        .relators()
        .iter()
        .map(|r| r.iter().map(|l| l.column()).collect())
        .collect();
    let mut en = Enumerator {
        cols,
        table: vec![vec![None; cols]],
        parent: vec![0],
        capacity: limit.saturating_mul(32).max(256),
    };
    let mut alpha = 0;
    while alpha < en.table.len() {
        if en.live(alpha) {
            for r in &relators {
                en.scan_and_fill(alpha, r)?;
                if !en.live(alpha) {
                    break;
                }
            }
            if en.live(alpha) {
                for x in 0..cols {
                    if en.table[alpha][x].is_none() {
                        en.define(alpha, x)?;
                    }
                }
            }
        }
        alpha += 1;
    }
    let live: Vec<usize> = (0..en.table.len()).filter(|&c| en.live(c)).collect();
    if live.len() > limit {
        return Err(Error::Overflow(limit));
    }
    let mut index = vec![usize::MAX; en.table.len()];
    for (i, &c) in live.iter().enumerate() {
        index[c] = i;
    }
    let mut mult = Vec::with_capacity(live.len());
    let mut inv_mult = Vec::with_capacity(live.len());
    for &c in &live {
        let mut row = Vec::with_capacity(k);
        let mut inv_row = Vec::with_capacity(k);
        for x in 0..k {
            let f = en.table[c][2 * x]
                .ok_or_else(|| Error::Internal("incomplete coset table".into()))?;
            let g = en.table[c][2 * x + 1]
                .ok_or_else(|| Error::Internal("incomplete coset table".into()))?;
            row.push(index[en.rep(f)]);
            inv_row.push(index[en.rep(g)]);
        }
        mult.push(row);
        inv_mult.push(inv_row);
    }
    Ok(GroupTable { mult, inv_mult })
}

/// Cayley graph: elements as vertices, `{g, g·x}` for every generator `x`.
///
/// The graph is simple: an involution contributes one edge per pair, and a
/// generator equal to the identity contributes nothing.
pub fn cayley_graph(tbl: &GroupTable) -> Graph {
    let mut edges = BTreeSet::new();
    for g in 0..tbl.order() {
        for x in 0..tbl.generator_count() {
            let h = tbl.mult(g, x);
            if h != g {
                edges.insert(Edge::new(g as VertexId, h as VertexId));
            }
        }
    }
    Graph::from_parts((0..tbl.order() as VertexId).collect::<Vec<_>>(), edges)
}

/// The regular action `g ↦ h·g`, one permutation per element `h`. It
/// commutes with right multiplication, so it acts on the Cayley graph.
pub fn regular_action(tbl: &GroupTable) -> Vec<Perm> {
    let words = tbl.words();
    (0..tbl.order())
        .map(|h| {
            let map = (0..tbl.order())
                .map(|g| (g as VertexId, tbl.product(h, g, &words) as VertexId))
                .collect();
            Perm::from_map(map).expect("left multiplication is a bijection")
        })
        .collect()
}

/// Checks the Cayley graph against its group: each regular-action element is
/// an automorphism, the action is free and transitive, and relators close up
/// from every vertex.
pub fn cayley_violations(tbl: &GroupTable, pr: &Presentation, x: &Graph) -> Vec<String> {
    let mut out = Vec::new();
    let action = regular_action(tbl);
    for (h, p) in action.iter().enumerate() {
        if !crate::symmetry::is_automorphism(x, p) {
            out.push(format!("left multiplication by {h} is not an automorphism"));
        }
        if h != tbl.identity() && p.fixed_points().next().is_some() {
            out.push(format!("left multiplication by {h} fixes a vertex"));
        }
    }
    let images: BTreeSet<VertexId> = action.iter().map(|p| p.apply(0)).collect();
    if images.len() != tbl.order() {
        out.push("regular action is not transitive".into());
    }
    for (r, g) in tbl.relator_violations(pr) {
        out.push(format!("relator {r} does not close at element {g}"));
    }
    out
}
