//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Corpora are drawn from fixed ChaCha8 seeds.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use planar_blocks::blocks1::{block_cut_tree, BlockNode};
use planar_blocks::blocks2::{triblock_tree, TriBlockTree, TriClass};
use planar_blocks::cayley::{cayley_graph, coset_enumerate, regular_action, surface_presentation};
use planar_blocks::graph::{Edge, Graph, VertexId};
use planar_blocks::planar::{
    face_multiset_uniqueness_check, facial_preservation_check, facial_walks, planarity_test,
    recognize_kuratowski, PlanarityResult,
};
use planar_blocks::separation::Separation;
use planar_blocks::symmetry::{automorphism_group, is_automorphism, AutGroup};
use planar_blocks::tree::{build_structure_tree, verify_tree_correspondence, NestedFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "block-cut correctness",
        budget: Some(Duration::from_secs(10)),
        run: block_cut,
    },
    Criterion {
        id: 2,
        name: "nesting soundness",
        budget: None,
        run: nesting,
    },
    Criterion {
        id: 3,
        name: "torso classification",
        budget: None,
        run: torsos,
    },
    Criterion {
        id: 4,
        name: "planarity inheritance",
        budget: None,
        run: inheritance,
    },
    Criterion {
        id: 5,
        name: "facial preservation",
        budget: Some(Duration::from_secs(60)),
        run: facial,
    },
    Criterion {
        id: 6,
        name: "Euler and face partition",
        budget: None,
        run: euler,
    },
    Criterion {
        id: 7,
        name: "Cayley pipeline",
        budget: Some(Duration::from_secs(30)),
        run: cayley,
    },
    Criterion {
        id: 8,
        name: "structure-tree bijection",
        budget: None,
        run: bijection,
    },
    Criterion {
        id: 9,
        name: "CLI determinism",
        budget: None,
        run: determinism,
    },
];

fn main() {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if took > b => Err(format!("took {took:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(summary) => println!(
                "PASS criterion {} ({}): {summary} [{took:.2?}]",
                c.id, c.name
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({}): {why} [{took:.2?}]", c.id, c.name);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The 2-connected corpus shared by criteria 2 to 4: 100 graphs on at most
/// 10 vertices, with up to 8 chords so that some are nonplanar.
fn two_connected_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2b10c);
    (0..100)
        .map(|_| {
            let n = rng.gen_range(4..=10);
            let extra = rng.gen_range(0..=8);
            random_two_connected(&mut rng, n, extra)
        })
        .collect()
}

fn is_cut_vertex(g: &Graph, v: VertexId) -> bool {
    g.components_without(&[v]).len() > 1
}

fn block_cut() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb10c);
    let mut blocks_seen = 0;
    for case in 0..200 {
        let n = rng.gen_range(2..=14);
        let p = rng.gen_range(0.0..0.35);
        let g = random_connected(&mut rng, n, p);
        let bct = block_cut_tree(&g).map_err(|e| format!("case {case}: {e}"))?;
        let ours: BTreeSet<BTreeSet<Edge>> = bct
            .nodes
            .iter()
            .filter_map(|node| match node {
                BlockNode::Block { edges, .. } => Some(edges.iter().copied().collect()),
                BlockNode::CutPoint { .. } => None,
            })
            .collect();
        let oracle = lowpoint_blocks(&g);
        ensure(ours == oracle, || {
            format!("case {case}: blocks differ from lowpoint oracle on {g:?}")
        })?;
        blocks_seen += ours.len();
        // Edge partition: every edge in exactly one block.
        for e in g.edges() {
            let k = ours.iter().filter(|b| b.contains(e)).count();
            ensure(k == 1, || format!("case {case}: edge {e} in {k} blocks"))?;
        }
        // Bipartite tree: links join a cut point to a block; |links| = |nodes| - 1.
        ensure(bct.links.len() + 1 == bct.nodes.len(), || {
            format!("case {case}: not a tree")
        })?;
        for l in &bct.links {
            let cut = |i: usize| matches!(bct.nodes[i], BlockNode::CutPoint { .. });
            ensure(cut(l.a) != cut(l.b), || {
                format!("case {case}: link {}-{} not bipartite", l.a, l.b)
            })?;
        }
        // Cut-point nodes are exactly the cut vertices, by brute force.
        let cuts: BTreeSet<VertexId> = bct
            .nodes
            .iter()
            .filter_map(|node| match node {
                BlockNode::CutPoint { vertex } => Some(*vertex),
                BlockNode::Block { .. } => None,
            })
            .collect();
        let brute: BTreeSet<VertexId> = g.vertices().filter(|&v| is_cut_vertex(&g, v)).collect();
        ensure(cuts == brute, || {
            format!("case {case}: cut points {cuts:?}, brute force {brute:?}")
        })?;
    }
    Ok(format!(
        "200 graphs, {blocks_seen} blocks match the lowpoint oracle"
    ))
}

fn complement(host: &Graph, a: &Separation) -> (BTreeSet<VertexId>, BTreeSet<Edge>) {
    let edges: BTreeSet<Edge> = host.edges().difference(a.edges()).copied().collect();
    let mut vertices: BTreeSet<VertexId> = host
        .vertices()
        .filter(|v| !a.vertices().contains(v))
        .collect();
    vertices.extend(a.boundary().iter().copied());
    (vertices, edges)
}

fn contains(
    outer: &(BTreeSet<VertexId>, BTreeSet<Edge>),
    inner: &(BTreeSet<VertexId>, BTreeSet<Edge>),
) -> bool {
    inner.0.is_subset(&outer.0) && inner.1.is_subset(&outer.1)
}

fn nesting() -> Outcome {
    let mut pairs = 0usize;
    let mut sizes = 0usize;
    for (case, g) in two_connected_corpus().iter().enumerate() {
        let t = triblock_tree(g).map_err(|e| format!("case {case}: {e}"))?;
        let els = t.tree.family.elements();
        sizes += els.len();
        let sides: Vec<_> = els
            .iter()
            .map(|s| ((s.vertices().clone(), s.edges().clone()), complement(g, s)))
            .collect();
        for i in 0..sides.len() {
            for j in i + 1..sides.len() {
                let ((a, a_star), (b, b_star)) = (&sides[i], &sides[j]);
                let nested = contains(b, a)
                    || contains(b_star, a)
                    || contains(b, a_star)
                    || contains(b_star, a_star);
                ensure(nested, || {
                    format!("case {case}: elements {i} and {j} cross in {g:?}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "100 graphs, {sizes} family elements, {pairs} pairs nested"
    ))
}

/// Contracts each maximal path of the witness whose interior avoids the
/// torso's vertex set to a single edge.
fn contract(witness: &Graph, keep: &BTreeSet<VertexId>) -> Result<BTreeSet<Edge>, String> {
    let mut edges = BTreeSet::new();
    for &u in keep {
        if !witness.contains_vertex(u) {
            continue;
        }
        for &w in witness.neighbors(u) {
            let (mut prev, mut cur) = (u, w);
            while !keep.contains(&cur) {
                let next: Vec<VertexId> = witness
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .filter(|&x| x != prev)
                    .collect();
                if next.len() != 1 {
                    return Err(format!(
                        "witness vertex {cur} has degree {}",
                        next.len() + 1
                    ));
                }
                (prev, cur) = (cur, next[0]);
            }
            if cur != u {
                edges.insert(Edge::new(u, cur));
            }
        }
    }
    Ok(edges)
}

fn check_torsos(case: usize, g: &Graph, t: &TriBlockTree) -> Result<(), String> {
    for e in g.edges() {
        let k = t.torsos().filter(|z| z.z_prime.edges().contains(e)).count();
        ensure(k == 1, || {
            format!("case {case}: edge {e} is real in {k} torsos")
        })?;
    }
    for (i, node) in t.nodes.iter().enumerate() {
        match (&node.class, &node.torso) {
            (TriClass::CutPoint { vertex }, _) => {
                ensure(is_cut_vertex(g, *vertex), || {
                    format!("case {case}: node {i}: {vertex} is not a cut vertex")
                })?;
            }
            (class, Some(z)) => {
                let zg = &z.z;
                let ok = match class {
                    TriClass::Cycle => zg.is_cycle(),
                    TriClass::ThreeConnected { tiny } => {
                        brute_three_connected(zg) && *tiny == (zg.vertex_count() < 5)
                    }
                    TriClass::CutPoint { .. } => unreachable!(),
                };
                ensure(ok, || {
                    format!("case {case}: node {i} classified {class:?} but torso is {zg:?}")
                })?;
                ensure(z.witness.edges().is_subset(g.edges()), || {
                    format!("case {case}: node {i}: witness not in host")
                })?;
                let keep = zg.vertex_set();
                let contracted = contract(&z.witness, &keep)
                    .map_err(|e| format!("case {case}: node {i}: {e}"))?;
                ensure(&contracted == zg.edges(), || {
                    format!("case {case}: node {i}: witness contracts to {contracted:?}, torso has {:?}", zg.edges())
                })?;
            }
            (class, None) => return Err(format!("case {case}: node {i} ({class:?}) has no torso")),
        }
    }
    Ok(())
}

fn torsos() -> Outcome {
    let mut counts = BTreeMap::new();
    for (case, g) in two_connected_corpus().iter().enumerate() {
        let t = triblock_tree(g).map_err(|e| format!("case {case}: {e}"))?;
        check_torsos(case, g, &t)?;
        for n in &t.nodes {
            let key = match n.class {
                TriClass::CutPoint { .. } => "cut point",
                TriClass::Cycle => "cycle",
                TriClass::ThreeConnected { tiny: true } => "tiny 3-connected",
                TriClass::ThreeConnected { tiny: false } => "3-connected",
            };
            *counts.entry(key).or_insert(0) += 1;
        }
    }
    Ok(format!("100 graphs, torsos by class {counts:?}"))
}

fn inheritance() -> Outcome {
    let (mut planar, mut nonplanar, mut brute_checked) = (0, 0, 0);
    for (case, g) in two_connected_corpus().iter().enumerate() {
        let result = planarity_test(g).map_err(|e| format!("case {case}: {e}"))?;
        if let Some(b) = brute_planar(g, 200_000) {
            brute_checked += 1;
            ensure(b == result.is_planar(), || {
                format!("case {case}: rotation oracle says planar={b}")
            })?;
        }
        let t = triblock_tree(g).map_err(|e| format!("case {case}: {e}"))?;
        let torso_planar: Vec<bool> = t
            .torsos()
            .map(|z| planarity_test(&z.z).map(|r| r.is_planar()))
            .collect::<Result<_, _>>()
            .map_err(|e| format!("case {case}: {e}"))?;
        match result {
            PlanarityResult::Embedding { .. } => {
                planar += 1;
                ensure(torso_planar.iter().all(|&p| p), || {
                    format!("case {case}: planar input with a nonplanar torso")
                })?;
            }
            PlanarityResult::Witness { subgraph, kind } => {
                nonplanar += 1;
                let witness_ok = subgraph.edges().is_subset(g.edges())
                    && recognize_kuratowski(&subgraph) == Some(kind);
                ensure(witness_ok, || format!("case {case}: Kuratowski witness does not validate"))?;
                ensure(torso_planar.iter().any(|&p| !p), || {
                    format!("case {case}: nonplanar input, all torsos planar")
                })?;
            }
        }
    }
    Ok(format!(
        "{planar} planar, {nonplanar} nonplanar, {brute_checked} confirmed by the rotation oracle"
    ))
}

const THREE_CONNECTED_FIXTURES: &[(&str, u128)] = &[
    ("k4.edges", 24),
    ("q3.edges", 48),
    ("prism.edges", 12),
    ("wheel5.edges", 10),
    ("wheel6.edges", 12),
    ("wheel7.edges", 14),
    ("octahedron.edges", 48),
];

/// Size of Aut(g) by trying every vertex permutation.
fn brute_aut_order(g: &Graph) -> u128 {
    let vs: Vec<VertexId> = g.vertices().collect();
    permutations(&vs)
        .into_iter()
        .filter(|img| {
            let map: BTreeMap<VertexId, VertexId> =
                vs.iter().copied().zip(img.iter().copied()).collect();
            g.edges()
                .iter()
                .all(|e| g.has_edge(map[&e.u()], map[&e.v()]))
        })
        .count() as u128
}

fn facial() -> Outcome {
    let mut checked = 0;
    for &(name, order) in THREE_CONNECTED_FIXTURES {
        let g = fixture(name);
        ensure(brute_three_connected(&g), || {
            format!("{name} is not 3-connected")
        })?;
        let group: AutGroup = automorphism_group(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(group.order() == order, || {
            format!("{name}: |Aut| = {}, expected {order}", group.order())
        })?;
        if g.vertex_count() <= 8 {
            let brute = brute_aut_order(&g);
            ensure(brute == order, || {
                format!("{name}: brute-force |Aut| = {brute}")
            })?;
        }
        let PlanarityResult::Embedding { rotation, .. } =
            planarity_test(&g).map_err(|e| e.to_string())?
        else {
            return Err(format!("{name} reported nonplanar"));
        };
        for p in group.elements().expect("materialized") {
            ensure(is_automorphism(&g, p), || {
                format!("{name}: {p:?} is not an automorphism")
            })?;
            let kept =
                facial_preservation_check(&rotation, p).map_err(|e| format!("{name}: {e}"))?;
            ensure(kept, || {
                format!("{name}: {p:?} does not preserve facial walks")
            })?;
            checked += 1;
        }
        let report = face_multiset_uniqueness_check(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.exhaustive, || {
            format!("{name}: relabelings were sampled")
        })?;
        ensure(report.unique(), || {
            format!("{name}: face structure not unique: {report:?}")
        })?;
    }
    Ok(format!(
        "{} fixtures, {checked} automorphisms preserve faces, face sets unique under all relabelings",
        THREE_CONNECTED_FIXTURES.len()
    ))
}

const PLANAR_FIXTURES: &[(&str, Option<usize>)] = &[
    ("k4.edges", Some(4)),
    ("q3.edges", Some(6)),
    ("octahedron.edges", Some(8)),
    ("prism.edges", None),
    ("wheel5.edges", None),
    ("wheel6.edges", None),
    ("wheel7.edges", None),
    ("bowtie.edges", None),
    ("grid3.edges", None),
    ("k4_minus_edge.edges", None),
    ("subdivided_k4.edges", None),
];

fn euler() -> Outcome {
    for &(name, expected) in PLANAR_FIXTURES {
        let g = fixture(name);
        let PlanarityResult::Embedding { rotation, faces } =
            planarity_test(&g).map_err(|e| e.to_string())?
        else {
            return Err(format!("{name} reported nonplanar"));
        };
        ensure(faces == facial_walks(&rotation), || {
            format!("{name}: faces disagree with facial walks")
        })?;
        let (v, e, f) = (
            g.vertex_count() as i64,
            g.edge_count() as i64,
            faces.len() as i64,
        );
        ensure(v - e + f == 2, || {
            format!("{name}: V - E + F = {}", v - e + f)
        })?;
        let total: usize = faces.iter().map(Vec::len).sum();
        ensure(total == 2 * g.edge_count(), || {
            format!("{name}: face lengths sum to {total}")
        })?;
        let rot: BTreeMap<VertexId, &Vec<VertexId>> =
            rotation.rotation().iter().map(|(&k, v)| (k, v)).collect();
        let independent = count_faces(&rot);
        ensure(independent == faces.len(), || {
            format!("{name}: independent face count {independent}")
        })?;
        if let Some(n) = expected {
            ensure(faces.len() == n, || {
                format!("{name}: {} faces, expected {n}", faces.len())
            })?;
        }
    }
    Ok(format!("{} fixtures satisfy V - E + F = 2 and sum of face lengths = 2E; K4 4, Q3 6, octahedron 8 faces", PLANAR_FIXTURES.len()))
}

fn cayley() -> Outcome {
    let mut summary = Vec::new();
    for (m, n, expected) in [(3i64, 4usize, 12usize), (4, 4, 24)] {
        let pr = surface_presentation(0, &[2, 3, m], 0, &[]).map_err(|e| e.to_string())?;
        let tbl = coset_enumerate(&pr, 5000).map_err(|e| format!("(2,3,{m}): {e}"))?;
        let oracle = von_dyck_permutation_oracle(n, m as usize);
        ensure(tbl.order() == expected, || {
            format!("(2,3,{m}): order {}, expected {expected}", tbl.order())
        })?;
        ensure(oracle == expected, || {
            format!("(2,3,{m}): permutation oracle found {oracle}")
        })?;
        let relator_failures = tbl.relator_violations(&pr);
        ensure(relator_failures.is_empty(), || {
            format!("(2,3,{m}): relators fail {relator_failures:?}")
        })?;
        let x = cayley_graph(&tbl);
        let action = regular_action(&tbl);
        for (h, p) in action.iter().enumerate() {
            ensure(is_automorphism(&x, p), || {
                format!("(2,3,{m}): element {h} is not an automorphism")
            })?;
            let fixes = x.vertices().any(|v| p.apply(v) == v);
            ensure(h == 0 || !fixes, || {
                format!("(2,3,{m}): element {h} fixes a vertex")
            })?;
        }
        let orbit: BTreeSet<VertexId> = action.iter().map(|p| p.apply(0)).collect();
        ensure(orbit.len() == x.vertex_count(), || {
            format!("(2,3,{m}): action is not transitive")
        })?;
        let group = AutGroup::from_generators(&x, action).map_err(|e| e.to_string())?;
        ensure(group.is_free() == Some(true), || {
            format!("(2,3,{m}): regular action is not free")
        })?;
        ensure(group.is_transitive(), || {
            format!("(2,3,{m}): regular action is not transitive")
        })?;
        let planar = planarity_test(&x).map_err(|e| e.to_string())?.is_planar();
        ensure(planar, || format!("(2,3,{m}): Cayley graph is not planar"))?;
        let t = triblock_tree(&x).map_err(|e| format!("(2,3,{m}): {e}"))?;
        check_torsos(0, &x, &t)?;
        let v = t.violations(&x);
        ensure(v.is_empty(), || format!("(2,3,{m}): {v:?}"))?;
        summary.push(format!("(2,3,{m}) order {}", tbl.order()));
    }
    Ok(format!(
        "{}: free transitive planar, torsos conform",
        summary.join(", ")
    ))
}

fn bijection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7eee);
    let mut elements = 0;
    let mut max_len = 0;
    for case in 0..100 {
        let n = rng.gen_range(3..=40);
        let (host, els) = random_nested_family(&mut rng, n, 60);
        ensure(els.len() <= 60, || {
            format!("case {case}: {} elements", els.len())
        })?;
        elements += els.len();
        max_len = max_len.max(els.len());
        let fam = NestedFamily::new(host.clone(), els).map_err(|e| format!("case {case}: {e}"))?;
        let tree = build_structure_tree(&fam).map_err(|e| format!("case {case}: {e}"))?;
        let report = verify_tree_correspondence(&tree, &fam);
        ensure(report.is_empty(), || format!("case {case}: {report:?}"))?;
        // Directed edges biject with the family, reversal is complement.
        ensure(tree.reversal.len() == fam.len(), || {
            format!("case {case}: edge count")
        })?;
        ensure(2 * (tree.vertex_count() - 1) == fam.len(), || {
            format!("case {case}: not a tree")
        })?;
        for i in 0..fam.len() {
            let r = tree.reversal[i];
            let (cv, ce) = complement(&host, fam.get(i));
            ensure(
                fam.get(r).vertices() == &cv && fam.get(r).edges() == &ce,
                || format!("case {case}: reversal of {i} is not its complement"),
            )?;
            ensure(
                tree.initial(i) == tree.terminal(r) && tree.terminal(i) == tree.initial(r),
                || format!("case {case}: reversal of {i} does not reverse"),
            )?;
        }
        // Order coherence: for A ≠ B, A ⊆ B iff B's edge starts a directed
        // path that ends with A's edge.
        let sides: Vec<_> = fam
            .elements()
            .iter()
            .map(|s| (s.vertices().clone(), s.edges().clone()))
            .collect();
        for i in 0..fam.len() {
            for j in 0..fam.len() {
                if i != j {
                    let subset = contains(&sides[j], &sides[i]);
                    ensure(subset == tree.precedes(j, i), || {
                        format!("case {case}: {i} ⊆ {j} is {subset}")
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "100 families, {elements} elements (largest {max_len}), empty reports"
    ))
}

const GRAPH_COMMANDS: &[&str] = &[
    "blocks",
    "triblocks",
    "planar",
    "faces",
    "autos",
    "quotient",
    "check",
];

fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_path(""))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    names
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_planar-blocks");
    let mut runs = 0;
    for name in fixture_names() {
        let commands: &[&str] = if name.ends_with(".pres") {
            &["cayley", "check"]
        } else {
            GRAPH_COMMANDS
        };
        for &cmd in commands {
            let formats: &[&str] = if cmd == "check" {
                &["json"]
            } else {
                &["json", "text", "dot"]
            };
            for &format in formats {
                let mut outputs = BTreeSet::new();
                let mut codes = BTreeSet::new();
                for _ in 0..3 {
                    let out = Command::new(bin)
                        .args([
                            cmd,
                            fixture_path(&name).to_str().unwrap(),
                            "--format",
                            format,
                        ])
                        .env_remove("PLANAR_BLOCKS_LIMIT")
                        .output()
                        .map_err(|e| e.to_string())?;
                    codes.insert(out.status.code());
                    outputs.insert(out.stdout);
                    runs += 1;
                }
                ensure(outputs.len() == 1 && codes.len() == 1, || {
                    format!("{cmd} {name} --format {format}: outputs differ across runs")
                })?;
            }
        }
    }
    Ok(format!(
        "{runs} runs over {} fixtures, byte-identical",
        fixture_names().len()
    ))
}
