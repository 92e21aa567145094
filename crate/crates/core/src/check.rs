//! Replays the invariant suites of every module on one input.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::blocks1::block_cut_tree;
use crate::blocks2::{classify_torso, nested, triblock_tree, TorsoKind};
use crate::cayley::{cayley_graph, cayley_violations, coset_enumerate, Presentation};
use crate::graph::{homeomorphic_reduce, parse_edge_list, write_edge_list, Edge, Graph};
use crate::planar::{
    face_multiset_uniqueness_check, facial_preservation_check, planarity_test,
    recognize_kuratowski, PlanarityResult,
};
use crate::symmetry::{
    automorphism_generators, is_automorphism, tree_action_check, AutGroup, DEFAULT_MAX_VERTICES,
};
use crate::tree::{verify_tree_correspondence, StructureTree};

/// Largest group whose regular action is checked element by element.
pub const REGULAR_ACTION_MAX: usize = 1000;
/// Largest graph put through the face-multiset relabeling check.
pub const FACE_MULTISET_MAX: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub module: &'static str,
    pub invariant: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    fn record(&mut self, module: &'static str, invariant: &'static str, violations: Vec<String>) {
        let status = if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        self.items.push(CheckItem {
            module,
            invariant,
            status,
            detail: violations,
        });
    }

    fn skip(&mut self, module: &'static str, invariant: &'static str, reason: impl Into<String>) {
        self.items.push(CheckItem {
            module,
            invariant,
            status: Status::Skip,
            detail: vec![reason.into()],
        });
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in &self.items {
            let tag = match i.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("{tag} {}: {}\n", i.module, i.invariant));
            for d in &i.detail {
                out.push_str(&format!("    {d}\n"));
            }
        }
        out
    }
}

fn strings<T: std::fmt::Debug>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| format!("{x:?}")).collect()
}

/// Runs every graph-level invariant on `g`. Checks that need a connected
/// input are skipped for disconnected ones.
pub fn check_graph(g: &Graph) -> CheckReport {
    let mut r = CheckReport::default();
    graph_core(g, &mut r);
    if !g.is_connected() {
        for (m, inv) in [
            ("structure-tree", "cut-point family tree correspondence"),
            ("blocks1", "block-cut tree invariants"),
            ("blocks2", "combined tree invariants"),
            ("planar", "embedding certificates"),
            ("symmetry", "group action on decomposition trees"),
        ] {
            r.skip(m, inv, "input is not connected");
        }
        return r;
    }
    let trees = blocks(g, &mut r);
    let group = symmetry(g, &trees, &mut r);
    planar(g, &group, &mut r);
    r
}

fn graph_core(g: &Graph, r: &mut CheckReport) {
    let round = parse_edge_list(&write_edge_list(g));
    r.record(
        "graph-core",
        "edge list round trip",
        match round {
            Ok(h) if h == *g => vec![],
            Ok(_) => vec!["reparsed graph differs".into()],
            Err(e) => vec![e.to_string()],
        },
    );
    if !g.is_connected() {
        r.skip(
            "graph-core",
            "homeomorphic reduction",
            "input is not connected",
        );
        return;
    }
    let mut v = Vec::new();
    match homeomorphic_reduce(g) {
        Ok(red) => {
            for e in g.edges() {
                match red.edge_map.get(e) {
                    Some(t) if red.graph.edges().contains(t) => {}
                    _ => v.push(format!("edge {e} has no image")),
                }
            }
            match homeomorphic_reduce(&red.graph) {
                Ok(again) if again.graph == red.graph => {}
                Ok(_) => v.push("reduction is not idempotent".into()),
                Err(e) => v.push(e.to_string()),
            }
        }
        Err(e) => v.push(e.to_string()),
    }
    r.record("graph-core", "homeomorphic reduction", v);
}

fn blocks(g: &Graph, r: &mut CheckReport) -> Vec<StructureTree> {
    let mut trees = Vec::new();
    match block_cut_tree(g) {
        Ok(bct) => {
            r.record(
                "structure-tree",
                "cut-point family tree correspondence",
                strings(verify_tree_correspondence(&bct.tree, &bct.tree.family)),
            );
            r.record("blocks1", "block-cut tree invariants", bct.violations(g));
            let ours: BTreeSet<BTreeSet<Edge>> = bct
                .blocks()
                .into_iter()
                .map(|(_, es)| es.into_iter().collect())
                .collect();
            let lowpoint: BTreeSet<BTreeSet<Edge>> =
                g.biconnected_components().into_iter().collect();
            r.record(
                "blocks1",
                "blocks equal biconnected components",
                if ours == lowpoint {
                    vec![]
                } else {
                    vec!["block edge sets differ".into()]
                },
            );
            trees.push(bct.tree);
        }
        Err(e) => r.record("blocks1", "block-cut tree invariants", vec![e.to_string()]),
    }
    match triblock_tree(g) {
        Ok(t) => {
            r.record("blocks2", "combined tree invariants", t.violations(g));
            r.record(
                "blocks2",
                "combined tree correspondence",
                strings(verify_tree_correspondence(&t.tree, &t.tree.family)),
            );
            let els = t.tree.family.elements();
            let mut crossing = Vec::new();
            for (i, a) in els.iter().enumerate() {
                for (j, b) in els.iter().enumerate().skip(i + 1) {
                    if !nested(g, a, b).is_nested() {
                        crossing.push(format!("elements {i} and {j} cross"));
                    }
                }
            }
            r.record("blocks2", "pairwise nesting", crossing);
            trees.push(t.tree);
        }
        Err(e) => r.record("blocks2", "combined tree invariants", vec![e.to_string()]),
    }
    trees
}

fn symmetry(g: &Graph, trees: &[StructureTree], r: &mut CheckReport) -> AutGroup {
    let mut group = automorphism_generators(g);
    let bad: Vec<String> = group
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, p)| !is_automorphism(g, p))
        .map(|(i, _)| format!("generator {i} is not an automorphism"))
        .collect();
    r.record("symmetry", "generators are automorphisms", bad);
    if g.vertex_count() <= DEFAULT_MAX_VERTICES {
        match group.materialize() {
            Ok(()) => r.record("symmetry", "group closure", group.closure_violations()),
            Err(e) => r.record("symmetry", "group closure", vec![e.to_string()]),
        }
    } else {
        r.skip(
            "symmetry",
            "group closure",
            format!("more than {DEFAULT_MAX_VERTICES} vertices"),
        );
    }
    let mut v = Vec::new();
    for (name, t) in ["block-cut tree", "combined tree"].iter().zip(trees) {
        v.extend(
            tree_action_check(t, &group)
                .into_iter()
                .map(|x| format!("{name}: {x:?}")),
        );
    }
    r.record("symmetry", "group action on decomposition trees", v);
    group
}

fn planar(g: &Graph, group: &AutGroup, r: &mut CheckReport) {
    let result = match planarity_test(g) {
        Ok(x) => x,
        Err(e) => {
            r.record("planar", "embedding certificates", vec![e.to_string()]);
            return;
        }
    };
    let mut v = Vec::new();
    match &result {
        PlanarityResult::Embedding { rotation, faces } => {
            let (n, m, f) = (
                g.vertex_count() as i64,
                g.edge_count() as i64,
                faces.len() as i64,
            );
            if n - m + f != 2 {
                v.push(format!("V - E + F = {}", n - m + f));
            }
            let total: usize = faces.iter().map(Vec::len).sum();
            if total != 2 * g.edge_count() {
                v.push(format!(
                    "face lengths sum to {total}, expected {}",
                    2 * g.edge_count()
                ));
            }
            if rotation.genus() != 0 {
                v.push(format!("rotation system has genus {}", rotation.genus()));
            }
        }
        PlanarityResult::Witness { subgraph, kind } => {
            if !subgraph.edges().is_subset(g.edges()) {
                v.push("witness is not a subgraph".into());
            }
            if recognize_kuratowski(subgraph) != Some(*kind) {
                v.push(format!("witness is not a subdivision of {kind:?}"));
            }
        }
    }
    r.record("planar", "embedding certificates", v);
    let PlanarityResult::Embedding { rotation, .. } = result else {
        r.skip("planar", "facial preservation", "input is not planar");
        r.skip("planar", "face multiset uniqueness", "input is not planar");
        return;
    };
    if g.vertex_count() < 4 || !matches!(classify_torso(g), Some(TorsoKind::ThreeConnected { .. }))
    {
        r.skip("planar", "facial preservation", "input is not 3-connected");
        r.skip(
            "planar",
            "face multiset uniqueness",
            "input is not 3-connected",
        );
        return;
    }
    match group.elements() {
        Some(els) => {
            let mut v = Vec::new();
            for p in els {
                match facial_preservation_check(&rotation, p) {
                    Ok(true) => {}
                    Ok(false) => v.push(format!("{p:?} moves a face to a non-face")),
                    Err(e) => v.push(e.to_string()),
                }
            }
            r.record("planar", "facial preservation", v);
        }
        None => r.skip(
            "planar",
            "facial preservation",
            "automorphism group not materialized",
        ),
    }
    if g.vertex_count() <= FACE_MULTISET_MAX {
        let v = match face_multiset_uniqueness_check(g) {
            Ok(rep) if rep.unique() => vec![],
            Ok(rep) => vec![format!(
                "{} face sets, multisets {:?}",
                rep.face_sets, rep.multisets
            )],
            Err(e) => vec![e.to_string()],
        };
        r.record("planar", "face multiset uniqueness", v);
    } else {
        r.skip(
            "planar",
            "face multiset uniqueness",
            format!("more than {FACE_MULTISET_MAX} vertices"),
        );
    }
}

/// Enumerates the group and checks its table and Cayley graph.
pub fn check_presentation(pr: &Presentation, limit: usize) -> CheckReport {
    let mut r = CheckReport::default();
    let tbl = match coset_enumerate(pr, limit) {
        Ok(t) => t,
        Err(e) => {
            r.record("cayley", "coset enumeration", vec![e.to_string()]);
            return r;
        }
    };
    r.record("cayley", "coset enumeration", vec![]);
    r.record(
        "cayley",
        "relators trace to the identity",
        tbl.relator_violations(pr)
            .into_iter()
            .map(|(ri, g)| {
                format!(
                    "relator {} from element {g}",
                    pr.format_word(&pr.relators()[ri])
                )
            })
            .collect(),
    );
    let x = cayley_graph(&tbl);
    if tbl.order() <= REGULAR_ACTION_MAX {
        r.record(
            "cayley",
            "regular action is free and transitive",
            cayley_violations(&tbl, pr, &x),
        );
    } else {
        r.skip(
            "cayley",
            "regular action is free and transitive",
            format!("order {} exceeds {REGULAR_ACTION_MAX}", tbl.order()),
        );
    }
    let mut rest = check_graph(&x);
    r.items.append(&mut rest.items);
    r
}
