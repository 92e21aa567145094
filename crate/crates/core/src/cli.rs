//! Command-line front end: one function from configuration and input bytes
//! to an exit code and output bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Value};

use crate::blocks1::{block_cut_tree, BlockNode};
use crate::blocks2::{triblock_tree, TriClass};
use crate::cayley::{cayley_graph, coset_enumerate, Presentation, DEFAULT_LIMIT};
use crate::check::{check_graph, check_presentation, CheckReport};
use crate::error::Error;
use crate::graph::{homeomorphic_reduce, parse_edge_list, Graph, Reduction, VertexId};
use crate::planar::{facial_walks, planarity_test, PlanarityResult};
use crate::symmetry::{automorphism_generators, quotient_graph};
use crate::tree::SeparationJson;

/// JSON schema version carried by every JSON document.
pub const SCHEMA: u32 = 1;
/// Environment variable overriding the default `--limit`.
pub const LIMIT_ENV: &str = "PLANAR_BLOCKS_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Blocks,
    Triblocks,
    Planar,
    Faces,
    Autos,
    Quotient,
    Cayley,
    Check,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Blocks => "blocks",
            Command::Triblocks => "triblocks",
            Command::Planar => "planar",
            Command::Faces => "faces",
            Command::Autos => "autos",
            Command::Quotient => "quotient",
            Command::Cayley => "cayley",
            Command::Check => "check",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Dot,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub format: Format,
    /// Process each connected component separately.
    pub per_component: bool,
    /// Suppress degree-2 vertices before decomposing.
    pub reduce: bool,
    /// Bound on the group order for coset enumeration. At least 1.
    pub limit: usize,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            command,
            input: input.into(),
            format: Format::Json,
            per_component: false,
            reduce: false,
            limit: default_limit(),
        }
    }
}

/// [`LIMIT_ENV`] if set to a positive integer, otherwise [`DEFAULT_LIMIT`].
pub fn default_limit() -> usize {
    std::env::var(LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n >= 1)
        .unwrap_or(DEFAULT_LIMIT)
}

/// Rendered result of one command.
struct Output {
    json: Value,
    text: String,
    dot: Option<String>,
}

/// Exit codes: 0 success, 1 contract violation (or failed `check`), 2 parse
/// error.
pub fn run(cfg: &RunConfig, input: &[u8]) -> (i32, Vec<u8>) {
    let text = match std::str::from_utf8(input) {
        Ok(t) => t,
        Err(e) => {
            let err = Error::Parse {
                line: 1,
                message: format!("input is not UTF-8: {e}"),
            };
            return (2, render_error(cfg, &err));
        }
    };
    if cfg.limit == 0 {
        return (
            2,
            render_error(
                cfg,
                &Error::MalformedInput("limit must be at least 1".into()),
            ),
        );
    }
    let parsed = if cfg.command == Command::Cayley
        || (cfg.command == Command::Check && is_presentation(text))
    {
        Presentation::parse(text).map(Input::Presentation)
    } else {
        parse_edge_list(text).map(Input::Graph)
    };
    let input = match parsed {
        Ok(i) => i,
        Err(e) => return (2, render_error(cfg, &e)),
    };
    match execute(cfg, input) {
        Ok((out, ok)) => (if ok { 0 } else { 1 }, render(cfg, out)),
        Err(e) => (1, render_error(cfg, &e)),
    }
}

enum Input {
    Graph(Graph),
    Presentation(Presentation),
}

fn is_presentation(text: &str) -> bool {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    first.starts_with("gens:") || first.starts_with("surface")
}

fn render(cfg: &RunConfig, out: Output) -> Vec<u8> {
    let mut s = match cfg.format {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("schema".into(), json!(SCHEMA));
            doc.insert("command".into(), json!(cfg.command.name()));
            if let Value::Object(m) = out.json {
                doc.extend(m);
            }
            serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize")
        }
        Format::Dot => out.dot.unwrap_or(out.text),
        Format::Text => out.text,
    };
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s.into_bytes()
}

fn render_error(cfg: &RunConfig, e: &Error) -> Vec<u8> {
    let s = match cfg.format {
        Format::Json => {
            let mut err = json!({ "kind": e.kind(), "message": e.to_string() });
            if let Some(w) = witness(e) {
                err["witness"] = w;
            }
            let doc = json!({ "schema": SCHEMA, "command": cfg.command.name(), "error": err });
            serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"
        }
        _ => format!("error: {}: {e}\n", e.kind()),
    };
    s.into_bytes()
}

fn witness(e: &Error) -> Option<Value> {
    Some(match e {
        Error::Parse { line, .. } => json!({ "line": line }),
        Error::NotNested(a, b) => json!({ "elements": [a, b] }),
        Error::NotClosed(a) => json!({ "element": a }),
        Error::NoSeparationExists(v) => json!({ "vertex": v }),
        Error::HingeVertex(v) => json!({ "tree_vertex": v }),
        Error::BadExponent(n) => json!({ "exponent": n }),
        Error::Overflow(n) => json!({ "limit": n }),
        _ => return None,
    })
}

/// Runs the command. The flag is false when a `check` found failures.
fn execute(cfg: &RunConfig, input: Input) -> Result<(Output, bool), Error> {
    let g = match input {
        Input::Presentation(pr) => {
            return match cfg.command {
                Command::Cayley => Ok((cayley(&pr, cfg.limit)?, true)),
                _ => Ok(check_output(check_presentation(&pr, cfg.limit))),
            };
        }
        Input::Graph(g) => g,
    };
    if !cfg.per_component {
        return on_graph(cfg, &g);
    }
    let mut parts = Vec::new();
    let mut text = String::new();
    let mut dot = String::new();
    let mut all_ok = true;
    for (i, comp) in g.components().iter().enumerate() {
        let h = g.induced(comp);
        let (out, ok) = on_graph(cfg, &h)?;
        all_ok &= ok;
        let mut obj = json!({ "component": i, "vertices": comp });
        if let (Value::Object(o), Value::Object(m)) = (&mut obj, out.json) {
            o.extend(m);
        }
        parts.push(obj);
        let _ = writeln!(text, "component {i}: {comp:?}");
        text.push_str(&out.text);
        if let Some(d) = out.dot {
            dot.push_str(&d);
        }
    }
    let out = Output {
        json: json!({ "components": parts }),
        text,
        dot: (!dot.is_empty()).then_some(dot),
    };
    Ok((out, all_ok))
}

fn check_output(report: CheckReport) -> (Output, bool) {
    let ok = report.passed();
    let out = Output {
        json: json!({ "passed": ok, "items": report.items }),
        text: report.to_text(),
        dot: None,
    };
    (out, ok)
}

fn on_graph(cfg: &RunConfig, g: &Graph) -> Result<(Output, bool), Error> {
    let (g, reduction) = if cfg.reduce {
        let r = homeomorphic_reduce(g)?;
        (r.graph.clone(), Some(r))
    } else {
        (g.clone(), None)
    };
    let (mut out, ok) = match cfg.command {
        Command::Blocks => (blocks(&g)?, true),
        Command::Triblocks => (triblocks(&g)?, true),
        Command::Planar => (planar(&g)?, true),
        Command::Faces => (faces(&g)?, true),
        Command::Autos => (autos(&g), true),
        Command::Quotient => (quotient(&g), true),
        Command::Check => check_output(check_graph(&g)),
        Command::Cayley => unreachable!("cayley reads a presentation"),
    };
    if let Some(r) = reduction {
        if let Value::Object(m) = &mut out.json {
            m.insert("reduction".into(), reduction_json(&r));
        }
        out.text = format!(
            "reduced to {} vertices, {} edges\n{}",
            g.vertex_count(),
            g.edge_count(),
            out.text
        );
    }
    Ok((out, ok))
}

fn reduction_json(r: &Reduction) -> Value {
    let map: Vec<Value> = r
        .edge_map
        .iter()
        .map(|(o, t)| json!({ "original": o.ends(), "reduced": t.ends() }))
        .collect();
    json!({ "kind": r.kind, "edge_map": map })
}

fn edges_json(g: &Graph) -> Vec<[VertexId; 2]> {
    g.edges().iter().map(|e| e.ends()).collect()
}

fn graph_dot(name: &str, g: &Graph) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}

fn blocks(g: &Graph) -> Result<Output, Error> {
    let bct = block_cut_tree(g)?;
    let mut text = String::new();
    for (i, n) in bct.nodes.iter().enumerate() {
        match n {
            BlockNode::CutPoint { vertex } => writeln!(text, "node {i}: cut point {vertex}"),
            BlockNode::Block { vertices, .. } => writeln!(text, "node {i}: block {vertices:?}"),
        }
        .expect("writing to a String");
    }
    for l in &bct.links {
        let _ = writeln!(text, "link {} -- {}", l.a, l.b);
    }
    let blocks: Vec<&Vec<VertexId>> = bct
        .nodes
        .iter()
        .filter_map(|n| match n {
            BlockNode::Block { vertices, .. } => Some(vertices),
            BlockNode::CutPoint { .. } => None,
        })
        .collect();
    Ok(Output {
        json: json!({
            "cut_points": bct.cut_points(),
            "blocks": blocks,
            "nodes": bct.nodes,
            "links": bct.links,
            "structure_tree": bct.tree.to_json(),
        }),
        text,
        dot: Some(bct.to_dot()),
    })
}

fn triblocks(g: &Graph) -> Result<Output, Error> {
    let t = triblock_tree(g)?;
    let mut text = String::new();
    for (i, n) in t.nodes.iter().enumerate() {
        let kind = match n.class {
            TriClass::CutPoint { vertex } => format!("cut point {vertex}"),
            TriClass::Cycle => "cycle".to_string(),
            TriClass::ThreeConnected { tiny: true } => "3-connected (tiny)".to_string(),
            TriClass::ThreeConnected { tiny: false } => "3-connected".to_string(),
        };
        let _ = write!(text, "node {i}: {kind}");
        if n.hinge {
            text.push_str(", hinge");
        }
        if let Some(torso) = &n.torso {
            let _ = write!(
                text,
                ", vertices {:?}",
                torso.z.vertices().collect::<Vec<_>>()
            );
            if !torso.virtual_edges.is_empty() {
                let _ = write!(text, ", virtual {:?}", torso.virtual_edges);
            }
        }
        text.push('\n');
    }
    for l in &t.links {
        let _ = writeln!(text, "link {} -- {}", l.a, l.b);
    }
    let mut json = serde_json::to_value(t.to_json()).expect("tree serializes");
    let rounds: Vec<SeparationJson> = t
        .rounds
        .iter()
        .enumerate()
        .map(|(i, s)| SeparationJson::new(i, s))
        .collect();
    json["rounds"] = json!(rounds);
    Ok(Output {
        json,
        text,
        dot: Some(t.to_dot()),
    })
}

fn planar(g: &Graph) -> Result<Output, Error> {
    Ok(match planarity_test(g)? {
        PlanarityResult::Embedding { rotation, faces } => {
            let rot: Vec<Value> = g
                .vertices()
                .map(|v| json!({ "vertex": v, "neighbors": rotation.rotation()[&v] }))
                .collect();
            let mut text = format!("planar: {} faces\n", faces.len());
            for v in g.vertices() {
                let _ = writeln!(text, "  {v}: {:?}", rotation.rotation()[&v]);
            }
            Output {
                json: json!({ "result": "planar", "rotation": rot, "faces": faces }),
                text,
                dot: Some(graph_dot("planar", g)),
            }
        }
        PlanarityResult::Witness { subgraph, kind } => {
            let mut text = format!("nonplanar: subdivision of {kind:?}\n");
            for e in subgraph.edges() {
                let _ = writeln!(text, "  {} {}", e.u(), e.v());
            }
            Output {
                json: json!({ "result": "nonplanar", "kuratowski": kind, "witness": edges_json(&subgraph) }),
                text,
                dot: Some(graph_dot("kuratowski_witness", &subgraph)),
            }
        }
    })
}

fn faces(g: &Graph) -> Result<Output, Error> {
    let PlanarityResult::Embedding { rotation, .. } = planarity_test(g)? else {
        return Err(Error::PreconditionViolated("graph is not planar".into()));
    };
    let faces = facial_walks(&rotation);
    let mut text = String::new();
    for f in &faces {
        let _ = writeln!(text, "{f:?}");
    }
    Ok(Output {
        json: json!({
            "faces": faces,
            "face_count": faces.len(),
            "euler_characteristic": rotation.euler_characteristic(),
        }),
        text,
        dot: None,
    })
}

fn autos(g: &Graph) -> Output {
    let h = automorphism_generators(g);
    let gens: Vec<Vec<Vec<VertexId>>> = h.generators().iter().map(|p| p.cycles()).collect();
    let orbits = h.orbits();
    let mut text = format!("order {}\n", h.order());
    for c in &gens {
        let _ = writeln!(text, "generator {c:?}");
    }
    for o in &orbits {
        let _ = writeln!(text, "orbit {o:?}");
    }
    Output {
        json: json!({ "order": h.order().to_string(), "generators": gens, "orbits": orbits }),
        text,
        dot: None,
    }
}

fn quotient(g: &Graph) -> Output {
    let h = automorphism_generators(g);
    let q = quotient_graph(g, &h);
    let mut text = format!(
        "{} vertex orbits, {} edge orbits\n",
        q.vertex_orbits.len(),
        q.edge_orbits.len()
    );
    let mut dot = String::from("graph quotient {\n");
    for (i, o) in q.vertex_orbits.iter().enumerate() {
        let _ = writeln!(text, "vertex orbit {i}: {o:?}");
        let _ = writeln!(dot, "  o{i} [label=\"{o:?}\"];");
    }
    for (i, o) in q.edge_orbits.iter().enumerate() {
        let _ = writeln!(
            text,
            "edge orbit {i}: {} -- {} ({} edges)",
            o.ends[0],
            o.ends[1],
            o.edges.len()
        );
        let _ = writeln!(dot, "  o{} -- o{};", o.ends[0], o.ends[1]);
    }
    dot.push_str("}\n");
    Output {
        json: json!({ "group_order": h.order().to_string(), "quotient": q }),
        text,
        dot: Some(dot),
    }
}

fn cayley(pr: &Presentation, limit: usize) -> Result<Output, Error> {
    let tbl = coset_enumerate(pr, limit)?;
    let x = cayley_graph(&tbl);
    let words: Vec<String> = tbl.words().iter().map(|w| pr.format_word(w)).collect();
    let planar = crate::planar::is_planar(&x);
    let mut text = format!("{pr}\norder {}\nplanar {planar}\n", tbl.order());
    for (i, w) in words.iter().enumerate() {
        let _ = writeln!(text, "  {i}: {w}");
    }
    let mut dot = String::from("graph cayley {\n");
    for g in 0..tbl.order() {
        for (k, name) in pr.generators().iter().enumerate() {
            let h = tbl.mult(g, k);
            if h > g || (h < g && tbl.mult(h, k) != g) {
                let _ = writeln!(dot, "  {g} -- {h} [label=\"{name}\"];");
            }
        }
    }
    dot.push_str("}\n");
    Ok(Output {
        json: json!({
            "presentation": pr.to_string(),
            "order": tbl.order(),
            "elements": words,
            "edges": edges_json(&x),
            "planar": planar,
        }),
        text,
        dot: Some(dot),
    })
}
