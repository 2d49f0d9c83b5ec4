//! Text formats: edge lists, labeling pairs, DOT and JSON.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment, blank lines are
//! ignored, and an optional `n <count>` line declares the vertex count so
//! isolated vertices survive. Labelings use the same rules with `id label`
//! pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use romdom_core::{Graph, Labeling};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_id(token: &str, line: usize) -> Result<usize, CliError> {
    if let Some(rest) = token.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CliError::parse(line, format!("negative vertex id {token}")));
        }
    }
    token
        .parse()
        .map_err(|_| CliError::parse(line, format!("expected a vertex id, found `{token}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut declared = 0;
    let mut edges = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["n", count] => {
                let count = parse_id(count, line)?;
                declared = declared.max(count);
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(CliError::parse(line, format!("self-loop on vertex {u}")));
                }
                edges.push((u, v));
            }
            _ => {
                return Err(CliError::parse(
                    line,
                    "expected `u v` or `n <count>`".to_string(),
                ))
            }
        }
    }
    let n = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0)
        .max(declared);
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn dot_label(g: &Graph, v: usize) -> String {
    g.name(v).map_or_else(|| v.to_string(), str::to_string)
}

pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v} [label=\"{}\"];", dot_label(g, v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Nodes labeled 2 are filled black, 1 grey, 0 white.
pub fn write_dot_colored(g: &Graph, f: &Labeling) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled];\n");
    for v in 0..g.n() {
        let (fill, font) = match f.get(v) {
            2 => ("black", "white"),
            1 => ("gray70", "black"),
            _ => ("white", "black"),
        };
        writeln!(
            out,
            "  {v} [label=\"{}={}\", fillcolor=\"{fill}\", fontcolor=\"{font}\"];",
            dot_label(g, v),
            f.get(v)
        )
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphDoc<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<&'a [String]>,
    edges: Vec<(usize, usize)>,
}

pub fn write_graph_json(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.n(),
        names: g.names(),
        edges: g.edges().collect(),
    };
    serde_json::to_string_pretty(&doc).unwrap() + "\n"
}

#[derive(Serialize, Deserialize)]
struct LabelingDoc {
    n: usize,
    weight: u64,
    labels: Vec<u8>,
}

/// Parses `id label` pairs, or a JSON document with a `labels` array.
pub fn parse_labeling(text: &str) -> Result<Labeling, CliError> {
    if text.trim_start().starts_with('{') {
        let doc: LabelingDoc =
            serde_json::from_str(text).map_err(|e| CliError::parse(e.line(), e.to_string()))?;
        return Ok(Labeling::new(doc.labels)?);
    }
    let mut map = BTreeMap::new();
    for (line, tokens) in content_lines(text) {
        let [id, label] = tokens.as_slice() else {
            return Err(CliError::parse(line, "expected `id label`".to_string()));
        };
        let id = parse_id(id, line)?;
        let label: u8 = match label.parse() {
            Ok(l @ 0..=2) => l,
            _ => {
                return Err(CliError::parse(
                    line,
                    format!("label must be 0, 1 or 2, found `{label}`"),
                ))
            }
        };
        if map.insert(id, label).is_some() {
            return Err(CliError::parse(line, format!("vertex {id} labeled twice")));
        }
    }
    let n = map.keys().next_back().map_or(0, |&max| max + 1);
    if let Some(missing) = (0..n).find(|v| !map.contains_key(v)) {
        return Err(CliError::Usage(format!(
            "labeling has no entry for vertex {missing}"
        )));
    }
    Ok(Labeling::new(map.into_values().collect())?)
}

pub fn write_pairs(f: &Labeling) -> String {
    let mut out = String::new();
    for (v, l) in f.as_slice().iter().enumerate() {
        writeln!(out, "{v} {l}").unwrap();
    }
    out
}

pub fn write_labeling_json(f: &Labeling) -> String {
    let doc = LabelingDoc {
        n: f.len(),
        weight: f.weight(),
        labels: f.as_slice().to_vec(),
    };
    serde_json::to_string(&doc).unwrap() + "\n"
}
