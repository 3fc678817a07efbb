//! Edge-json and DOT serialization.
//!
//! Edge-json documents look like
//! `{"n": 3, "edges": [[0,1],[1,2]], "labels": {"0": "a"}}`; `labels` is
//! optional and omitted on output when the graph carries none.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeJson,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-json" | "json" => Ok(Format::EdgeJson),
            "dot" => Ok(Format::Dot),
            other => Err(Error::InvalidParameter(format!(
                "unknown format `{other}` (expected edge-json or dot)"
            ))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<usize, String>,
}

pub fn serialize(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeJson => to_edge_json(g),
        Format::Dot => to_dot(g),
    }
}

pub fn to_edge_json(g: &Graph) -> String {
    let doc = EdgeJson {
        n: g.order(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().clone(),
    };
    serde_json::to_string(&doc).expect("edge-json serialization cannot fail")
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for (v, label) in g.labels() {
        let _ = writeln!(out, "  \"{v}\" [label=\"{}\"];", escape(label));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  \"{u}\" -- \"{v}\";");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Parses an edge-json document. Structural problems report the JSON line
/// and column; invariant violations name the offending edge or label.
pub fn parse_edge_json(text: &str) -> Result<Graph> {
    let doc: EdgeJson = serde_json::from_str(text)?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    Graph::new(doc.n, &edges)
        .map_err(|e| e.at("edges"))?
        .with_labels(doc.labels)
}
