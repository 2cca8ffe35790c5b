//! Plain-text graph formats.
//!
//! The edge list is one `u v` pair per line, 0-indexed, `u < v`, in
//! lexicographic order, preceded by a `# vertices N` comment so isolated
//! vertices survive a round trip. Lines starting with `#` are comments.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "# vertices {}", g.vertex_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// Reads an edge list. Without a `# vertices N` header the vertex count is
/// one more than the largest endpoint.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("vertices") {
                let n = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex count", lineno + 1)))?;
                declared = Some(n);
            }
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1))),
        }
    }
    let n = declared.unwrap_or_else(|| {
        edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0)
    });
    Graph::from_edges(n, edges)
}

pub fn write_dot<W: Write>(g: &Graph, name: &str, mut out: W) -> Result<()> {
    writeln!(out, "graph \"{}\" {{", escape(name))?;
    for v in 0..g.vertex_count() {
        match g.labels() {
            Some(labels) => writeln!(out, "  {v} [label=\"{}\"];", escape(&labels[v]))?,
            None => writeln!(out, "  {v};")?,
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};")?;
    }
    writeln!(out, "}}")?;
    Ok(())
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub vertex_count: usize,
    pub labels: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for JsonGraph {
    fn from(g: &Graph) -> Self {
        JsonGraph {
            vertex_count: g.vertex_count(),
            labels: g.labels().map(<[String]>::to_vec),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<JsonGraph> for Graph {
    type Error = Error;

    fn try_from(j: JsonGraph) -> Result<Graph> {
        let g = Graph::from_edges(j.vertex_count, j.edges.into_iter().map(|[u, v]| (u, v)))?;
        match j.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

pub fn write_json<W: Write>(g: &Graph, out: W) -> Result<()> {
    serde_json::to_writer(out, &JsonGraph::from(g)).map_err(|e| Error::Io(e.to_string()))
}

/// Vertex and edge counts followed by adjacency lists.
pub fn write_text<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "vertices: {}", g.vertex_count())?;
    writeln!(out, "edges: {}", g.edge_count())?;
    for u in 0..g.vertex_count() {
        let nb: Vec<String> = g.neighbors(u).map(|v| v.to_string()).collect();
        writeln!(out, "{u}: {}", nb.join(" "))?;
    }
    Ok(())
}
