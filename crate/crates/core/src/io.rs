//! DIMACS edge files and vertex-set files.
//!
//! Graphs use the DIMACS edge format: a `p edge <n> <m>` header, one
//! `e <u> <v>` line per edge with 1-based ids, and `c` comment lines.
//! Comments of the form `c <key> <value>` are returned as parameters, which
//! is how generated instances carry their derived values. Vertex-set files
//! hold whitespace-separated 1-based ids; lines starting with `c` are
//! comments.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("line {line}: {error}")]
    Graph { line: usize, error: GraphError },
    #[error("{path}: {error}")]
    Io { path: String, error: std::io::Error },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

/// A parsed graph together with its `c key value` comment parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimacsGraph {
    pub graph: Graph,
    pub params: Vec<(String, String)>,
}

impl DimacsGraph {
    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

fn parse_id(tok: Option<&str>, n: usize, line: usize) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, "missing vertex id"))?;
    let id: usize = tok
        .parse()
        .map_err(|_| syntax(line, format!("bad vertex id {tok:?}")))?;
    if id == 0 || id > n {
        return Err(syntax(line, format!("vertex id {id} outside 1..={n}")));
    }
    Ok(id - 1)
}

pub fn parse_dimacs(text: &str) -> Result<DimacsGraph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut params = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None => {}
            Some("c") => {
                if let Some(key) = toks.next() {
                    params.push((key.to_string(), toks.collect::<Vec<_>>().join(" ")));
                }
            }
            Some("p") => {
                if n.is_some() {
                    return Err(syntax(line, "duplicate `p` header"));
                }
                if toks.next() != Some("edge") {
                    return Err(syntax(line, "expected `p edge <n> <m>`"));
                }
                let count = |t: Option<&str>| -> Result<usize, ParseError> {
                    t.and_then(|t| t.parse().ok())
                        .ok_or_else(|| syntax(line, "expected `p edge <n> <m>`"))
                };
                n = Some(count(toks.next())?);
                count(toks.next())?;
            }
            Some("e") => {
                let n = n.ok_or(ParseError::MissingHeader)?;
                let u = parse_id(toks.next(), n, line)?;
                let v = parse_id(toks.next(), n, line)?;
                if u == v {
                    return Err(ParseError::Graph {
                        line,
                        error: GraphError::SelfLoop(u),
                    });
                }
                edges.push((u, v));
            }
            Some(other) => return Err(syntax(line, format!("unexpected line type {other:?}"))),
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    let graph = Graph::from_edges(n, edges).map_err(|error| ParseError::Graph { line: 0, error })?;
    Ok(DimacsGraph { graph, params })
}

/// Canonical DIMACS text: parameters first, then edges in lexicographic
/// order.
pub fn write_dimacs(g: &Graph, params: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in params {
        let _ = writeln!(out, "c {k} {v}");
    }
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet, ParseError> {
    let mut ids = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.starts_with('c') {
            continue;
        }
        for tok in trimmed.split_whitespace() {
            ids.push(parse_id(Some(tok), n, idx + 1)?);
        }
    }
    Ok(ids.into_iter().collect())
}

pub fn write_vertex_set(s: &VertexSet) -> String {
    let mut out = s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

fn read(path: &Path) -> Result<String, ParseError> {
    fs::read_to_string(path).map_err(|error| ParseError::Io {
        path: path.display().to_string(),
        error,
    })
}

pub fn read_dimacs(path: &Path) -> Result<DimacsGraph, ParseError> {
    parse_dimacs(&read(path)?)
}

pub fn read_vertex_set(path: &Path, n: usize) -> Result<VertexSet, ParseError> {
    parse_vertex_set(&read(path)?, n)
}
