//! Graph serialization: JSON and a whitespace edge-list text format.
//!
//! The text format has one edge `u v` per line. Isolated vertices are declared
//! with a `#vertex u` line; any other line starting with `#` is a comment.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertex_list(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Graph> {
        let edges: Vec<(Vertex, Vertex)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edge_list(&json.vertices, &edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = GraphJson::deserialize(d)?;
        Graph::try_from(json).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for v in self.vertices().filter(|&v| self.degree(v) == 0) {
            out.push_str(&format!("#vertex {v}\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("#vertex") {
            let tokens = tokens(rest, indent + "#vertex".len());
            match tokens.as_slice() {
                [(col, tok)] => {
                    vertices.insert(parse_label(tok, line_no, *col)?);
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        column: indent + 1,
                        message: "expected `#vertex <label>`".into(),
                    })
                }
            }
            continue;
        }
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(line, 0);
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                column: indent + 1,
                message: format!("expected two vertex labels, found {}", toks.len()),
            });
        }
        let u = parse_label(toks[0].1, line_no, toks[0].0)?;
        let v = parse_label(toks[1].1, line_no, toks[1].0)?;
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                column: toks[1].0,
                message: format!("self-loop at vertex {u}"),
            });
        }
        vertices.insert(u);
        vertices.insert(v);
        edges.push((u, v));
    }
    let vertices: Vec<Vertex> = vertices.into_iter().collect();
    Graph::from_edge_list(&vertices, &edges)
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((offset + st + 1, &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((offset + st + 1, &s[st..]));
    }
    out
}

fn parse_label(tok: &str, line: usize, column: usize) -> Result<Vertex> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        column,
        message: format!("invalid vertex label `{tok}`"),
    })
}
