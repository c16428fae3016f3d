//! Text formats for graphs, labelings and topologies.
//!
//! All three are line oriented. `#` starts a comment and blank lines are
//! ignored. Emitters write a form the parsers read back unchanged.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use iasl_core::{Error, Graph, GroundSet, IntSet, Labeling, Topology};
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

fn at(line: usize, message: impl ToString) -> FormatError {
    FormatError::Line {
        line,
        message: message.to_string(),
    }
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Reads an edge list: `u v` declares an edge, a lone token a vertex.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut g = Graph::new();
    for (n, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            [v] => {
                g.add_vertex(v);
            }
            [u, v] => g.add_edge(u, v).map_err(|e| at(n, e))?,
            _ => {
                return Err(at(
                    n,
                    format!("expected one or two tokens, found {}", tokens.len()),
                ))
            }
        }
    }
    Ok(g)
}

/// Every vertex on its own line, in order, then every edge.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::new();
    for name in g.names() {
        out.push_str(name);
        out.push('\n');
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.name(u), g.name(v));
    }
    out
}

/// Reads a labeling. The first line must be the `X {…}` header; every later
/// line is `vertex {…}`.
pub fn parse_labeling(text: &str) -> Result<Labeling, FormatError> {
    let mut lines = content_lines(text);
    let (n, header) = lines
        .next()
        .ok_or_else(|| FormatError::Invalid("empty labeling file".into()))?;
    let literal = header
        .strip_prefix('X')
        .filter(|rest| rest.starts_with(char::is_whitespace) || rest.starts_with('{'))
        .ok_or_else(|| at(n, "expected the ground set header `X {...}`"))?;
    let ground: GroundSet = literal.parse().map_err(|e: Error| at(n, e))?;
    let mut f = Labeling::new(ground);
    for (n, line) in lines {
        let (vertex, literal) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| at(n, "expected `vertex {...}`"))?;
        let set: IntSet = literal.parse().map_err(|e: Error| at(n, e))?;
        f.assign(vertex, set).map_err(|e| at(n, e))?;
    }
    Ok(f)
}

pub fn emit_labeling(f: &Labeling) -> String {
    let mut out = format!("X {}\n", f.ground().base());
    for (v, set) in f.iter() {
        let _ = writeln!(out, "{v} {set}");
    }
    out
}

/// Reads one open set per line. The ground set is the union of the opens.
pub fn parse_topology(text: &str) -> Result<Topology, FormatError> {
    let mut opens = BTreeSet::new();
    for (n, line) in content_lines(text) {
        let set: IntSet = line.parse().map_err(|e: Error| at(n, e))?;
        if !opens.insert(set) {
            return Err(at(n, format!("open set {set} listed twice")));
        }
    }
    let union = opens.iter().fold(IntSet::EMPTY, |acc, s| acc.union(*s));
    let ground = GroundSet::new(union)
        .map_err(|e| FormatError::Invalid(format!("ground set {union}: {e}")))?;
    Topology::new(ground, opens).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn emit_topology(t: &Topology) -> String {
    t.opens().iter().map(|s| format!("{s}\n")).collect()
}
