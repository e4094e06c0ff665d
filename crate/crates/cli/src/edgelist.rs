//! Plain-text edge lists:
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The header must come before any edge. Blank lines and lines starting
//! with `#` are ignored anywhere.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use kuratowski::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing header line \"n <count>\"")]
    MissingHeader,
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

fn number(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| at(line, format!("{what} {tok:?} is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some(count) = n else {
            match toks.as_slice() {
                ["n", c] => n = Some(number(c, line, "vertex count")?),
                _ => return Err(at(line, format!("expected header \"n <count>\", found {body:?}"))),
            }
            continue;
        };
        let [a, b] = toks.as_slice() else {
            return Err(at(line, format!("expected an edge \"u v\", found {body:?}")));
        };
        let (u, v) = (number(a, line, "vertex")?, number(b, line, "vertex")?);
        if u >= count || v >= count {
            return Err(at(line, format!("edge ({u}, {v}) uses a vertex outside 0..{count}")));
        }
        if u == v {
            return Err(at(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(at(line, format!("duplicate edge ({u}, {v})")));
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::new(n, seen).expect("edges checked while parsing"))
}

/// Header plus one `u v` line per edge, `u < v`, in ascending order.
pub fn print_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}
