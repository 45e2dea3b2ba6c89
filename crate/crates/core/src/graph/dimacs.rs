//! Line-oriented DIMACS-style edge format.
//!
//! ```text
//! c optional comment
//! p edge <N> <M>
//! e <u> <v>
//! ```

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") || line.starts_with("c\t") {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "second problem line"));
                }
                if fields.next() != Some("edge") {
                    return Err(Error::parse(line_no, "expected \"p edge <N> <M>\""));
                }
                let n = parse_count(fields.next(), line_no, "vertex count")?;
                let m = parse_count(fields.next(), line_no, "edge count")?;
                if fields.next().is_some() {
                    return Err(Error::parse(line_no, "trailing fields in problem line"));
                }
                if n == 0 {
                    return Err(Error::parse(line_no, "vertex count must be positive"));
                }
                header = Some((n, m, line_no));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(Error::parse(line_no, "edge before problem line"));
                };
                let u = parse_count(fields.next(), line_no, "edge endpoint")?;
                let v = parse_count(fields.next(), line_no, "edge endpoint")?;
                if fields.next().is_some() {
                    return Err(Error::parse(line_no, "trailing fields in edge line"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(
                        line_no,
                        format!("edge ({u}, {v}) has an endpoint outside 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown line type {other:?}"),
                ));
            }
            None => unreachable!(),
        }
    }
    let Some((n, m, line_no)) = header else {
        return Err(Error::parse(
            text.lines().count().max(1),
            "missing problem line",
        ));
    };
    if edges.len() != m {
        return Err(Error::parse(
            line_no,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    let g = Graph::new(n, edges)?;
    if g.edge_count() != m {
        return Err(Error::parse(line_no, "duplicate edges in edge list"));
    }
    Ok(g)
}

fn parse_count(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let field = field.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    field.parse().map_err(|_| {
        Error::parse(
            line,
            format!("{what} {field:?} is not a nonnegative integer"),
        )
    })
}

/// Writes the header and edges with `u < v`, sorted.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
