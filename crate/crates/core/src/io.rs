//! DIMACS `.col` and plain edge-list formats.
//!
//! DIMACS: `c` comment lines, one `p edge <n> <m>` line, then `e <u> <v>` with
//! 1-based endpoints. The writer emits `u < v` in ascending order, so output
//! is byte-for-byte reproducible. Edge lists: one 0-based `u v` pair per line,
//! `#` starts a comment; the vertex count is one more than the largest index
//! unless a `# vertices <n>` header is present.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing `p edge` problem line")]
    MissingProblemLine,
    #[error("problem line declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    let mut declared = 0;
    let mut found = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if builder.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(syntax(line, format!("unsupported format {other:?}")));
                    }
                }
                let n = number(toks.next(), line, "vertex count")?;
                declared = number(toks.next(), line, "edge count")?;
                builder = Some(GraphBuilder::new(n));
            }
            Some("e") => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| syntax(line, "edge before problem line"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(syntax(line, "DIMACS vertices are 1-based"));
                }
                b.add_edge(u - 1, v - 1)
                    .map_err(|source| ParseError::Graph {
                        line,
                        source: shift(source),
                    })?;
                found += 1;
            }
            Some(other) => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    let b = builder.ok_or(ParseError::MissingProblemLine)?;
    if found != declared {
        return Err(ParseError::EdgeCountMismatch { declared, found });
    }
    Ok(b.build())
}

/// Reports vertices 1-based, as they appear in the file.
fn shift(e: GraphError) -> GraphError {
    match e {
        GraphError::InvalidVertex {
            vertex,
            vertex_count,
        } => GraphError::InvalidVertex {
            vertex: vertex + 1,
            vertex_count,
        },
        GraphError::SelfLoop(v) => GraphError::SelfLoop(v + 1),
        GraphError::DuplicateEdge(u, v) => GraphError::DuplicateEdge(u + 1, v + 1),
    }
}

pub fn write_dimacs(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            writeln!(out, "c {l}").unwrap();
        }
    }
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut toks = comment.split_whitespace();
            if toks.next() == Some("vertices") {
                declared = Some(number(toks.next(), line, "vertex count")?);
            }
            continue;
        }
        let body = trimmed.split('#').next().unwrap();
        let mut toks = body.split_whitespace();
        let Some(first) = toks.next() else { continue };
        let u = number(Some(first), line, "endpoint")?;
        let v = number(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
        edges.push((line, u, v));
    }
    let n = declared.unwrap_or_else(|| {
        edges
            .iter()
            .map(|&(_, u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    let mut b = GraphBuilder::new(n);
    for (line, u, v) in edges {
        b.add_edge(u, v)
            .map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(b.build())
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
