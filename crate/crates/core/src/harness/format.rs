//! Line-oriented hypergraph files.
//!
//! ```text
//! # comment
//! h 7 7
//! 1 2 3
//! 1 4 5
//! ...
//! ```
//!
//! The header gives the vertex count and edge count; each following line
//! lists the 1-based vertices of one edge (one to three of them). Blank lines
//! and lines starting with `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use crate::hypergraph::{Edge, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: edge repeats an earlier edge")]
    DuplicateEdge { line: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<Hypergraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((n, m)) = header else {
            if tokens.len() != 3 || tokens[0] != "h" {
                return Err(syntax(line, "expected header `h <n> <m>`"));
            }
            let n = tokens[1].parse().map_err(|_| syntax(line, "vertex count is not a number"))?;
            let m = tokens[2].parse().map_err(|_| syntax(line, "edge count is not a number"))?;
            header = Some((n, m));
            continue;
        };
        if !(1..=3).contains(&tokens.len()) {
            return Err(syntax(line, format!("edge has {} vertices, expected 1 to 3", tokens.len())));
        }
        let mut vertices = Vec::with_capacity(tokens.len());
        for t in tokens {
            let v: usize = t.parse().map_err(|_| syntax(line, format!("{t:?} is not a vertex index")))?;
            if v == 0 || v > n {
                return Err(FormatError::VertexOutOfRange { line, vertex: v, n });
            }
            vertices.push(v - 1);
        }
        let edge = Edge::new(vertices.iter().copied());
        if edge.windows(2).any(|w| w[0] == w[1]) {
            return Err(syntax(line, "edge repeats a vertex"));
        }
        if !seen.insert(edge.clone()) {
            return Err(FormatError::DuplicateEdge { line });
        }
        if edges.len() == m {
            return Err(syntax(line, format!("more than the {m} declared edges")));
        }
        edges.push(edge);
    }
    let Some((n, m)) = header else {
        return Err(syntax(last.max(1), "missing header"));
    };
    if edges.len() != m {
        return Err(syntax(last.max(1), format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Hypergraph::new(n, edges.iter().map(|e| e.vertices().to_vec())).expect("edges checked while parsing"))
}

/// Canonical text: the header uses the vertex universe as `n`, edges are
/// sorted within and across lines.
pub fn emit(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "h {} {}", h.universe(), h.m()).unwrap();
    for e in h.edges() {
        let labels: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "{}", labels.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    const FANO: &str = "# Fano plane\nh 7 7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";

    #[test]
    fn examples() {
        assert_eq!(parse("h 3 1\n1 2 3\n").unwrap(), single());
        let f = parse(FANO).unwrap();
        assert_eq!(f, fano());
        assert_eq!(f.validate().max_degree, 3);
        assert_eq!(parse("h 3 1\n1 2 9\n"), Err(FormatError::VertexOutOfRange { line: 2, vertex: 9, n: 3 }));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse("h 3 2\n1 2 3\n\n3 2 1\n"), Err(FormatError::DuplicateEdge { line: 4 }));
        assert!(matches!(parse("1 2 3\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse("h 4 1\n1 2 3 4\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse("h 3 1\n1 1 2\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse("h 3 2\n1 2 3\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse("h 3 1\n1 x 3\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse(""), Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn emission_is_canonical() {
        let shuffled = "h 7 7\n7 3 4\n1 2 3\n6 5 3\n1 5 4\n7 6 1\n6 4 2\n2 5 7\n";
        let h = parse(shuffled).unwrap();
        assert_eq!(emit(&h), FANO.lines().skip(1).map(|l| format!("{l}\n")).collect::<String>());
        assert_eq!(parse(&emit(&h)).unwrap(), h);
    }

    #[test]
    fn small_edges_allowed() {
        let h = parse("h 3 2\n2\n1 3\n").unwrap();
        assert_eq!(h.m(), 2);
        assert_eq!(emit(&h), "h 3 2\n1 3\n2\n");
    }
}
