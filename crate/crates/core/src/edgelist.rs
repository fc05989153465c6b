//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines, only before the header
//! graph undirected 4 4
//! 0 1
//! 0 3
//! 1 2
//! 2 3
//! ```
//!
//! Ids are 0-based decimals separated by exactly one space; lines end in LF.
//! The writer emits edges in the graph's canonical order, so output is
//! byte-stable.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::with_capacity(16 + 8 * g.m());
    let kind = if g.is_directed() { "directed" } else { "undirected" };
    let _ = writeln!(s, "graph {kind} {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let mut header = None;
    for (no, line) in lines.by_ref() {
        if line.contains('\r') {
            return Err(err(no, "CR found; line endings must be LF".into()));
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        header = Some((no, line));
        break;
    }
    let (hno, hline) = header.ok_or_else(|| err(1, "missing `graph` header".into()))?;
    let fields: Vec<&str> = hline.split(' ').collect();
    let [tag, kind, n, m] = fields[..] else {
        return Err(err(hno, format!("expected `graph <undirected|directed> <n> <m>`, got `{hline}`")));
    };
    if tag != "graph" {
        return Err(err(hno, format!("expected `graph` header, got `{tag}`")));
    }
    let directed = match kind {
        "directed" => true,
        "undirected" => false,
        other => return Err(err(hno, format!("unknown graph kind `{other}`"))),
    };
    let n = parse_id(n).ok_or_else(|| err(hno, format!("bad vertex count `{n}`")))?;
    let m = parse_id(m).ok_or_else(|| err(hno, format!("bad edge count `{m}`")))?;

    let mut edges = Vec::with_capacity(m);
    let mut last = hno;
    for (no, line) in lines {
        last = no;
        if line.contains('\r') {
            return Err(err(no, "CR found; line endings must be LF".into()));
        }
        if line.is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(err(no, format!("more than the declared {m} edges")));
        }
        let (u, v) = line
            .split_once(' ')
            .and_then(|(u, v)| Some((parse_id(u)?, parse_id(v)?)))
            .ok_or_else(|| err(no, format!("expected `<u> <v>`, got `{line}`")))?;
        edges.push((u, v, no));
    }
    if edges.len() != m {
        return Err(err(last, format!("declared {m} edges, found {}", edges.len())));
    }
    let pairs: Vec<_> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::new(n, directed, &pairs).map_err(|e| {
        let line = match &e {
            Error::VertexOutOfRange { u, v, .. }
            | Error::DuplicateEdge { u, v } => edges
                .iter()
                .rev()
                .find(|&&(a, b, _)| (a, b) == (*u, *v))
                .map(|&(_, _, l)| l),
            Error::UndirectedSelfLoop { v } => {
                edges.iter().find(|&&(a, b, _)| a == *v && b == *v).map(|&(_, _, l)| l)
            }
            _ => None,
        };
        match line {
            Some(line) => Error::Parse { line, message: e.to_string() },
            None => e,
        }
    })
}

fn parse_id(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_canonical_form() {
        let g = Graph::undirected(4, &[(3, 0), (1, 0), (2, 1), (3, 2)]).unwrap();
        assert_eq!(write_edge_list(&g), "graph undirected 4 4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn reads_comments_before_header() {
        let g = parse_edge_list("# a loop\n\ngraph directed 1 1\n0 0\n").unwrap();
        assert!(g.is_directed());
        assert_eq!(g.edges(), &[(0, 0)]);
    }

    #[test]
    fn missing_final_newline_is_fine() {
        let g = parse_edge_list("graph undirected 2 1\n0 1").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_edge_list("graph undirected 3 2\n0 1\n1  2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_edge_list("graph undirected 3 2\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_edge_list("graph undirected 3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_edge_list("graph undirected 3 1\r\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e:?}");
        let e = parse_edge_list("graph undirected 3 1\n# late comment\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = parse_edge_list("graph undirected 3 2\n0 1\n2 9\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_edge_list("graph mixed 3 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e:?}");
    }
}
