//! Plain-text file formats.
//!
//! Graph: a header line `n e`, then `e` lines `u v` with 0-based vertices.
//! Blank lines and lines starting with `#` are ignored.
//!
//! Embedding: line `v` lists the neighbours of `v` in cyclic order. An
//! optional line `signs` follows, then one line `u v` per negative edge.
//!
//! Lists: line `v` holds the colours of vertex `v`, space separated. An
//! empty line is an empty list.
//!
//! Writers emit a canonical form, so writing a parsed canonical file gives
//! back the same bytes.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::embedding::RotationEmbedding;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is with the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn numbers<T: std::str::FromStr>(line_no: usize, text: &str) -> Result<Vec<T>, ParseError> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| err(line_no, format!("expected a number, found {tok:?}"))))
        .collect()
}

fn pair(line_no: usize, text: &str) -> Result<(usize, usize), ParseError> {
    match numbers::<usize>(line_no, text)?[..] {
        [u, v] => Ok((u, v)),
        _ => Err(err(line_no, "expected two numbers")),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("write to string");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing header line \"n e\""))?;
    let (n, e) = pair(hline, header)?;
    let mut g = Graph::empty(n).map_err(|x| err(hline, x.to_string()))?;
    let mut count = 0;
    for (no, line) in lines {
        let (u, v) = pair(no, line)?;
        g.add_edge(u, v).map_err(|x| err(no, x.to_string()))?;
        count += 1;
    }
    if count != e {
        return Err(err(hline, format!("header announces {e} edges, file has {count}")));
    }
    Ok(g)
}

pub fn write_embedding(emb: &RotationEmbedding) -> String {
    let mut out = String::new();
    for r in emb.rotations() {
        let row: Vec<String> = r.iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("signs\n");
    for (u, v) in emb.negative_edges() {
        writeln!(out, "{u} {v}").expect("write to string");
    }
    out
}

pub fn parse_embedding(text: &str) -> Result<RotationEmbedding, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let split = lines.iter().position(|l| l.trim() == "signs").unwrap_or(lines.len());
    let mut rotations = Vec::with_capacity(split);
    for (i, line) in lines[..split].iter().enumerate() {
        rotations.push(numbers::<usize>(i + 1, line)?);
    }
    let n = rotations.len();
    let mut edges = Vec::new();
    for (v, r) in rotations.iter().enumerate() {
        for &w in r {
            if w >= n {
                return Err(err(v + 1, format!("neighbour {w} out of range for {n} vertices")));
            }
            if v < w {
                edges.push((v, w));
            }
        }
    }
    let graph = Graph::from_edges(n, edges).map_err(|x| err(0, x.to_string()))?;
    let mut negative = Vec::new();
    for (i, line) in lines.iter().enumerate().skip(split + 1) {
        if line.trim().is_empty() {
            continue;
        }
        let (u, v) = pair(i + 1, line)?;
        if !graph.has_edge(u, v) {
            return Err(err(i + 1, format!("signed pair {u} {v} is not an edge")));
        }
        negative.push((u, v));
    }
    RotationEmbedding::new(graph, rotations, negative).map_err(|x| err(0, x.to_string()))
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    for l in lists.lists() {
        let row: Vec<String> = l.iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_lists(text: &str) -> Result<ListAssignment, ParseError> {
    let lists = text
        .lines()
        .enumerate()
        .map(|(i, l)| numbers::<Color>(i + 1, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ListAssignment::new(lists))
}

/// One line per vertex: its colour, or `-` when uncoloured.
pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for col in c.colors() {
        match col {
            Some(x) => writeln!(out, "{x}"),
            None => writeln!(out, "-"),
        }
        .expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(parse_graph("# c\n\n2 1\n1 0\n").unwrap(), Graph::path(2).unwrap());
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(parse_graph("").unwrap_err().line, 0);
        assert_eq!(parse_graph("3 1\n0 x\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("3 2\n0 1\n0 1\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("3 2\n0 1\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("3 1\n\n0 3\n").unwrap_err().line, 3);
    }

    #[test]
    fn embedding_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let rot = (0..5).map(|v| vec![(v + 4) % 5, (v + 1) % 5]).collect();
        let emb = RotationEmbedding::new(g, rot, [(0, 1)]).unwrap();
        let text = write_embedding(&emb);
        assert_eq!(text, "4 1\n0 2\n1 3\n2 4\n3 0\nsigns\n0 1\n");
        let back = parse_embedding(&text).unwrap();
        assert_eq!(back, emb);
        assert_eq!(write_embedding(&back), text);
        assert_eq!(parse_embedding("1\n0 2\n1\n").unwrap().euler_genus(), 0);
    }

    #[test]
    fn embedding_errors() {
        assert_eq!(parse_embedding("1\n0 5\n").unwrap_err().line, 2);
        assert_eq!(parse_embedding("1\n0\nsigns\n0 2\n").unwrap_err().line, 4);
        assert!(parse_embedding("1\n\n").is_err());
    }

    #[test]
    fn lists_round_trip() {
        let l = ListAssignment::new(vec![vec![2, 0], vec![], vec![7]]);
        let text = write_lists(&l);
        assert_eq!(text, "0 2\n\n7\n");
        assert_eq!(parse_lists(&text).unwrap(), l);
        assert_eq!(parse_lists("1\n2 a\n").unwrap_err().line, 2);
    }
}
