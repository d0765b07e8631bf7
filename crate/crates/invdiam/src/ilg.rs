//! The `.ilg` labelled-graph format and the small text files around it.
//!
//! ```text
//! # comment
//! n m
//! u v b      (m lines; 0-based endpoints, b is the label bit)
//! ```
//!
//! Edges may be listed in any order and either orientation; they are stored in
//! canonical order. A graph collection file is a sequence of such records.

use invdiam_core::graph::{Graph, GraphError, Label, Orientation};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} edge lines, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("orientation has {found} bits, graph has {expected} edges")]
    OrientationLength { expected: usize, found: usize },
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn numbers(line: usize, s: &str, want: usize) -> Result<Vec<usize>, FormatError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != want {
        return Err(FormatError::Syntax {
            line,
            msg: format!("expected {want} fields, found {}", parts.len()),
        });
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<usize>().map_err(|_| FormatError::Syntax {
                line,
                msg: format!("not a non-negative integer: {p:?}"),
            })
        })
        .collect()
}

fn parse_records<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
) -> Result<Option<(Graph, Label)>, FormatError> {
    let Some((hl, header)) = lines.next() else {
        return Ok(None);
    };
    let h = numbers(hl, header, 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    let mut bits = Vec::with_capacity(m);
    for found in 0..m {
        let Some((line, s)) = lines.next() else {
            return Err(FormatError::Truncated { expected: m, found });
        };
        let f = numbers(line, s, 3)?;
        if f[2] > 1 {
            return Err(FormatError::Graph {
                line,
                source: GraphError::BadBit(char::from_digit(f[2] as u32 % 10, 10).unwrap_or('?')),
            });
        }
        if f[0] >= n || f[1] >= n {
            return Err(FormatError::Graph {
                line,
                source: GraphError::VertexOutOfRange {
                    vertex: f[0].max(f[1]),
                    n,
                },
            });
        }
        edges.push((f[0], f[1]));
        bits.push((line, f[2] == 1));
    }
    let g = Graph::new(n, edges.iter().copied()).map_err(|source| FormatError::Graph { line: hl, source })?;
    let mut label = Label::zeros(m);
    for (&(u, v), &(_, b)) in edges.iter().zip(&bits) {
        label.set(g.edge_index(u, v).expect("edge was just inserted"), b);
    }
    Ok(Some((g, label)))
}

/// Parses a single labelled graph.
pub fn parse_ilg(text: &str) -> Result<(Graph, Label), FormatError> {
    let mut lines = content_lines(text).peekable();
    let rec = parse_records(&mut lines)?.ok_or(FormatError::Syntax {
        line: 1,
        msg: "empty graph file".into(),
    })?;
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::Syntax {
            line,
            msg: "trailing content after the last edge".into(),
        });
    }
    Ok(rec)
}

/// Parses a collection file: zero or more records back to back.
pub fn parse_ilg_collection(text: &str) -> Result<Vec<(Graph, Label)>, FormatError> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    while let Some(rec) = parse_records(&mut lines)? {
        out.push(rec);
    }
    Ok(out)
}

/// Writes a graph in canonical edge order.
pub fn write_ilg(g: &Graph, label: &Label) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (e, (u, v)) in g.edges().enumerate() {
        s.push_str(&format!("{u} {v} {}\n", label.get(e) as u8));
    }
    s
}

/// An orientation file: one line of `m` binary digits in canonical edge
/// order (comments and blank lines allowed).
pub fn parse_orientation(g: &Graph, text: &str) -> Result<Orientation, FormatError> {
    let mut lines = content_lines(text);
    let (line, s) = lines.next().ok_or(FormatError::Syntax {
        line: 1,
        msg: "empty orientation file".into(),
    })?;
    let o = Orientation::parse(s).map_err(|source| FormatError::Graph { line, source })?;
    if o.len() != g.edge_count() {
        return Err(FormatError::OrientationLength {
            expected: g.edge_count(),
            found: o.len(),
        });
    }
    Ok(o)
}

/// The side file of a family: `v level` per line.
pub fn write_levels(levels: &[usize]) -> String {
    let mut s = String::with_capacity(levels.len() * 8);
    for (v, l) in levels.iter().enumerate() {
        s.push_str(&format!("{v} {l}\n"));
    }
    s
}

pub fn parse_levels(text: &str) -> Result<Vec<usize>, FormatError> {
    let mut out = Vec::new();
    for (line, s) in content_lines(text) {
        let f = numbers(line, s, 2)?;
        if f[0] != out.len() {
            return Err(FormatError::Syntax {
                line,
                msg: format!("expected vertex {}, found {}", out.len(), f[0]),
            });
        }
        out.push(f[1]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_any_edge_order() {
        let (g, l) = parse_ilg("# C4\n4 4\n3 2 1\n0 1 1\n1 2 0\n0 3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(l.to_text(), "1001");
        assert_eq!(write_ilg(&g, &l), "4 4\n0 1 1\n0 3 0\n1 2 0\n2 3 1\n");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_ilg("2 1\n0 1\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(parse_ilg("2 1\n0 2 1\n"), Err(FormatError::Graph { .. })));
        assert!(matches!(parse_ilg("2 1\n0 1 2\n"), Err(FormatError::Graph { .. })));
        assert!(matches!(
            parse_ilg("3 2\n0 1 1\n"),
            Err(FormatError::Truncated { expected: 2, found: 1 })
        ));
        assert!(matches!(
            parse_ilg("2 2\n0 1 1\n1 0 0\n"),
            Err(FormatError::Graph { .. })
        ));
        assert!(parse_ilg("").is_err());
        assert!(parse_ilg("2 1\n0 1 1\n5 5\n").is_err());
    }

    #[test]
    fn collections_and_side_files() {
        let text = "2 1\n0 1 1\n\n# second\n3 0\n";
        let all = parse_ilg_collection(text).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].0.vertex_count(), 3);
        assert!(parse_ilg_collection("").unwrap().is_empty());
        let g = Graph::path(3);
        assert_eq!(parse_orientation(&g, "10\n").unwrap().to_text(), "10");
        assert!(parse_orientation(&g, "101\n").is_err());
        assert_eq!(parse_levels(&write_levels(&[0, 0, 1])).unwrap(), vec![0, 0, 1]);
    }
}
