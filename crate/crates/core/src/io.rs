//! Text edge-list format and the independent tree checker.
//!
//! ```text
//! # comment
//! n m
//! u v c      (m lines, c is r or b, nodes 0-indexed)
//! ```
//!
//! Tree files use the edge lines alone, as printed by `write_tree`.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, ParseReason, Result};
use crate::graph::{BicoloredGraph, EdgeColor};
use crate::union_find::UnionFind;

/// Content lines with their 1-based line numbers; blanks and `#` comments
/// are dropped.
fn content_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::Io(e))),
            Ok(line) => {
                let t = line.trim();
                (!t.is_empty() && !t.starts_with('#')).then(|| Ok((i + 1, t.to_owned())))
            }
        })
}

fn parse_err(line: usize, reason: ParseReason) -> Error {
    Error::Parse { line, reason }
}

fn parse_int(line: usize, tok: &str) -> Result<i64> {
    tok.parse::<i64>()
        .map_err(|_| parse_err(line, ParseReason::BadInteger(tok.to_owned())))
}

fn parse_edge_line(line: usize, text: &str, n: usize) -> Result<(usize, usize, EdgeColor)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_err(
            line,
            ParseReason::FieldCount {
                expected: 3,
                found: fields.len(),
            },
        ));
    }
    let mut ends = [0usize; 2];
    for (slot, tok) in ends.iter_mut().zip(&fields[..2]) {
        let node = parse_int(line, tok)?;
        if node < 0 || node as u64 >= n as u64 {
            return Err(parse_err(line, ParseReason::NodeOutOfRange { node, n }));
        }
        *slot = node as usize;
    }
    let color = EdgeColor::from_token(fields[2])
        .ok_or_else(|| parse_err(line, ParseReason::BadColor(fields[2].to_owned())))?;
    if ends[0] == ends[1] {
        return Err(parse_err(line, ParseReason::SelfLoop));
    }
    Ok((ends[0], ends[1], color))
}

pub fn parse_graph<R: BufRead>(reader: R) -> Result<BicoloredGraph> {
    let mut lines = content_lines(reader);
    let (header_line, header) = match lines.next() {
        Some(line) => line?,
        None => return Err(parse_err(1, ParseReason::MissingHeader)),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        [n, m] => match (n.parse::<usize>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(parse_err(header_line, ParseReason::BadHeader)),
        },
        _ => return Err(parse_err(header_line, ParseReason::BadHeader)),
    };

    let mut raw = Vec::with_capacity(m.min(1 << 24));
    let mut last_line = header_line;
    let mut first_extra = None;
    let mut found = 0;
    for line in lines {
        let (no, text) = line?;
        last_line = no;
        found += 1;
        if found > m {
            first_extra.get_or_insert(no);
            continue;
        }
        raw.push(parse_edge_line(no, &text, n)?);
    }
    if found != m {
        return Err(parse_err(
            first_extra.unwrap_or(last_line + 1),
            ParseReason::CountMismatch { expected: m, found },
        ));
    }
    BicoloredGraph::new(n, raw)
}

pub fn parse_graph_str(text: &str) -> Result<BicoloredGraph> {
    parse_graph(text.as_bytes())
}

pub fn write_graph<W: Write>(g: &BicoloredGraph, mut w: W) -> std::io::Result<()> {
    writeln!(w, "{} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(w, "{} {} {}", e.u, e.v, e.color)?;
    }
    Ok(())
}

/// One `u v c` line per tree edge, in the given order.
pub fn write_tree<W: Write>(
    g: &BicoloredGraph,
    edge_ids: &[usize],
    mut w: W,
) -> std::io::Result<()> {
    for &id in edge_ids {
        let e = g.edge(id);
        writeln!(w, "{} {} {}", e.u, e.v, e.color)?;
    }
    Ok(())
}

/// Maps `u v c` lines back to edge ids of `g`.
///
/// Parallel edges are matched to the lowest unused id with the same
/// endpoints and color.
pub fn parse_tree_edges<R: BufRead>(g: &BicoloredGraph, reader: R) -> Result<Vec<usize>> {
    let mut pool: HashMap<(usize, usize, EdgeColor), Vec<usize>> = HashMap::new();
    for e in g.edges().iter().rev() {
        pool.entry((e.u.min(e.v), e.u.max(e.v), e.color))
            .or_default()
            .push(e.id);
    }
    let mut ids = Vec::new();
    for line in content_lines(reader) {
        let (no, text) = line?;
        let (u, v, color) = parse_edge_line(no, &text, g.n())?;
        let id = pool
            .get_mut(&(u.min(v), u.max(v), color))
            .and_then(Vec::pop)
            .ok_or_else(|| parse_err(no, ParseReason::UnknownEdge { u, v }))?;
        ids.push(id);
    }
    Ok(ids)
}

/// Why a candidate edge set is not a spanning tree with `k` red edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeDefect {
    WrongSize { expected: usize, found: usize },
    UnknownEdge { id: usize },
    Cyclic { edge: usize },
    NotSpanning { components: usize },
    WrongRedCount { expected: usize, found: usize },
}

impl TreeDefect {
    /// Short reason code.
    pub fn code(&self) -> &'static str {
        match self {
            TreeDefect::WrongSize { .. } => "WrongSize",
            TreeDefect::UnknownEdge { .. } => "UnknownEdge",
            TreeDefect::Cyclic { .. } => "Cyclic",
            TreeDefect::NotSpanning { .. } => "NotSpanning",
            TreeDefect::WrongRedCount { .. } => "WrongRedCount",
        }
    }
}

impl fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDefect::WrongSize { expected, found } => {
                write!(f, "WrongSize: expected {expected} edges, found {found}")
            }
            TreeDefect::UnknownEdge { id } => write!(f, "UnknownEdge: no edge with id {id}"),
            TreeDefect::Cyclic { edge } => write!(f, "Cyclic: edge {edge} closes a cycle"),
            TreeDefect::NotSpanning { components } => {
                write!(f, "NotSpanning: {components} components remain")
            }
            TreeDefect::WrongRedCount { expected, found } => {
                write!(
                    f,
                    "WrongRedCount: expected {expected} red edges, found {found}"
                )
            }
        }
    }
}

impl std::error::Error for TreeDefect {}

/// Checks that `edge_ids` is a spanning tree of `g` with exactly `k` red
/// edges. Uses union-find, independent of the BFS-based builders.
pub fn verify_tree(g: &BicoloredGraph, edge_ids: &[usize], k: usize) -> Result<(), TreeDefect> {
    let expected = g.n().saturating_sub(1);
    if edge_ids.len() != expected {
        return Err(TreeDefect::WrongSize {
            expected,
            found: edge_ids.len(),
        });
    }
    let mut uf = UnionFind::new(g.n());
    let mut red = 0;
    for &id in edge_ids {
        if id >= g.m() {
            return Err(TreeDefect::UnknownEdge { id });
        }
        let e = g.edge(id);
        if !uf.union(e.u, e.v) {
            return Err(TreeDefect::Cyclic { edge: id });
        }
        if e.color == EdgeColor::Red {
            red += 1;
        }
    }
    if g.n() > 0 && uf.sets() != 1 {
        return Err(TreeDefect::NotSpanning {
            components: uf.sets(),
        });
    }
    if red != k {
        return Err(TreeDefect::WrongRedCount {
            expected: k,
            found: red,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "3 3\n0 1 r\n1 2 r\n0 2 b\n";

    #[test]
    fn parses_triangle() {
        let g = parse_graph_str(TRIANGLE).unwrap();
        assert_eq!((g.n(), g.m_red(), g.m_blue()), (3, 2, 1));
    }

    #[test]
    fn skips_comments_and_blanks() {
        let g = parse_graph_str("# tri\n\n3 3\n0 1 r\n  # mid\n1 2 R\n0 2 b\n").unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn self_loop_reports_line() {
        let err = parse_graph_str("2 1\n0 0 r\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 2,
                reason: ParseReason::SelfLoop
            }
        ));
    }

    #[test]
    fn too_few_edges() {
        let err = parse_graph_str("2 2\n0 1 r\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                reason: ParseReason::CountMismatch {
                    expected: 2,
                    found: 1
                },
                ..
            }
        ));
        assert!(err.to_string().contains("expected 2 edges, found 1"));
    }

    #[test]
    fn too_many_edges() {
        let err = parse_graph_str("2 1\n0 1 r\n0 1 b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn bad_tokens() {
        let cases = [
            ("", ParseReason::MissingHeader),
            ("3\n", ParseReason::BadHeader),
            ("2 1\n0 1 g\n", ParseReason::BadColor("g".into())),
            ("2 1\n0 x r\n", ParseReason::BadInteger("x".into())),
            (
                "2 1\n0 1\n",
                ParseReason::FieldCount {
                    expected: 3,
                    found: 2,
                },
            ),
            (
                "2 1\n0 -1 r\n",
                ParseReason::NodeOutOfRange { node: -1, n: 2 },
            ),
            (
                "2 1\n0 2 r\n",
                ParseReason::NodeOutOfRange { node: 2, n: 2 },
            ),
        ];
        for (text, want) in cases {
            match parse_graph_str(text) {
                Err(Error::Parse { reason, .. }) => assert_eq!(reason, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn verify_examples() {
        let g = parse_graph_str(TRIANGLE).unwrap();
        assert_eq!(verify_tree(&g, &[0, 1], 2), Ok(()));
        assert_eq!(
            verify_tree(&g, &[0, 1], 1).unwrap_err().code(),
            "WrongRedCount"
        );
        assert_eq!(verify_tree(&g, &[0], 1).unwrap_err().code(), "WrongSize");
        assert_eq!(verify_tree(&g, &[0, 0], 2).unwrap_err().code(), "Cyclic");
        assert_eq!(
            verify_tree(&g, &[0, 7], 2).unwrap_err().code(),
            "UnknownEdge"
        );
    }

    #[test]
    fn tree_lines_map_to_ids() {
        let g = parse_graph_str("2 2\n0 1 r\n1 0 r\n").unwrap();
        let ids = parse_tree_edges(&g, "1 0 r\n".as_bytes()).unwrap();
        assert_eq!(ids, vec![0]);
        let ids = parse_tree_edges(&g, "0 1 r\n0 1 r\n".as_bytes()).unwrap();
        assert_eq!(ids, vec![0, 1]);
        assert!(parse_tree_edges(&g, "0 1 b\n".as_bytes()).is_err());
    }

    #[test]
    fn write_then_read() {
        let g = parse_graph_str(TRIANGLE).unwrap();
        let mut out = Vec::new();
        write_graph(&g, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), TRIANGLE);
    }
}
