//! Immutable red/blue edge-colored multigraph.
//!
//! Each node keeps two adjacency lists, one per color, so that a search over
//! red edges never touches a blue entry and vice versa. Both lists are stored
//! in compressed form (one offset array plus one flat entry array per color).

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    Red,
    Blue,
}

impl EdgeColor {
    pub fn other(self) -> Self {
        match self {
            EdgeColor::Red => EdgeColor::Blue,
            EdgeColor::Blue => EdgeColor::Red,
        }
    }

    /// Single-letter token used by the text format.
    pub fn as_char(self) -> char {
        match self {
            EdgeColor::Red => 'r',
            EdgeColor::Blue => 'b',
        }
    }

    pub fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "r" | "R" => Some(EdgeColor::Red),
            "b" | "B" => Some(EdgeColor::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub color: EdgeColor,
}

impl Edge {
    /// The endpoint opposite `x`.
    #[inline]
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// One adjacency entry: the neighbor and the edge that reaches it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Adjacent {
    pub node: usize,
    pub edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency {
    offsets: Vec<usize>,
    entries: Vec<Adjacent>,
}

impl Adjacency {
    fn build(n: usize, edges: &[Edge], color: EdgeColor) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for e in edges.iter().filter(|e| e.color == color) {
            offsets[e.u + 1] += 1;
            offsets[e.v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut entries = vec![Adjacent { node: 0, edge: 0 }; offsets[n]];
        // Stable fill keeps every list in edge-id order.
        for e in edges.iter().filter(|e| e.color == color) {
            entries[cursor[e.u]] = Adjacent {
                node: e.v,
                edge: e.id,
            };
            cursor[e.u] += 1;
            entries[cursor[e.v]] = Adjacent {
                node: e.u,
                edge: e.id,
            };
            cursor[e.v] += 1;
        }
        Adjacency { offsets, entries }
    }

    #[inline]
    fn of(&self, u: usize) -> &[Adjacent] {
        &self.entries[self.offsets[u]..self.offsets[u + 1]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicoloredGraph {
    n: usize,
    edges: Vec<Edge>,
    red: Adjacency,
    blue: Adjacency,
    m_r: usize,
}

impl BicoloredGraph {
    /// Builds a graph on nodes `0..n`. Edge ids follow input order.
    ///
    /// Parallel edges are kept; self-loops and out-of-range endpoints are
    /// rejected with the index of the offending edge.
    pub fn new<I>(n: usize, raw_edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, EdgeColor)>,
    {
        let raw_edges = raw_edges.into_iter();
        let mut edges = Vec::with_capacity(raw_edges.size_hint().0);
        let mut m_r = 0;
        for (id, (u, v, color)) in raw_edges.enumerate() {
            if u >= n || v >= n {
                return Err(Error::NodeOutOfRange { edge: id, n });
            }
            if u == v {
                return Err(Error::SelfLoop { edge: id });
            }
            if color == EdgeColor::Red {
                m_r += 1;
            }
            edges.push(Edge { id, u, v, color });
        }
        let red = Adjacency::build(n, &edges, EdgeColor::Red);
        let blue = Adjacency::build(n, &edges, EdgeColor::Blue);
        Ok(BicoloredGraph {
            n,
            edges,
            red,
            blue,
            m_r,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn m_red(&self) -> usize {
        self.m_r
    }

    pub fn m_blue(&self) -> usize {
        self.edges.len() - self.m_r
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    #[inline]
    pub fn neighbors(&self, u: usize, color: EdgeColor) -> &[Adjacent] {
        match color {
            EdgeColor::Red => self.red.of(u),
            EdgeColor::Blue => self.blue.of(u),
        }
    }

    #[inline]
    pub fn red_neighbors(&self, u: usize) -> &[Adjacent] {
        self.red.of(u)
    }

    #[inline]
    pub fn blue_neighbors(&self, u: usize) -> &[Adjacent] {
        self.blue.of(u)
    }

    /// Number of red edges among `edge_ids`.
    pub fn red_count(&self, edge_ids: &[usize]) -> usize {
        edge_ids
            .iter()
            .filter(|&&e| self.edges[e].color == EdgeColor::Red)
            .count()
    }

    /// One BFS over both colors. Graphs with zero or one node are connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for a in self.red.of(x).iter().chain(self.blue.of(x)) {
                if !seen[a.node] {
                    seen[a.node] = true;
                    reached += 1;
                    queue.push_back(a.node);
                }
            }
        }
        reached == self.n
    }
}

/// A spanning tree given by edge ids, with its red-edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub edge_ids: Vec<usize>,
    pub red_count: usize,
}

impl SpanningTree {
    pub fn from_edges(g: &BicoloredGraph, edge_ids: Vec<usize>) -> Self {
        let red_count = g.red_count(&edge_ids);
        SpanningTree {
            edge_ids,
            red_count,
        }
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn blue_count(&self) -> usize {
        self.edge_ids.len() - self.red_count
    }
}
