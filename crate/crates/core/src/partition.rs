//! Node partitions and searches over contracted pieces.
//!
//! Contracting a set of nodes never rewrites adjacency lists. A search that
//! reaches a piece enqueues every member of it, so the piece's lists are
//! scanned one after another as if they had been merged.

use std::collections::VecDeque;

use crate::graph::{BicoloredGraph, EdgeColor};
use crate::ops::OpCounter;

pub(crate) const UNSET: usize = usize::MAX;

/// Anything that assigns each node to a numbered piece and lists the members
/// of each piece.
pub(crate) trait Pieces {
    fn piece_count(&self) -> usize;
    fn piece_of(&self, node: usize) -> usize;
    fn members(&self, piece: usize) -> &[usize];
}

/// Partition stored as node labels plus members grouped by piece.
#[derive(Debug, Clone)]
pub(crate) struct Partition {
    of: Vec<usize>,
    offsets: Vec<usize>,
    nodes: Vec<usize>,
}

impl Partition {
    /// Groups nodes by label with a counting sort; members ascend by node.
    pub(crate) fn from_labels(of: Vec<usize>, count: usize) -> Self {
        let mut offsets = vec![0usize; count + 1];
        for &l in &of {
            offsets[l + 1] += 1;
        }
        for i in 0..count {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut nodes = vec![0; of.len()];
        for (x, &l) in of.iter().enumerate() {
            nodes[cursor[l]] = x;
            cursor[l] += 1;
        }
        Partition { of, offsets, nodes }
    }
}

impl Pieces for Partition {
    fn piece_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    fn piece_of(&self, node: usize) -> usize {
        self.of[node]
    }

    #[inline]
    fn members(&self, piece: usize) -> &[usize] {
        &self.nodes[self.offsets[piece]..self.offsets[piece + 1]]
    }
}

/// Labels the connected components of the spanning subgraph `(V, edge_ids)`.
///
/// Costs O(n + |edge_ids|).
pub(crate) fn forest_partition(
    g: &BicoloredGraph,
    edge_ids: &[usize],
    ops: &mut OpCounter,
) -> Partition {
    let n = g.n();
    let mut offsets = vec![0usize; n + 1];
    for &e in edge_ids {
        let edge = g.edge(e);
        offsets[edge.u + 1] += 1;
        offsets[edge.v + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut cursor = offsets.clone();
    let mut adj = vec![0usize; offsets[n]];
    for &e in edge_ids {
        let edge = g.edge(e);
        adj[cursor[edge.u]] = edge.v;
        cursor[edge.u] += 1;
        adj[cursor[edge.v]] = edge.u;
        cursor[edge.v] += 1;
    }

    let mut of = vec![UNSET; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for root in 0..n {
        if of[root] != UNSET {
            continue;
        }
        of[root] = count;
        queue.push_back(root);
        ops.push();
        while let Some(x) = queue.pop_front() {
            let nbrs = &adj[offsets[x]..offsets[x + 1]];
            ops.scan(nbrs.len());
            for &w in nbrs {
                if of[w] == UNSET {
                    of[w] = count;
                    queue.push_back(w);
                    ops.push();
                }
            }
        }
        count += 1;
    }
    Partition::from_labels(of, count)
}

/// Spanning forest of the graph obtained by contracting every piece, using
/// only edges of `color`.
///
/// Searches start from `roots` in order, skipping roots whose piece was
/// already reached. Pieces are marked, not nodes, so a piece is entered at
/// most once and every adjacency entry of a reached node is read at most once.
/// Returned edges are in discovery order.
pub(crate) fn span_pieces<P, I>(
    g: &BicoloredGraph,
    pieces: &P,
    color: EdgeColor,
    roots: I,
    ops: &mut OpCounter,
) -> Vec<usize>
where
    P: Pieces + ?Sized,
    I: IntoIterator<Item = usize>,
{
    let mut reached = vec![false; pieces.piece_count()];
    let mut queue = VecDeque::new();
    let mut linking = Vec::new();
    for root in roots {
        let start = pieces.piece_of(root);
        if reached[start] {
            continue;
        }
        reached[start] = true;
        enqueue_members(pieces, start, &mut queue, ops);
        while let Some(x) = queue.pop_front() {
            let nbrs = g.neighbors(x, color);
            ops.scan(nbrs.len());
            for a in nbrs {
                let target = pieces.piece_of(a.node);
                if !reached[target] {
                    reached[target] = true;
                    linking.push(a.edge);
                    enqueue_members(pieces, target, &mut queue, ops);
                }
            }
        }
    }
    linking
}

fn enqueue_members<P: Pieces + ?Sized>(
    pieces: &P,
    piece: usize,
    queue: &mut VecDeque<usize>,
    ops: &mut OpCounter,
) {
    for &x in pieces.members(piece) {
        queue.push_back(x);
        ops.push();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeColor::{Blue as B, Red as R};

    #[test]
    fn groups_members_by_label() {
        let p = Partition::from_labels(vec![1, 0, 1, 2, 0], 3);
        assert_eq!(p.piece_count(), 3);
        assert_eq!(p.members(0), &[1, 4]);
        assert_eq!(p.members(1), &[0, 2]);
        assert_eq!(p.members(2), &[3]);
    }

    #[test]
    fn forest_partition_labels_components() {
        let g = BicoloredGraph::new(5, [(0, 1, R), (3, 4, B), (1, 2, B)]).unwrap();
        let mut ops = OpCounter::new();
        let p = forest_partition(&g, &[0, 1], &mut ops);
        assert_eq!(p.piece_count(), 3);
        assert_eq!(p.piece_of(0), p.piece_of(1));
        assert_eq!(p.piece_of(3), p.piece_of(4));
        assert_ne!(p.piece_of(2), p.piece_of(0));
    }

    #[test]
    fn span_contracted_path() {
        // Pieces {0,1} and {2,3}; only blue edge 1-2 crosses.
        let g = BicoloredGraph::new(4, [(0, 1, R), (2, 3, R), (1, 2, B), (0, 3, R)]).unwrap();
        let p = Partition::from_labels(vec![0, 0, 1, 1], 2);
        let mut ops = OpCounter::new();
        assert_eq!(span_pieces(&g, &p, B, 0..4, &mut ops), vec![2]);
        assert_eq!(span_pieces(&g, &p, R, 0..4, &mut ops), vec![3]);
    }
}
