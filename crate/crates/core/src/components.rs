//! Red components, maximum blue forests inside them, and the blue tree that
//! links the red components together.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, EdgeColor};
use crate::ops::OpCounter;
use crate::partition::{span_pieces, Partition, Pieces, UNSET};

/// Connected components of the red subgraph `(V, E_r)`.
///
/// Components are numbered in discovery order, scanning candidate roots by
/// ascending node index. `members[i]` lists component `i` in BFS order, root
/// first, and `red_forest[i]` holds the BFS tree edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedDecomposition {
    pub label: Vec<usize>,
    pub p: usize,
    pub members: Vec<Vec<usize>>,
    pub red_forest: Vec<Vec<usize>>,
    /// `n - p`: the red edges in any union of spanning trees of the components.
    pub q: usize,
}

impl Pieces for RedDecomposition {
    fn piece_count(&self) -> usize {
        self.p
    }

    #[inline]
    fn piece_of(&self, node: usize) -> usize {
        self.label[node]
    }

    #[inline]
    fn members(&self, piece: usize) -> &[usize] {
        &self.members[piece]
    }
}

/// Maximum blue spanning forests of each `G_i = (V_i, E_b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlueForests {
    /// Per node, a graph-wide id of its blue tree inside its red component.
    pub blue_tree_label: Vec<usize>,
    /// Per red component, blue forest edges in BFS discovery order.
    pub forest_edges: Vec<Vec<usize>>,
    /// `m_i(b) = |forest_edges[i]|`.
    pub m_b_within: Vec<usize>,
    /// `prefix[t] = m_0(b) + ... + m_{t-1}(b)`; length `p + 1`, `prefix[0] = 0`.
    pub prefix: Vec<usize>,
}

impl BlueForests {
    /// Total number of in-component blue forest edges.
    pub fn total(&self) -> usize {
        *self.prefix.last().unwrap_or(&0)
    }
}

/// Blue edges joining the red components into one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkTree {
    pub edge_ids: Vec<usize>,
}

pub fn red_components(g: &BicoloredGraph) -> RedDecomposition {
    red_components_counted(g, &mut OpCounter::new())
}

pub fn red_components_counted(g: &BicoloredGraph, ops: &mut OpCounter) -> RedDecomposition {
    let n = g.n();
    let mut label = vec![UNSET; n];
    let mut members = Vec::new();
    let mut red_forest = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if label[root] != UNSET {
            continue;
        }
        let c = members.len();
        let mut nodes = Vec::new();
        let mut tree = Vec::new();
        label[root] = c;
        queue.push_back(root);
        ops.push();
        while let Some(x) = queue.pop_front() {
            nodes.push(x);
            let nbrs = g.red_neighbors(x);
            ops.scan(nbrs.len());
            for a in nbrs {
                if label[a.node] == UNSET {
                    label[a.node] = c;
                    tree.push(a.edge);
                    queue.push_back(a.node);
                    ops.push();
                }
            }
        }
        members.push(nodes);
        red_forest.push(tree);
    }
    let p = members.len();
    RedDecomposition {
        label,
        p,
        members,
        red_forest,
        q: n - p,
    }
}

pub fn blue_forests_within(g: &BicoloredGraph, d: &RedDecomposition) -> BlueForests {
    blue_forests_within_counted(g, d, &mut OpCounter::new())
}

/// BFS over blue edges that stay inside one red component. Each blue
/// adjacency entry is read once.
pub fn blue_forests_within_counted(
    g: &BicoloredGraph,
    d: &RedDecomposition,
    ops: &mut OpCounter,
) -> BlueForests {
    let mut tree_label = vec![UNSET; g.n()];
    let mut forest_edges = Vec::with_capacity(d.p);
    let mut trees = 0;
    let mut queue = VecDeque::new();
    for (c, nodes) in d.members.iter().enumerate() {
        let mut forest = Vec::new();
        for &root in nodes {
            if tree_label[root] != UNSET {
                continue;
            }
            tree_label[root] = trees;
            queue.push_back(root);
            ops.push();
            while let Some(x) = queue.pop_front() {
                let nbrs = g.blue_neighbors(x);
                ops.scan(nbrs.len());
                for a in nbrs {
                    if d.label[a.node] == c && tree_label[a.node] == UNSET {
                        tree_label[a.node] = trees;
                        forest.push(a.edge);
                        queue.push_back(a.node);
                        ops.push();
                    }
                }
            }
            trees += 1;
        }
        forest_edges.push(forest);
    }
    let m_b_within: Vec<usize> = forest_edges.iter().map(Vec::len).collect();
    let mut prefix = Vec::with_capacity(d.p + 1);
    prefix.push(0);
    for &m in &m_b_within {
        prefix.push(prefix.last().unwrap() + m);
    }
    BlueForests {
        blue_tree_label: tree_label,
        forest_edges,
        m_b_within,
        prefix,
    }
}

pub fn blue_link_tree(g: &BicoloredGraph, d: &RedDecomposition) -> Result<LinkTree> {
    blue_link_tree_counted(g, d, &mut OpCounter::new())
}

/// Spanning tree of the graph with every red component contracted, built
/// from blue edges without materializing the contracted graph.
pub fn blue_link_tree_counted(
    g: &BicoloredGraph,
    d: &RedDecomposition,
    ops: &mut OpCounter,
) -> Result<LinkTree> {
    if d.p == 0 {
        return Ok(LinkTree { edge_ids: vec![] });
    }
    let edge_ids = span_pieces(g, d, EdgeColor::Blue, std::iter::once(0), ops);
    if edge_ids.len() + 1 < d.p {
        return Err(Error::GraphDisconnected);
    }
    Ok(LinkTree { edge_ids })
}

/// Connected components of the blue subgraph `(V, E_b)`.
pub(crate) fn blue_components_counted(g: &BicoloredGraph, ops: &mut OpCounter) -> Partition {
    let n = g.n();
    let mut label = vec![UNSET; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for root in 0..n {
        if label[root] != UNSET {
            continue;
        }
        label[root] = count;
        queue.push_back(root);
        ops.push();
        while let Some(x) = queue.pop_front() {
            let nbrs = g.blue_neighbors(x);
            ops.scan(nbrs.len());
            for a in nbrs {
                if label[a.node] == UNSET {
                    label[a.node] = count;
                    queue.push_back(a.node);
                    ops.push();
                }
            }
        }
        count += 1;
    }
    Partition::from_labels(label, count)
}

/// Number of connected components of `(V, E_b)`.
pub fn blue_component_count(g: &BicoloredGraph) -> usize {
    blue_components_counted(g, &mut OpCounter::new()).piece_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeColor::{Blue as B, Red as R};

    fn triangle() -> BicoloredGraph {
        BicoloredGraph::new(3, [(0, 1, R), (1, 2, R), (0, 2, B)]).unwrap()
    }

    fn k4() -> BicoloredGraph {
        BicoloredGraph::new(
            4,
            [
                (0, 1, R),
                (1, 2, R),
                (2, 3, R),
                (0, 3, B),
                (0, 2, B),
                (1, 3, B),
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle_single_component() {
        let g = triangle();
        let d = red_components(&g);
        assert_eq!((d.p, d.q), (1, 2));
        assert_eq!(d.red_forest[0].len(), 2);
        let bf = blue_forests_within(&g, &d);
        assert_eq!(bf.m_b_within, vec![1]);
        assert_eq!(bf.prefix, vec![0, 1]);
        assert!(blue_link_tree(&g, &d).unwrap().edge_ids.is_empty());
    }

    #[test]
    fn no_red_edges_gives_singletons() {
        let g = BicoloredGraph::new(4, [(0, 1, B), (1, 2, B), (2, 3, B)]).unwrap();
        let d = red_components(&g);
        assert_eq!((d.p, d.q), (4, 0));
        assert!(d.red_forest.iter().all(Vec::is_empty));
        let link = blue_link_tree(&g, &d).unwrap();
        assert_eq!(link.edge_ids.len(), 3);
    }

    #[test]
    fn two_components_joined_by_blue() {
        let g = BicoloredGraph::new(4, [(0, 1, R), (2, 3, R), (1, 2, B)]).unwrap();
        let d = red_components(&g);
        assert_eq!((d.p, d.q), (2, 2));
        assert_eq!(d.label, vec![0, 0, 1, 1]);
        let bf = blue_forests_within(&g, &d);
        assert_eq!(bf.m_b_within, vec![0, 0]);
        assert_eq!(blue_link_tree(&g, &d).unwrap().edge_ids, vec![2]);
    }

    #[test]
    fn k4_blue_spans_component() {
        let g = k4();
        let d = red_components(&g);
        let bf = blue_forests_within(&g, &d);
        assert_eq!(bf.m_b_within, vec![3]);
        assert_eq!(bf.forest_edges[0], vec![3, 4, 5]);
        // One blue tree covering all four nodes.
        assert!(bf
            .blue_tree_label
            .iter()
            .all(|&t| t == bf.blue_tree_label[0]));
    }

    #[test]
    fn link_tree_on_contracted_triangle() {
        // Red pairs {0,1}, {2,3}, {4,5}; the contracted graph is a 3-cycle.
        let g = BicoloredGraph::new(
            6,
            [
                (0, 1, R),
                (2, 3, R),
                (4, 5, R),
                (1, 2, B),
                (3, 4, B),
                (0, 5, B),
            ],
        )
        .unwrap();
        let d = red_components(&g);
        let link = blue_link_tree(&g, &d).unwrap();
        assert_eq!(link.edge_ids.len(), 2);
        let mut touched: Vec<_> = link
            .edge_ids
            .iter()
            .flat_map(|&e| [d.label[g.edge(e).u], d.label[g.edge(e).v]])
            .collect();
        touched.sort_unstable();
        touched.dedup();
        assert_eq!(touched, vec![0, 1, 2]);
        // Component 0 is scanned node 0 first, so 0-5 is found before 1-2.
        assert_eq!(link.edge_ids, vec![5, 3]);
    }

    #[test]
    fn disconnected_link_tree_fails() {
        let g = BicoloredGraph::new(4, [(0, 1, R), (2, 3, R)]).unwrap();
        let d = red_components(&g);
        assert!(matches!(
            blue_link_tree(&g, &d),
            Err(Error::GraphDisconnected)
        ));
    }

    #[test]
    fn blue_component_counts() {
        assert_eq!(blue_component_count(&triangle()), 2);
        assert_eq!(blue_component_count(&k4()), 1);
    }
}
