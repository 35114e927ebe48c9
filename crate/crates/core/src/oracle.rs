//! Reference algorithms for validating the linear-time code: two-bucket
//! Kruskal, the exchange-based k-red construction, and brute-force
//! enumeration of spanning trees.
//!
//! None of this is meant to be fast. The exchange method re-roots the tree
//! after every swap and walks the cycle naively, so it needs O(n) work per
//! exchange and O(n^2) overall.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, EdgeColor, SpanningTree};
use crate::kred::Sense;
use crate::ops::OpCounter;
use crate::partition::UNSET;
use crate::union_find::{RollbackUnionFind, UnionFind};

/// Largest edge count `enumerate_feasible` accepts.
pub const ENUMERATION_LIMIT: usize = 24;

/// Kruskal with two weight buckets, each scanned in edge-id order.
///
/// `Minimize` takes every `zero_color` edge it can before any other edge;
/// `Maximize` does the reverse.
pub fn kruskal_binary(
    g: &BicoloredGraph,
    sense: Sense,
    zero_color: EdgeColor,
) -> Result<SpanningTree> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let first = match sense {
        Sense::Minimize => zero_color,
        Sense::Maximize => zero_color.other(),
    };
    let mut uf = UnionFind::new(g.n());
    let mut edge_ids = Vec::with_capacity(g.n() - 1);
    for color in [first, first.other()] {
        for e in g.edges().iter().filter(|e| e.color == color) {
            if uf.union(e.u, e.v) {
                edge_ids.push(e.id);
            }
        }
    }
    if uf.sets() != 1 {
        return Err(Error::GraphDisconnected);
    }
    Ok(SpanningTree::from_edges(g, edge_ids))
}

/// Weight of `tree` when `zero_color` edges weigh 0 and the rest weigh 1.
pub fn binary_weight(tree: &SpanningTree, zero_color: EdgeColor) -> usize {
    match zero_color {
        EdgeColor::Red => tree.blue_count(),
        EdgeColor::Blue => tree.red_count,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeStep {
    pub added: usize,
    pub removed: usize,
    pub red_after: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExchangeTrace {
    pub steps: Vec<ExchangeStep>,
}

impl ExchangeTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every intermediate edge set, starting with `start` and ending with the
    /// result of the last step.
    pub fn replay(&self, start: &[usize]) -> Vec<Vec<usize>> {
        let mut states = vec![start.to_vec()];
        let mut current = start.to_vec();
        for step in &self.steps {
            let pos = current
                .iter()
                .position(|&e| e == step.removed)
                .expect("removed edge is in the tree");
            current[pos] = step.added;
            states.push(current.clone());
        }
        states
    }
}

/// Max-red tree `T_min` and min-red tree `T_max` (red weighs 0).
pub fn extreme_trees(g: &BicoloredGraph) -> Result<(SpanningTree, SpanningTree)> {
    Ok((
        kruskal_binary(g, Sense::Minimize, EdgeColor::Red)?,
        kruskal_binary(g, Sense::Maximize, EdgeColor::Red)?,
    ))
}

pub fn exchange_construct(g: &BicoloredGraph, k: usize) -> Result<(SpanningTree, ExchangeTrace)> {
    exchange_construct_counted(g, k, &mut OpCounter::new())
}

/// Walks from `T_max` toward `T_min` by exchanges until the tree has `k` red
/// edges.
///
/// Each step adds the lowest-id red edge of `T_min` missing from the tree and
/// drops an edge outside `T_min` from the cycle it closes, blue if possible.
/// The counter records the rooting and cycle walks, not the two Kruskal runs.
pub fn exchange_construct_counted(
    g: &BicoloredGraph,
    k: usize,
    ops: &mut OpCounter,
) -> Result<(SpanningTree, ExchangeTrace)> {
    let (t_min, t_max) = extreme_trees(g)?;
    if k < t_max.red_count || k > t_min.red_count {
        return Err(Error::InfeasibleK { k });
    }
    let n = g.n();
    let mut in_tree = vec![false; g.m()];
    let mut in_t_min = vec![false; g.m()];
    for &e in &t_max.edge_ids {
        in_tree[e] = true;
    }
    for &e in &t_min.edge_ids {
        in_t_min[e] = true;
    }
    let mut entering: Vec<usize> = t_min
        .edge_ids
        .iter()
        .copied()
        .filter(|&e| g.edge(e).color == EdgeColor::Red)
        .collect();
    entering.sort_unstable();
    let mut next = 0;

    let mut tree = t_max.edge_ids.clone();
    let mut red = t_max.red_count;
    let mut trace = ExchangeTrace::default();
    let mut rooted = RootedTree::new(n);
    while red < k {
        // Edges of T_min are never removed, so the cursor only moves forward.
        while in_tree[entering[next]] {
            next += 1;
        }
        let added = entering[next];
        rooted.rebuild(g, &tree, ops);
        let edge = g.edge(added);
        let cycle = rooted.path(edge.u, edge.v, ops);
        let removed = cycle
            .iter()
            .copied()
            .find(|&e| !in_t_min[e] && g.edge(e).color == EdgeColor::Blue)
            .or_else(|| cycle.iter().copied().find(|&e| !in_t_min[e]))
            .expect("cycle closed by a T_min edge leaves T_min somewhere");

        let pos = tree.iter().position(|&e| e == removed).unwrap();
        tree[pos] = added;
        in_tree[removed] = false;
        in_tree[added] = true;
        if g.edge(removed).color == EdgeColor::Blue {
            red += 1;
        }
        trace.steps.push(ExchangeStep {
            added,
            removed,
            red_after: red,
        });
    }
    Ok((SpanningTree::from_edges(g, tree), trace))
}

/// Parent pointers of a spanning tree rooted at node 0.
struct RootedTree {
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
    depth: Vec<usize>,
    offsets: Vec<usize>,
    adj: Vec<(usize, usize)>,
}

impl RootedTree {
    fn new(n: usize) -> Self {
        RootedTree {
            parent: vec![UNSET; n],
            parent_edge: vec![UNSET; n],
            depth: vec![0; n],
            offsets: vec![0; n + 1],
            adj: Vec::new(),
        }
    }

    fn rebuild(&mut self, g: &BicoloredGraph, tree: &[usize], ops: &mut OpCounter) {
        let n = g.n();
        self.offsets.iter_mut().for_each(|o| *o = 0);
        for &e in tree {
            let edge = g.edge(e);
            self.offsets[edge.u + 1] += 1;
            self.offsets[edge.v + 1] += 1;
        }
        for i in 0..n {
            self.offsets[i + 1] += self.offsets[i];
        }
        let mut cursor = self.offsets.clone();
        self.adj.clear();
        self.adj.resize(2 * tree.len(), (0, 0));
        for &e in tree {
            let edge = g.edge(e);
            self.adj[cursor[edge.u]] = (edge.v, e);
            cursor[edge.u] += 1;
            self.adj[cursor[edge.v]] = (edge.u, e);
            cursor[edge.v] += 1;
        }
        ops.scan(2 * tree.len());

        self.parent.iter_mut().for_each(|p| *p = UNSET);
        self.parent[0] = 0;
        self.depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        ops.push();
        while let Some(x) = queue.pop_front() {
            let nbrs = &self.adj[self.offsets[x]..self.offsets[x + 1]];
            ops.scan(nbrs.len());
            for &(w, e) in nbrs {
                if self.parent[w] == UNSET {
                    self.parent[w] = x;
                    self.parent_edge[w] = e;
                    self.depth[w] = self.depth[x] + 1;
                    queue.push_back(w);
                    ops.push();
                }
            }
        }
    }

    /// Tree edges on the path from `a` to `b`: `a`'s side first, then `b`'s.
    fn path(&self, mut a: usize, mut b: usize, ops: &mut OpCounter) -> Vec<usize> {
        let mut from_a = Vec::new();
        let mut from_b = Vec::new();
        while a != b {
            ops.scan(1);
            if self.depth[a] >= self.depth[b] {
                from_a.push(self.parent_edge[a]);
                a = self.parent[a];
            } else {
                from_b.push(self.parent_edge[b]);
                b = self.parent[b];
            }
        }
        from_b.reverse();
        from_a.extend(from_b);
        from_a
    }
}

/// Red counts of all spanning trees, by backtracking over edge subsets.
///
/// Subsets that close a cycle are pruned as soon as the offending edge is
/// added.
pub fn enumerate_feasible(g: &BicoloredGraph) -> Result<BTreeSet<usize>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.m() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            m: g.m(),
            limit: ENUMERATION_LIMIT,
        });
    }
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let mut search = Enumeration {
        g,
        uf: RollbackUnionFind::new(g.n()),
        found: BTreeSet::new(),
    };
    search.descend(0, g.n() - 1, 0);
    Ok(search.found)
}

/// Number of spanning trees, by the same backtracking as `enumerate_feasible`.
pub fn count_spanning_trees(g: &BicoloredGraph) -> Result<u64> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.m() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            m: g.m(),
            limit: ENUMERATION_LIMIT,
        });
    }
    fn go(g: &BicoloredGraph, uf: &mut RollbackUnionFind, next: usize, need: usize) -> u64 {
        if need == 0 {
            return 1;
        }
        if g.m() - next < need {
            return 0;
        }
        let e = g.edge(next);
        let mut total = 0;
        if uf.union(e.u, e.v) {
            total += go(g, uf, next + 1, need - 1);
        }
        uf.undo();
        total + go(g, uf, next + 1, need)
    }
    Ok(go(g, &mut RollbackUnionFind::new(g.n()), 0, g.n() - 1))
}

struct Enumeration<'a> {
    g: &'a BicoloredGraph,
    uf: RollbackUnionFind,
    found: BTreeSet<usize>,
}

impl Enumeration<'_> {
    fn descend(&mut self, next: usize, need: usize, red: usize) {
        if need == 0 {
            self.found.insert(red);
            return;
        }
        if self.g.m() - next < need {
            return;
        }
        let e = *self.g.edge(next);
        if self.uf.union(e.u, e.v) {
            self.descend(
                next + 1,
                need - 1,
                red + (e.color == EdgeColor::Red) as usize,
            );
        }
        self.uf.undo();
        self.descend(next + 1, need, red);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeColor::{Blue as B, Red as R};

    fn triangle() -> BicoloredGraph {
        BicoloredGraph::new(3, [(0, 1, R), (1, 2, R), (0, 2, B)]).unwrap()
    }

    fn blue_path() -> BicoloredGraph {
        BicoloredGraph::new(4, [(0, 1, B), (1, 2, B), (2, 3, B)]).unwrap()
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
    fn kruskal_triangle() {
        let g = triangle();
        let t_min = kruskal_binary(&g, Sense::Minimize, R).unwrap();
        assert_eq!((t_min.edge_ids.clone(), t_min.red_count), (vec![0, 1], 2));
        let t_max = kruskal_binary(&g, Sense::Maximize, R).unwrap();
        assert_eq!(t_max.red_count, 1);
    }

    #[test]
    fn kruskal_unique_tree() {
        let g = blue_path();
        for sense in [Sense::Minimize, Sense::Maximize] {
            assert_eq!(
                kruskal_binary(&g, sense, R).unwrap().edge_ids,
                vec![0, 1, 2]
            );
        }
    }

    #[test]
    fn kruskal_disconnected() {
        let g = BicoloredGraph::new(3, [(0, 1, R)]).unwrap();
        assert!(matches!(
            kruskal_binary(&g, Sense::Minimize, R),
            Err(Error::GraphDisconnected)
        ));
    }

    #[test]
    fn exchange_triangle() {
        let g = triangle();
        let (tree, trace) = exchange_construct(&g, 1).unwrap();
        assert!(trace.is_empty());
        assert_eq!(tree.red_count, 1);

        let (tree, trace) = exchange_construct(&g, 2).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.steps[0].removed, 2);
        assert_eq!(trace.steps[0].red_after, 2);
        let mut ids = tree.edge_ids;
        ids.sort_unstable();
        assert_eq!(ids, vec![0, 1]);
        assert!(matches!(
            exchange_construct(&g, 0),
            Err(Error::InfeasibleK { k: 0 })
        ));
    }

    #[test]
    fn exchange_k4_trace_bounded() {
        let g = k4();
        let (t_min, t_max) = extreme_trees(&g).unwrap();
        let bound = t_min
            .edge_ids
            .iter()
            .filter(|e| !t_max.edge_ids.contains(e))
            .count();
        let (tree, trace) = exchange_construct(&g, 2).unwrap();
        assert_eq!(tree.red_count, 2);
        assert!(trace.len() <= bound);
        for state in trace.replay(&t_max.edge_ids) {
            let mut uf = UnionFind::new(4);
            assert!(state.iter().all(|&e| uf.union(g.edge(e).u, g.edge(e).v)));
            assert_eq!(uf.sets(), 1);
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_feasible(&triangle()).unwrap(),
            BTreeSet::from([1, 2])
        );
        assert_eq!(
            enumerate_feasible(&blue_path()).unwrap(),
            BTreeSet::from([0])
        );
        assert_eq!(
            enumerate_feasible(&k4()).unwrap(),
            BTreeSet::from([0, 1, 2, 3])
        );
        assert_eq!(count_spanning_trees(&k4()).unwrap(), 16);
        assert_eq!(count_spanning_trees(&triangle()).unwrap(), 3);
    }

    #[test]
    fn enumeration_guards() {
        let many: Vec<_> = (0..25)
            .map(|i| (0, 1, if i % 2 == 0 { R } else { B }))
            .collect();
        let g = BicoloredGraph::new(2, many).unwrap();
        assert!(matches!(
            enumerate_feasible(&g),
            Err(Error::TooLarge { m: 25, .. })
        ));
        let g = BicoloredGraph::new(3, [(0, 1, R)]).unwrap();
        assert!(matches!(
            enumerate_feasible(&g),
            Err(Error::GraphDisconnected)
        ));
        let single = BicoloredGraph::new(1, []).unwrap();
        assert_eq!(enumerate_feasible(&single).unwrap(), BTreeSet::from([0]));
    }
}
