//! Existence and construction of spanning trees with exactly `k` red edges,
//! and binary-weight minimum/maximum spanning trees, all in O(n + m).
//!
//! The achievable red counts of a connected graph form the contiguous range
//! `[c_b - 1, q]`, where `q = n - p` for `p` red components and `c_b` is the
//! number of blue components. Trees are assembled from the red component
//! decomposition:
//!
//! * for `k >= q - Σ m_i(b)`, every red component gets a spanning tree mixing
//!   its own blue forest with red edges, and a blue link tree joins the
//!   components;
//! * below that bound blue edges between red components must also displace
//!   red ones, and the tree is grown from the red edges that are forced
//!   (those joining blue components) instead.

use crate::components::{
    blue_components_counted, blue_forests_within_counted, blue_link_tree_counted,
    red_components_counted, BlueForests, LinkTree, RedDecomposition,
};
use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, EdgeColor, SpanningTree};
use crate::ops::OpCounter;
use crate::partition::{forest_partition, span_pieces, Pieces};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Inclusive range of red counts achievable by spanning trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibleInterval {
    pub k_min: usize,
    pub k_max: usize,
}

impl FeasibleInterval {
    pub fn contains(&self, k: usize) -> bool {
        self.k_min <= k && k <= self.k_max
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.k_min..=self.k_max
    }

    /// `floor((k_min + k_max) / 2)`.
    pub fn midpoint(&self) -> usize {
        (self.k_min + self.k_max) / 2
    }
}

/// The counts behind the feasible interval of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityProfile {
    pub n: usize,
    /// Red components.
    pub p: usize,
    /// `n - p`.
    pub q: usize,
    /// `Σ m_i(b)`: blue forest edges available inside red components.
    pub in_component_blue: usize,
    /// Connected components of `(V, E_b)`.
    pub blue_components: usize,
}

impl FeasibilityProfile {
    pub fn interval(&self) -> FeasibleInterval {
        FeasibleInterval {
            k_min: self.blue_components - 1,
            k_max: self.q,
        }
    }

    /// Smallest red count reachable by swapping only in-component blue edges
    /// into the red forests: `q - Σ m_i(b)`. Never below `interval().k_min`.
    pub fn component_bound(&self) -> usize {
        self.q - self.in_component_blue
    }
}

pub fn feasibility_profile(g: &BicoloredGraph) -> Result<FeasibilityProfile> {
    feasibility_profile_counted(g, &mut OpCounter::new())
}

pub fn feasibility_profile_counted(
    g: &BicoloredGraph,
    ops: &mut OpCounter,
) -> Result<FeasibilityProfile> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let d = red_components_counted(g, ops);
    blue_link_tree_counted(g, &d, ops)?;
    let bf = blue_forests_within_counted(g, &d, ops);
    let blue = blue_components_counted(g, ops);
    Ok(FeasibilityProfile {
        n: g.n(),
        p: d.p,
        q: d.q,
        in_component_blue: bf.total(),
        blue_components: blue.piece_count(),
    })
}

/// Range of `k` for which a `k`-red spanning tree exists.
pub fn feasible_interval(g: &BicoloredGraph) -> Result<FeasibleInterval> {
    feasibility_profile(g).map(|p| p.interval())
}

/// False for disconnected or empty graphs and for `k > n - 1`.
pub fn exists_k_red(g: &BicoloredGraph, k: usize) -> bool {
    if g.n() == 0 || k > g.n() - 1 {
        return false;
    }
    feasible_interval(g).is_ok_and(|iv| iv.contains(k))
}

pub fn construct_k_red(g: &BicoloredGraph, k: usize) -> Result<SpanningTree> {
    construct_k_red_counted(g, k, &mut OpCounter::new())
}

/// Builds a spanning tree with exactly `k` red edges.
///
/// The counter covers the whole pipeline, decomposition included.
pub fn construct_k_red_counted(
    g: &BicoloredGraph,
    k: usize,
    ops: &mut OpCounter,
) -> Result<SpanningTree> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let d = red_components_counted(g, ops);
    let link = blue_link_tree_counted(g, &d, ops)?;
    if k > d.q {
        return Err(Error::InfeasibleK { k });
    }
    let bf = blue_forests_within_counted(g, &d, ops);
    let edge_ids = if k >= d.q - bf.total() {
        assemble_from_components(g, &d, &bf, &link, k, ops)
    } else {
        assemble_by_augmentation(g, k, ops)?
    };
    debug_assert_eq!(edge_ids.len(), g.n() - 1);
    Ok(SpanningTree {
        edge_ids,
        red_count: k,
    })
}

/// Smallest `t` (1-based) with `prefix[t] >= deficit`, for `deficit >= 1`.
pub fn split_component(prefix: &[usize], deficit: usize) -> Option<usize> {
    debug_assert!(deficit >= 1);
    // prefix is nondecreasing, so the first index reaching the deficit is a
    // partition point.
    let t = prefix.partition_point(|&s| s < deficit);
    (t < prefix.len()).then_some(t)
}

/// Component construction, valid for `q - Σ m_i(b) <= k <= q`.
///
/// `deficit = q - k` red edges are traded for in-component blue ones: the
/// first `t - 1` components give up their whole blue forest, component `t`
/// the first `deficit - prefix[t-1]` edges of its forest. Red edges then
/// complete each component and the link tree joins them.
fn assemble_from_components(
    g: &BicoloredGraph,
    d: &RedDecomposition,
    bf: &BlueForests,
    link: &LinkTree,
    k: usize,
    ops: &mut OpCounter,
) -> Vec<usize> {
    let deficit = d.q - k;
    let mut tree = Vec::with_capacity(g.n() - 1);
    if deficit == 0 {
        for forest in &d.red_forest {
            tree.extend_from_slice(forest);
        }
    } else {
        let t = split_component(&bf.prefix, deficit)
            .expect("deficit within the in-component blue total");
        for forest in &bf.forest_edges[..t - 1] {
            tree.extend_from_slice(forest);
        }
        tree.extend_from_slice(&bf.forest_edges[t - 1][..deficit - bf.prefix[t - 1]]);
        debug_assert_eq!(tree.len(), deficit);
        let chosen = forest_partition(g, &tree, ops);
        let red = span_pieces(g, &chosen, EdgeColor::Red, 0..g.n(), ops);
        tree.extend(red);
    }
    tree.extend_from_slice(&link.edge_ids);
    tree
}

/// Construction valid on the whole feasible range.
///
/// Red edges joining blue components appear in every spanning tree's red
/// part up to exchange; they are taken first, extended to a maximal red
/// forest, truncated to `k`, and the rest is filled with blue.
fn assemble_by_augmentation(
    g: &BicoloredGraph,
    k: usize,
    ops: &mut OpCounter,
) -> Result<Vec<usize>> {
    let blue = blue_components_counted(g, ops);
    let mut red = span_pieces(g, &blue, EdgeColor::Red, 0..g.n(), ops);
    if red.len() + 1 < blue.piece_count() {
        return Err(Error::GraphDisconnected);
    }
    if k < red.len() {
        return Err(Error::InfeasibleK { k });
    }
    let forced = forest_partition(g, &red, ops);
    let extra = span_pieces(g, &forced, EdgeColor::Red, 0..g.n(), ops);
    if red.len() + extra.len() < k {
        return Err(Error::InfeasibleK { k });
    }
    red.extend_from_slice(&extra[..k - red.len()]);
    let chosen = forest_partition(g, &red, ops);
    let fill = span_pieces(g, &chosen, EdgeColor::Blue, 0..g.n(), ops);
    red.extend(fill);
    Ok(red)
}

/// Spanning tree for any feasible `k` through the forced-red route alone.
///
/// Kept public as a second construction to cross-check
/// [`construct_k_red`] against.
pub fn construct_k_red_by_augmentation(g: &BicoloredGraph, k: usize) -> Result<SpanningTree> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let edge_ids = assemble_by_augmentation(g, k, &mut OpCounter::new())?;
    Ok(SpanningTree {
        edge_ids,
        red_count: k,
    })
}

/// Extends `chosen_blue`, a forest inside one red component, with red edges
/// to a spanning tree of that component.
///
/// Each tree of `chosen_blue` acts as one node; a red BFS from the first
/// member adds an edge whenever it enters an unvisited tree or node.
pub fn extend_component_tree(
    g: &BicoloredGraph,
    component: &[usize],
    chosen_blue: &[usize],
) -> Vec<usize> {
    let mut ops = OpCounter::new();
    let pieces = forest_partition(g, chosen_blue, &mut ops);
    let mut tree = chosen_blue.to_vec();
    tree.extend(span_pieces(
        g,
        &pieces,
        EdgeColor::Red,
        component.iter().copied().take(1),
        &mut ops,
    ));
    tree
}

/// Minimum or maximum spanning tree when `zero_color` edges weigh 0 and the
/// others weigh 1. Returns the tree and its weight.
pub fn binary_mst(
    g: &BicoloredGraph,
    sense: Sense,
    zero_color: EdgeColor,
) -> Result<(SpanningTree, usize)> {
    let iv = feasible_interval(g)?;
    // Minimizing means as many zero-weight edges as possible.
    let k = match (sense, zero_color) {
        (Sense::Minimize, EdgeColor::Red) | (Sense::Maximize, EdgeColor::Blue) => iv.k_max,
        (Sense::Maximize, EdgeColor::Red) | (Sense::Minimize, EdgeColor::Blue) => iv.k_min,
    };
    let tree = construct_k_red(g, k)?;
    let weight = match zero_color {
        EdgeColor::Red => tree.blue_count(),
        EdgeColor::Blue => tree.red_count,
    };
    Ok((tree, weight))
}
