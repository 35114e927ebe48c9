//! Spanning trees of red/blue edge-colored graphs.
//!
//! Decides in O(n + m) whether a spanning tree with exactly `k` red edges
//! exists, builds one when it does, and computes minimum and maximum
//! spanning trees under 0/1 weights. The [`oracle`] module holds slower
//! reference algorithms used to check all of it.
//!
//! ```
//! use kred_core::{construct_k_red, feasible_interval, io::verify_tree, BicoloredGraph};
//! use kred_core::EdgeColor::{Blue, Red};
//!
//! let g = BicoloredGraph::new(3, [(0, 1, Red), (1, 2, Red), (0, 2, Blue)]).unwrap();
//! let iv = feasible_interval(&g).unwrap();
//! assert_eq!((iv.k_min, iv.k_max), (1, 2));
//! let tree = construct_k_red(&g, 1).unwrap();
//! assert!(verify_tree(&g, &tree.edge_ids, 1).is_ok());
//! ```

pub mod components;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod kred;
pub mod ops;
pub mod oracle;
mod partition;
pub mod union_find;

pub use components::{
    blue_component_count, blue_forests_within, blue_link_tree, red_components, BlueForests,
    LinkTree, RedDecomposition,
};
pub use error::{Error, ParseReason, Result};
pub use gen::gen_random;
pub use graph::{Adjacent, BicoloredGraph, Edge, EdgeColor, SpanningTree};
pub use kred::{
    binary_mst, construct_k_red, construct_k_red_counted, exists_k_red, extend_component_tree,
    feasibility_profile, feasible_interval, FeasibilityProfile, FeasibleInterval, Sense,
};
pub use ops::OpCounter;
