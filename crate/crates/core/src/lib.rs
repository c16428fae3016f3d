//! Integer additive set-labelings of finite simple graphs.
//!
//! A labeling assigns each vertex a distinct non-empty subset of a ground set
//! `X` of non-negative integers; every edge `uv` then carries the sumset
//! `f(u) + f(v)`. This crate provides exact sumset arithmetic on small integer
//! sets, the classification of the power-set lattice of `X` into sumsets and
//! summands, verifiers for the labeling classes (IASL, IASI, k-uniform, IASGL,
//! topological IASL and IASGL), finite topologies and their star realisation,
//! pruned backtracking search, and an exhaustive checker for the known
//! structural results about these labelings.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON and the
//! command-line tool live in the `iasl-lab` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
mod error;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod search;
pub mod sets;
pub mod topology;

pub use classify::{classify, SubsetFlags, SumsetClassification};
pub use error::Error;
pub use graph::{
    connected_graphs_up_to, enumerate_connected_graphs, ConnectedGraphs, Graph, Structure,
};
pub use labeling::{
    induced_edge_labels, set_indexing_numbers, verify_adjacent_maxima, verify_iasgl, verify_iasi,
    verify_iasl, verify_uniform, Labeling, Location, VerificationReport, Violation, ViolationKind,
};
pub use oracle::{run_all, run_oracle, Holds, TheoremId, TheoremReport, Witness};
pub use search::{
    all_labelings, minimal_ground_set, screen, search_iasgl, search_top_iasgl, search_top_iasl,
    SearchMode, SearchOutcome, StructuralScreen,
};
pub use sets::{
    all_nonempty_subsets, summand_decompositions, sumset, GroundSet, IntSet, Limits, PowerSet,
};
pub use topology::{
    enumerate_topologies, is_topology, realize_topology, verify_top_iasgl, verify_top_iasl,
    Topology, TopologyCheck, TopologyViolation,
};
