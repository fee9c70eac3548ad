//! Undirected simple graphs with stable vertex indexing.
//!
//! This crate holds the graph plumbing shared by the whole workspace:
//! construction and structural surgery, reproducible `G(n,p)` sampling,
//! component / giant / k-core decomposition, canonical labeling and
//! isomorphism, and the graph6/sparse6/JSON interchange formats.
//!
//! Graphs are immutable after construction and safe to share across
//! threads; every operation here is a pure function of its inputs.

mod canon;
mod codec;
mod graph;
mod rng;
mod sample;

pub use canon::{
    automorphism_generators, automorphism_moved_vertices, canonical_form, canonical_labeling,
    is_isomorphic, isomorphism, AutBudget, AutOutcome,
};
pub use codec::{
    from_graph6, from_json, from_sparse6, to_graph6, to_json, to_sparse6, CodecError, JsonGraph,
};
pub use graph::{Graph, GraphError, RootedGraph, Subgraph};
pub use rng::{SplitMix64, Xoshiro256StarStar};
pub use sample::{sample_gnp, DegreeDivisor, SampleConfig};
