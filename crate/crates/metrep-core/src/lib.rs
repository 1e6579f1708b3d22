//! Metric representations of graph vertices: realizability, canonical
//! realizations in strong products of paths, equivalence, and uniqueness.
//!
//! A connected graph together with an ordered vertex set `W = (w_1, ..., w_n)`
//! assigns every vertex its vector of distances to the landmarks. When `W` is a
//! resolving set those vectors are pairwise distinct and form a finite set
//! `S ⊂ Z^n`. This crate answers the reverse questions: which finite vector
//! sets arise this way, how to build a realization when one exists, and — for
//! `n = 2` — when that realization is unique up to equivalence. An exhaustive
//! enumeration oracle cross-checks the characterization-based answers.
//!
//! The crate is `no_std` (requires `alloc`); IO, file formats and the command
//! line live in the companion `metrep` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod equivalence;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod realize;
pub mod vector;

pub use equivalence::{
    add_edge_perturb, are_equivalent, decide_uniqueness, delete_edge_from_witness, find_witness,
    is_uniquely_realizable_2d, EdgeDeletion, Uniqueness, Witness,
};
pub use error::{Error, Result};
pub use graph::{
    bfs_distances, is_resolving_set, metric_dimension, metric_representation, representation_set,
    Graph, LandmarkSet,
};
pub use oracle::{
    enumerate_realization_classes, oracle_is_realizable, oracle_is_uniquely_realizable,
    ClassReport,
};
pub use realize::{
    canonical_realization, check_basic_conditions, check_realizable, embed_graph, is_realizable,
    project_realization, strong_adjacent, Embedding, Realization, StrongGrid, Violation,
};
pub use vector::{DistanceVector, VectorSet};
