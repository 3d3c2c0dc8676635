//! Exact induced-minor machinery for small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: the immutable [`Graph`] value type over bitset adjacency,
//!   elementary operations, canonical forms and named generators;
//! * [`containment`]: model search for induced minors, induced subgraphs,
//!   contractions and rooted induced minors, with a model verifier and a
//!   brute-force operation-sequence oracle;
//! * [`structure`]: two-cuts, subdivisions, minimum 3-wheels and rooted
//!   diamonds;
//! * [`cographs`]: cograph recognition and cotrees;
//! * [`decompose`]: the K̂4-free and gem-free decomposition engines and
//!   their certificate verifiers;
//! * [`antichains`]: generators for the known induced-minor antichains and
//!   finite incomparability checks;
//! * [`dichotomy`]: the classifier deciding whether the class excluding a
//!   graph is well-quasi-ordered, plus the complement filter;
//! * [`order`]: finite posets, Higman sequence embedding and labelled path
//!   contraction.

pub mod antichains;
pub mod cographs;
pub mod containment;
pub mod decompose;
pub mod dichotomy;
pub mod graph;
pub mod order;
pub mod structure;

pub use containment::{ContainmentModel, Relation, SearchOutcome};
pub use graph::{Graph, GraphError, VertexSet};
