//! Extremal constructions and exact checkers for cancellative, union-free
//! and cover-free uniform hypergraphs.
//!
//! Vertices are 1-based at every public boundary (constructors taking edge
//! lists, text I/O, certificates' `to_vertices`) and 0-based inside
//! [`VertexSet`].

pub mod bitset;
pub mod checkers;
pub mod combinatorics;
pub mod constructors;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod hypergraph;

pub use bitset::VertexSet;
pub use checkers::{
    check, check_cancellative, check_cover_free, check_sparse, check_union_free,
    check_union_free_with_budget, replay_certificate, Certificate, CertificateKind, Property,
    PropertyVerdict,
};
pub use constructors::{
    alteration_construct, build_2_cancellative_odd, build_cancellative, build_union_free,
    cancellativity_witness, codegree_peel, partite_extract, predicted_exponents,
    AlterationOutcome, BuildOutcome, CancellativityWitness, ConstructionParams,
    ExponentPrediction, PeelParams,
};
pub use error::{Error, Result};
pub use exact::{exact_max, naive_max, SearchProblem, SearchResult, SymmetryMode};
pub use experiments::{fit_exponent, ExponentFit};
pub use hypergraph::{enumerate_extensions, Hypergraph, Partition, SparsityConstraint};
