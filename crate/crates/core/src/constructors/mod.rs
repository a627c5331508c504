//! Randomized and deterministic constructions.

mod alteration;
mod builders;
mod exponents;
mod partite;
mod peel;
mod witness;

pub use alteration::{
    alteration_construct, AlterationOutcome, ConstructionParams, DEFAULT_DENSITY,
};
pub use builders::{
    build_2_cancellative_odd, build_cancellative, build_union_free, cancellative_constraints,
    union_free_constraints, BuildOutcome, VerificationRecord,
};
pub use exponents::{predicted_exponents, ExponentPrediction};
pub use partite::{
    crossing_lower_bound, partite_extract, partite_extract_with, random_partite_extract,
};
pub use peel::{codegree_peel, codegrees, PeelParams};
pub use witness::{cancellativity_witness, CancellativityWitness};
