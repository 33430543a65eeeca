//! Polynomial deciders that also build a witness.

mod audit;
mod prism;
mod tidy;

pub use audit::{audit_prism_set, ClauseResult, PrismAudit};
pub use prism::{
    prism_cograph_oldoind, size2_construct, PrismCase, PrismParams, PrismTrace, PrismWitness,
};
pub use tidy::{
    base_witness, cograph_oldoind, cograph_oldoind_traced, p4tidy_oldoind, p4tidy_oldoind_traced,
    TidyDecision, TidyTrace,
};
