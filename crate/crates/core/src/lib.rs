//! Open-independent open-locating-dominating (OLD_oind) sets.
//!
//! The crate provides a bitset graph core, a definition-level verifier and
//! exact search oracle, recognizers for cographs, spiders, quasi-spiders and
//! P4-tidy graphs, polynomial deciders that construct witnesses for P4-tidy
//! graphs, cographs and complementary prisms of cographs, and the exact
//! cover gadget that makes the general problem NP-hard.

pub mod classes;
pub mod deciders;
pub mod error;
pub mod graph;
pub mod hardness;
pub mod oldoind;
pub mod oracle;
pub mod selftest;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
