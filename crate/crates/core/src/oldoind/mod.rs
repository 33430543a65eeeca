//! Verification of OLD_oind sets and the exact search oracle.

mod search;
mod verify;

pub use search::{
    all_oldoind_sets, exists_oldoind, exists_oldoind_with, min_oldoind, min_oldoind_with,
    PruneHook, SearchOptions, SolveResult, SolveStatus,
};
pub use verify::{
    check_necessary, code, find_open_twins, is_oldoind, verify_girth5, verify_oldoind,
    verify_oldoind_detailed, Verdict, Violation,
};
