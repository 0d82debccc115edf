//! r-Multiple and r-Tuple k-Dominating Set.
//!
//! * [`solve_multidom_fast`] splits every candidate solution into two halves
//!   drawn from heavy-vertex-constrained families and finds a pair whose
//!   polynomial product entry has minimum degree at least `r`.
//! * [`solve_multidom_kminus1`] handles `r = k - 1` through a k-partite
//!   clique graph whose edges are dominating pairs.
//! * [`solve_multidom_bruteforce`] is the exhaustive reference.

mod clique_graph;
mod exact;
mod families;
mod fast;
mod pairs;
mod unbalanced;

pub use clique_graph::{
    build_clique_graph, build_clique_graph_relaxed, solve_multidom_kminus1, CliqueGraph, KPartiteGraph,
};
pub use exact::{solve_multidom, solve_multidom_at_most, solve_multidom_bruteforce, MultidomAlgorithm};
pub use families::{build_candidate_families, family_shape, family_size_closed_form, CandidateFamily};
pub use fast::{solve_multidom_fast, solve_multidom_fast_with_stats};
pub use pairs::{complement_closed_neighborhoods, list_2_dominating_sets};
pub use unbalanced::{detect_unbalanced_kclique, for_each_unbalanced_kclique, grouping_parameters};

pub use crate::problem::{check_solution, verify_solution};
