//! Domination by sets inducing a prescribed pattern: cliques, independent
//! sets, induced matchings and arbitrary small patterns.

mod cliques;
mod dominating_clique;
mod indepset;
mod listing;
mod matching;
mod pattern;

pub use cliques::enumerate_cliques;
pub use dominating_clique::{solve_dominating_clique, solve_dominating_clique_with_stats};
pub use indepset::solve_dominating_indepset;
pub use listing::{list_dominating_ksets, solve_pattern_domination, solve_pattern_domination_with_stats, MAX_PATTERN_K};
pub use matching::{solve_dominating_induced_matching, solve_dominating_induced_matching_with_stats};
pub use pattern::{find_isomorphism, Pattern};

use crate::algebra::BoolMatrix;
use crate::graph::{Graph, Vertex};
use crate::problem::SolveStats;

/// Row `i` marks the vertices outside `N[sets[i]]`. A zero entry of
/// `rows(S) * rows(T)^T` means `S ∪ T` dominates.
pub(crate) fn undominated_rows<'a, I>(graph: &Graph, sets: I) -> BoolMatrix
where
    I: IntoIterator<Item = &'a [Vertex]>,
{
    let rows: Vec<Vec<usize>> = sets
        .into_iter()
        .map(|s| {
            let mask = graph.closed_neighborhood_mask(s);
            (0..graph.n()).filter(|&v| !mask[v]).collect()
        })
        .collect();
    BoolMatrix::from_rows(graph.n(), rows)
}

/// Stats for one product of a `rows x n` by an `n x cols` complement matrix.
pub(crate) fn bool_product_stats(rows: usize, n: usize, cols: usize) -> SolveStats {
    SolveStats {
        family_sizes: vec![rows, cols],
        product_dims: vec![[rows, n, cols]],
        scalar_ops: (rows as u64) * (cols as u64) * (n.div_ceil(64) as u64),
    }
}
