use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::multidom::list_2_dominating_sets;
use crate::problem::{Certificate, Problem, SolveStats, Solution};
use crate::subsets::subsets_of;

use super::{bool_product_stats, undominated_rows};

pub fn solve_dominating_induced_matching(graph: &Graph, k: usize) -> Result<Option<Solution>> {
    solve_dominating_induced_matching_with_stats(graph, k).map(|(s, _)| s)
}

/// Edge sets whose endpoints are distinct and span no further edges.
fn is_induced_matching(graph: &Graph, edges: &[(Vertex, Vertex)]) -> bool {
    let ends: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let distinct = VertexSet::from_unsorted(ends.clone()).len() == ends.len();
    distinct
        && ends.iter().enumerate().all(|(i, &u)| {
            ends[i + 1..].iter().enumerate().all(|(d, &v)| {
                let partner = i % 2 == 0 && d == 0;
                partner || !graph.has_edge(u, v)
            })
        })
}

/// Dominating set of `k` vertices inducing a perfect matching (`k / 2` edges).
///
/// Rows are induced matchings of `ceil(k/4)` edges, columns of `floor(k/4)`
/// edges; a zero of the complement product whose union is still an induced
/// matching is a solution.
pub fn solve_dominating_induced_matching_with_stats(
    graph: &Graph,
    k: usize,
) -> Result<(Option<Solution>, SolveStats)> {
    if k % 2 == 1 || k == 0 {
        return Err(Error::OddK(k));
    }
    let n = graph.n();
    let wrap = |mut edges: Vec<(Vertex, Vertex)>| {
        edges.sort_unstable();
        let set = VertexSet::from_unsorted(edges.iter().flat_map(|&(u, v)| [u, v]).collect());
        Solution::new(Problem::DomMatching { k }, set).with_certificate(Certificate::Matching { edges })
    };
    if k == 2 {
        let hit = list_2_dominating_sets(graph).into_iter().find(|&(u, v)| graph.has_edge(u, v));
        return Ok((hit.map(|e| wrap(vec![e])), bool_product_stats(n, n, n)));
    }

    let edges: Vec<(Vertex, Vertex)> = graph.edges().collect();
    let family = |size: usize| -> Vec<Vec<(Vertex, Vertex)>> {
        subsets_of(&edges, size).into_iter().filter(|s| is_induced_matching(graph, s)).collect()
    };
    let rows = family(k.div_ceil(4));
    let cols = family(k / 4);
    let endpoints = |s: &[(Vertex, Vertex)]| -> Vec<Vertex> { s.iter().flat_map(|&(u, v)| [u, v]).collect() };
    let row_ends: Vec<Vec<Vertex>> = rows.iter().map(|s| endpoints(s)).collect();
    let col_ends: Vec<Vec<Vertex>> = cols.iter().map(|s| endpoints(s)).collect();
    let a = undominated_rows(graph, row_ends.iter().map(Vec::as_slice));
    let bt = undominated_rows(graph, col_ends.iter().map(Vec::as_slice));
    let stats = bool_product_stats(rows.len(), n, cols.len());

    let hit = a.find_zero_pair_transposed(&bt, |i, j| {
        let union: Vec<(Vertex, Vertex)> = rows[i].iter().chain(&cols[j]).copied().collect();
        is_induced_matching(graph, &union).then_some(union)
    })?;
    Ok((hit.map(wrap), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::problem::check_full;

    #[test]
    fn examples() {
        let s = solve_dominating_induced_matching(&path(3), 2).unwrap().unwrap();
        assert!(check_full(&path(3), &s).is_ok());
        let s = solve_dominating_induced_matching(&path(6), 4).unwrap().unwrap();
        assert_eq!(s.certificate, Certificate::Matching { edges: vec![(0, 1), (3, 4)] });
        assert!(solve_dominating_induced_matching(&cycle(4), 4).unwrap().is_none());
        assert!(matches!(solve_dominating_induced_matching(&cycle(4), 3), Err(Error::OddK(3))));
        let s = solve_dominating_induced_matching(&path(9), 6).unwrap().unwrap();
        assert!(check_full(&path(9), &s).is_ok());
    }

    #[test]
    fn induced_matching_check() {
        let g = path(4);
        assert!(!is_induced_matching(&g, &[(0, 1), (2, 3)]));
        assert!(is_induced_matching(&path(5), &[(0, 1), (3, 4)]));
        assert!(!is_induced_matching(&g, &[(0, 1), (1, 2)]));
    }
}
