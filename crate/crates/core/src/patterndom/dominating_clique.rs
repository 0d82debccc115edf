use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::multidom::list_2_dominating_sets;
use crate::problem::{Problem, SolveStats, Solution};

use super::cliques::enumerate_cliques;
use super::{bool_product_stats, undominated_rows};

pub fn solve_dominating_clique(graph: &Graph, k: usize) -> Result<Option<Solution>> {
    solve_dominating_clique_with_stats(graph, k).map(|(s, _)| s)
}

/// Dominating `k`-clique.
///
/// For `k >= 3` some member is heavy. Rows are a `floor((k-1)/2)`-clique
/// plus one heavy vertex, columns a `ceil((k-1)/2)`-clique, and a zero of
/// the complement product whose three parts form a `k`-clique is a solution.
pub fn solve_dominating_clique_with_stats(graph: &Graph, k: usize) -> Result<(Option<Solution>, SolveStats)> {
    let problem = Problem::DomClique { k };
    let wrap = |set: Vec<Vertex>| Solution::new(problem.clone(), VertexSet::from_unsorted(set));
    let n = graph.n();
    match k {
        0 => return Ok((None, SolveStats::default())),
        1 => {
            let hit = graph.vertices().find(|&v| graph.closed_degree(v) == n);
            return Ok((hit.map(|v| wrap(vec![v])), SolveStats::default()));
        }
        2 => {
            let hit = list_2_dominating_sets(graph).into_iter().find(|&(u, v)| graph.has_edge(u, v));
            return Ok((hit.map(|(u, v)| wrap(vec![u, v])), bool_product_stats(n, n, n)));
        }
        _ => {}
    }

    let heavy = graph.heavy_vertices(k);
    let r1 = enumerate_cliques(graph, (k - 1) / 2);
    let r2 = enumerate_cliques(graph, k / 2);
    let row_sets: Vec<Vec<Vertex>> =
        r1.iter().flat_map(|s| heavy.iter().map(move |h| s.iter().copied().chain([h]).collect())).collect();
    let a = undominated_rows(graph, row_sets.iter().map(Vec::as_slice));
    let bt = undominated_rows(graph, r2.iter().map(Vec::as_slice));
    let stats = bool_product_stats(row_sets.len(), n, r2.len());

    let hit = a.find_zero_pair_transposed(&bt, |i, j| {
        let members: Vec<Vertex> = row_sets[i].iter().chain(&r2[j]).copied().collect();
        let set = VertexSet::from_unsorted(members.clone());
        let is_clique = set.len() == k
            && members.iter().enumerate().all(|(x, &u)| members[x + 1..].iter().all(|&v| graph.has_edge(u, v)));
        is_clique.then_some(members)
    })?;
    Ok((hit.map(wrap), stats))
}
