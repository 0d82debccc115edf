use std::collections::BTreeSet;

use crate::algebra::complement_zero_pairs;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::multidom::build_candidate_families;
use crate::problem::{Certificate, Problem, SolveStats, Solution};

use super::pattern::{find_isomorphism, Pattern};
use super::{bool_product_stats, undominated_rows};

/// Largest pattern accepted by [`solve_pattern_domination`].
pub const MAX_PATTERN_K: usize = 8;

fn list_with_stats(graph: &Graph, k: usize) -> Result<(Vec<VertexSet>, SolveStats)> {
    let n = graph.n();
    if k == 0 || k > n {
        return Ok((Vec::new(), SolveStats::default()));
    }
    if k == 1 {
        let all = graph.vertices().filter(|&v| graph.closed_degree(v) == n).map(|v| VertexSet::from_sorted(vec![v]));
        return Ok((all.collect(), SolveStats::default()));
    }
    let (left, right) = build_candidate_families(graph, k, 1);
    let a = undominated_rows(graph, left.members.iter().map(VertexSet::as_slice));
    let b = undominated_rows(graph, right.members.iter().map(VertexSet::as_slice)).transpose();
    let mut found = BTreeSet::new();
    for (i, j) in complement_zero_pairs(&a, &b)? {
        let (s, t) = (&left.members[i], &right.members[j]);
        if s.is_disjoint(t) {
            found.insert(s.union(t));
        }
    }
    Ok((found.into_iter().collect(), bool_product_stats(left.len(), n, right.len())))
}

/// Every dominating set of exactly `k` vertices, sorted.
///
/// Each such set holds a heavy vertex, so it splits into a row set of
/// `ceil((k-1)/2)` vertices and a column set of `floor((k-1)/2) + 1`
/// vertices containing a heavy one.
pub fn list_dominating_ksets(graph: &Graph, k: usize) -> Result<Vec<VertexSet>> {
    list_with_stats(graph, k).map(|(sets, _)| sets)
}

pub fn solve_pattern_domination(graph: &Graph, pattern: &Pattern) -> Result<Option<Solution>> {
    solve_pattern_domination_with_stats(graph, pattern).map(|(s, _)| s)
}

/// First dominating `k`-set, in sorted order, that induces a copy of `pattern`.
pub fn solve_pattern_domination_with_stats(graph: &Graph, pattern: &Pattern) -> Result<(Option<Solution>, SolveStats)> {
    let k = pattern.k();
    if k > MAX_PATTERN_K {
        return Err(Error::PatternTooLarge { k, max: MAX_PATTERN_K });
    }
    let (sets, stats) = list_with_stats(graph, k)?;
    let hit = sets.into_iter().find_map(|set| find_isomorphism(graph, set.as_slice(), pattern).map(|emb| (set, emb)));
    let solution = hit.map(|(set, embedding)| {
        Solution::new(Problem::Pattern { pattern: pattern.clone() }, set)
            .with_certificate(Certificate::Embedding { embedding })
    });
    Ok((solution, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::problem::check_full;

    fn pairs(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.as_slice().to_vec()).collect()
    }

    #[test]
    fn listing_examples() {
        assert_eq!(pairs(&list_dominating_ksets(&path(3), 1).unwrap()), vec![vec![1]]);
        assert_eq!(list_dominating_ksets(&cycle(4), 2).unwrap().len(), 6);
        assert_eq!(pairs(&list_dominating_ksets(&cycle(6), 2).unwrap()), vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn pattern_examples() {
        let c5 = cycle(5);
        let s = solve_pattern_domination(&c5, &Pattern::path(3)).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 2]);
        assert!(check_full(&c5, &s).is_ok());
        assert!(solve_pattern_domination(&c5, &Pattern::clique(3)).unwrap().is_none());
        assert!(solve_pattern_domination(&c5, &Pattern::edgeless(3)).unwrap().is_none());
        assert!(matches!(
            solve_pattern_domination(&c5, &Pattern::edgeless(9)),
            Err(Error::PatternTooLarge { k: 9, .. })
        ));
    }
}
