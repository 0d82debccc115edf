use crate::algebra::PolyMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;
use crate::problem::{Certificate, DominationVariant, Problem, SolveStats, Solution};

use super::families::build_candidate_families;

/// Rows of the left factor materialised per product block.
const BLOCK_ROWS: usize = 256;

/// Per-vertex exponent contributed by `set`: the number of members in the
/// closed neighbourhood, capped at `r`. For the multiple variant members of
/// `set` are exempt and get exponent `r` outright.
fn exponents(graph: &Graph, set: &VertexSet, r: usize, variant: DominationVariant) -> Vec<usize> {
    let mut hits = vec![0usize; graph.n()];
    for s in set.iter() {
        hits[s] += 1;
        for &w in graph.neighbors(s) {
            hits[w] += 1;
        }
    }
    if variant == DominationVariant::Multiple {
        for s in set.iter() {
            hits[s] = r;
        }
    }
    hits.into_iter().map(|h| h.min(r)).collect()
}

pub fn solve_multidom_fast(
    graph: &Graph,
    k: usize,
    r: usize,
    variant: DominationVariant,
) -> Result<Option<Solution>> {
    solve_multidom_fast_with_stats(graph, k, r, variant).map(|(s, _)| s)
}

/// Candidate-family product solver for `1 <= r <= k - 1`.
///
/// Rows of `A` are the left family, columns of `B` the right family, both
/// indexed by vertices in between, with entries `x^min(r, hits)` over a ring
/// capped at `2r`. For disjoint `S`, `T`, the coefficient of `x^c` in
/// `(A B)[S, T]` counts vertices hit `c` times by `S ∪ T` (saturated at `2r`),
/// so `S ∪ T` is a solution exactly when the entry has minimum degree `>= r`.
pub fn solve_multidom_fast_with_stats(
    graph: &Graph,
    k: usize,
    r: usize,
    variant: DominationVariant,
) -> Result<(Option<Solution>, SolveStats)> {
    if r == 0 || r >= k {
        return Err(Error::invalid(format!("fast multidom path needs 1 <= r <= k-1, got k={k}, r={r}")));
    }
    let n = graph.n();
    let (left, right) = build_candidate_families(graph, k, r);
    let mut stats = SolveStats {
        family_sizes: vec![left.len(), right.len()],
        product_dims: vec![[left.len(), n, right.len()]],
        scalar_ops: 0,
    };
    if k > n || left.is_empty() || right.is_empty() {
        return Ok((None, stats));
    }

    let cap = 2 * r;
    let right_exp: Vec<Vec<usize>> =
        par::map_indices(right.len(), |j| exponents(graph, &right.members[j], r, variant));
    let b = PolyMatrix::from_monomials(n, right.len(), cap, |v, j| right_exp[j][v]);

    for start in (0..left.len()).step_by(BLOCK_ROWS) {
        let end = (start + BLOCK_ROWS).min(left.len());
        let left_exp: Vec<Vec<usize>> =
            par::map_indices(end - start, |i| exponents(graph, &left.members[start + i], r, variant));
        let a = PolyMatrix::from_monomials(end - start, n, cap, |i, v| left_exp[i][v]);
        let (c, ops) = a.mul_counted(&b)?;
        stats.scalar_ops += ops;

        let hit = par::find_first(end - start, |i| {
            let s = &left.members[start + i];
            (0..right.len()).find_map(|j| {
                let t = &right.members[j];
                let good = s.is_disjoint(t) && c.min_degree(i, j).is_some_and(|d| d >= r);
                good.then(|| (s.clone(), t.clone()))
            })
        });
        if let Some((s, t)) = hit {
            let solution = Solution::new(Problem::Multidom { k, r, variant }, s.union(&t))
                .with_certificate(Certificate::Split { left: s.into_vec(), right: t.into_vec() });
            debug_assert!(crate::problem::verify_solution(graph, &solution.problem, &solution.vertices));
            return Ok((Some(solution), stats));
        }
    }
    Ok((None, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::multidom::build_candidate_families;

    #[test]
    fn c5_multiple_yes() {
        let s = solve_multidom_fast(&cycle(5), 3, 2, DominationVariant::Multiple).unwrap().unwrap();
        assert!(crate::problem::verify_solution(&cycle(5), &s.problem, &s.vertices));
        assert_eq!(s.vertices.len(), 3);
    }

    #[test]
    fn p4_tuple_no() {
        assert!(solve_multidom_fast(&path(4), 3, 2, DominationVariant::Tuple).unwrap().is_none());
        assert!(solve_multidom_fast(&path(4), 3, 2, DominationVariant::Multiple).unwrap().is_some());
    }

    #[test]
    fn whole_vertex_set_is_vacuous_for_multiple() {
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let s = solve_multidom_fast(&g, 4, 1, DominationVariant::Multiple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn precondition_errors() {
        assert!(solve_multidom_fast(&complete(4), 3, 3, DominationVariant::Multiple).is_err());
        assert!(solve_multidom_fast(&complete(4), 3, 0, DominationVariant::Tuple).is_err());
        assert!(solve_multidom_fast(&complete(2), 3, 1, DominationVariant::Tuple).unwrap().is_none());
    }

    #[test]
    fn product_entries_carry_mass_n() {
        let g = cycle(7);
        let (k, r) = (4, 2);
        let (left, right) = build_candidate_families(&g, k, r);
        for variant in [DominationVariant::Multiple, DominationVariant::Tuple] {
            let a = PolyMatrix::from_monomials(left.len(), g.n(), 2 * r, |i, v| {
                exponents(&g, &left.members[i], r, variant)[v]
            });
            let b = PolyMatrix::from_monomials(g.n(), right.len(), 2 * r, |v, j| {
                exponents(&g, &right.members[j], r, variant)[v]
            });
            let c = a.mul(&b).unwrap();
            for i in 0..c.rows() {
                for j in 0..c.cols() {
                    assert_eq!(c.get(i, j).mass(), g.n() as u128);
                }
            }
        }
    }
}
