use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles;
use crate::problem::{verify_solution, DominationVariant, Problem, Solution};
use crate::subsets::for_each_subset;

use super::clique_graph::solve_multidom_kminus1;
use super::fast::solve_multidom_fast;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultidomAlgorithm {
    /// Candidate-family polynomial product, `1 <= r <= k - 1`.
    Fast,
    /// Exhaustive subset scan.
    Brute,
    /// Clique-graph pipeline, `r = k - 1`.
    Pipeline,
}

impl fmt::Display for MultidomAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Fast => "fast",
            Self::Brute => "brute",
            Self::Pipeline => "pipeline",
        })
    }
}

impl FromStr for MultidomAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Self::Fast),
            "brute" => Ok(Self::Brute),
            "pipeline" => Ok(Self::Pipeline),
            other => Err(Error::invalid(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Lexicographically least `k`-subset satisfying the variant condition.
/// Unbudgeted; cost is `C(n, k)` definition checks.
pub fn solve_multidom_bruteforce(
    graph: &Graph,
    k: usize,
    r: usize,
    variant: DominationVariant,
) -> Result<Option<Solution>> {
    if r == 0 || r > k {
        return Err(Error::invalid(format!("brute force needs 1 <= r <= k, got r={r}, k={k}")));
    }
    Ok(oracles::scan_multidom(graph, k, r, variant))
}

pub fn solve_multidom(
    graph: &Graph,
    k: usize,
    r: usize,
    variant: DominationVariant,
    algo: MultidomAlgorithm,
    gamma: Option<Ratio<u64>>,
) -> Result<Option<Solution>> {
    match algo {
        MultidomAlgorithm::Fast => solve_multidom_fast(graph, k, r, variant),
        MultidomAlgorithm::Brute => solve_multidom_bruteforce(graph, k, r, variant),
        MultidomAlgorithm::Pipeline => {
            if k < 2 || r + 1 != k {
                return Err(Error::invalid(format!("pipeline needs r = k - 1, got r={r}, k={k}")));
            }
            solve_multidom_kminus1(graph, k, variant, gamma)
        }
    }
}

/// Sizes `k' <= r` where the exact-size solvers do not apply. Every member
/// of such a set has to be heavy, so only heavy subsets are tried; with
/// `r > k'` only the vacuous `S = V` of the multiple variant remains.
fn solve_small(graph: &Graph, k: usize, r: usize, variant: DominationVariant) -> Option<Solution> {
    let problem = Problem::Multidom { k, r, variant };
    if r > k {
        let all = VertexSet::from_sorted(graph.vertices().collect());
        return (variant == DominationVariant::Multiple && graph.n() == k && verify_solution(graph, &problem, &all))
            .then(|| Solution::new(problem, all));
    }
    let heavy = graph.heavy_vertices(k);
    let mut found = None;
    for_each_subset(heavy.len(), k, |idx| {
        if found.is_none() {
            let set = VertexSet::from_sorted(idx.iter().map(|&i| heavy.as_slice()[i]).collect());
            if verify_solution(graph, &problem, &set) {
                found = Some(set);
            }
        }
    });
    found.map(|set| Solution::new(problem, set))
}

/// Smallest `k' <= k` admitting a solution of size exactly `k'`, solved with
/// `algo` wherever it applies. The returned problem carries that `k'`.
pub fn solve_multidom_at_most(
    graph: &Graph,
    k: usize,
    r: usize,
    variant: DominationVariant,
    algo: MultidomAlgorithm,
) -> Result<Option<Solution>> {
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    for size in 1..=k.min(graph.n()) {
        let found = if r >= size {
            solve_small(graph, size, r, variant)
        } else if algo == MultidomAlgorithm::Pipeline && r + 1 != size {
            solve_multidom_fast(graph, size, r, variant)?
        } else {
            solve_multidom(graph, size, r, variant, algo, None)?
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    #[test]
    fn bruteforce_examples() {
        // {0, 1, 3} also works and precedes {0, 2, 4}
        let s = solve_multidom_bruteforce(&cycle(5), 3, 2, DominationVariant::Multiple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 3]);
        let s = solve_multidom_bruteforce(&path(4), 3, 2, DominationVariant::Multiple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 3]);
        assert!(solve_multidom_bruteforce(&path(4), 3, 2, DominationVariant::Tuple).unwrap().is_none());
        let s = solve_multidom_bruteforce(&complete(4), 3, 3, DominationVariant::Tuple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn at_most_finds_smallest_size() {
        let s = solve_multidom_at_most(&star(5), 4, 1, DominationVariant::Multiple, MultidomAlgorithm::Fast)
            .unwrap()
            .unwrap();
        assert_eq!(s.vertices.as_slice(), &[0]);
        let s = solve_multidom_at_most(&complete(3), 3, 2, DominationVariant::Tuple, MultidomAlgorithm::Pipeline)
            .unwrap()
            .unwrap();
        assert_eq!(s.vertices.len(), 2);
        assert!(solve_multidom_at_most(&cycle(6), 2, 2, DominationVariant::Tuple, MultidomAlgorithm::Fast)
            .unwrap()
            .is_none());
    }

    #[test]
    fn at_most_agrees_with_brute_force() {
        for g in [path(5), cycle(6), star(4), complete(4), Graph::empty(3)] {
            for k in 1..=4 {
                for r in 1..=3 {
                    for variant in [DominationVariant::Multiple, DominationVariant::Tuple] {
                        let fast = solve_multidom_at_most(&g, k, r, variant, MultidomAlgorithm::Fast).unwrap();
                        let brute = solve_multidom_at_most(&g, k, r, variant, MultidomAlgorithm::Brute).unwrap();
                        assert_eq!(fast.as_ref().map(|s| s.vertices.len()), brute.as_ref().map(|s| s.vertices.len()));
                        if let Some(s) = fast {
                            assert!(verify_solution(&g, &s.problem, &s.vertices));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pipeline_rejects_other_r() {
        assert!(solve_multidom(&cycle(5), 3, 1, DominationVariant::Multiple, MultidomAlgorithm::Pipeline, None).is_err());
    }
}
