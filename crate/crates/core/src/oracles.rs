//! Exhaustive deciders used as ground truth by the tests.
//!
//! Nothing here touches heavy vertices, candidate families or matrix
//! products. Every search is a plain scan in lexicographic order and guards
//! its own budget.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::multidom::KPartiteGraph;
use crate::patterndom::Pattern;
use crate::problem::{DominationVariant, Problem, Solution};
use crate::reductions::OVInstance;

/// Largest number of subsets a single oracle call may scan.
pub const SUBSET_BUDGET: u128 = 5_000_000;
/// Largest number of transversals a single oracle call may scan.
pub const TRANSVERSAL_BUDGET: u128 = 1_000_000;
/// Largest pattern the permutation search accepts.
pub const MAX_PATTERN: usize = 6;

fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn guard_subsets(n: usize, k: usize) -> Result<()> {
    let count = choose(n, k);
    if count > SUBSET_BUDGET {
        return Err(Error::BudgetExceeded(format!("C({n},{k}) = {count} subsets exceeds {SUBSET_BUDGET}")));
    }
    Ok(())
}

/// Advances `idx` to the next `k`-combination of `0..n`; false when done.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// First `k`-subset of `0..n` (lexicographic) accepted by `accept`.
fn first_subset<F: FnMut(&[usize]) -> bool>(n: usize, k: usize, mut accept: F) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if accept(&idx) {
            return Some(idx);
        }
        if !next_combination(&mut idx, n) {
            return None;
        }
    }
}

fn multidom_holds(graph: &Graph, set: &[Vertex], r: usize, variant: DominationVariant) -> bool {
    let mut member = vec![false; graph.n()];
    for &s in set {
        member[s] = true;
    }
    graph.vertices().all(|v| {
        let open = graph.neighbors(v).iter().filter(|&&w| member[w]).count();
        match variant {
            DominationVariant::Multiple => member[v] || open >= r,
            DominationVariant::Tuple => open + usize::from(member[v]) >= r,
        }
    })
}

pub(crate) fn scan_multidom(graph: &Graph, k: usize, r: usize, variant: DominationVariant) -> Option<Solution> {
    first_subset(graph.n(), k, |s| multidom_holds(graph, s, r, variant))
        .map(|s| Solution::new(Problem::Multidom { k, r, variant }, VertexSet::from_sorted(s)))
}

/// Lexicographically first `k`-subset that is an `r`-multiple or `r`-tuple
/// dominating set.
pub fn oracle_multidom(graph: &Graph, k: usize, r: usize, variant: DominationVariant) -> Result<Option<Solution>> {
    guard_subsets(graph.n(), k)?;
    Ok(scan_multidom(graph, k, r, variant))
}

/// Every `k`-subset that is an `r`-multiple or `r`-tuple dominating set.
pub fn oracle_multidom_all(graph: &Graph, k: usize, r: usize, variant: DominationVariant) -> Result<Vec<VertexSet>> {
    guard_subsets(graph.n(), k)?;
    let mut out = Vec::new();
    first_subset(graph.n(), k, |s| {
        if multidom_holds(graph, s, r, variant) {
            out.push(VertexSet::from_sorted(s.to_vec()));
        }
        false
    });
    Ok(out)
}

fn permutations_match(graph: &Graph, set: &[Vertex], pattern: &Pattern) -> bool {
    let k = set.len();
    let mut perm: Vec<usize> = (0..k).collect();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; k];
    let fits = |perm: &[usize]| {
        (0..k).all(|a| (a + 1..k).all(|b| pattern.has_edge(a, b) == graph.has_edge(set[perm[a]], set[perm[b]])))
    };
    if fits(&perm) {
        return true;
    }
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if fits(&perm) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Lexicographically first dominating `k`-subset inducing a copy of `pattern`.
pub fn oracle_pattern(graph: &Graph, pattern: &Pattern) -> Result<Option<Solution>> {
    let k = pattern.k();
    if k > MAX_PATTERN {
        return Err(Error::PatternTooLarge { k, max: MAX_PATTERN });
    }
    guard_subsets(graph.n(), k)?;
    let n = graph.n();
    let found = first_subset(n, k, |s| {
        let mut covered = vec![false; n];
        for &u in s {
            covered[u] = true;
            for &w in graph.neighbors(u) {
                covered[w] = true;
            }
        }
        covered.iter().all(|&c| c) && permutations_match(graph, s, pattern)
    });
    Ok(found.map(|s| Solution::new(Problem::Pattern { pattern: pattern.clone() }, VertexSet::from_sorted(s))))
}

fn transversal_count(sizes: &[usize]) -> u128 {
    sizes.iter().fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
}

/// First transversal (odometer order, last part fastest) satisfying `accept`.
fn first_transversal<F: FnMut(&[usize]) -> bool>(sizes: &[usize], mut accept: F) -> Option<Vec<usize>> {
    if sizes.contains(&0) {
        return None;
    }
    let mut pick = vec![0usize; sizes.len()];
    loop {
        if accept(&pick) {
            return Some(pick);
        }
        let Some(i) = (0..sizes.len()).rev().find(|&i| pick[i] + 1 < sizes[i]) else {
            return None;
        };
        pick[i] += 1;
        for p in &mut pick[i + 1..] {
            *p = 0;
        }
    }
}

/// First clique with one vertex per part, by exhaustive transversal scan.
pub fn oracle_unbalanced_clique(graph: &KPartiteGraph) -> Result<Option<Vec<usize>>> {
    let count = transversal_count(graph.sizes());
    if count > TRANSVERSAL_BUDGET {
        return Err(Error::BudgetExceeded(format!("{count} transversals exceeds {TRANSVERSAL_BUDGET}")));
    }
    let k = graph.parts();
    Ok(first_transversal(graph.sizes(), |pick| {
        (0..k).all(|i| (i + 1..k).all(|j| graph.adjacent(i, pick[i], j, pick[j])))
    }))
}

/// First transversal of a multipartite graph with no edge among its picks.
pub fn oracle_independent_transversal(graph: &KPartiteGraph) -> Result<Option<Vec<usize>>> {
    let count = transversal_count(graph.sizes());
    if count > TRANSVERSAL_BUDGET {
        return Err(Error::BudgetExceeded(format!("{count} transversals exceeds {TRANSVERSAL_BUDGET}")));
    }
    let k = graph.parts();
    Ok(first_transversal(graph.sizes(), |pick| {
        (0..k).all(|i| (i + 1..k).all(|j| !graph.adjacent(i, pick[i], j, pick[j])))
    }))
}

/// First tuple of vectors, one per part, such that every coordinate has at
/// least `r` zeros among the chosen vectors.
pub fn oracle_ov(instance: &OVInstance, r: usize) -> Result<Option<Vec<usize>>> {
    let sizes: Vec<usize> = instance.sets.iter().map(Vec::len).collect();
    let count = transversal_count(&sizes);
    if count > TRANSVERSAL_BUDGET {
        return Err(Error::BudgetExceeded(format!("{count} vector tuples exceeds {TRANSVERSAL_BUDGET}")));
    }
    Ok(scan_ov(instance, r))
}

pub(crate) fn scan_ov(instance: &OVInstance, r: usize) -> Option<Vec<usize>> {
    let sizes: Vec<usize> = instance.sets.iter().map(Vec::len).collect();
    first_transversal(&sizes, |pick| {
        (0..instance.d).all(|t| pick.iter().zip(&instance.sets).filter(|&(&a, set)| !set[a][t]).count() >= r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        first_subset(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(first_subset(2, 3, |_| true), None);
        assert_eq!(first_subset(3, 0, |_| true), Some(vec![]));
    }

    #[test]
    fn multidom_examples() {
        let s = oracle_multidom(&cycle(5), 3, 2, DominationVariant::Multiple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 3]);
        assert!(oracle_multidom(&path(4), 3, 2, DominationVariant::Tuple).unwrap().is_none());
        let s = oracle_multidom(&path(4), 3, 2, DominationVariant::Multiple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 3]);
        let s = oracle_multidom(&complete(4), 4, 3, DominationVariant::Multiple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 2, 3]);
        let s = oracle_multidom(&complete(4), 3, 3, DominationVariant::Tuple).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            oracle_multidom(&Graph::empty(40), 10, 1, DominationVariant::Tuple),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn pattern_examples() {
        let s = oracle_pattern(&cycle(5), &Pattern::path(3)).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 2]);
        assert!(oracle_pattern(&cycle(5), &Pattern::clique(3)).unwrap().is_none());
        assert!(oracle_pattern(&cycle(5), &Pattern::edgeless(3)).unwrap().is_none());
        let s = oracle_pattern(&path(3), &Pattern::clique(2)).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1]);
        assert!(oracle_pattern(&cycle(4), &Pattern::perfect_matching(4)).unwrap().is_none());
    }

    #[test]
    fn permutation_search_needs_a_relabelling() {
        // P3 drawn as 1-0-2: only a non-identity map fits
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        assert!(permutations_match(&g, &[0, 1, 2], &Pattern::path(3)));
        assert!(!permutations_match(&g, &[0, 1, 2], &Pattern::clique(3)));
    }

    #[test]
    fn unbalanced_examples() {
        let full = KPartiteGraph::from_fn(vec![2, 3, 2], |_, _, _, _| true);
        assert_eq!(oracle_unbalanced_clique(&full).unwrap(), Some(vec![0, 0, 0]));
        let none = KPartiteGraph::new(vec![2, 2, 2]);
        assert_eq!(oracle_unbalanced_clique(&none).unwrap(), None);
        let mut one = KPartiteGraph::new(vec![3, 3, 3]);
        one.add_edge(0, 2, 1, 1);
        one.add_edge(0, 2, 2, 0);
        one.add_edge(1, 1, 2, 0);
        assert_eq!(oracle_unbalanced_clique(&one).unwrap(), Some(vec![2, 1, 0]));
    }

    #[test]
    fn independent_transversal() {
        let full = KPartiteGraph::from_fn(vec![2, 2, 2], |_, _, _, _| true);
        assert_eq!(oracle_independent_transversal(&full).unwrap(), None);
        let mut g = full.clone();
        g.remove_edge(0, 1, 1, 0);
        g.remove_edge(0, 1, 2, 1);
        assert_eq!(oracle_independent_transversal(&g).unwrap(), None);
        g.remove_edge(1, 0, 2, 1);
        assert_eq!(oracle_independent_transversal(&g).unwrap(), Some(vec![1, 0, 1]));
    }

    #[test]
    fn ov_examples() {
        let inst = OVInstance::from_strings(2, &[vec!["01"], vec!["10"]]).unwrap();
        assert_eq!(oracle_ov(&inst, 1).unwrap(), Some(vec![0, 0]));
        assert_eq!(oracle_ov(&inst, 2).unwrap(), None);
        let ones = OVInstance::from_strings(2, &[vec!["11"], vec!["11", "11"]]).unwrap();
        assert_eq!(oracle_ov(&ones, 1).unwrap(), None);
    }
}
