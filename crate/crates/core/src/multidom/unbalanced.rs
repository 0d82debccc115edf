use std::ops::ControlFlow;

use num_rational::Ratio;

use crate::algebra::boolean::{ones, rows_intersect};
use crate::algebra::BoolMatrix;

use super::clique_graph::KPartiteGraph;

/// Grouping `(α, β)` for a `k`-partite graph whose small parts have size
/// about `n^γ`: one group of `α + 1` parts holding the large part and two
/// groups of `β` parts, so `α + 2β + 1 = k`.
///
/// Applies only when `k - 1 + 1/γ` is an integer divisible by 3 and
/// `2/γ < k - 1`.
pub fn grouping_parameters(k: usize, gamma: Ratio<u64>) -> Option<(usize, usize)> {
    let (p, q) = (*gamma.numer(), *gamma.denom());
    if p == 0 || p > q || k < 2 || q % p != 0 {
        return None;
    }
    let inv = usize::try_from(q / p).ok()?;
    let total = k - 1 + inv;
    if !total.is_multiple_of(3) || 2 * inv >= k - 1 {
        return None;
    }
    let beta = total / 3;
    Some((k - 1 - 2 * beta, beta))
}

fn full_row(size: usize) -> Vec<u64> {
    let mut row = vec![u64::MAX; size.div_ceil(64)];
    if !size.is_multiple_of(64) {
        if let Some(last) = row.last_mut() {
            *last = (1u64 << (size % 64)) - 1;
        }
    }
    row
}

/// Visits every clique with one vertex in each of `order`'s parts, in
/// lexicographic order of the picks. Candidate sets of the parts not yet
/// fixed are kept as packed rows and cut down after every pick.
fn search<F>(g: &KPartiteGraph, order: &[usize], visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if order.is_empty() {
        return visit(&[]);
    }
    let cand: Vec<Vec<u64>> = order.iter().map(|&p| full_row(g.part_size(p))).collect();
    let mut picks = Vec::with_capacity(order.len());
    descend(g, order, cand, &mut picks, visit)
}

fn descend<F>(
    g: &KPartiteGraph,
    order: &[usize],
    cand: Vec<Vec<u64>>,
    picks: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let depth = picks.len();
    let part = order[depth];
    for a in ones(&cand[depth]).collect::<Vec<_>>() {
        picks.push(a);
        if depth + 1 == order.len() {
            visit(picks)?;
        } else {
            let next: Vec<Vec<u64>> = (0..order.len())
                .map(|e| {
                    if e <= depth {
                        Vec::new()
                    } else {
                        cand[e].iter().zip(g.neighbors_in(part, a, order[e])).map(|(x, y)| x & y).collect()
                    }
                })
                .collect();
            if next[depth + 1..].iter().all(|row| row.iter().any(|&w| w != 0)) {
                descend(g, order, next, picks, visit)?;
            }
        }
        picks.pop();
    }
    ControlFlow::Continue(())
}

/// Cliques over a fixed list of parts, each as local indices aligned with `parts`.
fn cliques_over(g: &KPartiteGraph, parts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = search(g, parts, &mut |picks| {
        out.push(picks.to_vec());
        ControlFlow::Continue(())
    });
    out
}

struct Grouped {
    groups: [Vec<usize>; 3],
    nodes: [Vec<Vec<usize>>; 3],
    a12: BoolMatrix,
    a13: BoolMatrix,
    a23: BoolMatrix,
}

impl Grouped {
    fn build(g: &KPartiteGraph, alpha: usize, beta: usize) -> Self {
        let mut by_size: Vec<usize> = (0..g.parts()).collect();
        by_size.sort_by_key(|&p| std::cmp::Reverse(g.part_size(p)));
        let groups = [
            by_size[..=alpha].to_vec(),
            by_size[alpha + 1..alpha + 1 + beta].to_vec(),
            by_size[alpha + 1 + beta..].to_vec(),
        ];
        let nodes = [cliques_over(g, &groups[0]), cliques_over(g, &groups[1]), cliques_over(g, &groups[2])];
        let joined = |x: usize, y: usize| {
            BoolMatrix::from_fn(nodes[x].len(), nodes[y].len(), |i, j| {
                groups[x].iter().zip(&nodes[x][i]).all(|(&pu, &a)| {
                    groups[y].iter().zip(&nodes[y][j]).all(|(&pv, &b)| g.adjacent(pu, a, pv, b))
                })
            })
        };
        let (a12, a13, a23) = (joined(0, 1), joined(0, 2), joined(1, 2));
        Self { groups, nodes, a12, a13, a23 }
    }

    fn witness(&self, parts: usize, w: [usize; 3]) -> Vec<usize> {
        let mut out = vec![0; parts];
        for x in 0..3 {
            for (&p, &a) in self.groups[x].iter().zip(&self.nodes[x][w[x]]) {
                out[p] = a;
            }
        }
        out
    }

    /// First triangle `(w1, w2, w3)`: `P = A12 * A23` is masked with `A13`.
    fn first_triangle(&self) -> Option<[usize; 3]> {
        let p = self.a12.mul(&self.a23).ok()?;
        let (w1, w3) = (0..p.rows()).find_map(|i| {
            ones(p.row(i)).find(|&j| self.a13.get(i, j)).map(|j| (i, j))
        })?;
        let w2 = ones(self.a12.row(w1)).find(|&b| self.a23.get(b, w3))?;
        Some([w1, w2, w3])
    }
}

/// One vertex per part forming a clique, as local indices in part order.
///
/// With a `γ` hint for which [`grouping_parameters`] applies, the parts are
/// merged into three groups (largest part in the first) and the search is
/// triangle detection in the group graph through one boolean product.
/// Otherwise it backtracks over the parts from smallest to largest.
pub fn detect_unbalanced_kclique(g: &KPartiteGraph, gamma: Option<Ratio<u64>>) -> Option<Vec<usize>> {
    let k = g.parts();
    if k == 0 {
        return Some(Vec::new());
    }
    if let Some((alpha, beta)) = gamma.and_then(|gm| grouping_parameters(k, gm)) {
        let grouped = Grouped::build(g, alpha, beta);
        return grouped.first_triangle().map(|w| grouped.witness(k, w));
    }
    let order = ascending_order(g);
    let mut found = None;
    let _ = search(g, &order, &mut |picks| {
        found = Some(unpermute(&order, picks));
        ControlFlow::Break(())
    });
    found
}

/// Calls `visit` on every clique with one vertex per part until it breaks.
/// Uses the same grouping rule as [`detect_unbalanced_kclique`]; grouped
/// listing walks the triangles of the group graph.
pub fn for_each_unbalanced_kclique<F>(g: &KPartiteGraph, gamma: Option<Ratio<u64>>, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = g.parts();
    if k == 0 {
        return visit(&[]);
    }
    if let Some((alpha, beta)) = gamma.and_then(|gm| grouping_parameters(k, gm)) {
        let grouped = Grouped::build(g, alpha, beta);
        for w1 in 0..grouped.nodes[0].len() {
            for w2 in ones(grouped.a12.row(w1)) {
                let (r13, r23) = (grouped.a13.row(w1), grouped.a23.row(w2));
                if !rows_intersect(r13, r23) {
                    continue;
                }
                for (wi, (x, y)) in r13.iter().zip(r23).enumerate() {
                    for b in ones(&[x & y]) {
                        visit(&grouped.witness(k, [w1, w2, wi * 64 + b]))?;
                    }
                }
            }
        }
        return ControlFlow::Continue(());
    }
    let order = ascending_order(g);
    search(g, &order, &mut |picks| visit(&unpermute(&order, picks)))
}

fn ascending_order(g: &KPartiteGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.parts()).collect();
    order.sort_by_key(|&p| g.part_size(p));
    order
}

fn unpermute(order: &[usize], picks: &[usize]) -> Vec<usize> {
    let mut out = vec![0; order.len()];
    for (&p, &a) in order.iter().zip(picks) {
        out[p] = a;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn complete(sizes: Vec<usize>) -> KPartiteGraph {
        KPartiteGraph::from_fn(sizes, |_, _, _, _| true)
    }

    fn count(g: &KPartiteGraph, gamma: Option<Ratio<u64>>) -> usize {
        let mut c = 0;
        let _ = for_each_unbalanced_kclique(g, gamma, |w| {
            assert!(g.is_clique(&w.iter().copied().enumerate().collect::<Vec<_>>()));
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    #[test]
    fn grouping_examples() {
        assert_eq!(grouping_parameters(8, Ratio::new(1, 2)), Some((1, 3)));
        assert_eq!(grouping_parameters(7, Ratio::new(1, 2)), None);
        assert_eq!(grouping_parameters(4, Ratio::new(1, 3)), None);
        assert_eq!(grouping_parameters(5, Ratio::new(2, 3)), None);
        assert_eq!(grouping_parameters(6, Ratio::new(1, 1)), Some((1, 2)));
    }

    #[test]
    fn complete_multipartite_has_a_transversal() {
        let g = complete(vec![2, 3, 1, 4]);
        let w = detect_unbalanced_kclique(&g, None).unwrap();
        assert_eq!(w, vec![0, 0, 0, 0]);
        assert_eq!(count(&g, None), 24);
    }

    #[test]
    fn planted_triangle() {
        let mut g = KPartiteGraph::new(vec![3, 3, 3]);
        g.add_edge(0, 1, 1, 2);
        g.add_edge(1, 2, 2, 0);
        g.add_edge(0, 1, 2, 0);
        g.add_edge(0, 0, 1, 0);
        g.add_edge(1, 0, 2, 1);
        assert_eq!(detect_unbalanced_kclique(&g, None), Some(vec![1, 2, 0]));
    }

    #[test]
    fn one_missing_edge_kills_the_only_transversal() {
        let mut g = complete(vec![1, 1, 1, 1]);
        assert!(detect_unbalanced_kclique(&g, None).is_some());
        g = KPartiteGraph::from_fn(vec![1, 1, 1, 1], |i, _, j, _| (i, j) != (1, 3));
        assert!(detect_unbalanced_kclique(&g, None).is_none());
    }

    #[test]
    fn grouped_matches_backtracking() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let sizes: Vec<usize> = (0..8).map(|i| if i == 3 { 6 } else { rng.gen_range(1..4) }).collect();
            let density = rng.gen_range(0.6..0.95);
            let g = KPartiteGraph::from_fn(sizes, |_, _, _, _| rng.gen_bool(density));
            let half = Some(Ratio::new(1, 2));
            assert_eq!(count(&g, half), count(&g, None));
            let grouped = detect_unbalanced_kclique(&g, half);
            assert_eq!(grouped.is_some(), detect_unbalanced_kclique(&g, None).is_some());
            if let Some(w) = grouped {
                assert!(g.is_clique(&w.into_iter().enumerate().collect::<Vec<_>>()));
            }
        }
    }
}
