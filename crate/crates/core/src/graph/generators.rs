//! Small named graphs and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, Vertex};

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Sparse graph with exactly `ratio` heavy vertices at solution size `k`
/// and exactly `ratio * n` edges.
///
/// Vertices `0..ratio` are hubs joined to `ceil(n/k)` random non-hubs each;
/// the remaining edges are drawn uniformly among non-hubs, rejecting any edge
/// that would make a non-hub heavy. Returns `None` when the parameters leave
/// no room for that (very small `n` or large `ratio`).
pub fn hub_graph<R: Rng + ?Sized>(n: usize, ratio: usize, k: usize, rng: &mut R) -> Option<Graph> {
    let hubs = ratio;
    let reach = n.div_ceil(k);
    let target = ratio * n;
    if k < 2 || hubs + reach > n || hubs * reach > target {
        return None;
    }
    let others: Vec<Vertex> = (hubs..n).collect();
    let mut present = std::collections::HashSet::new();
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(target);
    for h in 0..hubs {
        for &v in others.choose_multiple(rng, reach) {
            present.insert((h, v));
            degree[h] += 1;
            degree[v] += 1;
            edges.push((h, v));
        }
    }
    // Non-hub closed degree must stay strictly below n/k.
    let light = |deg: usize| (deg + 2) * k < n;
    let mut attempts = 0usize;
    while edges.len() < target {
        attempts += 1;
        if attempts > 200 * target + 1000 {
            return None;
        }
        let u = rng.gen_range(hubs..n);
        let v = rng.gen_range(hubs..n);
        let (u, v) = (u.min(v), u.max(v));
        if u == v || present.contains(&(u, v)) || !light(degree[u]) || !light(degree[v]) {
            continue;
        }
        present.insert((u, v));
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).ok()
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(path(4).m(), 3);
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(star(4).degree(0), 4);
    }

    #[test]
    fn hub_graph_controls_heavy_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for ratio in [2, 4] {
            let g = hub_graph(100, ratio, 4, &mut rng).unwrap();
            assert_eq!(g.m(), 100 * ratio);
            assert_eq!(g.heavy_vertices(4).as_slice(), (0..ratio).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn gnp_is_seeded() {
        let a = gnp(20, 0.3, &mut ChaCha8Rng::seed_from_u64(9));
        let b = gnp(20, 0.3, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
    }
}
