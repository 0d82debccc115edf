use crate::algebra::{complement_zero_pairs, BoolMatrix};
use crate::graph::{Graph, Vertex};

/// Row `v` marks the vertices outside `N[v]`.
pub fn complement_closed_neighborhoods(graph: &Graph) -> BoolMatrix {
    let n = graph.n();
    let mut m = BoolMatrix::zeros(n, n);
    for v in graph.vertices() {
        m.set(v, v, true);
        for &w in graph.neighbors(v) {
            m.set(v, w, true);
        }
    }
    m.complement()
}

/// All pairs `u < v` with `N[u] ∪ N[v] = V`.
///
/// `(M M^T)[u, v]` counts vertices missed by both, where `M` is the
/// complement closed-neighbourhood matrix; `M` is symmetric, so it serves as
/// its own transpose.
pub fn list_2_dominating_sets(graph: &Graph) -> Vec<(Vertex, Vertex)> {
    let m = complement_closed_neighborhoods(graph);
    complement_zero_pairs(&m, &m)
        .expect("square matrix")
        .into_iter()
        .filter(|&(u, v)| u < v)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, star};

    fn by_definition(g: &Graph) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in g.vertices() {
            for v in u + 1..g.n() {
                if g.dominates(&[u, v]) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(list_2_dominating_sets(&star(4)), vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(list_2_dominating_sets(&cycle(4)).len(), 6);
        assert_eq!(list_2_dominating_sets(&complete(2)), vec![(0, 1)]);
        assert_eq!(list_2_dominating_sets(&cycle(6)), vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn matches_definition_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..60 {
            let g = crate::graph::gnp(3 + trial % 70, [0.1, 0.4, 0.8][trial % 3], &mut rng);
            assert_eq!(list_2_dominating_sets(&g), by_definition(&g));
        }
    }
}
