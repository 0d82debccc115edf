use crate::graph::{Graph, Vertex};

/// All `t`-cliques, each sorted, in lexicographic order.
///
/// Extends a partial clique only by larger common neighbours, so every clique
/// is produced once; there are at most `(2m)^(t/2)` of them.
pub fn enumerate_cliques(graph: &Graph, t: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if t == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut current = Vec::with_capacity(t);
    for v in graph.vertices() {
        let cand: Vec<Vertex> = graph.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        current.push(v);
        grow(graph, t, &mut current, &cand, &mut out);
        current.pop();
    }
    out
}

fn grow(graph: &Graph, t: usize, current: &mut Vec<Vertex>, cand: &[Vertex], out: &mut Vec<Vec<Vertex>>) {
    if current.len() == t {
        out.push(current.clone());
        return;
    }
    if current.len() + cand.len() < t {
        return;
    }
    for (i, &w) in cand.iter().enumerate() {
        let next: Vec<Vertex> = cand[i + 1..].iter().copied().filter(|&x| graph.has_edge(w, x)).collect();
        current.push(w);
        grow(graph, t, current, &next, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn examples() {
        assert_eq!(enumerate_cliques(&complete(4), 3).len(), 4);
        assert!(enumerate_cliques(&cycle(5), 3).is_empty());
        let k4_minus = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(enumerate_cliques(&k4_minus, 3), vec![vec![0, 1, 2], vec![0, 1, 3]]);
        assert_eq!(enumerate_cliques(&cycle(4), 2).len(), 4);
        assert_eq!(enumerate_cliques(&cycle(4), 1).len(), 4);
    }
}
