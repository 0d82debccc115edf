use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::multidom::list_2_dominating_sets;
use crate::problem::{Problem, Solution};

/// Dominating independent set of exactly `k` vertices.
///
/// Some member `v` is heavy in the current graph; the other members then
/// form a dominating independent set of `G - N[v]`. The recursion tries every
/// heavy `v` and bottoms out at `k = 2` (non-adjacent dominating pairs) or
/// `k = 1` (universal vertex).
pub fn solve_dominating_indepset(graph: &Graph, k: usize) -> Result<Option<Solution>> {
    if k == 0 {
        return Ok(None);
    }
    let ids: Vec<Vertex> = graph.vertices().collect();
    let found = search(graph, k, &ids)?;
    Ok(found.map(|set| Solution::new(Problem::DomIndepset { k }, VertexSet::from_unsorted(set))))
}

fn search(graph: &Graph, k: usize, ids: &[Vertex]) -> Result<Option<Vec<Vertex>>> {
    let n = graph.n();
    if k > n {
        return Ok(None);
    }
    match k {
        1 => return Ok(graph.vertices().find(|&v| graph.closed_degree(v) == n).map(|v| vec![ids[v]])),
        2 => {
            let pair = list_2_dominating_sets(graph).into_iter().find(|&(u, v)| !graph.has_edge(u, v));
            return Ok(pair.map(|(u, v)| vec![ids[u], ids[v]]));
        }
        _ => {}
    }
    for v in graph.heavy_vertices(k).iter() {
        let (rest, map) = graph.delete_closed_neighborhood(v)?;
        let rest_ids: Vec<Vertex> = map.iter().map(|&w| ids[w]).collect();
        if let Some(mut set) = search(&rest, k - 1, &rest_ids)? {
            set.push(ids[v]);
            return Ok(Some(set));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::problem::verify_solution;

    #[test]
    fn examples() {
        let s = solve_dominating_indepset(&path(4), 2).unwrap().unwrap();
        assert!(verify_solution(&path(4), &s.problem, &s.vertices));
        let s = solve_dominating_indepset(&cycle(5), 2).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 2]);
        assert!(solve_dominating_indepset(&complete(3), 2).unwrap().is_none());
        let s = solve_dominating_indepset(&cycle(6), 3).unwrap().unwrap();
        assert!(verify_solution(&cycle(6), &s.problem, &s.vertices));
        assert!(solve_dominating_indepset(&cycle(5), 3).unwrap().is_none());
        let s = solve_dominating_indepset(&Graph::empty(3), 3).unwrap().unwrap();
        assert_eq!(s.vertices.as_slice(), &[0, 1, 2]);
    }
}
