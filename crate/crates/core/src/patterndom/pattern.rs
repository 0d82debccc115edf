use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Small simple graph on vertices `0..k` that a dominating set must induce.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPattern", into = "RawPattern")]
pub struct Pattern {
    k: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct RawPattern {
    k: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawPattern> for Pattern {
    type Error = Error;

    fn try_from(raw: RawPattern) -> Result<Self> {
        Pattern::new(raw.k, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Pattern> for RawPattern {
    fn from(p: Pattern) -> Self {
        RawPattern { k: p.k, edges: p.edges.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

impl Pattern {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(k: usize, edges: I) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("pattern needs at least one vertex"));
        }
        let mut adjacency = vec![vec![false; k]; k];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= k || b >= k {
                return Err(Error::invalid(format!("pattern edge ({a}, {b}) out of range for k = {k}")));
            }
            if a == b {
                return Err(Error::invalid(format!("pattern self-loop on {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !adjacency[a][b] {
                adjacency[a][b] = true;
                adjacency[b][a] = true;
                list.push(e);
            }
        }
        list.sort_unstable();
        Ok(Self { k, edges: list, adjacency })
    }

    pub fn clique(k: usize) -> Self {
        Self::new(k, (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b)))).expect("valid clique")
    }

    pub fn edgeless(k: usize) -> Self {
        Self::new(k, []).expect("valid edgeless pattern")
    }

    /// Perfect matching `{0,1}, {2,3}, ...` on an even number of vertices.
    pub fn perfect_matching(k: usize) -> Self {
        assert!(k.is_multiple_of(2), "perfect matching needs even k");
        Self::new(k, (0..k / 2).map(|i| (2 * i, 2 * i + 1))).expect("valid matching")
    }

    pub fn path(k: usize) -> Self {
        Self::new(k, (1..k).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adjacency[a].iter().filter(|&&x| x).count()
    }
}

/// Maps pattern vertices onto `set` so that adjacency is preserved exactly.
///
/// Backtracking over pattern vertices in order of decreasing degree; a graph
/// vertex is only tried for a pattern vertex of the same induced degree.
pub fn find_isomorphism(graph: &Graph, set: &[Vertex], pattern: &Pattern) -> Option<Vec<Vertex>> {
    let k = pattern.k();
    if set.len() != k {
        return None;
    }
    let adj: Vec<Vec<bool>> =
        set.iter().map(|&u| set.iter().map(|&v| u != v && graph.has_edge(u, v)).collect()).collect();
    let set_deg: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
    let pat_deg: Vec<usize> = (0..k).map(|a| pattern.degree(a)).collect();

    let mut sorted_set = set_deg.clone();
    let mut sorted_pat = pat_deg.clone();
    sorted_set.sort_unstable();
    sorted_pat.sort_unstable();
    if sorted_set != sorted_pat {
        return None;
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&a| std::cmp::Reverse(pat_deg[a]));
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; k];

    fn extend(
        depth: usize,
        order: &[usize],
        pattern: &Pattern,
        adj: &[Vec<bool>],
        set_deg: &[usize],
        pat_deg: &[usize],
        assign: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let a = order[depth];
        for x in 0..adj.len() {
            if used[x] || set_deg[x] != pat_deg[a] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&b| pattern.has_edge(a, b) == adj[x][assign[b]]);
            if !consistent {
                continue;
            }
            used[x] = true;
            assign[a] = x;
            if extend(depth + 1, order, pattern, adj, set_deg, pat_deg, assign, used) {
                return true;
            }
            used[x] = false;
        }
        false
    }

    extend(0, &order, pattern, &adj, &set_deg, &pat_deg, &mut assign, &mut used)
        .then(|| assign.iter().map(|&x| set[x]).collect())
}
