use std::ops::ControlFlow;

use num_rational::Ratio;

use serde::{Deserialize, Serialize};

use crate::algebra::BoolMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::problem::{verify_solution, Certificate, DominationVariant, Problem, Solution};

use super::pairs::{complement_closed_neighborhoods, list_2_dominating_sets};
use super::unbalanced::{detect_unbalanced_kclique, for_each_unbalanced_kclique};

/// Graph with `k` parts and edges only between distinct parts. Adjacency
/// between parts `i` and `j` is a packed `|V_i| x |V_j|` bit matrix, stored
/// for both orientations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawKPartite", into = "RawKPartite")]
pub struct KPartiteGraph {
    sizes: Vec<usize>,
    cross: Vec<Vec<BoolMatrix>>,
}

impl KPartiteGraph {
    pub fn new(sizes: Vec<usize>) -> Self {
        let cross = sizes
            .iter()
            .enumerate()
            .map(|(i, &si)| {
                sizes.iter().enumerate().map(|(j, &sj)| if i == j { BoolMatrix::zeros(0, 0) } else { BoolMatrix::zeros(si, sj) }).collect()
            })
            .collect();
        Self { sizes, cross }
    }

    /// Builds the graph with an edge wherever `f(i, a, j, b)` holds for
    /// `i < j`.
    pub fn from_fn<F>(sizes: Vec<usize>, mut f: F) -> Self
    where
        F: FnMut(usize, usize, usize, usize) -> bool,
    {
        let mut g = Self::new(sizes);
        let k = g.sizes.len();
        for i in 0..k {
            for j in i + 1..k {
                for a in 0..g.sizes[i] {
                    for b in 0..g.sizes[j] {
                        if f(i, a, j, b) {
                            g.add_edge(i, a, j, b);
                        }
                    }
                }
            }
        }
        g
    }

    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn part_size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    pub fn add_edge(&mut self, i: usize, a: usize, j: usize, b: usize) {
        assert_ne!(i, j, "no intra-part edges");
        self.cross[i][j].set(a, b, true);
        self.cross[j][i].set(b, a, true);
    }

    pub fn remove_edge(&mut self, i: usize, a: usize, j: usize, b: usize) {
        assert_ne!(i, j, "no intra-part edges");
        self.cross[i][j].set(a, b, false);
        self.cross[j][i].set(b, a, false);
    }

    /// Random multipartite graph: every cross pair is an edge with probability `p`.
    pub fn random<R: rand::Rng>(sizes: Vec<usize>, p: f64, rng: &mut R) -> Self {
        Self::from_fn(sizes, |_, _, _, _| rng.gen_bool(p))
    }

    /// Adds every edge among the given picks, one vertex per part.
    pub fn plant_clique(&mut self, picks: &[usize]) {
        for i in 0..picks.len() {
            for j in i + 1..picks.len() {
                self.add_edge(i, picks[i], j, picks[j]);
            }
        }
    }

    pub fn adjacent(&self, i: usize, a: usize, j: usize, b: usize) -> bool {
        i != j && self.cross[i][j].get(a, b)
    }

    /// Packed neighbours of vertex `a` of part `i` inside part `j`.
    pub fn neighbors_in(&self, i: usize, a: usize, j: usize) -> &[u64] {
        self.cross[i][j].row(a)
    }

    pub fn edge_count(&self) -> usize {
        let k = self.parts();
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).map(|(i, j)| self.cross[i][j].count_ones()).sum()
    }

    /// Every edge once as `(i, a, j, b)` with `i < j`, sorted.
    pub fn cross_edges(&self) -> Vec<(usize, usize, usize, usize)> {
        let k = self.parts();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                for a in 0..self.sizes[i] {
                    out.extend(self.cross[i][j].row_ones(a).map(|b| (i, a, j, b)));
                }
            }
        }
        out
    }

    /// True when the given vertices (one per listed part) are pairwise adjacent.
    pub fn is_clique(&self, picks: &[(usize, usize)]) -> bool {
        picks
            .iter()
            .enumerate()
            .all(|(x, &(i, a))| picks[x + 1..].iter().all(|&(j, b)| self.adjacent(i, a, j, b)))
    }
}

/// Serialized form: part sizes and `[part, index, part, index]` edges.
#[derive(Serialize, Deserialize)]
struct RawKPartite {
    sizes: Vec<usize>,
    edges: Vec<[usize; 4]>,
}

impl TryFrom<RawKPartite> for KPartiteGraph {
    type Error = Error;

    fn try_from(raw: RawKPartite) -> Result<Self> {
        let mut g = KPartiteGraph::new(raw.sizes);
        for [i, a, j, b] in raw.edges {
            if i == j || i >= g.parts() || j >= g.parts() || a >= g.sizes[i] || b >= g.sizes[j] {
                return Err(Error::Format(format!("bad multipartite edge [{i}, {a}, {j}, {b}]")));
            }
            g.add_edge(i, a, j, b);
        }
        Ok(g)
    }
}

impl From<KPartiteGraph> for RawKPartite {
    fn from(g: KPartiteGraph) -> Self {
        let edges = g.cross_edges().into_iter().map(|(i, a, j, b)| [i, a, j, b]).collect();
        RawKPartite { sizes: g.sizes, edges }
    }
}

/// A clique graph plus the original vertex behind every copy.
#[derive(Clone, Debug)]
pub struct CliqueGraph {
    pub graph: KPartiteGraph,
    pub origin: Vec<Vec<Vertex>>,
}

impl CliqueGraph {
    /// Original vertices of a transversal given as local indices per part.
    pub fn originals(&self, witness: &[usize]) -> Vec<Vertex> {
        witness.iter().enumerate().map(|(p, &a)| self.origin[p][a]).collect()
    }
}

fn layout(graph: &Graph, k: usize) -> Vec<Vec<Vertex>> {
    let heavy = graph.heavy_vertices(k);
    let mut origin = vec![heavy.as_slice().to_vec(); k - 1];
    origin.push(graph.vertices().collect());
    origin
}

fn from_relation<F: Fn(Vertex, Vertex) -> bool>(origin: Vec<Vec<Vertex>>, related: F) -> CliqueGraph {
    let sizes = origin.iter().map(Vec::len).collect();
    let graph = KPartiteGraph::from_fn(sizes, |i, a, j, b| {
        let (u, v) = (origin[i][a], origin[j][b]);
        u != v && related(u, v)
    });
    CliqueGraph { graph, origin }
}

/// Parts `V_1..V_{k-1}` are copies of the heavy set, `V_k` a copy of `V`;
/// copies of distinct vertices are adjacent iff the two vertices dominate
/// the graph. Its `k`-cliques are exactly the `(k-1)`-tuple dominating sets
/// of size `k`.
pub fn build_clique_graph(graph: &Graph, k: usize) -> Result<CliqueGraph> {
    if k < 2 {
        return Err(Error::invalid("clique graph needs k >= 2"));
    }
    let n = graph.n();
    let mut dominating = BoolMatrix::zeros(n, n);
    for (u, v) in list_2_dominating_sets(graph) {
        dominating.set(u, v, true);
        dominating.set(v, u, true);
    }
    Ok(from_relation(layout(graph, k), |u, v| dominating.get(u, v)))
}

/// Same layout with the weaker pair relation `|V \ (N[u] ∪ N[v])| <= k - 2`.
///
/// In a `(k-1)`-multiple dominating set every vertex a pair misses must be
/// one of the other `k - 2` members, so every such set is a clique here; the
/// converse does not hold and cliques have to be checked.
pub fn build_clique_graph_relaxed(graph: &Graph, k: usize) -> Result<CliqueGraph> {
    if k < 2 {
        return Err(Error::invalid("clique graph needs k >= 2"));
    }
    let missed = complement_closed_neighborhoods(graph);
    Ok(from_relation(layout(graph, k), |u, v| missed.row_overlap(u, &missed, v) <= k - 2))
}

/// `(k-1)`-multiple or `(k-1)`-tuple dominating set of exactly `k` distinct
/// vertices through unbalanced `k`-clique search.
///
/// The tuple variant runs the dominating-pair clique graph with first-hit
/// detection. The multiple variant lists cliques of the relaxed graph and
/// returns the first one that passes the definition check.
pub fn solve_multidom_kminus1(
    graph: &Graph,
    k: usize,
    variant: DominationVariant,
    gamma: Option<Ratio<u64>>,
) -> Result<Option<Solution>> {
    if k < 2 {
        return Err(Error::invalid(format!("pipeline needs k >= 2, got {k}")));
    }
    let problem = Problem::Multidom { k, r: k - 1, variant };
    if k > graph.n() {
        return Ok(None);
    }
    let finish = |parts: Vec<Vertex>| {
        Solution::new(problem.clone(), VertexSet::from_unsorted(parts.clone()))
            .with_certificate(Certificate::Transversal { parts })
    };
    match variant {
        DominationVariant::Tuple => {
            let cg = build_clique_graph(graph, k)?;
            let found = detect_unbalanced_kclique(&cg.graph, gamma).map(|w| finish(cg.originals(&w)));
            debug_assert!(found.as_ref().is_none_or(|s| verify_solution(graph, &s.problem, &s.vertices)));
            Ok(found)
        }
        DominationVariant::Multiple => {
            let cg = build_clique_graph_relaxed(graph, k)?;
            let mut found = None;
            let _ = for_each_unbalanced_kclique(&cg.graph, gamma, |w| {
                let parts = cg.originals(w);
                let set = VertexSet::from_unsorted(parts.clone());
                if verify_solution(graph, &problem, &set) {
                    found = Some(finish(parts));
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            Ok(found)
        }
    }
}
