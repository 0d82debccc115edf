//! Immutable undirected sparse graphs in compressed adjacency form.

mod generators;
mod io;

pub use generators::*;
pub use io::{load_graph, save_edge_list, GraphFormat};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Strictly sorted set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a set from arbitrary ids, sorting and removing duplicates.
    pub fn from_unsorted(mut ids: Vec<Vertex>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }

    /// Wraps an already strictly sorted vector.
    pub fn from_sorted(ids: Vec<Vertex>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Self(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        VertexSet::from_unsorted(out)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Membership mask of length `n`.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph stored as offsets into one sorted neighbour array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed edges are
    /// merged; self-loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u, v));
            pairs.push((v, u));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Self { offsets, neighbors })
    }

    pub fn empty(n: usize) -> Self {
        Self { offsets: vec![0; n + 1], neighbors: Vec::new() }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Open neighbourhood, sorted.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Closed-neighbourhood size `|N[v]|`.
    pub fn closed_degree(&self, v: Vertex) -> usize {
        self.degree(v) + 1
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let nbrs = self.neighbors(v);
        let mut out = Vec::with_capacity(nbrs.len() + 1);
        let split = nbrs.partition_point(|&w| w < v);
        out.extend_from_slice(&nbrs[..split]);
        out.push(v);
        out.extend_from_slice(&nbrs[split..]);
        Ok(VertexSet::from_sorted(out))
    }

    /// Vertices with `deg*(v) >= n/k`, compared exactly as `deg*(v) * k >= n`.
    ///
    /// At most `(n + 2m) * k / n` vertices qualify since the closed degrees
    /// sum to `n + 2m`.
    pub fn heavy_vertices(&self, k: usize) -> VertexSet {
        assert!(k >= 1, "heavy threshold needs k >= 1");
        let n = self.n();
        let heavy: Vec<Vertex> =
            self.vertices().filter(|&v| self.closed_degree(v) * k >= n).collect();
        debug_assert!(heavy.len() * n <= (n + 2 * self.m()) * k);
        VertexSet::from_sorted(heavy)
    }

    /// Induced subgraph on `keep` (sorted, distinct). Returns the subgraph and
    /// the map from new ids to original ids.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut offsets = Vec::with_capacity(keep.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for &v in keep {
            neighbors.extend(self.neighbors(v).iter().filter_map(|&w| {
                let id = new_id[w];
                (id != usize::MAX).then_some(id)
            }));
            offsets.push(neighbors.len());
        }
        (Graph { offsets, neighbors }, keep.to_vec())
    }

    /// `G - N[v]` with compacted ids plus the new-to-original id map.
    pub fn delete_closed_neighborhood(&self, v: Vertex) -> Result<(Graph, Vec<Vertex>)> {
        let closed = self.closed_neighborhood(v)?;
        let keep: Vec<Vertex> = self.vertices().filter(|&w| !closed.contains(w)).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// `N[S]` as a membership mask.
    pub fn closed_neighborhood_mask(&self, set: &[Vertex]) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for &s in set {
            mask[s] = true;
            for &w in self.neighbors(s) {
                mask[w] = true;
            }
        }
        mask
    }

    /// True when `N[S] = V`.
    pub fn dominates(&self, set: &[Vertex]) -> bool {
        self.closed_neighborhood_mask(set).into_iter().all(|b| b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_neighborhood_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.closed_neighborhood(0).unwrap().as_slice(), &[0, 1, 4]);
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(g.closed_neighborhood(2).unwrap().as_slice(), &[2]);
        assert_eq!(complete(4).closed_neighborhood(2).unwrap().as_slice(), &[0, 1, 2, 3]);
        assert!(matches!(c5.closed_neighborhood(5), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn heavy_vertex_examples() {
        // deg* of the centre is 5 >= 2.5, leaves have 2 < 2.5
        assert_eq!(star(4).heavy_vertices(2).as_slice(), &[0]);
        assert_eq!(complete(3).heavy_vertices(3).as_slice(), &[0, 1, 2]);
        assert!(Graph::empty(4).heavy_vertices(2).is_empty());
    }

    #[test]
    fn heavy_threshold_is_exact_at_boundary() {
        // n = 6, k = 4: threshold 1.5, so deg* = 2 is heavy and deg* = 1 is not.
        let g = Graph::from_edges(6, [(0, 1)]).unwrap();
        assert_eq!(g.heavy_vertices(4).as_slice(), &[0, 1]);
        // n = 6, k = 3: threshold exactly 2.
        assert_eq!(g.heavy_vertices(3).as_slice(), &[0, 1]);
    }

    #[test]
    fn delete_closed_neighborhood_examples() {
        let (g, map) = path(4).delete_closed_neighborhood(1).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(map, vec![3]);

        let (g, map) = complete(4).delete_closed_neighborhood(2).unwrap();
        assert_eq!(g.n(), 0);
        assert!(map.is_empty());

        let (g, map) = cycle(5).delete_closed_neighborhood(0).unwrap();
        assert_eq!(map, vec![2, 3]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn from_edges_invariants() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from_unsorted(vec![3, 1, 3]);
        let b: VertexSet = [2, 4].into_iter().collect();
        assert_eq!(a.as_slice(), &[1, 3]);
        assert!(a.is_disjoint(&b));
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 4]);
        assert_eq!(a.to_string(), "{1,3}");
    }
}
