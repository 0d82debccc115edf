use crate::graph::{Graph, Vertex, VertexSet};
use crate::subsets::{binomial, subsets_of};

/// All vertex subsets of one size holding at least `quota` heavy vertices,
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateFamily {
    pub size: usize,
    pub quota: usize,
    pub members: Vec<VertexSet>,
}

impl CandidateFamily {
    /// Enumerates the family directly by choosing `j >= quota` heavy and
    /// `size - j` light vertices.
    pub fn enumerate(n: usize, heavy: &VertexSet, size: usize, quota: usize) -> Self {
        let heavy_list = heavy.as_slice();
        let light: Vec<Vertex> = (0..n).filter(|&v| !heavy.contains(v)).collect();
        let mut members = Vec::new();
        for j in quota..=size.min(heavy_list.len()) {
            if size - j > light.len() {
                continue;
            }
            let heavy_parts = subsets_of(heavy_list, j);
            let light_parts = subsets_of(&light, size - j);
            for hp in &heavy_parts {
                for lp in &light_parts {
                    members.push(VertexSet::from_unsorted(hp.iter().chain(lp).copied().collect()));
                }
            }
        }
        members.sort_unstable();
        Self { size, quota, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `(size, quota)` of the row family and of the column family for `(k, r)`:
/// rows take `ceil((k-r)/2) + floor(r/2)` vertices with `floor(r/2)` heavy,
/// columns `floor((k-r)/2) + ceil(r/2)` with `ceil(r/2)` heavy.
pub fn family_shape(k: usize, r: usize) -> ((usize, usize), (usize, usize)) {
    assert!(r <= k);
    let free = k - r;
    let left = (free.div_ceil(2) + r / 2, r / 2);
    let right = (free / 2 + r.div_ceil(2), r.div_ceil(2));
    (left, right)
}

pub fn build_candidate_families(graph: &Graph, k: usize, r: usize) -> (CandidateFamily, CandidateFamily) {
    let heavy = graph.heavy_vertices(k.max(1));
    let ((ls, lq), (rs, rq)) = family_shape(k, r);
    (
        CandidateFamily::enumerate(graph.n(), &heavy, ls, lq),
        CandidateFamily::enumerate(graph.n(), &heavy, rs, rq),
    )
}

/// `sum_{j >= quota} C(h, j) * C(n - h, size - j)`.
pub fn family_size_closed_form(n: usize, heavy: usize, size: usize, quota: usize) -> u128 {
    (quota..=size).map(|j| binomial(heavy, j) * binomial(n.saturating_sub(heavy), size - j)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn shapes_follow_the_split() {
        assert_eq!(family_shape(3, 1), ((1, 0), (2, 1)));
        assert_eq!(family_shape(4, 2), ((2, 1), (2, 1)));
        assert_eq!(family_shape(5, 3), ((2, 1), (3, 2)));
        for k in 1..9 {
            for r in 0..=k {
                let ((a, _), (b, _)) = family_shape(k, r);
                assert_eq!(a + b, k);
            }
        }
    }

    #[test]
    fn triangle_pairs() {
        let (s, t) = build_candidate_families(&complete(3), 3, 1);
        assert_eq!(s.members.len(), 3);
        let pairs: Vec<Vec<usize>> = t.members.iter().map(|m| m.as_slice().to_vec()).collect();
        assert_eq!(pairs, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(family_size_closed_form(10, 3, 2, 1), 3 * 7 + 3);
        assert_eq!(family_size_closed_form(10, 0, 2, 1), 0);
        assert_eq!(family_size_closed_form(4, 4, 2, 0), 6);
    }
}
