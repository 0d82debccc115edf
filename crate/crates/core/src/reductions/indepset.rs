use num_integer::Integer;

use crate::error::{Error, Result};
use crate::multidom::KPartiteGraph;
use crate::problem::{DominationVariant, Problem};

use super::{ReductionOutput, Role};

/// Number of source parts `d * ((k-1)p + q)` the reduction expects.
pub fn source_part_count(k: usize, p: u64, q: u64, d: usize) -> usize {
    d * ((k - 1) * p as usize + q as usize)
}

/// Independent transversals of `source` restricted to `parts`, odometer order.
fn independent_choices(source: &KPartiteGraph, parts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts.iter().any(|&p| source.part_size(p) == 0) {
        return out;
    }
    let mut pick = vec![0usize; parts.len()];
    loop {
        let independent = (0..parts.len())
            .all(|x| (x + 1..parts.len()).all(|y| !source.adjacent(parts[x], pick[x], parts[y], pick[y])));
        if independent {
            out.push(pick.clone());
        }
        let Some(x) = (0..parts.len()).rev().find(|&x| pick[x] + 1 < source.part_size(parts[x])) else {
            return out;
        };
        pick[x] += 1;
        for later in &mut pick[x + 1..] {
            *later = 0;
        }
    }
}

/// `(k-1)`-multiple `k`-dominating set instance that is a YES instance iff
/// the multipartite `source` has an independent transversal.
///
/// With `k' = (k-1)p + q`, the `d k'` source parts are split into `k - 1`
/// groups of `d p` parts and a last group of `d q`. Node set `V_i` holds the
/// independent choices over group `i`; different `V_i` are fully joined.
/// There is one node per source edge, adjacent to the choices avoiding both
/// its endpoints, and `k` blocks of `k + 1` nodes, block `i` joined to every
/// `V_j` with `j != i`.
pub fn indepset_to_multidom(source: &KPartiteGraph, k: usize, p: u64, q: u64, d: usize) -> Result<ReductionOutput> {
    if k < 2 || d == 0 || p == 0 || p >= q || p.gcd(&q) != 1 {
        return Err(Error::invalid(format!(
            "need k >= 2, d >= 1 and coprime 0 < p < q, got k={k}, p={p}, q={q}, d={d}"
        )));
    }
    let expected = source_part_count(k, p, q, d);
    if source.parts() != expected {
        return Err(Error::invalid(format!("source has {} parts, expected {expected}", source.parts())));
    }

    let mut groups = Vec::with_capacity(k);
    let mut next = 0;
    for i in 0..k {
        let width = d * if i + 1 < k { p } else { q } as usize;
        groups.push((next..next + width).collect::<Vec<usize>>());
        next += width;
    }

    let mut roles = Vec::new();
    let mut members: Vec<std::ops::Range<usize>> = Vec::with_capacity(k);
    for (group, parts) in groups.iter().enumerate() {
        let start = roles.len();
        for picks in independent_choices(source, parts) {
            roles.push(Role::Choice { group, parts: parts.clone(), picks });
        }
        members.push(start..roles.len());
    }

    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for u in members[i].clone() {
                edges.extend(members[j].clone().map(|v| (u, v)));
            }
        }
    }

    let source_edges = source.cross_edges();
    for &(pi, a, pj, b) in &source_edges {
        let f = roles.len();
        roles.push(Role::SourceEdge { ends: [[pi, a], [pj, b]] });
        for v in 0..f {
            if let Role::Choice { parts, picks, .. } = &roles[v] {
                let hits = |part: usize, x: usize| parts.iter().zip(picks).any(|(&pp, &pk)| pp == part && pk == x);
                if !hits(pi, a) && !hits(pj, b) {
                    edges.push((f, v));
                }
            }
        }
    }

    for block in 0..k {
        let start = roles.len();
        roles.extend((0..k + 1).map(|index| Role::Redundant { block, index }));
        for y in start..roles.len() {
            for (j, range) in members.iter().enumerate() {
                if j != block {
                    edges.extend(range.clone().map(|v| (v, y)));
                }
            }
        }
    }

    let n = roles.len();
    ReductionOutput::build(n, edges, Problem::Multidom { k, r: k - 1, variant: DominationVariant::Multiple }, roles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{verify_reduction, ReductionCase};

    #[test]
    fn planted_triple() {
        // complete 3-partite on 2+2+2 vertices minus the edges of {0, 1, 1}
        let mut source = KPartiteGraph::from_fn(vec![2, 2, 2], |_, _, _, _| true);
        source.remove_edge(0, 0, 1, 1);
        source.remove_edge(0, 0, 2, 1);
        source.remove_edge(1, 1, 2, 1);
        let case = ReductionCase::IsMultidom { source: source.clone(), k: 2, p: 1, q: 2, d: 1 };
        assert!(case.source_answer().unwrap());
        assert!(verify_reduction(&case).unwrap());

        let full = KPartiteGraph::from_fn(vec![2, 2, 2], |_, _, _, _| true);
        let case = ReductionCase::IsMultidom { source: full, k: 2, p: 1, q: 2, d: 1 };
        assert!(!case.source_answer().unwrap());
        assert!(verify_reduction(&case).unwrap());
    }

    #[test]
    fn block_structure() {
        let source = KPartiteGraph::new(vec![1, 1, 1, 1]);
        let out = indepset_to_multidom(&source, 3, 1, 2, 1).unwrap();
        for block in 0..3 {
            let size = out.count_roles(|r| matches!(r, Role::Redundant { block: b, .. } if *b == block));
            assert_eq!(size, 4);
        }
        assert_eq!(out.count_roles(|r| matches!(r, Role::Choice { .. })), 3);
        assert!(indepset_to_multidom(&source, 2, 1, 2, 1).is_err());
        assert!(indepset_to_multidom(&source, 3, 2, 4, 1).is_err());
    }
}
