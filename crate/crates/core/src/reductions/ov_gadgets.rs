use crate::error::{Error, Result};
use crate::patterndom::Pattern;
use crate::problem::{DominationVariant, Problem};
use crate::subsets::subsets_of;

use super::{OVInstance, ReductionOutput, Role};

/// Vector vertices part by part, then dimension vertices. Returns the roles
/// so far, the first id of every part, and the vector-dimension edges
/// (`x - t` iff the vector is zero at `t`).
fn vectors_and_dimensions(inst: &OVInstance) -> (Vec<Role>, Vec<usize>, Vec<(usize, usize)>) {
    let mut roles = Vec::new();
    let mut first = Vec::with_capacity(inst.k);
    for (set, vectors) in inst.sets.iter().enumerate() {
        first.push(roles.len());
        roles.extend((0..vectors.len()).map(|index| Role::Vector { set, index }));
    }
    let dim0 = roles.len();
    roles.extend((0..inst.d).map(|coord| Role::Dimension { coord }));
    let mut edges = Vec::new();
    for (i, vectors) in inst.sets.iter().enumerate() {
        for (a, v) in vectors.iter().enumerate() {
            edges.extend((0..inst.d).filter(|&t| !v[t]).map(|t| (first[i] + a, dim0 + t)));
        }
    }
    (roles, first, edges)
}

fn push_block(roles: &mut Vec<Role>, block: usize, size: usize) -> std::ops::Range<usize> {
    let start = roles.len();
    roles.extend((0..size).map(|index| Role::Redundant { block, index }));
    start..roles.len()
}

/// `r`-multiple `k`-dominating set instance equivalent to `r`-multiple `k`-OV.
///
/// Besides vector and dimension vertices there is a block of `k + 1`
/// redundancy vertices for every `r`-subset `Q` of the parts, joined to the
/// vectors of the parts in `Q`; this forces one chosen vertex per part.
/// Vectors of the first `r` parts are joined to the vectors of every other
/// part so unchosen vectors are always covered `r` times.
pub fn ov_to_multidom(inst: &OVInstance, r: usize) -> Result<ReductionOutput> {
    let k = inst.k;
    if r == 0 || r >= k {
        return Err(Error::invalid(format!("need 1 <= r <= k-1, got r={r}, k={k}")));
    }
    let (mut roles, first, mut edges) = vectors_and_dimensions(inst);
    let part = |i: usize| first[i]..first[i] + inst.sets[i].len();
    for (block, q) in subsets_of(&(0..k).collect::<Vec<_>>(), r).into_iter().enumerate() {
        for y in push_block(&mut roles, block, k + 1) {
            for &i in &q {
                edges.extend(part(i).map(|x| (x, y)));
            }
        }
    }
    for i in 0..r {
        for j in i + 1..k {
            for x in part(i) {
                edges.extend(part(j).map(|z| (x, z)));
            }
        }
    }
    let n = roles.len();
    ReductionOutput::build(n, edges, Problem::Multidom { k, r, variant: DominationVariant::Multiple }, roles)
}

/// `H`-dominating set instance equivalent to `k`-OV with `k = |V(H)|`.
///
/// Parts are cliques, and two vectors of parts `i != j` are adjacent iff
/// pattern vertices `i` and `j` are. Redundancy block `i` hangs off part `i`;
/// blocks have `k + 1` vertices except the last, which has
/// `max(k + 1, max_i |A_i|)`.
pub fn ov_to_hdom(inst: &OVInstance, pattern: &Pattern) -> Result<ReductionOutput> {
    let k = inst.k;
    if pattern.k() != k {
        return Err(Error::SizeMismatch { pattern: pattern.k(), instance: k });
    }
    if k < 3 {
        return Err(Error::invalid(format!("pattern reduction needs k >= 3, got {k}")));
    }
    let (mut roles, first, mut edges) = vectors_and_dimensions(inst);
    let part = |i: usize| first[i]..first[i] + inst.sets[i].len();
    for i in 0..k {
        for x in part(i) {
            edges.extend(part(i).filter(|&z| z > x).map(|z| (x, z)));
        }
        for j in i + 1..k {
            if pattern.has_edge(i, j) {
                for x in part(i) {
                    edges.extend(part(j).map(|z| (x, z)));
                }
            }
        }
    }
    let largest = inst.sets.iter().map(Vec::len).max().unwrap_or(0);
    for i in 0..k {
        let size = if i + 1 == k { largest.max(k + 1) } else { k + 1 };
        for y in push_block(&mut roles, i, size) {
            edges.extend(part(i).map(|x| (x, y)));
        }
    }
    let n = roles.len();
    ReductionOutput::build(n, edges, Problem::Pattern { pattern: pattern.clone() }, roles)
}

/// Appends `k + 1` coordinates per set that are zero exactly on that set's
/// vectors. Orthogonality is unchanged; the dimension becomes `d + k(k + 1)`.
pub fn pad_special_coordinates(inst: &OVInstance) -> OVInstance {
    let k = inst.k;
    let sets = inst
        .sets
        .iter()
        .enumerate()
        .map(|(i, vectors)| {
            vectors
                .iter()
                .map(|v| {
                    let mut padded = v.clone();
                    padded.extend((0..k).flat_map(|owner| std::iter::repeat_n(owner != i, k + 1)));
                    padded
                })
                .collect()
        })
        .collect();
    OVInstance { k, d: inst.d + k * (k + 1), sets }
}

/// Dominating induced matching instance of size `k` equivalent to `k`-OV.
///
/// Consecutive parts `(0, 1), (2, 3), ...` are joined by complete bipartite
/// graphs; the padding coordinates force one chosen vector per part.
pub fn ov_to_induced_matching(inst: &OVInstance) -> Result<ReductionOutput> {
    let k = inst.k;
    if k % 2 == 1 {
        return Err(Error::OddK(k));
    }
    let padded = pad_special_coordinates(inst);
    let (roles, first, mut edges) = vectors_and_dimensions(&padded);
    let part = |i: usize| first[i]..first[i] + padded.sets[i].len();
    for i in (0..k).step_by(2) {
        for x in part(i) {
            edges.extend(part(i + 1).map(|z| (x, z)));
        }
    }
    let n = roles.len();
    ReductionOutput::build(n, edges, Problem::DomMatching { k }, roles)
}
