//! Problem descriptions, solutions and the definition-level checker shared
//! by every solver.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex, VertexSet};
use crate::patterndom::Pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationVariant {
    /// Every vertex outside `S` has at least `r` neighbours in `S`.
    Multiple,
    /// Every closed neighbourhood meets `S` in at least `r` vertices.
    Tuple,
}

impl fmt::Display for DominationVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DominationVariant::Multiple => "multiple",
            DominationVariant::Tuple => "tuple",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Problem {
    Multidom { k: usize, r: usize, variant: DominationVariant },
    DomClique { k: usize },
    DomIndepset { k: usize },
    DomMatching { k: usize },
    Pattern { pattern: Pattern },
}

impl Problem {
    pub fn k(&self) -> usize {
        match self {
            Problem::Multidom { k, .. }
            | Problem::DomClique { k }
            | Problem::DomIndepset { k }
            | Problem::DomMatching { k } => *k,
            Problem::Pattern { pattern } => pattern.k(),
        }
    }
}

/// Witness data attached to a solution, re-checkable on its own.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    #[default]
    None,
    /// The two halves found by a matrix-product scan.
    Split { left: Vec<Vertex>, right: Vec<Vertex> },
    /// One vertex per part of the clique graph, in part order.
    Transversal { parts: Vec<Vertex> },
    /// Matching edges of an induced matching.
    Matching { edges: Vec<(Vertex, Vertex)> },
    /// `embedding[i]` is the graph vertex playing pattern vertex `i`.
    Embedding { embedding: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub problem: Problem,
    pub vertices: VertexSet,
    pub certificate: Certificate,
}

impl Solution {
    pub fn new(problem: Problem, vertices: VertexSet) -> Self {
        Self { problem, vertices, certificate: Certificate::None }
    }

    pub fn with_certificate(mut self, certificate: Certificate) -> Self {
        self.certificate = certificate;
        self
    }
}

/// The first condition a candidate set violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongSize { expected: usize, found: usize },
    VertexOutOfRange(Vertex),
    UnderDominated { vertex: Vertex, hits: usize, required: usize },
    Undominated(Vertex),
    NotAdjacent(Vertex, Vertex),
    Adjacent(Vertex, Vertex),
    NotInducedMatching { vertex: Vertex, degree_in_set: usize },
    NotIsomorphic,
    BadCertificate(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongSize { expected, found } => {
                write!(f, "set has {found} vertices, expected {expected}")
            }
            Violation::VertexOutOfRange(v) => write!(f, "vertex {v} is out of range"),
            Violation::UnderDominated { vertex, hits, required } => {
                write!(f, "vertex {vertex} is dominated {hits} times, needs {required}")
            }
            Violation::Undominated(v) => write!(f, "vertex {v} is not dominated"),
            Violation::NotAdjacent(u, v) => write!(f, "vertices {u} and {v} are not adjacent"),
            Violation::Adjacent(u, v) => write!(f, "vertices {u} and {v} are adjacent"),
            Violation::NotInducedMatching { vertex, degree_in_set } => {
                write!(f, "vertex {vertex} has {degree_in_set} neighbours inside the set, expected 1")
            }
            Violation::NotIsomorphic => write!(f, "induced subgraph is not isomorphic to the pattern"),
            Violation::BadCertificate(msg) => write!(f, "certificate invalid: {msg}"),
        }
    }
}

/// Checks `set` against the definition of `problem` on `graph`.
pub fn check_solution(graph: &Graph, problem: &Problem, set: &VertexSet) -> Result<(), Violation> {
    let k = problem.k();
    if set.len() != k {
        return Err(Violation::WrongSize { expected: k, found: set.len() });
    }
    if let Some(v) = set.iter().find(|&v| v >= graph.n()) {
        return Err(Violation::VertexOutOfRange(v));
    }
    let members = set.as_slice();
    match problem {
        Problem::Multidom { r, variant, .. } => {
            for v in graph.vertices() {
                let inside = set.contains(v);
                if inside && *variant == DominationVariant::Multiple {
                    continue;
                }
                let hits = graph.neighbors(v).iter().filter(|&&w| set.contains(w)).count() + usize::from(inside);
                if hits < *r {
                    return Err(Violation::UnderDominated { vertex: v, hits, required: *r });
                }
            }
            Ok(())
        }
        Problem::DomClique { .. } => {
            check_dominates(graph, members)?;
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if !graph.has_edge(u, v) {
                        return Err(Violation::NotAdjacent(u, v));
                    }
                }
            }
            Ok(())
        }
        Problem::DomIndepset { .. } => {
            check_dominates(graph, members)?;
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if graph.has_edge(u, v) {
                        return Err(Violation::Adjacent(u, v));
                    }
                }
            }
            Ok(())
        }
        Problem::DomMatching { .. } => {
            check_dominates(graph, members)?;
            for &u in members {
                let inside = graph.neighbors(u).iter().filter(|&&w| set.contains(w)).count();
                if inside != 1 {
                    return Err(Violation::NotInducedMatching { vertex: u, degree_in_set: inside });
                }
            }
            Ok(())
        }
        Problem::Pattern { pattern } => {
            check_dominates(graph, members)?;
            if crate::patterndom::find_isomorphism(graph, members, pattern).is_none() {
                return Err(Violation::NotIsomorphic);
            }
            Ok(())
        }
    }
}

fn check_dominates(graph: &Graph, set: &[Vertex]) -> Result<(), Violation> {
    let mask = graph.closed_neighborhood_mask(set);
    match mask.iter().position(|&b| !b) {
        Some(v) => Err(Violation::Undominated(v)),
        None => Ok(()),
    }
}

/// Definition check used as every solver's postcondition.
pub fn verify_solution(graph: &Graph, problem: &Problem, set: &VertexSet) -> bool {
    check_solution(graph, problem, set).is_ok()
}

/// Checks a full [`Solution`], including its certificate when one is present.
pub fn check_full(graph: &Graph, solution: &Solution) -> Result<(), Violation> {
    check_solution(graph, &solution.problem, &solution.vertices)?;
    match &solution.certificate {
        Certificate::None => Ok(()),
        Certificate::Split { left, right } => {
            let union = VertexSet::from_unsorted(left.iter().chain(right).copied().collect());
            if left.len() + right.len() != union.len() || union != solution.vertices {
                return Err(Violation::BadCertificate("split halves do not partition the set".into()));
            }
            Ok(())
        }
        Certificate::Transversal { parts } => {
            if VertexSet::from_unsorted(parts.clone()) != solution.vertices || parts.len() != solution.vertices.len() {
                return Err(Violation::BadCertificate("transversal does not match the set".into()));
            }
            Ok(())
        }
        Certificate::Matching { edges } => {
            let ends: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            if VertexSet::from_unsorted(ends.clone()) != solution.vertices || ends.len() != solution.vertices.len() {
                return Err(Violation::BadCertificate("matching edges do not cover the set".into()));
            }
            match edges.iter().find(|&&(u, v)| !graph.has_edge(u, v)) {
                Some(&(u, v)) => Err(Violation::NotAdjacent(u, v)),
                None => Ok(()),
            }
        }
        Certificate::Embedding { embedding } => {
            let Problem::Pattern { pattern } = &solution.problem else {
                return Err(Violation::BadCertificate("embedding on a non-pattern problem".into()));
            };
            if VertexSet::from_unsorted(embedding.clone()) != solution.vertices || embedding.len() != pattern.k() {
                return Err(Violation::BadCertificate("embedding does not match the set".into()));
            }
            for i in 0..pattern.k() {
                for j in i + 1..pattern.k() {
                    if pattern.has_edge(i, j) != graph.has_edge(embedding[i], embedding[j]) {
                        return Err(Violation::NotIsomorphic);
                    }
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn mult(k: usize, r: usize) -> Problem {
        Problem::Multidom { k, r, variant: DominationVariant::Multiple }
    }

    #[test]
    fn multidom_definition_examples() {
        let c5 = cycle(5);
        assert!(verify_solution(&c5, &mult(3, 2), &VertexSet::from_sorted(vec![0, 2, 4])));
        assert_eq!(
            check_solution(&c5, &mult(3, 2), &VertexSet::from_sorted(vec![0, 1, 2])),
            Err(Violation::UnderDominated { vertex: 3, hits: 1, required: 2 })
        );
        // vertex 4 is short as well, the first one is reported
        let without_three = VertexSet::from_sorted(vec![0, 1, 2]);
        assert!(c5.neighbors(4).iter().filter(|&&w| without_three.contains(w)).count() < 2);
        let p4 = path(4);
        let all = VertexSet::from_sorted(vec![0, 1, 2, 3]);
        assert!(verify_solution(&p4, &mult(4, 1), &all));
    }

    #[test]
    fn tuple_counts_the_vertex_itself() {
        let k4 = complete(4);
        let s = VertexSet::from_sorted(vec![0, 1, 2]);
        let tuple = Problem::Multidom { k: 3, r: 3, variant: DominationVariant::Tuple };
        assert!(verify_solution(&k4, &tuple, &s));
        let p4 = path(4);
        let tuple = Problem::Multidom { k: 3, r: 2, variant: DominationVariant::Tuple };
        assert!(!verify_solution(&p4, &tuple, &VertexSet::from_sorted(vec![0, 1, 3])));
        assert!(verify_solution(&p4, &mult(3, 2), &VertexSet::from_sorted(vec![0, 1, 3])));
    }

    #[test]
    fn pattern_problem_checks() {
        let c4 = cycle(4);
        let s = VertexSet::from_sorted(vec![0, 1, 2, 3]);
        assert_eq!(
            check_solution(&c4, &Problem::DomMatching { k: 4 }, &s),
            Err(Violation::NotInducedMatching { vertex: 0, degree_in_set: 2 })
        );
        assert!(verify_solution(&cycle(5), &Problem::DomIndepset { k: 2 }, &VertexSet::from_sorted(vec![0, 2])));
        assert_eq!(
            check_solution(&path(3), &Problem::DomClique { k: 2 }, &VertexSet::from_sorted(vec![0, 2])),
            Err(Violation::NotAdjacent(0, 2))
        );
    }

    #[test]
    fn wrong_size_is_reported() {
        assert_eq!(
            check_solution(&path(3), &mult(2, 1), &VertexSet::from_sorted(vec![1])),
            Err(Violation::WrongSize { expected: 2, found: 1 })
        );
    }
}

/// Counters reported by the matrix-product solvers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Sizes of the row and column index families, in that order.
    pub family_sizes: Vec<usize>,
    /// `[rows, inner, cols]` of every product formed.
    pub product_dims: Vec<[usize; 3]>,
    /// Coefficient multiply-adds or packed-word ANDs performed.
    pub scalar_ops: u64,
}
