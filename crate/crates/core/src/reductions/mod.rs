//! Instance generators for the lower-bound reductions. Each maps a source
//! instance (orthogonal vectors or multipartite independent set) to a graph
//! problem with the same answer, and [`verify_reduction`] checks that claim
//! with oracles on both sides.

mod indepset;
mod ov;
mod ov_gadgets;

pub use indepset::{indepset_to_multidom, source_part_count};
pub use ov::{solve_ov_bruteforce, OVInstance};
pub use ov_gadgets::{ov_to_hdom, ov_to_induced_matching, ov_to_multidom, pad_special_coordinates};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::multidom::KPartiteGraph;
use crate::oracles;
use crate::patterndom::Pattern;
use crate::problem::Problem;

/// What a target vertex stands for in the source instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "kebab-case")]
pub enum Role {
    /// Vector `index` of set `set`.
    Vector { set: usize, index: usize },
    /// Coordinate `coord`.
    Dimension { coord: usize },
    /// Member `index` of redundancy block `block`.
    Redundant { block: usize, index: usize },
    /// Source edge between `(part, index)` endpoints.
    SourceEdge { ends: [[usize; 2]; 2] },
    /// Independent choice over the parts of group `group`; `parts[i]` holds
    /// the source part and `picks[i]` the chosen vertex in it.
    Choice { group: usize, parts: Vec<usize>, picks: Vec<usize> },
}

/// Generated target instance with one role per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub problem: Problem,
    pub roles: Vec<Role>,
}

impl ReductionOutput {
    pub(crate) fn build(n: usize, edges: Vec<(usize, usize)>, problem: Problem, roles: Vec<Role>) -> Result<Self> {
        debug_assert_eq!(roles.len(), n);
        Ok(Self { graph: Graph::from_edges(n, edges)?, problem, roles })
    }

    pub fn count_roles<F: Fn(&Role) -> bool>(&self, pred: F) -> usize {
        self.roles.iter().filter(|r| pred(r)).count()
    }
}

/// A source instance together with the generator applied to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "kebab-case")]
pub enum ReductionCase {
    OvMultidom { instance: OVInstance, r: usize },
    OvHdom { instance: OVInstance, pattern: Pattern },
    OvMatching { instance: OVInstance },
    IsMultidom { source: KPartiteGraph, k: usize, p: u64, q: u64, d: usize },
}

impl ReductionCase {
    pub fn generate(&self) -> Result<ReductionOutput> {
        match self {
            Self::OvMultidom { instance, r } => ov_to_multidom(instance, *r),
            Self::OvHdom { instance, pattern } => ov_to_hdom(instance, pattern),
            Self::OvMatching { instance } => ov_to_induced_matching(instance),
            Self::IsMultidom { source, k, p, q, d } => indepset_to_multidom(source, *k, *p, *q, *d),
        }
    }

    /// Answer of the source instance by exhaustive search.
    pub fn source_answer(&self) -> Result<bool> {
        Ok(match self {
            Self::OvMultidom { instance, r } => oracles::oracle_ov(instance, *r)?.is_some(),
            Self::OvHdom { instance, .. } | Self::OvMatching { instance } => oracles::oracle_ov(instance, 1)?.is_some(),
            Self::IsMultidom { source, .. } => oracles::oracle_independent_transversal(source)?.is_some(),
        })
    }
}

/// Answer of a generated target instance by exhaustive search.
pub fn target_answer(output: &ReductionOutput) -> Result<bool> {
    let graph = &output.graph;
    Ok(match &output.problem {
        Problem::Multidom { k, r, variant } => oracles::oracle_multidom(graph, *k, *r, *variant)?.is_some(),
        Problem::Pattern { pattern } => oracles::oracle_pattern(graph, pattern)?.is_some(),
        Problem::DomMatching { k } => oracles::oracle_pattern(graph, &Pattern::perfect_matching(*k))?.is_some(),
        Problem::DomClique { k } => oracles::oracle_pattern(graph, &Pattern::clique(*k))?.is_some(),
        Problem::DomIndepset { k } => oracles::oracle_pattern(graph, &Pattern::edgeless(*k))?.is_some(),
    })
}

/// True when source and generated target have the same answer.
pub fn verify_reduction(case: &ReductionCase) -> Result<bool> {
    let output = case.generate()?;
    Ok(case.source_answer()? == target_answer(&output)?)
}

/// JSON document stored next to a generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub case: ReductionCase,
    pub problem: Problem,
    pub n: usize,
    pub m: usize,
    pub roles: Vec<Role>,
}

impl Sidecar {
    pub fn new(case: ReductionCase, output: &ReductionOutput) -> Self {
        Self {
            case,
            problem: output.problem.clone(),
            n: output.graph.n(),
            m: output.graph.m(),
            roles: output.roles.clone(),
        }
    }

    /// Regenerates the target and checks it against `graph` and the stored roles.
    pub fn matches(&self, graph: &Graph) -> Result<()> {
        let output = self.case.generate()?;
        if &output.graph != graph || output.roles != self.roles || output.problem != self.problem {
            return Err(Error::Format("graph or sidecar does not match the regenerated instance".into()));
        }
        Ok(())
    }
}
