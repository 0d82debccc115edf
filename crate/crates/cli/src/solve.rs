use std::fs::File;
use std::io::BufReader;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use domlab::graph::{load_graph, GraphFormat};
use domlab::multidom::{solve_multidom, solve_multidom_at_most, solve_multidom_fast_with_stats, MultidomAlgorithm};
use domlab::oracles::{oracle_multidom, oracle_pattern};
use domlab::patterndom::{
    solve_dominating_clique_with_stats, solve_dominating_indepset, solve_dominating_induced_matching_with_stats,
    solve_pattern_domination_with_stats, Pattern,
};
use domlab::{DominationVariant, Error, Graph, Problem, SolveStats, Solution};
use num_rational::Ratio;

use crate::args::{Algo, ProblemKind, SolveArgs};
use crate::result::{RunConfig, RunResult};

pub fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    load_graph(BufReader::new(file), format).with_context(|| format!("cannot read {}", path.display()))
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    serde_json::from_reader(BufReader::new(file)).with_context(|| format!("cannot parse {}", path.display()))
}

pub fn parse_gamma(s: &str) -> Result<Ratio<u64>> {
    let gamma: Ratio<u64> = s.parse().map_err(|_| anyhow::anyhow!("gamma must look like p/q, got {s:?}"))?;
    if *gamma.numer() == 0 {
        bail!("gamma must be positive");
    }
    Ok(gamma)
}

fn multidom_algo(algo: Algo) -> MultidomAlgorithm {
    match algo {
        Algo::Fast => MultidomAlgorithm::Fast,
        Algo::Brute => MultidomAlgorithm::Brute,
        Algo::Pipeline => MultidomAlgorithm::Pipeline,
    }
}

/// The problem as stated on the command line, for flag checks and NO answers.
pub fn problem_of(args: &SolveArgs) -> Result<Problem> {
    let k = args.k;
    if k == 0 {
        bail!("k must be at least 1");
    }
    let multidom = matches!(args.problem, ProblemKind::Multidom | ProblemKind::Tupledom);
    if args.r.is_some() && !multidom {
        bail!("--r only applies to multidom and tupledom");
    }
    if args.pattern.is_some() && args.problem != ProblemKind::Pattern {
        bail!("--pattern only applies to --problem pattern");
    }
    if args.gamma.is_some() && args.algo != Algo::Pipeline {
        bail!("--gamma only applies to --algo pipeline");
    }
    if args.algo == Algo::Pipeline && !multidom {
        bail!("--algo pipeline only applies to multidom and tupledom");
    }
    Ok(match args.problem {
        ProblemKind::Multidom | ProblemKind::Tupledom => {
            let r = args.r.context("--r is required for multidom and tupledom")?;
            let variant =
                if args.problem == ProblemKind::Multidom { DominationVariant::Multiple } else { DominationVariant::Tuple };
            Problem::Multidom { k, r, variant }
        }
        ProblemKind::DomClique => Problem::DomClique { k },
        ProblemKind::DomIndepset => Problem::DomIndepset { k },
        ProblemKind::DomMatching => Problem::DomMatching { k },
        ProblemKind::Pattern => {
            let path = args.pattern.as_ref().context("--pattern is required for --problem pattern")?;
            let pattern: Pattern = read_json(path)?;
            if pattern.k() != k {
                bail!("pattern has {} vertices but --k is {k}", pattern.k());
            }
            Problem::Pattern { pattern }
        }
    })
}

/// Brute-force answers come back as pattern problems; restate them.
fn restate(found: Option<Solution>, problem: &Problem) -> Option<Solution> {
    found.map(|s| Solution::new(problem.clone(), s.vertices))
}

/// Solves a pattern-type problem at exactly size `problem.k()`.
fn solve_pattern_kind(graph: &Graph, problem: &Problem, algo: Algo) -> Result<(Option<Solution>, SolveStats)> {
    let none = SolveStats::default();
    let brute = algo == Algo::Brute;
    Ok(match problem {
        Problem::DomClique { k } if brute => (restate(oracle_pattern(graph, &Pattern::clique(*k))?, problem), none),
        Problem::DomClique { k } => solve_dominating_clique_with_stats(graph, *k)?,
        Problem::DomIndepset { k } if brute => (restate(oracle_pattern(graph, &Pattern::edgeless(*k))?, problem), none),
        Problem::DomIndepset { k } => (solve_dominating_indepset(graph, *k)?, none),
        Problem::DomMatching { k } if k % 2 == 1 => return Err(Error::OddK(*k).into()),
        Problem::DomMatching { k } if brute => {
            (restate(oracle_pattern(graph, &Pattern::perfect_matching(*k))?, problem), none)
        }
        Problem::DomMatching { k } => solve_dominating_induced_matching_with_stats(graph, *k)?,
        Problem::Pattern { pattern } if brute => (oracle_pattern(graph, pattern)?, none),
        Problem::Pattern { pattern } => solve_pattern_domination_with_stats(graph, pattern)?,
        Problem::Multidom { .. } => unreachable!("multidom handled by the caller"),
    })
}

fn solve_problem(graph: &Graph, problem: &Problem, args: &SolveArgs) -> Result<(Option<Solution>, SolveStats)> {
    let gamma = args.gamma.as_deref().map(parse_gamma).transpose()?;
    match problem {
        &Problem::Multidom { k, r, variant } => {
            if args.at_most_k {
                return Ok((solve_multidom_at_most(graph, k, r, variant, multidom_algo(args.algo))?, SolveStats::default()));
            }
            match args.algo {
                Algo::Fast => Ok(solve_multidom_fast_with_stats(graph, k, r, variant)?),
                Algo::Brute if r <= k => Ok((oracle_multidom(graph, k, r, variant)?, SolveStats::default())),
                algo => Ok((solve_multidom(graph, k, r, variant, multidom_algo(algo), gamma)?, SolveStats::default())),
            }
        }
        Problem::Pattern { .. } if args.at_most_k => bail!("--at-most-k does not apply to --problem pattern"),
        _ if args.at_most_k => {
            let k = problem.k();
            if matches!(problem, Problem::DomMatching { .. }) && k % 2 == 1 {
                return Err(Error::OddK(k).into());
            }
            let mut total = SolveStats::default();
            for size in 1..=k.min(graph.n()) {
                let sub = match problem {
                    Problem::DomClique { .. } => Problem::DomClique { k: size },
                    Problem::DomIndepset { .. } => Problem::DomIndepset { k: size },
                    _ if size % 2 == 1 => continue,
                    _ => Problem::DomMatching { k: size },
                };
                let (found, stats) = solve_pattern_kind(graph, &sub, args.algo)?;
                total.family_sizes.extend(stats.family_sizes);
                total.product_dims.extend(stats.product_dims);
                total.scalar_ops += stats.scalar_ops;
                if found.is_some() {
                    return Ok((found, total));
                }
            }
            Ok((None, total))
        }
        _ => solve_pattern_kind(graph, problem, args.algo),
    }
}

pub fn cmd_solve(args: &SolveArgs, threads: usize) -> Result<RunResult> {
    let problem = problem_of(args)?;
    let graph = read_graph(&args.graph, args.format)?;
    let start = Instant::now();
    let (found, stats) = solve_problem(&graph, &problem, args)?;
    let elapsed_ms = if args.no_timing { 0.0 } else { (start.elapsed().as_secs_f64() * 1e6).round() / 1e3 };
    let config = RunConfig { algo: args.algo.name().to_string(), seed: args.seed, threads };
    Ok(RunResult::new(problem, found, stats, elapsed_ms, config))
}
