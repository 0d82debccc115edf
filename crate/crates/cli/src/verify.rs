use std::path::Path;

use anyhow::{bail, Result};
use domlab::problem::{check_full, check_solution, Violation};
use domlab::reductions::{target_answer, ReductionOutput, Sidecar};
use domlab::{Graph, Problem};

use crate::args::VerifyArgs;
use crate::result::RunResult;
use crate::solve::{read_graph, read_json};

pub struct Report {
    pub pass: bool,
    pub message: String,
}

impl Report {
    fn pass(message: impl Into<String>) -> Self {
        Self { pass: true, message: format!("PASS: {}", message.into()) }
    }

    fn fail(message: impl Into<String>) -> Self {
        Self { pass: false, message: format!("FAIL: {}", message.into()) }
    }
}

/// YES results are checked against the definition. NO results are
/// confirmed by exhaustive search within the oracle budget.
pub fn verify_result(graph: &Graph, result: &RunResult) -> Result<Report> {
    if result.answer != result.solution.is_some() {
        return Ok(Report::fail("answer and solution disagree"));
    }
    match result.to_solution() {
        Some(solution) => Ok(match check_full(graph, &solution) {
            Ok(()) => Report::pass(format!("{:?} is a valid solution", solution.vertices.as_slice())),
            Err(violation @ Violation::WrongSize { .. }) => match resized(&solution.problem, solution.vertices.len())
                .and_then(|p| check_solution(graph, &p, &solution.vertices).err())
            {
                Some(inner) => Report::fail(format!("{violation}; {inner}")),
                None => Report::fail(violation.to_string()),
            },
            Err(violation) => Report::fail(violation.to_string()),
        }),
        None => {
            let output = ReductionOutput { graph: graph.clone(), problem: result.problem.clone(), roles: Vec::new() };
            Ok(if target_answer(&output)? {
                Report::fail("exhaustive search finds a solution")
            } else {
                Report::pass("exhaustive search confirms NO")
            })
        }
    }
}

/// The same problem at another size, so a short set can still be checked
/// for the vertex it leaves uncovered.
fn resized(problem: &Problem, k: usize) -> Option<Problem> {
    match *problem {
        Problem::Multidom { r, variant, .. } if k > 0 => Some(Problem::Multidom { k, r, variant }),
        Problem::DomClique { .. } if k > 0 => Some(Problem::DomClique { k }),
        Problem::DomIndepset { .. } if k > 0 => Some(Problem::DomIndepset { k }),
        Problem::DomMatching { .. } if k > 0 => Some(Problem::DomMatching { k }),
        _ => None,
    }
}

pub fn verify_sidecar(graph: &Graph, sidecar: &Sidecar) -> Result<Report> {
    if let Err(e) = sidecar.matches(graph) {
        return Ok(Report::fail(e.to_string()));
    }
    let source = sidecar.case.source_answer()?;
    let target = target_answer(&sidecar.case.generate()?)?;
    let verdict = |b: bool| if b { "YES" } else { "NO" };
    let detail = format!("source {} and target {}", verdict(source), verdict(target));
    Ok(if source == target { Report::pass(detail) } else { Report::fail(detail) })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Report> {
    match (&args.result, &args.sidecar) {
        (Some(result), None) => {
            let Some(graph) = &args.graph else { bail!("--graph is required with --result") };
            let graph = read_graph(graph, args.format)?;
            verify_result(&graph, &read_json(result)?)
        }
        (None, Some(sidecar)) => {
            let graph_path = args.graph.clone().unwrap_or_else(|| Path::new(sidecar).with_extension("txt"));
            let graph = read_graph(&graph_path, args.format)?;
            verify_sidecar(&graph, &read_json(sidecar)?)
        }
        _ => bail!("pass exactly one of --result or --sidecar"),
    }
}
