use std::time::Instant;

use anyhow::Result;
use domlab::graph::hub_graph;
use domlab::multidom::{
    family_shape, family_size_closed_form, solve_multidom, solve_multidom_fast_with_stats, MultidomAlgorithm,
};
use domlab::{DominationVariant, SolveStats};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{Algo, BenchArgs, BenchFormat};

pub const CSV_HEADER: &str = "n,ratio,m,heavy,k,r,algo,rep,status,answer,elapsed_ms,scalar_op_count,\
family_left,family_right,closed_form_left,closed_form_right";

/// One benchmark run. `status` is `ok`, `skipped` (brute cap) or
/// `no-instance` (parameters leave no room for a hub graph).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub ratio: usize,
    pub m: Option<usize>,
    pub heavy: Option<usize>,
    pub k: usize,
    pub r: usize,
    pub algo: String,
    pub rep: usize,
    pub status: String,
    pub answer: Option<bool>,
    pub elapsed_ms: Option<f64>,
    pub scalar_op_count: Option<u64>,
    pub family_left: Option<usize>,
    pub family_right: Option<usize>,
    pub closed_form_left: Option<u128>,
    pub closed_form_right: Option<u128>,
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        [
            self.n.to_string(),
            self.ratio.to_string(),
            cell(&self.m),
            cell(&self.heavy),
            self.k.to_string(),
            self.r.to_string(),
            self.algo.clone(),
            self.rep.to_string(),
            self.status.clone(),
            cell(&self.answer),
            self.elapsed_ms.map(|e| format!("{e:.3}")).unwrap_or_default(),
            cell(&self.scalar_op_count),
            cell(&self.family_left),
            cell(&self.family_right),
            cell(&self.closed_form_left),
            cell(&self.closed_form_right),
        ]
        .join(",")
    }
}

fn run_one(graph: &domlab::Graph, args: &BenchArgs, algo: Algo) -> Result<(bool, SolveStats)> {
    let variant = DominationVariant::Multiple;
    Ok(match algo {
        Algo::Fast => {
            let (found, stats) = solve_multidom_fast_with_stats(graph, args.k, args.r, variant)?;
            (found.is_some(), stats)
        }
        Algo::Brute => {
            (solve_multidom(graph, args.k, args.r, variant, MultidomAlgorithm::Brute, None)?.is_some(), SolveStats::default())
        }
        Algo::Pipeline => (
            solve_multidom(graph, args.k, args.r, variant, MultidomAlgorithm::Pipeline, None)?.is_some(),
            SolveStats::default(),
        ),
    })
}

/// Runs the sweep. Instance `(n, ratio, rep)` comes from its own ChaCha
/// stream of `seed`, so rows do not depend on which algorithms are listed.
pub fn bench_rows(args: &BenchArgs) -> Result<Vec<BenchRow>> {
    let ((ls, lq), (rs, rq)) = family_shape(args.k, args.r);
    let mut rows = Vec::new();
    let mut stream = 0u64;
    for &n in &args.n {
        for &ratio in &args.ratio {
            for rep in 0..args.reps {
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                rng.set_stream(stream);
                stream += 1;
                let graph = hub_graph(n, ratio, args.k, &mut rng);
                for &algo in &args.algos {
                    let mut row = BenchRow {
                        n,
                        ratio,
                        m: None,
                        heavy: None,
                        k: args.k,
                        r: args.r,
                        algo: algo.name().to_string(),
                        rep,
                        status: "ok".to_string(),
                        answer: None,
                        elapsed_ms: None,
                        scalar_op_count: None,
                        family_left: None,
                        family_right: None,
                        closed_form_left: None,
                        closed_form_right: None,
                    };
                    let Some(graph) = &graph else {
                        row.status = "no-instance".to_string();
                        rows.push(row);
                        continue;
                    };
                    let heavy = graph.heavy_vertices(args.k).len();
                    row.m = Some(graph.m());
                    row.heavy = Some(heavy);
                    row.closed_form_left = Some(family_size_closed_form(n, heavy, ls, lq));
                    row.closed_form_right = Some(family_size_closed_form(n, heavy, rs, rq));
                    if algo == Algo::Brute && family_size_closed_form(n, 0, args.k, 0) > args.brute_cap {
                        row.status = "skipped".to_string();
                        rows.push(row);
                        continue;
                    }
                    let start = Instant::now();
                    let (answer, stats) = run_one(graph, args, algo)?;
                    let elapsed = start.elapsed().as_secs_f64() * 1e3;
                    row.answer = Some(answer);
                    row.elapsed_ms = Some(if args.no_timing { 0.0 } else { elapsed });
                    row.scalar_op_count = Some(stats.scalar_ops);
                    if let [left, right] = stats.family_sizes[..] {
                        row.family_left = Some(left);
                        row.family_right = Some(right);
                    }
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}

pub fn cmd_bench(args: &BenchArgs) -> Result<String> {
    let rows = bench_rows(args)?;
    Ok(match args.format {
        BenchFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for row in &rows {
                out += &row.to_csv();
                out.push('\n');
            }
            out
        }
        BenchFormat::Json => serde_json::to_string_pretty(&rows)? + "\n",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows_match_the_header() {
        let row = BenchRow {
            n: 10,
            ratio: 2,
            m: None,
            heavy: None,
            k: 4,
            r: 2,
            algo: "fast".into(),
            rep: 0,
            status: "no-instance".into(),
            answer: None,
            elapsed_ms: None,
            scalar_op_count: None,
            family_left: None,
            family_right: None,
            closed_form_left: None,
            closed_form_right: None,
        };
        assert_eq!(row.to_csv().split(',').count(), CSV_HEADER.split(',').count());
        assert_eq!(row.to_csv(), "10,2,,,4,2,fast,0,no-instance,,,,,,,");
    }
}
