use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use domlab::graph::save_edge_list;
use domlab::multidom::KPartiteGraph;
use domlab::patterndom::Pattern;
use domlab::reductions::{source_part_count, OVInstance, ReductionCase, Sidecar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::{GenerateArgs, ReductionKind};
use crate::solve::{parse_gamma, read_json};

pub fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn random_ov(args: &GenerateArgs, rng: &mut ChaCha8Rng) -> Result<OVInstance> {
    let d = args.d.unwrap_or(3);
    let sizes = match args.sizes.as_slice() {
        [] => vec![2; args.k],
        [s] => vec![*s; args.k],
        s if s.len() == args.k => s.to_vec(),
        s => bail!("--sizes lists {} sets but --k is {}", s.len(), args.k),
    };
    let sets = sizes
        .iter()
        .map(|&size| (0..size).map(|_| (0..d).map(|_| !rng.gen_bool(args.zero_prob)).collect()).collect())
        .collect();
    Ok(OVInstance::new(d, sets)?)
}

fn ov_source(args: &GenerateArgs, rng: &mut ChaCha8Rng) -> Result<OVInstance> {
    let inst = match &args.source {
        Some(path) => read_json(path)?,
        None => random_ov(args, rng)?,
    };
    if inst.k != args.k {
        bail!("source has {} sets but --k is {}", inst.k, args.k);
    }
    Ok(inst)
}

/// Builds the reduction case described by the flags.
pub fn build_case(args: &GenerateArgs) -> Result<ReductionCase> {
    if !(0.0..=1.0).contains(&args.zero_prob) || !(0.0..=1.0).contains(&args.edge_prob) {
        bail!("probabilities must lie in [0, 1]");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    Ok(match args.reduction {
        ReductionKind::OvMultidom => ReductionCase::OvMultidom { instance: ov_source(args, &mut rng)?, r: args.r },
        ReductionKind::OvHdom => {
            let pattern = match &args.pattern {
                Some(path) => read_json(path)?,
                None => Pattern::path(args.k),
            };
            ReductionCase::OvHdom { instance: ov_source(args, &mut rng)?, pattern }
        }
        ReductionKind::OvMatching => {
            if args.k % 2 == 1 {
                return Err(domlab::Error::OddK(args.k).into());
            }
            ReductionCase::OvMatching { instance: ov_source(args, &mut rng)? }
        }
        ReductionKind::IsMultidom => {
            if args.k < 2 {
                bail!("is-multidom needs k >= 2");
            }
            let gamma = parse_gamma(&args.gamma)?;
            let (p, q) = (*gamma.numer(), *gamma.denom());
            let d = args.d.unwrap_or(1);
            let parts = source_part_count(args.k, p, q, d);
            let source = match &args.source {
                Some(path) => read_json::<KPartiteGraph>(path)?,
                None => {
                    let sizes = match args.sizes.as_slice() {
                        [] => vec![2; parts],
                        [s] => vec![*s; parts],
                        s => s.to_vec(),
                    };
                    KPartiteGraph::random(sizes, args.edge_prob, &mut rng)
                }
            };
            if source.parts() != parts {
                bail!("source has {} parts, expected d((k-1)p + q) = {parts}", source.parts());
            }
            ReductionCase::IsMultidom { source, k: args.k, p, q, d }
        }
    })
}

fn summary(case: &ReductionCase, sidecar: &Sidecar) -> String {
    let head = match case {
        ReductionCase::OvMultidom { instance, r } => {
            format!("ov-multidom: k={} d={} r={r} sizes={:?}", instance.k, instance.d, set_sizes(instance))
        }
        ReductionCase::OvHdom { instance, pattern } => format!(
            "ov-hdom: k={} d={} sizes={:?} pattern_edges={:?}",
            instance.k,
            instance.d,
            set_sizes(instance),
            pattern.edges()
        ),
        ReductionCase::OvMatching { instance } => {
            format!("ov-matching: k={} d={} sizes={:?}", instance.k, instance.d, set_sizes(instance))
        }
        ReductionCase::IsMultidom { source, k, p, q, d } => format!(
            "is-multidom: k={k} gamma={p}/{q} d={d} k'={} source_parts={} source_sizes={:?}",
            (*k - 1) * *p as usize + *q as usize,
            source.parts(),
            source.sizes()
        ),
    };
    format!("{head}\ntarget: n={} m={} problem={}\n", sidecar.n, sidecar.m, serde_json::to_string(&sidecar.problem).unwrap())
}

fn set_sizes(inst: &OVInstance) -> Vec<usize> {
    inst.sets.iter().map(Vec::len).collect()
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<String> {
    let case = build_case(args)?;
    let output = case.generate()?;
    let sidecar = Sidecar::new(case.clone(), &output);

    let graph_path = with_suffix(&args.out, ".txt");
    let sidecar_path = with_suffix(&args.out, ".json");
    let mut w = BufWriter::new(File::create(&graph_path).with_context(|| format!("cannot create {}", graph_path.display()))?);
    save_edge_list(&output.graph, &mut w)?;
    w.flush()?;
    let mut w = BufWriter::new(File::create(&sidecar_path).with_context(|| format!("cannot create {}", sidecar_path.display()))?);
    serde_json::to_writer_pretty(&mut w, &sidecar)?;
    writeln!(w)?;
    w.flush()?;

    Ok(format!("{}wrote {} and {}\n", summary(&case, &sidecar), graph_path.display(), sidecar_path.display()))
}
