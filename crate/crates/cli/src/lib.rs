//! Command-line front end for the domlab solvers.
//!
//! [`run`] parses arguments and writes to the given streams, so tests can
//! drive every subcommand in-process. Exit codes: 0 for YES or PASS, 1 for
//! NO or FAIL, 2 for errors.

pub mod args;
pub mod bench;
pub mod generate;
pub mod result;
pub mod solve;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use anyhow::Result;
use clap::Parser;

use crate::args::{Cli, Command};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Runs `f` on a pool of `threads` workers (all cores for 0 or `None`) and
/// returns the worker count actually used.
#[cfg(feature = "parallel")]
fn with_threads<T>(threads: Option<usize>, f: impl FnOnce(usize) -> T + Send) -> Result<T>
where
    T: Send,
{
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build()?;
    Ok(pool.install(|| f(domlab::par::current_threads())))
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T>(_threads: Option<usize>, f: impl FnOnce(usize) -> T + Send) -> Result<T> {
    Ok(f(1))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Solve(args) => {
            let result = with_threads(cli.threads, |t| solve::cmd_solve(args, t))??;
            if args.json {
                writeln!(out, "{}", result.to_json())?;
            } else {
                write!(out, "{}", result.to_text())?;
            }
            Ok(if result.answer { EXIT_YES } else { EXIT_NO })
        }
        Command::Generate(args) => {
            write!(out, "{}", generate::cmd_generate(args)?)?;
            Ok(EXIT_YES)
        }
        Command::Verify(args) => {
            let report = with_threads(cli.threads, |_| verify::cmd_verify(args))??;
            writeln!(out, "{}", report.message)?;
            Ok(if report.pass { EXIT_YES } else { EXIT_NO })
        }
        Command::Bench(args) => {
            write!(out, "{}", with_threads(cli.threads, |_| bench::cmd_bench(args))??)?;
            Ok(EXIT_YES)
        }
    }
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}
