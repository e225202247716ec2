//! `cpfs`: group decision making with circular Pythagorean fuzzy values.

mod config;
mod input;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use cpfs::fusion::fuse;
use cpfs::mcdm::{complexity_estimate, solve};
use cpfs::Operator;

use crate::config::Config;
use crate::input::{load_collections, ProblemFile};
use crate::output::{fmt_num, Tables};

#[derive(Parser)]
#[command(name = "cpfs", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the alternatives of a decision problem and write every table.
    Solve(SolveArgs),
    /// Fuse collections of PFVs into circular values.
    Fuse(FuseArgs),
    /// Print the estimated operation count of a run.
    Complexity(ComplexityArgs),
    /// Check a decision problem (and optional config) without solving it.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Directory for the CSV tables, `normalized.json`, `ranking.txt` and
    /// `result.json`.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// One of cpwa_q, cpwa_p, cpwg_q, cpwg_p.
    #[arg(long)]
    operator: Option<Operator>,
    /// Decimal places in printed and tabulated numbers.
    #[arg(long)]
    precision: Option<u32>,
}

#[derive(Args)]
struct FuseArgs {
    /// JSON array of collections, each an array of `[mu, nu]` pairs.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = config::DEFAULT_PRECISION)]
    precision: u32,
}

#[derive(Args)]
struct ComplexityArgs {
    /// Number of criteria (upper bound with --sweep).
    k: u64,
    /// Number of alternatives (upper bound with --sweep).
    n: u64,
    /// Number of experts (upper bound with --sweep).
    m: u64,
    #[arg(long, default_value_t = Operator::CPWA_Q)]
    operator: Operator,
    /// Print a CSV grid over 2..=k, 2..=n, 1..=m instead of a single count.
    #[arg(long)]
    sweep: bool,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    config: Option<PathBuf>,
}

fn run_solve(args: SolveArgs) -> Result<()> {
    let settings = Config::load(args.config.as_deref())?
        .resolve(args.operator, args.precision)
        .context("invalid configuration")?;
    let problem = ProblemFile::load(&args.input)?;
    let solution = solve(&problem, &settings.operator.aggregator())?;
    if let Some(dir) = &args.out_dir {
        Tables {
            solution: &solution,
            operator: settings.operator,
            precision: settings.precision,
        }
        .write_all(dir)?;
    }
    let mut out = io::stdout().lock();
    writeln!(out, "operator: {}", settings.operator)?;
    for e in solution.ranking.entries() {
        writeln!(out, "{}: {}", e.label, fmt_num(e.score, settings.precision))?;
    }
    writeln!(out, "ranking: {}", solution.ranking.ascending())?;
    if let Some(best) = solution.ranking.best() {
        writeln!(out, "best: {}", best.label)?;
    }
    Ok(())
}

fn run_fuse(args: FuseArgs) -> Result<()> {
    let collections = load_collections(&args.input)?;
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(["collection", "mu", "nu", "r"])?;
    for (k, coll) in collections.iter().enumerate() {
        let c = fuse(coll)?;
        let p = args.precision;
        w.write_record([
            (k + 1).to_string(),
            fmt_num(c.mu(), p),
            fmt_num(c.nu(), p),
            fmt_num(c.r(), p),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn run_complexity(args: ComplexityArgs) -> Result<()> {
    let mut out = io::stdout().lock();
    if !args.sweep {
        writeln!(
            out,
            "{}",
            complexity_estimate(args.k, args.n, args.m, args.operator)?
        )?;
        return Ok(());
    }
    // validates the upper corner before printing anything
    complexity_estimate(args.k, args.n, args.m, args.operator)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["k", "n", "m", "count"])?;
    for k in 2..=args.k {
        for n in 2..=args.n {
            for m in 1..=args.m {
                let count = complexity_estimate(k, n, m, args.operator)?;
                w.write_record([k, n, m, count].map(|x| x.to_string()))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn run_validate(args: ValidateArgs) -> Result<()> {
    Config::load(args.config.as_deref())?
        .resolve(None, None)
        .context("invalid configuration")?;
    let p = ProblemFile::load(&args.input)?;
    println!(
        "ok: {} alternatives, {} criteria, {} experts",
        p.alternatives().len(),
        p.criteria().len(),
        p.experts().len()
    );
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Solve(a) => run_solve(a),
        Command::Fuse(a) => run_fuse(a),
        Command::Complexity(a) => run_complexity(a),
        Command::Validate(a) => run_validate(a),
    }
}
