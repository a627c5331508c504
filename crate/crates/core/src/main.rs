use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use hyperturan::checkers::{check, check_union_free_with_budget, Property};
use hyperturan::constructors::{predicted_exponents, DEFAULT_DENSITY};
use hyperturan::exact::{exact_max, exact_table, SearchProblem, SymmetryMode};
use hyperturan::experiments::{
    build_report, fit_exponent, run_build, run_report_file, search_json, table_csv, BuildKind,
    BuildSpec, FitBuilder,
};
use hyperturan::hypergraph::{Hypergraph, SparsityConstraint};

#[derive(Parser)]
#[command(name = "hyperturan", version, about = "Cancellative, union-free and cover-free hypergraphs")]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include wall-clock times in reports and tables.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a property; exit 0 if it holds, 1 if violated, 2 on error.
    Check {
        #[arg(long)]
        property: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        e: Option<usize>,
        #[arg(long = "in")]
        input: PathBuf,
        /// Print the verdict as JSON.
        #[arg(long)]
        json: bool,
        /// Evaluation budget for union-free checks.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Build a hypergraph by random alteration.
    Build {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Sparsity constraint `v,e`; repeatable (sparse builds only).
        #[arg(long = "constraint", value_parser = parse_constraint)]
        constraints: Vec<(usize, usize)>,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        c: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Write a JSON build report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exact maximum size of a family with the property.
    SearchMax {
        #[arg(long)]
        property: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        e: Option<usize>,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Witness file (single n) or CSV table (with --n-range).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Inclusive range `a..b`; emits a table.
        #[arg(long)]
        n_range: Option<String>,
        /// Disable the fixed-first-edge symmetry reduction.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Fit the growth exponent of a composed builder.
    Fit {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        /// Comma-separated n values.
        #[arg(long, value_delimiter = ',')]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long)]
        seed: u64,
        /// Directory for fit.json and fit.csv.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a batch described by a TOML config.
    Report {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print predicted exponents for (r, t).
    Predict {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
}

fn parse_constraint(s: &str) -> Result<(usize, usize), String> {
    let (v, e) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `v,e`, got `{s}`"))?;
    let v = v.trim().parse().map_err(|_| format!("bad v in `{s}`"))?;
    let e = e.trim().parse().map_err(|_| format!("bad e in `{s}`"))?;
    Ok((v, e))
}

fn parse_range(s: &str) -> anyhow::Result<(usize, usize)> {
    let (a, b) = s.split_once("..").context("range must look like `a..b`")?;
    let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty range {s}");
    }
    Ok((a, b))
}

fn write_json(path: &std::path::Path, v: &serde_json::Value) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let timing = cli.timing;
    match cli.cmd {
        Cmd::Check {
            property,
            t,
            v,
            e,
            input,
            json,
            budget,
        } => {
            let text =
                std::fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let h: Hypergraph = text.parse()?;
            let prop = Property::parse(&property, t, v, e)?;
            let verdict = match (prop, budget) {
                (Property::UnionFree { t }, Some(b)) => check_union_free_with_budget(&h, t, b)?,
                _ => check(&h, &prop)?,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&verdict.to_json())?);
            } else {
                match &verdict.certificate {
                    None => println!("{prop}: holds"),
                    Some(cert) => println!("{prop}: violated\n{cert}"),
                }
            }
            Ok(if verdict.holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Build {
            kind,
            n,
            r,
            t,
            k,
            constraints,
            c,
            seed,
            out,
            report,
        } => {
            let kind: BuildKind = kind.parse()?;
            let r = match (kind, r, k) {
                (BuildKind::Cancellative2Odd, _, Some(k)) => 2 * k + 1,
                (_, Some(r), _) => r,
                _ => bail!("--r is required"),
            };
            if kind != BuildKind::Sparse && !constraints.is_empty() {
                bail!("--constraint applies to sparse builds only");
            }
            let spec = BuildSpec {
                kind,
                n,
                r,
                t,
                k,
                constraints: constraints
                    .into_iter()
                    .map(|(v, e)| SparsityConstraint::new(r, v, e))
                    .collect::<Result<_, _>>()?,
                density: c,
                seed,
            };
            let start = Instant::now();
            let outcome = run_build(&spec)?;
            let wall = timing.then(|| start.elapsed());
            std::fs::write(&out, outcome.hypergraph.to_text())
                .with_context(|| format!("writing {}", out.display()))?;
            if let Some(path) = report {
                write_json(&path, &build_report(&spec, &outcome, wall))?;
            }
            eprintln!("built {} edges", outcome.hypergraph.len());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::SearchMax {
            property,
            n,
            r,
            t,
            v,
            e,
            budget,
            out,
            n_range,
            no_symmetry,
        } => {
            let prop = Property::parse(&property, t, v, e)?;
            let range = n_range.as_deref().map(parse_range).transpose()?;
            let first = match (n, range) {
                (_, Some((a, _))) => a,
                (Some(n), None) => n,
                (None, None) => bail!("give --n or --n-range"),
            };
            let mut p = SearchProblem::new(first, r, prop);
            p.time_budget = budget.map(std::time::Duration::from_secs_f64);
            if no_symmetry {
                p.symmetry = SymmetryMode::None;
            }
            if let Some((a, b)) = range {
                let rows = exact_table(&p, a..=b)?;
                let csv = table_csv(&rows, timing);
                match out {
                    Some(path) => std::fs::write(&path, csv)?,
                    None => print!("{csv}"),
                }
            } else {
                let start = Instant::now();
                let res = exact_max(&p)?;
                let secs = timing.then(|| start.elapsed().as_secs_f64());
                if let Some(path) = out {
                    std::fs::write(&path, res.witness.to_text())?;
                }
                println!("{}", serde_json::to_string_pretty(&search_json(&p, &res, secs))?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fit {
            kind,
            r,
            t,
            n_list,
            reps,
            seed,
            out,
        } => {
            let builder: FitBuilder = kind.parse()?;
            let fit = fit_exponent(builder, r, t, &n_list, reps, seed)?;
            std::fs::create_dir_all(&out)?;
            let mut doc = fit.to_json();
            doc["builder"] = json!(builder.name());
            doc["r"] = json!(r);
            doc["t"] = json!(t);
            write_json(&out.join("fit.json"), &doc)?;
            std::fs::write(out.join("fit.csv"), fit.to_csv())?;
            println!(
                "slope {:.4} (predicted {} = {:.4}, residual {:+.4})",
                fit.slope,
                fit.predicted,
                *fit.predicted.numer() as f64 / *fit.predicted.denom() as f64,
                fit.residual
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Report { config, out } => {
            let report = run_report_file(&config, out.as_deref(), timing)?;
            if report.failed > 0 {
                eprintln!("{} item(s) failed", report.failed);
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Predict { r, t } => {
            println!("{}", serde_json::to_string_pretty(&predicted_exponents(r, t)?.to_json())?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
