//! Exponent fitting and config-driven batch runs.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::checkers::{check, check_sparse, check_union_free_with_budget, Property, PropertyVerdict};
use crate::constructors::{
    alteration_construct, build_2_cancellative_odd, build_cancellative, build_union_free,
    predicted_exponents, BuildOutcome, ConstructionParams, VerificationRecord, DEFAULT_DENSITY,
};
use crate::error::{Error, Result};
use crate::exact::{exact_table, SearchProblem, SearchResult, SymmetryMode, TableRow};
use crate::hypergraph::{Hypergraph, SparsityConstraint};

/// Densities tried at the smallest `n` before a fit.
pub const DENSITY_SWEEP: [f64; 3] = [0.25, 0.5, 1.0];

pub const CONFIG_VERSION: &str = "v1";

// ---------------------------------------------------------------------------
// Builds
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuildKind {
    Sparse,
    Cancellative,
    #[serde(rename = "cancellative2-odd")]
    Cancellative2Odd,
    UnionFree,
}

impl std::str::FromStr for BuildKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sparse" => Ok(Self::Sparse),
            "cancellative" => Ok(Self::Cancellative),
            "cancellative2-odd" => Ok(Self::Cancellative2Odd),
            "union-free" => Ok(Self::UnionFree),
            _ => Err(Error::InvalidParameter(format!("unknown build kind `{s}`"))),
        }
    }
}

impl BuildKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Sparse => "sparse",
            Self::Cancellative => "cancellative",
            Self::Cancellative2Odd => "cancellative2-odd",
            Self::UnionFree => "union-free",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BuildSpec {
    pub kind: BuildKind,
    pub n: usize,
    /// Ignored for `cancellative2-odd`, where `r = 2k + 1`.
    pub r: usize,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub constraints: Vec<SparsityConstraint>,
    pub density: f64,
    pub seed: u64,
}

fn need(v: Option<usize>, name: &str, kind: BuildKind) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("{} build needs --{name}", kind.name())))
}

pub fn run_build(spec: &BuildSpec) -> Result<BuildOutcome> {
    match spec.kind {
        BuildKind::Sparse => {
            let params = ConstructionParams::new(
                spec.n,
                spec.r,
                spec.constraints.clone(),
                spec.density,
                spec.seed,
            )?;
            let alteration = alteration_construct(&params)?;
            let verifications = params
                .constraints
                .iter()
                .map(|&c| VerificationRecord {
                    check: format!("sparse{c}"),
                    holds: check_sparse(&alteration.hypergraph, c).holds,
                })
                .collect();
            Ok(BuildOutcome {
                hypergraph: alteration.hypergraph.clone(),
                alteration,
                partition: None,
                verifications,
            })
        }
        BuildKind::Cancellative => build_cancellative(
            spec.n,
            spec.r,
            need(spec.t, "t", spec.kind)?,
            spec.seed,
            spec.density,
        ),
        BuildKind::Cancellative2Odd => {
            build_2_cancellative_odd(spec.n, need(spec.k, "k", spec.kind)?, spec.seed, spec.density)
        }
        BuildKind::UnionFree => build_union_free(
            spec.n,
            spec.r,
            need(spec.t, "t", spec.kind)?,
            spec.seed,
            spec.density,
        ),
    }
}

/// Report for one build. `wall` is included only when given.
pub fn build_report(spec: &BuildSpec, out: &BuildOutcome, wall: Option<Duration>) -> Value {
    let alt = &out.alteration;
    let constraints: Vec<Value> = if spec.kind == BuildKind::Sparse {
        spec.constraints.iter().map(|c| json!([c.v, c.e])).collect()
    } else {
        Vec::new()
    };
    json!({
        "parameters": {
            "kind": spec.kind.name(),
            "n": spec.n,
            "r": out.hypergraph.r(),
            "t": spec.t,
            "k": spec.k,
            "constraints": constraints,
            "density": spec.density,
            "seed": spec.seed,
        },
        "probability": alt.probability,
        "sampled": alt.sampled,
        "configurations_per_constraint": alt.configurations,
        "deletions_per_constraint": alt.deletions,
        "after_alteration": alt.hypergraph.len(),
        "final_size": out.hypergraph.len(),
        "partition": out.partition.as_ref().map(|p| p.part_lists()),
        "verifications": out.verifications.iter().map(|v| json!({"check": v.check, "holds": v.holds})).collect::<Vec<_>>(),
        "wall_time_seconds": wall.map(|w| w.as_secs_f64()),
    })
}

// ---------------------------------------------------------------------------
// Exponent fits
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitBuilder {
    Cancellative,
    UnionFree,
}

impl std::str::FromStr for FitBuilder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cancellative" => Ok(Self::Cancellative),
            "union-free" => Ok(Self::UnionFree),
            _ => Err(Error::InvalidParameter(format!("unknown fit kind `{s}`"))),
        }
    }
}

impl FitBuilder {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Cancellative => "cancellative",
            Self::UnionFree => "union-free",
        }
    }

    /// The exponent the builder's constraints target.
    pub fn predicted(&self, r: usize, t: usize) -> Result<Ratio<i64>> {
        let p = predicted_exponents(r, t)?;
        match self {
            Self::Cancellative => p.lower_cancellative.ok_or_else(|| {
                Error::InvalidParameter("cancellative exponent needs t ≥ 3".into())
            }),
            Self::UnionFree => Ok(p.lower_union_free),
        }
    }

    pub fn build(&self, n: usize, r: usize, t: usize, seed: u64, density: f64) -> Result<Hypergraph> {
        Ok(match self {
            Self::Cancellative => build_cancellative(n, r, t, seed, density)?,
            Self::UnionFree => build_union_free(n, r, t, seed, density)?,
        }
        .hypergraph)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitSample {
    pub n: usize,
    pub sizes: Vec<usize>,
    pub mean_size: f64,
    /// Mean of `ln m` over repetitions; `None` if some run came back empty.
    pub mean_log: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExponentFit {
    pub samples: Vec<FitSample>,
    pub slope: f64,
    pub intercept: f64,
    pub predicted: Ratio<i64>,
    pub residual: f64,
    pub density: f64,
}

impl ExponentFit {
    pub fn to_json(&self) -> Value {
        json!({
            "slope": self.slope,
            "intercept": self.intercept,
            "predicted": { "value": ratio_f64(self.predicted), "exact": self.predicted.to_string() },
            "residual": self.residual,
            "density": self.density,
            "samples": self.samples.iter().map(|s| json!({
                "n": s.n,
                "sizes": s.sizes,
                "mean_size": s.mean_size,
                "mean_log": s.mean_log,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,reps,mean_size,mean_log,sizes\n");
        for s in &self.samples {
            let sizes: Vec<String> = s.sizes.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                s.n,
                s.sizes.len(),
                s.mean_size,
                s.mean_log.map_or("NA".to_string(), |v| v.to_string()),
                sizes.join(" ")
            );
        }
        out
    }
}

fn ratio_f64(q: Ratio<i64>) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Least-squares slope and intercept of `ln y` against `ln x`.
pub fn log_log_fit(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return Err(Error::InvalidParameter(
            "log-log fit needs at least two points with positive coordinates".into(),
        ));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("log-log fit needs distinct x values".into()));
    }
    let slope = sxy / sxx;
    Ok((slope, my - slope * mx))
}

/// Fits the growth exponent of an arbitrary size function; `size(n, seed)`
/// is called with seeds `seed + i` for repetition `i`.
pub fn fit_exponent_with<F>(
    size: F,
    predicted: Ratio<i64>,
    ns: &[usize],
    reps: usize,
    seed: u64,
    density: f64,
) -> Result<ExponentFit>
where
    F: Fn(usize, u64) -> Result<usize> + Sync,
{
    let distinct: BTreeSet<usize> = ns.iter().copied().collect();
    if distinct.len() < 4 {
        return Err(Error::InvalidParameter("a fit needs at least 4 distinct n values".into()));
    }
    if reps < 3 {
        return Err(Error::InvalidParameter("a fit needs at least 3 repetitions".into()));
    }
    let jobs: Vec<(usize, usize)> = distinct
        .iter()
        .flat_map(|&n| (0..reps).map(move |i| (n, i)))
        .collect();
    let sizes: Vec<usize> = jobs
        .par_iter()
        .map(|&(n, i)| size(n, seed.wrapping_add(i as u64)))
        .collect::<Result<_>>()?;

    let samples: Vec<FitSample> = distinct
        .iter()
        .zip(sizes.chunks(reps))
        .map(|(&n, chunk)| {
            let mean_size = chunk.iter().sum::<usize>() as f64 / reps as f64;
            let mean_log = chunk
                .iter()
                .all(|&m| m > 0)
                .then(|| chunk.iter().map(|&m| (m as f64).ln()).sum::<f64>() / reps as f64);
            FitSample {
                n,
                sizes: chunk.to_vec(),
                mean_size,
                mean_log,
            }
        })
        .collect();
    let points: Vec<(f64, f64)> = samples.iter().map(|s| (s.n as f64, s.mean_size)).collect();
    let (slope, intercept) = log_log_fit(&points)?;
    Ok(ExponentFit {
        samples,
        slope,
        intercept,
        predicted,
        residual: slope - ratio_f64(predicted),
        density,
    })
}

/// Picks the density from [`DENSITY_SWEEP`] with the largest mean size at
/// `n`; ties keep the smaller density.
pub fn sweep_density(builder: FitBuilder, r: usize, t: usize, n: usize, reps: usize, seed: u64) -> Result<f64> {
    let mut best = (DENSITY_SWEEP[0], -1.0f64);
    for &c in &DENSITY_SWEEP {
        let sizes: Vec<usize> = (0..reps)
            .into_par_iter()
            .map(|i| builder.build(n, r, t, seed.wrapping_add(i as u64), c).map(|h| h.len()))
            .collect::<Result<_>>()?;
        let mean = sizes.iter().sum::<usize>() as f64 / reps as f64;
        if mean > best.1 {
            best = (c, mean);
        }
    }
    Ok(best.0)
}

/// Density sweep at the smallest `n`, then a frozen-density fit.
pub fn fit_exponent(
    builder: FitBuilder,
    r: usize,
    t: usize,
    ns: &[usize],
    reps: usize,
    seed: u64,
) -> Result<ExponentFit> {
    let predicted = builder.predicted(r, t)?;
    let smallest = *ns
        .iter()
        .min()
        .ok_or_else(|| Error::InvalidParameter("empty n list".into()))?;
    let density = sweep_density(builder, r, t, smallest, reps, seed)?;
    fit_exponent_with(
        |n, s| builder.build(n, r, t, s, density).map(|h| h.len()),
        predicted,
        ns,
        reps,
        seed,
        density,
    )
}

// ---------------------------------------------------------------------------
// Config-driven reports
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportConfig {
    pub version: String,
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub items: Vec<ReportItem>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ReportItem {
    pub id: String,
    #[serde(flatten)]
    pub spec: ItemSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ItemSpec {
    Check {
        property: String,
        t: Option<usize>,
        v: Option<usize>,
        e: Option<usize>,
        input: PathBuf,
        budget: Option<u128>,
    },
    Build {
        builder: BuildKind,
        n: usize,
        r: Option<usize>,
        t: Option<usize>,
        k: Option<usize>,
        #[serde(default)]
        constraints: Vec<[usize; 2]>,
        c: Option<f64>,
        seed: u64,
        output: Option<PathBuf>,
    },
    Search {
        property: String,
        t: Option<usize>,
        v: Option<usize>,
        e: Option<usize>,
        n: usize,
        r: usize,
        budget_seconds: Option<f64>,
        #[serde(default)]
        no_symmetry: bool,
    },
    Table {
        property: String,
        t: Option<usize>,
        v: Option<usize>,
        e: Option<usize>,
        r: usize,
        n_from: usize,
        n_to: usize,
        budget_seconds: Option<f64>,
        #[serde(default)]
        no_symmetry: bool,
    },
    Fit {
        builder: FitBuilder,
        r: usize,
        t: usize,
        n_list: Vec<usize>,
        reps: usize,
        seed: u64,
    },
}

impl ReportConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: ReportConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if cfg.version != CONFIG_VERSION {
            return Err(Error::Config(format!(
                "unsupported config version `{}` (expected `{CONFIG_VERSION}`)",
                cfg.version
            )));
        }
        if cfg.items.is_empty() {
            return Err(Error::Config("nothing to run: the items list is empty".into()));
        }
        let mut ids = BTreeSet::new();
        for item in &cfg.items {
            if !ids.insert(item.id.as_str()) {
                return Err(Error::Config(format!("duplicate item id `{}`", item.id)));
            }
        }
        Ok(cfg)
    }
}

/// A finished report: the JSON document and one CSV per item (by id).
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub csv: Vec<(String, String)>,
    pub failed: usize,
}

#[allow(clippy::too_many_arguments)]
fn problem_from(
    property: &str,
    t: Option<usize>,
    v: Option<usize>,
    e: Option<usize>,
    n: usize,
    r: usize,
    budget: Option<f64>,
    no_symmetry: bool,
) -> Result<SearchProblem> {
    let mut p = SearchProblem::new(n, r, Property::parse(property, t, v, e)?);
    p.time_budget = budget.map(Duration::from_secs_f64);
    if no_symmetry {
        p.symmetry = SymmetryMode::None;
    }
    Ok(p)
}

pub fn search_json(p: &SearchProblem, res: &SearchResult, seconds: Option<f64>) -> Value {
    json!({
        "property": p.property.to_string(),
        "n": p.n,
        "r": p.r,
        "max_size": res.max_size,
        "optimal": res.optimal,
        "nodes": res.nodes_explored,
        "witness": res.witness.edge_lists(),
        "seconds": seconds,
    })
}

/// CSV rows `n,max_size,optimal,nodes,seconds`; seconds print as `NA`
/// unless `timing` is set.
pub fn table_csv(rows: &[TableRow], timing: bool) -> String {
    let mut out = String::from("n,max_size,optimal,nodes,seconds\n");
    for row in rows {
        let secs = if timing {
            format!("{:.6}", row.seconds)
        } else {
            "NA".to_string()
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.n, row.result.max_size, row.result.optimal, row.result.nodes_explored, secs
        );
    }
    out
}

pub fn verdict_csv(property: &Property, verdict: &PropertyVerdict) -> String {
    format!("property,holds\n{property},{}\n", verdict.holds)
}

fn run_item(item: &ItemSpec, base: &Path, timing: bool) -> Result<(Value, String)> {
    match item {
        ItemSpec::Check {
            property,
            t,
            v,
            e,
            input,
            budget,
        } => {
            let text = std::fs::read_to_string(base.join(input))?;
            let h: Hypergraph = text.parse()?;
            let prop = Property::parse(property, *t, *v, *e)?;
            let verdict = match (prop, budget) {
                (Property::UnionFree { t }, Some(b)) => check_union_free_with_budget(&h, t, *b)?,
                _ => check(&h, &prop)?,
            };
            Ok((
                json!({"property": prop.to_string(), "verdict": verdict.to_json()}),
                verdict_csv(&prop, &verdict),
            ))
        }
        ItemSpec::Build {
            builder,
            n,
            r,
            t,
            k,
            constraints,
            c,
            seed,
            output,
        } => {
            let r = match (builder, r, k) {
                (BuildKind::Cancellative2Odd, _, Some(k)) => 2 * k + 1,
                (_, Some(r), _) => *r,
                _ => return Err(Error::Config("build item needs r".into())),
            };
            let spec = BuildSpec {
                kind: *builder,
                n: *n,
                r,
                t: *t,
                k: *k,
                constraints: constraints
                    .iter()
                    .map(|&[v, e]| SparsityConstraint { v, e })
                    .collect(),
                density: c.unwrap_or(DEFAULT_DENSITY),
                seed: *seed,
            };
            let start = Instant::now();
            let out = run_build(&spec)?;
            let wall = timing.then(|| start.elapsed());
            if let Some(path) = output {
                std::fs::write(base.join(path), out.hypergraph.to_text())?;
            }
            let csv = format!(
                "kind,n,r,sampled,final_size,verified\n{},{},{},{},{},{}\n",
                builder.name(),
                n,
                out.hypergraph.r(),
                out.alteration.sampled,
                out.hypergraph.len(),
                out.verifications.iter().all(|v| v.holds)
            );
            Ok((build_report(&spec, &out, wall), csv))
        }
        ItemSpec::Search {
            property,
            t,
            v,
            e,
            n,
            r,
            budget_seconds,
            no_symmetry,
        } => {
            let p = problem_from(property, *t, *v, *e, *n, *r, *budget_seconds, *no_symmetry)?;
            let rows = exact_table(&p, [*n])?;
            let secs = timing.then_some(rows[0].seconds);
            Ok((search_json(&p, &rows[0].result, secs), table_csv(&rows, timing)))
        }
        ItemSpec::Table {
            property,
            t,
            v,
            e,
            r,
            n_from,
            n_to,
            budget_seconds,
            no_symmetry,
        } => {
            let p = problem_from(property, *t, *v, *e, *n_from, *r, *budget_seconds, *no_symmetry)?;
            let rows = exact_table(&p, *n_from..=*n_to)?;
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let q = SearchProblem { n: row.n, ..p.clone() };
                    search_json(&q, &row.result, timing.then_some(row.seconds))
                })
                .collect();
            Ok((json!({"property": p.property.to_string(), "rows": json_rows}), table_csv(&rows, timing)))
        }
        ItemSpec::Fit {
            builder,
            r,
            t,
            n_list,
            reps,
            seed,
        } => {
            let fit = fit_exponent(*builder, *r, *t, n_list, *reps, *seed)?;
            let mut j = fit.to_json();
            j["builder"] = json!(builder.name());
            j["r"] = json!(r);
            j["t"] = json!(t);
            Ok((j, fit.to_csv()))
        }
    }
}

fn item_kind(spec: &ItemSpec) -> &'static str {
    match spec {
        ItemSpec::Check { .. } => "check",
        ItemSpec::Build { .. } => "build",
        ItemSpec::Search { .. } => "search",
        ItemSpec::Table { .. } => "table",
        ItemSpec::Fit { .. } => "fit",
    }
}

/// Runs every item. Paths in the config resolve against `base`. Item
/// errors are recorded in the report rather than aborting the run.
pub fn run_report(cfg: &ReportConfig, base: &Path, timing: bool) -> Report {
    let mut items: Vec<&ReportItem> = cfg.items.iter().collect();
    items.sort_by(|a, b| a.id.cmp(&b.id));
    let mut entries = Vec::new();
    let mut csv = Vec::new();
    let mut failed = 0;
    for item in items {
        let kind = item_kind(&item.spec);
        match run_item(&item.spec, base, timing) {
            Ok((result, table)) => {
                entries.push(json!({"id": item.id, "kind": kind, "status": "ok", "result": result}));
                csv.push((item.id.clone(), table));
            }
            Err(e) => {
                failed += 1;
                entries.push(json!({"id": item.id, "kind": kind, "status": "error", "error": e.to_string()}));
            }
        }
    }
    Report {
        json: json!({"version": CONFIG_VERSION, "failed": failed, "items": entries}),
        csv,
        failed,
    }
}

/// Reads, runs and writes a report: `report.json` plus `<id>.csv` in the
/// output directory (`out` if given, else the config's `output_dir`, else
/// the config's own directory).
pub fn run_report_file(config: &Path, out: Option<&Path>, timing: bool) -> Result<Report> {
    let text = std::fs::read_to_string(config)?;
    let cfg = ReportConfig::parse(&text)?;
    let base = config.parent().unwrap_or(Path::new(".")).to_path_buf();
    let report = run_report(&cfg, &base, timing);
    let dir = match (out, &cfg.output_dir) {
        (Some(o), _) => o.to_path_buf(),
        (None, Some(d)) => base.join(d),
        (None, None) => base.clone(),
    };
    std::fs::create_dir_all(&dir)?;
    let mut doc = serde_json::to_string_pretty(&report.json).expect("json values serialize");
    doc.push('\n');
    std::fs::write(dir.join("report.json"), doc)?;
    for (id, table) in &report.csv {
        std::fs::write(dir.join(format!("{id}.csv")), table)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_known_exponent() {
        let ns: Vec<usize> = vec![30, 50, 80, 120, 180, 240, 300];
        for &(alpha, c) in &[(1.5, 0.3), (1.25, 2.0), (2.0, 0.05)] {
            let fit = fit_exponent_with(
                |n, _| Ok(((c * (n as f64).powf(alpha)).round()) as usize),
                Ratio::new((alpha * 4.0) as i64, 4),
                &ns,
                3,
                0,
                1.0,
            )
            .unwrap();
            assert!((fit.slope - alpha).abs() < 0.02, "alpha={alpha}: slope {}", fit.slope);
            assert!(fit.residual.abs() < 0.02);
        }
    }

    #[test]
    fn flat_series_has_zero_slope() {
        let fit = fit_exponent_with(|_, _| Ok(5), Ratio::from_integer(0), &[30, 50, 80, 120, 180], 3, 0, 1.0)
            .unwrap();
        assert!(fit.slope.abs() < 1e-12);
    }

    #[test]
    fn fit_preconditions() {
        let f = |_: usize, _: u64| Ok(1usize);
        assert!(fit_exponent_with(f, Ratio::from_integer(1), &[1, 2, 3], 3, 0, 1.0).is_err());
        assert!(fit_exponent_with(f, Ratio::from_integer(1), &[1, 2, 3, 4], 2, 0, 1.0).is_err());
        assert!(fit_exponent_with(|_, _| Ok(0), Ratio::from_integer(1), &[1, 2, 3, 4], 3, 0, 1.0).is_err());
    }

    #[test]
    fn seeds_are_offsets() {
        let fit = fit_exponent_with(|n, s| Ok(n + s as usize), Ratio::from_integer(1), &[10, 20, 30, 40], 3, 100, 1.0)
            .unwrap();
        assert_eq!(fit.samples[0].sizes, vec![110, 111, 112]);
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            ReportConfig::parse("version = \"v1\"\nitems = []\n"),
            Err(Error::Config(_))
        ));
        assert!(ReportConfig::parse("version = \"v2\"\n[[items]]\nid=\"a\"\nkind=\"fit\"\nbuilder=\"union-free\"\nr=3\nt=3\nn_list=[1]\nreps=3\nseed=1\n").is_err());
        let cfg = ReportConfig::parse(
            "version = \"v1\"\n[[items]]\nid = \"t\"\nkind = \"table\"\nproperty = \"sparse\"\nv = 3\ne = 2\nr = 2\nn_from = 4\nn_to = 8\n",
        )
        .unwrap();
        assert_eq!(cfg.items.len(), 1);
    }

    #[test]
    fn matching_table_report() {
        let cfg = ReportConfig::parse(
            "version = \"v1\"\n[[items]]\nid = \"t\"\nkind = \"table\"\nproperty = \"sparse\"\nv = 3\ne = 2\nr = 2\nn_from = 4\nn_to = 8\n",
        )
        .unwrap();
        let report = run_report(&cfg, Path::new("."), false);
        assert_eq!(report.failed, 0);
        let csv = &report.csv[0].1;
        let sizes: Vec<usize> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        assert_eq!(sizes, vec![2, 2, 3, 3, 4]);
        assert!(csv.lines().skip(1).all(|l| l.ends_with(",NA")));
    }
}
