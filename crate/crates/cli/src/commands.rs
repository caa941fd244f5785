use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use coralprune::datasets::{
    cache_dir, cached_path, load_edge_list_path, load_manifest, load_tu_dataset, resolve_filter,
    write_attribute_csv, write_edge_list, FilterSpec, SNAP_MANIFEST,
};
use coralprune::experiments::{clustering_betti, kahle_sweep};
use coralprune::prelude::{
    build_filtered, build_power, compute_pd, compute_pd_with, Direction, Filtration, Graph,
    PdOptions, PruneMode, PruneOptions, ThresholdSpec, VertexFilter, ZeroPairPolicy,
};
use coralprune::report::{reduce as run_reduce, reduce_with, Method, ReductionReport};
use coralprune::verify::{
    connected_corpus, er_corpus, sweep, verify_combined_with, verify_coral_with,
    verify_prunit_with, Check, VerificationReport, VerifyConfig,
};

use crate::{Failure, GraphInput};

type Outcome = Result<(), Failure>;

fn invocation() -> Vec<String> {
    std::env::args().collect()
}

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

struct Loaded {
    name: String,
    graph: Graph,
    filter: Option<VertexFilter>,
    direction: Direction,
}

fn load(input: &GraphInput) -> Result<Loaded, Failure> {
    let direction: Direction = input.direction.parse()?;
    let (graph, stats) = load_edge_list_path(&input.input)?;
    if stats.self_loops + stats.duplicate_edges > 0 {
        eprintln!(
            "normalized input: dropped {} self-loops, merged {} duplicate edges",
            stats.self_loops, stats.duplicate_edges
        );
    }
    let filter = if direction == Direction::Power {
        None
    } else {
        let spec: FilterSpec = input.filter.parse()?;
        Some(resolve_filter(&graph, &spec)?)
    };
    let name = input
        .input
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(Loaded {
        name,
        graph,
        filter,
        direction,
    })
}

fn prune_mode(d: Direction) -> PruneMode {
    match d {
        Direction::Sublevel => PruneMode::Sublevel,
        Direction::Superlevel => PruneMode::Superlevel,
        Direction::Power => PruneMode::Power,
    }
}

fn build(
    g: &Graph,
    f: Option<&VertexFilter>,
    d: Direction,
    maxdim: usize,
    steps: usize,
    thresholds: ThresholdSpec,
) -> Result<Filtration, Failure> {
    Ok(match (d, f) {
        (Direction::Power, _) => build_power(g, maxdim, steps)?,
        (_, Some(f)) => build_filtered(g, f, maxdim, d, thresholds)?,
        (_, None) => return Err(input_err("filtered directions need a filter")),
    })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Outcome {
    let mut out = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn reduce(
    input: &GraphInput,
    method: &str,
    k: Option<usize>,
    skip_mutual: bool,
    out: &Path,
) -> Outcome {
    let method: Method = method.parse()?;
    let loaded = load(input)?;
    let mode = prune_mode(loaded.direction);
    let opts = PruneOptions { skip_mutual };
    let r = reduce_with(
        &loaded.name,
        &loaded.graph,
        loaded.filter.as_ref(),
        method,
        mode,
        k,
        opts,
    )?;
    let mut report = r.report;
    report.invocation = invocation();

    fs::create_dir_all(out)?;
    let mut edges = BufWriter::new(File::create(out.join("reduced.edges"))?);
    write_edge_list(&r.graph, &mut edges)?;
    edges.flush()?;
    if let Some(f) = &r.filter {
        write_attribute_csv(f, File::create(out.join("filter.csv"))?)?;
    }
    if let Some(t) = &r.trace {
        t.write_csv(File::create(out.join("trace.csv"))?)?;
    }
    write_json(&out.join("report.json"), &report)?;
    eprintln!(
        "{}: {} -> {} vertices ({:.1}%), {} -> {} edges ({:.1}%)",
        report.dataset,
        report.vertices_before,
        report.vertices_after,
        report.vertex_reduction_pct,
        report.edges_before,
        report.edges_after,
        report.edge_reduction_pct
    );
    Ok(())
}

pub fn pd(
    input: &GraphInput,
    max_dim: usize,
    zero_pairs: &str,
    max_power: Option<usize>,
    step: Option<f64>,
    out: Option<&Path>,
) -> Outcome {
    let policy: ZeroPairPolicy = zero_pairs.parse()?;
    let thresholds = match step {
        Some(s) if s.is_finite() && s > 0.0 => ThresholdSpec::Step(s),
        Some(s) => return Err(input_err(format!("step must be positive, got {s}"))),
        None => ThresholdSpec::Distinct,
    };
    let loaded = load(input)?;
    let steps = max_power.unwrap_or_else(|| loaded.graph.diameter()).max(1);
    let start = Instant::now();
    let filt = build(
        &loaded.graph,
        loaded.filter.as_ref(),
        loaded.direction,
        max_dim + 1,
        steps,
        thresholds,
    )?;
    let built = start.elapsed();
    let opts = PdOptions {
        zero_pairs: policy,
        ..Default::default()
    };
    let diagram = compute_pd_with(&filt, max_dim, opts)?;
    eprintln!(
        "filtration: {} thresholds, simplices by dimension {:?}, built in {:.1?}, reduced in {:.1?}",
        filt.thresholds().len(),
        filt.counts_by_dim(),
        built,
        start.elapsed() - built
    );
    match out {
        Some(path) if path.extension().is_some_and(|e| e == "csv") => {
            diagram.write_csv(File::create(path)?)?;
        }
        Some(path) => write_json(path, &diagram.to_json())?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            serde_json::to_writer(&mut lock, &diagram.to_json())?;
            writeln!(lock)?;
        }
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// coral | prunit-sub | prunit-super | prunit-power | combined
    #[arg(long)]
    check: String,
    /// Core index for coral and combined.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Highest dimension compared.
    #[arg(long, default_value_t = coralprune::verify::DEFAULT_CAP)]
    max_dim: usize,
    /// Number of random instances.
    #[arg(long, default_value_t = 200)]
    seeds: usize,
    /// Largest graph size for the connected corpus used by prunit-power.
    #[arg(long, default_value_t = 15)]
    n_max: usize,
    /// Verify a single graph instead of the random corpus.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value = "degree")]
    filter: String,
    /// Delete one extra vertex after reducing (negative control).
    #[arg(long)]
    inject_fault: Option<u64>,
    /// JSON lines report.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for counterexample edge lists and filters.
    #[arg(long)]
    dump: Option<PathBuf>,
}

fn verify_one(
    g: &Graph,
    f: &VertexFilter,
    check: Check,
    k: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport, Failure> {
    Ok(match check {
        Check::Coral => verify_coral_with(g, f, k, cfg)?,
        Check::Combined => verify_combined_with(g, f, k, cfg)?,
        Check::PrunitSub => verify_prunit_with(g, Some(f), PruneMode::Sublevel, cfg)?,
        Check::PrunitSuper => verify_prunit_with(g, Some(f), PruneMode::Superlevel, cfg)?,
        Check::PrunitPower => verify_prunit_with(g, None, PruneMode::Power, cfg)?,
    })
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let check: Check = args.check.parse()?;
    let cfg = VerifyConfig {
        cap: args.max_dim,
        fault: args.inject_fault,
        ..Default::default()
    };
    let reports = match &args.input {
        Some(path) => {
            let (g, _) = load_edge_list_path(path)?;
            let f = resolve_filter(&g, &args.filter.parse()?)?;
            let name = path.display().to_string();
            vec![verify_one(&g, &f, check, args.k, &cfg)?.named(name)]
        }
        None => {
            let corpus = if check == Check::PrunitPower {
                connected_corpus(args.seeds, args.n_max)?
            } else {
                er_corpus(args.seeds)
            };
            sweep(&corpus, check, args.k, &cfg)?
        }
    };

    if let Some(path) = &args.out {
        let mut out = BufWriter::new(File::create(path)?);
        for r in &reports {
            writeln!(out, "{}", r.to_json_line()?)?;
        }
        out.flush()?;
    }
    let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.pass).collect();
    if let Some(dir) = &args.dump {
        for r in &failed {
            if let Some(cx) = &r.counterexample {
                let stem: String = r
                    .graph
                    .chars()
                    .map(|c| {
                        if c.is_ascii_alphanumeric() || c == '-' || c == '.' {
                            c
                        } else {
                            '_'
                        }
                    })
                    .collect();
                cx.dump(dir, &stem)?;
            }
        }
    }
    eprintln!(
        "{check}: {}/{} instances pass",
        reports.len() - failed.len(),
        reports.len()
    );
    match failed.first() {
        None => Ok(()),
        Some(r) => Err(Failure::Verification(format!(
            "{} failing instances, first {} in dimensions {:?}",
            failed.len(),
            r.graph,
            r.failed_dims()
        ))),
    }
}

#[derive(Subcommand, Debug)]
pub enum Experiment {
    /// Clustering coefficient against Betti 2 and 3.
    ClusteringBetti {
        /// Edge lists or TU dataset directories.
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fraction of random graphs with nonzero Betti 2.
    KahleSweep {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, num_args = 1.., default_values_t = [0.05])]
        p: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn csv_writer(out: Option<&Path>) -> Result<csv::Writer<Box<dyn Write>>, Failure> {
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout()),
    };
    Ok(csv::Writer::from_writer(sink))
}

fn write_rows<T: Serialize>(rows: &[T], out: Option<&Path>) -> Outcome {
    let mut w = csv_writer(out)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn load_corpus(paths: &[PathBuf]) -> Result<Vec<(String, Graph)>, Failure> {
    let mut graphs = Vec::new();
    for p in paths {
        if p.is_dir() {
            let set = load_tu_dataset(p)?;
            graphs.extend(set.graphs.into_iter().map(|g| (g.name, g.graph)));
        } else {
            graphs.push((p.display().to_string(), load_edge_list_path(p)?.0));
        }
    }
    Ok(graphs)
}

pub fn experiment(which: &Experiment) -> Outcome {
    match which {
        Experiment::ClusteringBetti { input, out } => {
            let rows = clustering_betti(&load_corpus(input)?)?;
            write_rows(&rows, out.as_deref())
        }
        Experiment::KahleSweep { n, p, seeds, out } => {
            let seeds: Vec<u64> = (0..*seeds).collect();
            let rows = kahle_sweep(*n, p, &seeds)?;
            let hits = rows.iter().filter(|r| r.nontrivial).count();
            eprintln!("{hits}/{} graphs with nonzero Betti 2", rows.len());
            write_rows(&rows, out.as_deref())
        }
    }
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Cached manifest datasets, by name.
    #[arg(long, num_args = 1..)]
    dataset: Vec<String>,
    /// Edge list files.
    #[arg(long, num_args = 1..)]
    input: Vec<PathBuf>,
    #[arg(long, default_value = "degree")]
    filter: String,
    #[arg(long, default_value = "super")]
    direction: String,
    #[arg(long, default_value = "prunit")]
    method: String,
    /// Core indices to sweep for coral and combined.
    #[arg(long, num_args = 1.., default_values_t = [1])]
    k: Vec<usize>,
    /// Also time filtration and persistence up to this dimension.
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn bench_one(
    name: &str,
    path: &Path,
    args: &BenchArgs,
    method: Method,
    direction: Direction,
) -> Result<Vec<ReductionReport>, Failure> {
    let input = GraphInput {
        input: path.to_path_buf(),
        filter: args.filter.clone(),
        direction: args.direction.clone(),
    };
    let loaded = load(&input)?;
    let ks: Vec<Option<usize>> = if method == Method::Prunit {
        vec![None]
    } else {
        args.k.iter().copied().map(Some).collect()
    };
    let mut rows = Vec::new();
    for k in ks {
        let r = run_reduce(
            name,
            &loaded.graph,
            loaded.filter.as_ref(),
            method,
            prune_mode(direction),
            k,
        )?;
        let mut report = r.report;
        report.invocation = invocation();
        if let Some(d) = args.max_dim {
            let steps = loaded.graph.diameter().max(1);
            let phase =
                |g: &Graph, f: Option<&VertexFilter>| -> Result<(usize, f64, f64), Failure> {
                    let t = Instant::now();
                    let filt = build(g, f, direction, d + 1, steps, ThresholdSpec::Distinct)?;
                    let built = t.elapsed().as_secs_f64() * 1e3;
                    compute_pd(&filt, d)?;
                    Ok((filt.len(), built, t.elapsed().as_secs_f64() * 1e3 - built))
                };
            let (before, _, _) = phase(&loaded.graph, loaded.filter.as_ref())?;
            let (after, fms, pms) = phase(&r.graph, r.filter.as_ref())?;
            report.simplices_before = Some(before);
            report.simplices_after = Some(after);
            report.filtration_ms = Some(fms);
            report.persistence_ms = Some(pms);
        }
        rows.push(report);
    }
    Ok(rows)
}

#[derive(Serialize)]
struct BenchRow<'a> {
    dataset: &'a str,
    method: Method,
    mode: PruneMode,
    k: Option<usize>,
    vertices_before: usize,
    vertices_after: usize,
    vertex_reduction_pct: f64,
    edges_before: usize,
    edges_after: usize,
    edge_reduction_pct: f64,
    simplices_before: Option<usize>,
    simplices_after: Option<usize>,
    reduce_ms: f64,
    filtration_ms: Option<f64>,
    persistence_ms: Option<f64>,
}

impl<'a> From<&'a ReductionReport> for BenchRow<'a> {
    fn from(r: &'a ReductionReport) -> Self {
        Self {
            dataset: &r.dataset,
            method: r.method,
            mode: r.mode,
            k: r.k,
            vertices_before: r.vertices_before,
            vertices_after: r.vertices_after,
            vertex_reduction_pct: r.vertex_reduction_pct,
            edges_before: r.edges_before,
            edges_after: r.edges_after,
            edge_reduction_pct: r.edge_reduction_pct,
            simplices_before: r.simplices_before,
            simplices_after: r.simplices_after,
            reduce_ms: r.reduce_ms,
            filtration_ms: r.filtration_ms,
            persistence_ms: r.persistence_ms,
        }
    }
}

pub fn bench(args: &BenchArgs) -> Outcome {
    let method: Method = args.method.parse()?;
    let direction: Direction = args.direction.parse()?;
    let mut jobs: Vec<(String, PathBuf)> = args
        .input
        .iter()
        .map(|p| (p.display().to_string(), p.clone()))
        .collect();
    if !args.dataset.is_empty() {
        let manifest = load_manifest(SNAP_MANIFEST.as_bytes())?;
        let dir = cache_dir();
        for name in &args.dataset {
            let entry = manifest
                .iter()
                .find(|e| &e.name == name)
                .ok_or_else(|| input_err(format!("dataset {name} is not in the manifest")))?;
            let path = cached_path(&dir, entry);
            if !path.exists() {
                return Err(input_err(format!(
                    "{} missing; run `coralprune fetch {name}` first",
                    path.display()
                )));
            }
            jobs.push((name.clone(), path));
        }
    }
    if jobs.is_empty() {
        return Err(input_err("nothing to benchmark; pass --dataset or --input"));
    }
    let results: Vec<Result<Vec<ReductionReport>, Failure>> = jobs
        .par_iter()
        .map(|(name, path)| bench_one(name, path, args, method, direction))
        .collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    let rows: Vec<BenchRow> = reports.iter().map(BenchRow::from).collect();
    write_rows(&rows, args.out.as_deref())
}
