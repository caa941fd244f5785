//! Reduction pipelines with per-phase timings.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::coral::{coral_reduce, kcore};
use crate::error::{invalid, Error, Result};
use crate::filter::VertexFilter;
use crate::graph::Graph;
use crate::prunit::{prunit_with, PruneMode, PruneOptions, PruneTrace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Coral,
    Prunit,
    /// Pruning first, then the core.
    Combined,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Coral => "coral",
            Method::Prunit => "prunit",
            Method::Combined => "combined",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coral" => Ok(Method::Coral),
            "prunit" => Ok(Method::Prunit),
            "combined" => Ok(Method::Combined),
            other => invalid(format!("unknown method {other:?}")),
        }
    }
}

/// `100 * (before - after) / before`, and 0 for an empty input.
pub fn reduction_pct(before: usize, after: usize) -> f64 {
    if before == 0 {
        0.0
    } else {
        100.0 * (before as f64 - after as f64) / before as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionReport {
    pub dataset: String,
    pub method: Method,
    pub mode: PruneMode,
    pub k: Option<usize>,
    pub vertices_before: usize,
    pub vertices_after: usize,
    pub edges_before: usize,
    pub edges_after: usize,
    pub vertex_reduction_pct: f64,
    pub edge_reduction_pct: f64,
    pub simplices_before: Option<usize>,
    pub simplices_after: Option<usize>,
    pub reduce_ms: f64,
    pub filtration_ms: Option<f64>,
    pub persistence_ms: Option<f64>,
    /// Command line that produced the report.
    pub invocation: Vec<String>,
}

impl ReductionReport {
    pub fn new(
        dataset: &str,
        method: Method,
        mode: PruneMode,
        before: &Graph,
        after: &Graph,
    ) -> Self {
        let (vb, va) = (before.vertex_count(), after.vertex_count());
        let (eb, ea) = (before.edge_count(), after.edge_count());
        Self {
            dataset: dataset.to_owned(),
            method,
            mode,
            k: None,
            vertices_before: vb,
            vertices_after: va,
            edges_before: eb,
            edges_after: ea,
            vertex_reduction_pct: reduction_pct(vb, va),
            edge_reduction_pct: reduction_pct(eb, ea),
            simplices_before: None,
            simplices_after: None,
            reduce_ms: 0.0,
            filtration_ms: None,
            persistence_ms: None,
            invocation: Vec::new(),
        }
    }
}

/// A reduced graph with the filter values it carries over.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: Graph,
    pub filter: Option<VertexFilter>,
    /// Pruning steps, for methods that prune.
    pub trace: Option<PruneTrace>,
    pub report: ReductionReport,
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Runs `method` on `g`. `k` is the core index (the result is the
/// `(k + 1)`-core) and is required for coral and combined.
pub fn reduce(
    dataset: &str,
    g: &Graph,
    f: Option<&VertexFilter>,
    method: Method,
    mode: PruneMode,
    k: Option<usize>,
) -> Result<Reduction> {
    reduce_with(dataset, g, f, method, mode, k, PruneOptions::default())
}

pub fn reduce_with(
    dataset: &str,
    g: &Graph,
    f: Option<&VertexFilter>,
    method: Method,
    mode: PruneMode,
    k: Option<usize>,
    opts: PruneOptions,
) -> Result<Reduction> {
    let start = Instant::now();
    let core_of = |h: &Graph, f: Option<&VertexFilter>, k: usize| match f {
        Some(f) => coral_reduce(h, f, k).map(|(c, cf)| (c, Some(cf))),
        None => Ok((kcore(h, k + 1), None)),
    };
    let need_k = || match k {
        Some(k) => Ok(k),
        None => invalid(format!("method {method} needs a core index k")),
    };
    let mut trace = None;
    let (graph, filter) = match method {
        Method::Coral => core_of(g, f, need_k()?)?,
        Method::Prunit => {
            let p = prunit_with(g, f, mode, opts)?;
            trace = Some(p.trace);
            (p.graph, p.filter)
        }
        Method::Combined => {
            let k = need_k()?;
            let p = prunit_with(g, f, mode, opts)?;
            trace = Some(p.trace);
            core_of(&p.graph, p.filter.as_ref(), k)?
        }
    };
    let mut report = ReductionReport::new(dataset, method, mode, g, &graph);
    report.k = k.filter(|_| method != Method::Prunit);
    report.reduce_ms = elapsed_ms(start);
    Ok(Reduction {
        graph,
        filter,
        trace,
        report,
    })
}
