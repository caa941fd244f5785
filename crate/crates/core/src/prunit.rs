//! Dominated-vertex pruning.
//!
//! A vertex `u` is dominated by `v` when the closed neighborhood of `u` is
//! contained in that of `v`. Removing such a vertex is a fold of the clique
//! complex, so it preserves homotopy type. Along a filtration the removal is
//! safe as long as the dominator is present whenever `u` is:
//!
//! * sublevel: `f(u) >= f(v)`
//! * superlevel: `f(u) <= f(v)`
//! * power filtration: no condition (dimensions >= 1, connected graphs)
//!
//! [`prunit`] sweeps vertices in ascending id order, re-checking domination on
//! the already reduced graph, and repeats until a sweep removes nothing.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::filter::VertexFilter;
use crate::graph::{sorted_subset, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PruneMode {
    Sublevel,
    Superlevel,
    Power,
}

impl PruneMode {
    pub fn needs_filter(self) -> bool {
        !matches!(self, PruneMode::Power)
    }

    /// Whether the filter allows pruning `u` (value `fu`) in favor of its
    /// dominator `v` (value `fv`).
    fn admits(self, fu: f64, fv: f64) -> bool {
        match self {
            PruneMode::Sublevel => fu >= fv,
            PruneMode::Superlevel => fu <= fv,
            PruneMode::Power => true,
        }
    }
}

impl fmt::Display for PruneMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PruneMode::Sublevel => "sublevel",
            PruneMode::Superlevel => "superlevel",
            PruneMode::Power => "power",
        })
    }
}

impl FromStr for PruneMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sub" | "sublevel" => Ok(PruneMode::Sublevel),
            "super" | "superlevel" => Ok(PruneMode::Superlevel),
            "power" => Ok(PruneMode::Power),
            other => invalid(format!("unknown prune mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PruneOptions {
    /// Never prune either vertex of a pair with identical closed
    /// neighborhoods. By default the larger id of such a pair is pruned when
    /// the filter condition holds both ways.
    pub skip_mutual: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruneStep {
    pub pruned_id: VertexId,
    pub dominator_id: VertexId,
    pub pass: usize,
}

/// Audit trail of a pruning run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PruneTrace {
    pub steps: Vec<PruneStep>,
    /// Number of sweeps performed, including the final sweep that found
    /// nothing.
    pub passes: usize,
}

impl PruneTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// CSV with columns `pruned_id,dominator_id,pass`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for step in &self.steps {
            w.serialize(step)?;
        }
        if self.steps.is_empty() {
            w.write_record(["pruned_id", "dominator_id", "pass"])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Replays the trace against `g`, checking that each removal was a
    /// domination admitted by `mode` at the moment it happened. Returns the
    /// final graph.
    pub fn replay(&self, g: &Graph, f: Option<&VertexFilter>, mode: PruneMode) -> Result<Graph> {
        let mut work = Working::new(g);
        for step in &self.steps {
            let u = g.local(step.pruned_id)?;
            let v = g.local(step.dominator_id)?;
            if !work.alive[u] || !work.alive[v] {
                return invalid(format!("trace step {step:?} touches a removed vertex"));
            }
            if !work.dominated(u, v) {
                return invalid(format!("trace step {step:?} is not a domination"));
            }
            if let Some(f) = f {
                if !mode.admits(f.value(step.pruned_id)?, f.value(step.dominator_id)?) {
                    return invalid(format!("trace step {step:?} violates the filter condition"));
                }
            }
            work.remove(u);
        }
        Ok(work.into_graph(g))
    }
}

/// Output of [`prunit`].
#[derive(Debug, Clone, PartialEq)]
pub struct Pruned {
    pub graph: Graph,
    /// The input filter restricted to the surviving vertices (None in power
    /// mode).
    pub filter: Option<VertexFilter>,
    pub trace: PruneTrace,
}

/// `N[u] ⊆ N[v]` with closed neighborhoods. Requires `u != v`.
pub fn dominated_by(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    if u == v {
        return invalid("domination is only defined for distinct vertices");
    }
    let (iu, iv) = (g.local(u)?, g.local(v)?);
    let nu = g.adj_local(iu);
    let nv = g.adj_local(iv);
    if nv.binary_search(&(iu as u32)).is_err() {
        return Ok(false);
    }
    // N[u] \ {v} ⊆ adj(v) ∪ {v}; u itself is in adj(v)
    let rest: Vec<u32> = nu.iter().copied().filter(|&w| w as usize != iv).collect();
    Ok(sorted_subset(&rest, nv))
}

fn check_mode(g: &Graph, f: Option<&VertexFilter>, mode: PruneMode) -> Result<()> {
    match (mode.needs_filter(), f) {
        (true, None) => invalid(format!("{mode} pruning needs a filter")),
        (true, Some(f)) => f.check_covers(g),
        (false, _) => Ok(()),
    }
}

/// Mutable adjacency used while pruning.
struct Working {
    adj: Vec<Vec<u32>>,
    alive: Vec<bool>,
}

impl Working {
    fn new(g: &Graph) -> Self {
        Self {
            adj: g.local_adjacency().to_vec(),
            alive: vec![true; g.vertex_count()],
        }
    }

    /// `N[u] ⊆ N[v]`, assuming both alive.
    fn dominated(&self, u: usize, v: usize) -> bool {
        let (nu, nv) = (&self.adj[u], &self.adj[v]);
        if nu.len() > nv.len() || nv.binary_search(&(u as u32)).is_err() {
            return false;
        }
        nu.iter()
            .all(|&w| w as usize == v || nv.binary_search(&w).is_ok())
    }

    fn remove(&mut self, u: usize) {
        let nbrs = std::mem::take(&mut self.adj[u]);
        for w in nbrs {
            let list = &mut self.adj[w as usize];
            if let Ok(p) = list.binary_search(&(u as u32)) {
                list.remove(p);
            }
        }
        self.alive[u] = false;
    }

    fn into_graph(self, g: &Graph) -> Graph {
        g.induced_by_mask(&self.alive)
    }
}

/// Decides whether `u` may be pruned in favor of neighbor `v` in the
/// current working graph.
fn eligible(
    work: &Working,
    values: Option<&[f64]>,
    mode: PruneMode,
    opts: PruneOptions,
    u: usize,
    v: usize,
) -> bool {
    if let Some(vals) = values {
        if !mode.admits(vals[u], vals[v]) {
            return false;
        }
    }
    if !work.dominated(u, v) {
        return false;
    }
    let mutual = work.adj[u].len() == work.adj[v].len();
    if !mutual {
        return true;
    }
    if opts.skip_mutual {
        return false;
    }
    let symmetric = match values {
        Some(vals) => mode.admits(vals[v], vals[u]),
        None => true,
    };
    // identical neighborhoods, both directions admitted: keep the smaller id
    !symmetric || u > v
}

fn local_values(g: &Graph, f: Option<&VertexFilter>) -> Result<Option<Vec<f64>>> {
    f.map(|f| g.vertices().iter().map(|&v| f.value(v)).collect())
        .transpose()
}

/// All pairs `(u, v)` such that `u` could be pruned right now in favor of
/// `v` under `mode`. Empty exactly when [`prunit`] would stop.
pub fn find_prunable(
    g: &Graph,
    f: Option<&VertexFilter>,
    mode: PruneMode,
) -> Result<Vec<(VertexId, VertexId)>> {
    find_prunable_with(g, f, mode, PruneOptions::default())
}

pub fn find_prunable_with(
    g: &Graph,
    f: Option<&VertexFilter>,
    mode: PruneMode,
    opts: PruneOptions,
) -> Result<Vec<(VertexId, VertexId)>> {
    check_mode(g, f, mode)?;
    let values = local_values(g, f.filter(|_| mode.needs_filter()))?;
    let work = Working::new(g);
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.adj_local(u) {
            if eligible(&work, values.as_deref(), mode, opts, u, v as usize) {
                out.push((g.id(u), g.id(v as usize)));
            }
        }
    }
    Ok(out)
}

/// Iteratively prunes dominated vertices until none is eligible.
pub fn prunit(g: &Graph, f: Option<&VertexFilter>, mode: PruneMode) -> Result<Pruned> {
    prunit_with(g, f, mode, PruneOptions::default())
}

pub fn prunit_with(
    g: &Graph,
    f: Option<&VertexFilter>,
    mode: PruneMode,
    opts: PruneOptions,
) -> Result<Pruned> {
    check_mode(g, f, mode)?;
    let values = local_values(g, f.filter(|_| mode.needs_filter()))?;
    let mut work = Working::new(g);
    let mut trace = PruneTrace::default();
    loop {
        trace.passes += 1;
        let mut removed = false;
        for u in 0..g.vertex_count() {
            if !work.alive[u] {
                continue;
            }
            let dominator = work.adj[u]
                .iter()
                .map(|&v| v as usize)
                .find(|&v| eligible(&work, values.as_deref(), mode, opts, u, v));
            if let Some(v) = dominator {
                trace.steps.push(PruneStep {
                    pruned_id: g.id(u),
                    dominator_id: g.id(v),
                    pass: trace.passes,
                });
                work.remove(u);
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    let graph = work.into_graph(g);
    let filter = match f {
        Some(f) if mode.needs_filter() => Some(f.restrict_to(&graph)?),
        _ => None,
    };
    Ok(Pruned {
        graph,
        filter,
        trace,
    })
}
