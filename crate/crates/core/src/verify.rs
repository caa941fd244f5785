//! Empirical checks that the reductions leave persistence diagrams intact.
//!
//! Every check builds the filtration of the original graph and of the
//! reduced graph, computes both diagrams and compares them as multisets.
//! Comparisons always use the drop policy for zero-persistence pairs.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coral::coral_reduce;
use crate::datasets::{write_attribute_csv, write_edge_list};
use crate::error::{invalid, Error, Result};
use crate::filter::VertexFilter;
use crate::filtration::{build_power, build_sublevel, build_superlevel, Filtration};
use crate::graph::{Graph, VertexId};
use crate::persistence::{compute_pd, PersistenceDiagram};
use crate::prunit::{dominated_by, prunit, PruneMode};

/// Highest homology dimension compared unless configured otherwise.
pub const DEFAULT_CAP: usize = 2;

/// Multiset equality of two diagrams in the listed dimensions.
///
/// Fails with an invalid-input error when the diagrams were computed under
/// different zero-pair policies or filtration directions.
pub fn pd_equal(a: &PersistenceDiagram, b: &PersistenceDiagram, dims: &[usize]) -> Result<bool> {
    pd_equal_tol(a, b, dims, 0.0)
}

/// Like [`pd_equal`], but values within `tol` of each other count as equal.
/// Pairs are matched in sorted order, which is exact for `tol == 0` and for
/// any tolerance smaller than half the gap between distinct values.
pub fn pd_equal_tol(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    dims: &[usize],
    tol: f64,
) -> Result<bool> {
    if a.policy() != b.policy() {
        return invalid("diagrams use different zero-pair policies");
    }
    if a.direction() != b.direction() {
        return invalid("diagrams come from different filtration directions");
    }
    let close = |x: f64, y: f64| x == y || (x - y).abs() <= tol;
    Ok(dims.iter().all(|&k| {
        let (pa, pb) = (a.pairs(k), b.pairs(k));
        pa.len() == pb.len()
            && pa
                .iter()
                .zip(pb)
                .all(|(p, q)| close(p.birth, q.birth) && close(p.death, q.death))
    }))
}

/// Which reduction a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Coral,
    PrunitSub,
    PrunitSuper,
    PrunitPower,
    Combined,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Coral,
        Check::PrunitSub,
        Check::PrunitSuper,
        Check::PrunitPower,
        Check::Combined,
    ];

    fn as_str(self) -> &'static str {
        match self {
            Check::Coral => "coral",
            Check::PrunitSub => "prunit-sub",
            Check::PrunitSuper => "prunit-super",
            Check::PrunitPower => "prunit-power",
            Check::Combined => "combined",
        }
    }

    /// Whether the check takes a core index (`j` for coral, `k` combined).
    pub fn uses_index(self) -> bool {
        matches!(self, Check::Coral | Check::Combined)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .map_or_else(|| invalid(format!("unknown check {s:?}")), Ok)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Highest homology dimension compared.
    pub cap: usize,
    /// Absolute tolerance for birth/death values.
    pub tolerance: f64,
    /// Negative control: after reducing, delete one extra vertex chosen with
    /// this seed among the vertices nobody dominates.
    pub fault: Option<u64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            tolerance: 0.0,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimOutcome {
    pub dim: usize,
    pub pass: bool,
    pub pairs_original: usize,
    pub pairs_reduced: usize,
}

/// Everything needed to replay a failing comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub dim: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
    pub filter: Option<Vec<(VertexId, f64)>>,
    pub original: serde_json::Value,
    pub reduced: serde_json::Value,
}

impl Counterexample {
    /// Writes `<stem>.edges` and, when a filter exists, `<stem>.filter.csv`
    /// into `dir`. Returns the paths written.
    pub fn dump(&self, dir: &Path, stem: &str) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let (g, _) = Graph::from_parts(self.vertices.iter().copied(), self.edges.iter().copied());
        let edges = dir.join(format!("{stem}.edges"));
        let mut out = BufWriter::new(File::create(&edges)?);
        write_edge_list(&g, &mut out)?;
        out.flush()?;
        let mut written = vec![edges];
        if let Some(values) = &self.filter {
            let path = dir.join(format!("{stem}.filter.csv"));
            let f: VertexFilter = values.iter().copied().collect();
            write_attribute_csv(&f, File::create(&path)?)?;
            written.push(path);
        }
        Ok(written)
    }
}

/// Outcome of one verification run. `pass` holds iff every checked
/// dimension passed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    pub check: Check,
    /// Core index for coral and combined checks.
    pub index: Option<usize>,
    pub vertices_before: usize,
    pub vertices_after: usize,
    pub edges_before: usize,
    pub edges_after: usize,
    pub dims: Vec<DimOutcome>,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.graph = name.into();
        self
    }

    pub fn failed_dims(&self) -> Vec<usize> {
        self.dims
            .iter()
            .filter(|d| !d.pass)
            .map(|d| d.dim)
            .collect()
    }

    /// One JSON object on a single line.
    pub fn to_json_line(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

#[allow(clippy::too_many_arguments)]
fn compare(
    check: Check,
    index: Option<usize>,
    g: &Graph,
    f: Option<&VertexFilter>,
    reduced: &Graph,
    dims: Vec<usize>,
    cfg: &VerifyConfig,
    build: impl Fn(&Graph, usize) -> Result<Filtration>,
) -> Result<VerificationReport> {
    let top = dims.iter().copied().max().unwrap_or(0);
    let original = compute_pd(&build(g, top + 1)?, top)?;
    let after = compute_pd(&build(reduced, top + 1)?, top)?;
    let mut outcomes = Vec::with_capacity(dims.len());
    let mut counterexample = None;
    for &k in &dims {
        let pass = pd_equal_tol(&original, &after, &[k], cfg.tolerance)?;
        if !pass && counterexample.is_none() {
            counterexample = Some(Counterexample {
                dim: k,
                vertices: g.vertices().to_vec(),
                edges: g.edges().collect(),
                filter: f.map(|f| f.iter().collect()),
                original: original.to_json(),
                reduced: after.to_json(),
            });
        }
        outcomes.push(DimOutcome {
            dim: k,
            pass,
            pairs_original: original.pairs(k).len(),
            pairs_reduced: after.pairs(k).len(),
        });
    }
    Ok(VerificationReport {
        graph: format!("n={} m={}", g.vertex_count(), g.edge_count()),
        check,
        index,
        vertices_before: g.vertex_count(),
        vertices_after: reduced.vertex_count(),
        edges_before: g.edge_count(),
        edges_after: reduced.edge_count(),
        pass: outcomes.iter().all(|d| d.pass),
        dims: outcomes,
        counterexample,
    })
}

/// Deletes one vertex of `g` picked by `seed` among those not dominated by
/// any neighbor, falling back to any vertex. This is the negative control
/// behind [`VerifyConfig::fault`].
pub fn inject_fault(g: &Graph, seed: u64) -> Result<Graph> {
    let mut candidates = Vec::new();
    for &u in g.vertices() {
        let mut dominated = false;
        for v in g.neighbors(u)? {
            if dominated_by(g, u, v)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            candidates.push(u);
        }
    }
    if candidates.is_empty() {
        candidates = g.vertices().to_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let Some(&victim) = candidates.choose(&mut rng) else {
        return Ok(g.clone());
    };
    let keep = g
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != victim)
        .collect();
    g.induced_subgraph(&keep)
}

fn maybe_fault(g: Graph, cfg: &VerifyConfig) -> Result<Graph> {
    match cfg.fault {
        Some(seed) => inject_fault(&g, seed),
        None => Ok(g),
    }
}

fn upward(from: usize, cap: usize) -> Vec<usize> {
    (from..=cap.max(from)).collect()
}

/// Sublevel diagrams of `g` against those of its `(j + 1)`-core with the
/// original filter values, in dimensions `j..=cap`.
pub fn verify_coral(g: &Graph, f: &VertexFilter, j: usize) -> Result<VerificationReport> {
    verify_coral_with(g, f, j, &VerifyConfig::default())
}

pub fn verify_coral_with(
    g: &Graph,
    f: &VertexFilter,
    j: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let (core, _) = coral_reduce(g, f, j)?;
    let core = maybe_fault(core, cfg)?;
    compare(
        Check::Coral,
        Some(j),
        g,
        Some(f),
        &core,
        upward(j, cfg.cap),
        cfg,
        |h, d| build_sublevel(h, f, d),
    )
}

/// Diagrams of `g` against those of its pruned graph. Filter modes compare
/// dimensions `0..=cap`; power mode compares `1..=cap` on the power
/// filtration with steps up to the diameter of `g`.
pub fn verify_prunit(
    g: &Graph,
    f: Option<&VertexFilter>,
    mode: PruneMode,
) -> Result<VerificationReport> {
    verify_prunit_with(g, f, mode, &VerifyConfig::default())
}

type BuildFn = fn(&Graph, &VertexFilter, usize) -> Result<Filtration>;

pub fn verify_prunit_with(
    g: &Graph,
    f: Option<&VertexFilter>,
    mode: PruneMode,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let pruned = prunit(g, f, mode)?;
    let reduced = maybe_fault(pruned.graph, cfg)?;
    match mode {
        PruneMode::Sublevel | PruneMode::Superlevel => {
            let Some(f) = f else {
                return invalid(format!("{mode} pruning needs a vertex filter"));
            };
            let (check, build): (_, BuildFn) = if mode == PruneMode::Sublevel {
                (Check::PrunitSub, build_sublevel)
            } else {
                (Check::PrunitSuper, build_superlevel)
            };
            compare(
                check,
                None,
                g,
                Some(f),
                &reduced,
                upward(0, cfg.cap),
                cfg,
                |h, d| build(h, f, d),
            )
        }
        PruneMode::Power => {
            let steps = g.diameter().max(1);
            compare(
                Check::PrunitPower,
                None,
                g,
                None,
                &reduced,
                upward(1, cfg.cap),
                cfg,
                |h, d| build_power(h, d, steps),
            )
        }
    }
}

/// Sublevel pruning followed by the `(k + 1)`-core, compared in dimensions
/// `k..=cap`.
pub fn verify_combined(g: &Graph, f: &VertexFilter, k: usize) -> Result<VerificationReport> {
    verify_combined_with(g, f, k, &VerifyConfig::default())
}

pub fn verify_combined_with(
    g: &Graph,
    f: &VertexFilter,
    k: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let pruned = prunit(g, Some(f), PruneMode::Sublevel)?;
    let carried = pruned.filter.unwrap_or_default();
    let (core, _) = coral_reduce(&pruned.graph, &carried, k)?;
    let core = maybe_fault(core, cfg)?;
    compare(
        Check::Combined,
        Some(k),
        g,
        Some(f),
        &core,
        upward(k, cfg.cap),
        cfg,
        |h, d| build_sublevel(h, f, d),
    )
}

/// Erdős–Rényi graph `G(n, p)` on vertices `0..n`.
///
/// Uses ChaCha8 seeded from `seed` and visits pairs `(i, j)`, `i < j`, in
/// lexicographic order, adding each edge when a uniform `f64` draw falls
/// below `p`. The output is identical across platforms.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("edge probability {p} outside [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n as u64 {
        for j in i + 1..n as u64 {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_parts(0..n as u64, edges).0)
}

/// Parameters of one random graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Instance {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl Instance {
    pub fn name(&self) -> String {
        format!("er-n{}-p{}-s{}", self.n, self.p, self.seed)
    }

    pub fn graph(&self) -> Result<Graph> {
        random_graph(self.n, self.p, self.seed)
    }
}

/// Edge probabilities of the standard corpus.
pub const CORPUS_PS: [f64; 5] = [0.1, 0.2, 0.3, 0.4, 0.5];

/// The standard random corpus: instance `i` has seed `i`, probability
/// `CORPUS_PS[i % 5]` and `n = 8 + (i / 5) % 23`, so sizes cover `8..=30`.
pub fn er_corpus(count: usize) -> Vec<Instance> {
    (0..count)
        .map(|i| Instance {
            n: 8 + (i / CORPUS_PS.len()) % 23,
            p: CORPUS_PS[i % CORPUS_PS.len()],
            seed: i as u64,
        })
        .collect()
}

/// Connected random graphs with `6 <= n <= n_max`. Instance `i` takes
/// `n = 6 + i % (n_max - 5)` and `p` from `{0.3, 0.4, 0.5}`, and the first
/// seed of the form `1000 * i + t` that yields a connected graph.
pub fn connected_corpus(count: usize, n_max: usize) -> Result<Vec<Instance>> {
    if n_max < 6 {
        return invalid("connected corpus needs n_max >= 6");
    }
    let ps = [0.3, 0.4, 0.5];
    (0..count)
        .map(|i| {
            let n = 6 + i % (n_max - 5);
            let p = ps[i % ps.len()];
            for t in 0..1000 {
                let inst = Instance {
                    n,
                    p,
                    seed: 1000 * i as u64 + t,
                };
                if inst.graph()?.is_connected() {
                    return Ok(inst);
                }
            }
            invalid(format!("no connected graph found for n={n} p={p}"))
        })
        .collect()
}

/// Runs `check` with the degree filter on every instance in parallel.
/// Reports come back in corpus order.
pub fn sweep(
    instances: &[Instance],
    check: Check,
    index: usize,
    cfg: &VerifyConfig,
) -> Result<Vec<VerificationReport>> {
    instances
        .par_iter()
        .map(|inst| {
            let g = inst.graph()?;
            let f = VertexFilter::degree(&g);
            let report = match check {
                Check::Coral => verify_coral_with(&g, &f, index, cfg)?,
                Check::Combined => verify_combined_with(&g, &f, index, cfg)?,
                Check::PrunitSub => verify_prunit_with(&g, Some(&f), PruneMode::Sublevel, cfg)?,
                Check::PrunitSuper => verify_prunit_with(&g, Some(&f), PruneMode::Superlevel, cfg)?,
                Check::PrunitPower => verify_prunit_with(&g, None, PruneMode::Power, cfg)?,
            };
            Ok(report.named(inst.name()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::Direction;
    use crate::graph::named::*;
    use crate::persistence::{Pair, ZeroPairPolicy};

    fn pd(policy: ZeroPairPolicy, pairs: &[(f64, f64)]) -> PersistenceDiagram {
        let dim0 = pairs.iter().map(|&(b, d)| Pair::new(b, d)).collect();
        PersistenceDiagram::new(policy, Direction::Sublevel, vec![dim0])
    }

    #[test]
    fn equality_is_multiset_equality() {
        let a = pd(ZeroPairPolicy::Drop, &[(1.0, 2.0), (0.0, f64::INFINITY)]);
        let b = pd(ZeroPairPolicy::Drop, &[(0.0, f64::INFINITY), (1.0, 2.0)]);
        assert!(pd_equal(&a, &a, &[0]).unwrap());
        assert!(pd_equal(&a, &b, &[0]).unwrap());
    }

    #[test]
    fn zero_pairs_follow_policy() {
        let a = pd(ZeroPairPolicy::Drop, &[(1.0, 2.0)]);
        let b = pd(ZeroPairPolicy::Drop, &[(1.0, 2.0), (3.0, 3.0)]);
        assert!(pd_equal(&a, &b, &[0]).unwrap());
        let a = pd(ZeroPairPolicy::Keep, &[(1.0, 2.0)]);
        let b = pd(ZeroPairPolicy::Keep, &[(1.0, 2.0), (3.0, 3.0)]);
        assert!(!pd_equal(&a, &b, &[0]).unwrap());
    }

    #[test]
    fn mismatched_policies_are_rejected() {
        let a = pd(ZeroPairPolicy::Drop, &[]);
        let b = pd(ZeroPairPolicy::Keep, &[]);
        assert!(matches!(
            pd_equal(&a, &b, &[0]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn tolerance() {
        let a = pd(ZeroPairPolicy::Drop, &[(0.1 + 0.2, 1.0)]);
        let b = pd(ZeroPairPolicy::Drop, &[(0.3, 1.0)]);
        assert!(!pd_equal(&a, &b, &[0]).unwrap());
        assert!(pd_equal_tol(&a, &b, &[0], 1e-12).unwrap());
    }

    #[test]
    fn coral_on_pendant_square() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]);
        let f = VertexFilter::degree(&g);
        let r = verify_coral(&g, &f, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.dims.iter().map(|d| d.dim).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(r.dims[0].pairs_original, 1);
        assert_eq!(r.vertices_after, 4);
    }

    #[test]
    fn coral_on_cycle_top_dimension() {
        let g = cycle(5);
        let r = verify_coral(&g, &VertexFilter::degree(&g), 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.vertices_after, 0);
        assert_eq!(r.dims[0].pairs_original, 0);
    }

    #[test]
    fn coral_dimension_zero_sees_isolated_vertices() {
        let (g, _) = Graph::from_parts([7], [(1, 2)]);
        let r = verify_coral(&g, &VertexFilter::degree(&g), 0).unwrap();
        assert!(!r.pass);
        assert_eq!(r.failed_dims(), vec![0]);
        let cx = r.counterexample.unwrap();
        assert_eq!(cx.dim, 0);
        assert_eq!(cx.vertices, vec![1, 2, 7]);
    }

    #[test]
    fn prunit_examples() {
        let k6 = complete(6);
        let f = VertexFilter::constant(&k6, 0.0).unwrap();
        let r = verify_prunit(&k6, Some(&f), PruneMode::Sublevel).unwrap();
        assert!(r.pass);
        assert_eq!(r.vertices_after, 1);

        let g = crate::prunit::tests::two_dominated();
        let r = verify_prunit(&g, None, PruneMode::Power).unwrap();
        assert!(r.pass);
        assert_eq!(r.dims.iter().map(|d| d.dim).collect::<Vec<_>>(), vec![1, 2]);

        assert!(verify_prunit(&g, None, PruneMode::Sublevel).is_err());
    }

    #[test]
    fn combined_examples() {
        let empty = Graph::new();
        assert!(
            verify_combined(&empty, &VertexFilter::new(), 1)
                .unwrap()
                .pass
        );

        let g = disjoint_union(&complete(4), &cycle(5));
        assert!(
            verify_combined(&g, &VertexFilter::degree(&g), 1)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn fault_breaks_a_cycle() {
        // C_6 has no dominated vertices, so pruning keeps it whole and the
        // injected deletion destroys the loop
        let g = cycle(6);
        let f = VertexFilter::degree(&g);
        let cfg = VerifyConfig {
            fault: Some(3),
            ..Default::default()
        };
        let r = verify_prunit_with(&g, Some(&f), PruneMode::Sublevel, &cfg).unwrap();
        assert!(!r.pass);
        assert_eq!(r.failed_dims(), vec![1]);
    }

    #[test]
    fn random_graph_extremes() {
        let g = random_graph(5, 0.0, 42).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(random_graph(4, 1.0, 9).unwrap(), complete_from_zero(4));
        assert!(random_graph(3, 1.5, 0).is_err());
        assert!(random_graph(3, f64::NAN, 0).is_err());
        assert_eq!(
            random_graph(20, 0.3, 7).unwrap(),
            random_graph(20, 0.3, 7).unwrap()
        );
    }

    fn complete_from_zero(n: u64) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::from_edges(edges)
    }

    #[test]
    fn corpus_shapes() {
        let c = er_corpus(200);
        assert_eq!(c.len(), 200);
        assert!(c.iter().all(|i| (8..=30).contains(&i.n)));
        assert_eq!(c.iter().map(|i| i.n).max(), Some(30));
        assert!(CORPUS_PS.iter().all(|p| c.iter().any(|i| i.p == *p)));

        let cc = connected_corpus(12, 15).unwrap();
        for inst in &cc {
            assert!(inst.n <= 15);
            assert!(inst.graph().unwrap().is_connected());
        }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.to_string().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }
}
