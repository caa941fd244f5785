//! Persistence diagrams over the two-element field.
//!
//! [`compute_pd`] reduces the boundary matrix column by column (standard
//! left-to-right algorithm) with clearing: dimensions are processed from the
//! top down and every column whose index already appeared as a pivot one
//! dimension up is skipped. [`pd0_unionfind`] is an elder-rule fast path for
//! dimension 0.

use std::collections::HashMap;
use std::io::Write;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::filtration::{Direction, Filtration};
use crate::graph::VertexId;

/// What to do with pairs whose birth and death values coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroPairPolicy {
    #[default]
    Drop,
    Keep,
}

impl std::str::FromStr for ZeroPairPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "drop" => Ok(ZeroPairPolicy::Drop),
            "keep" => Ok(ZeroPairPolicy::Keep),
            other => invalid(format!("unknown zero-pair policy {other:?}")),
        }
    }
}

/// A persistence pair on the oriented scale; `death` is `f64::INFINITY` for
/// essential classes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair {
    pub birth: f64,
    pub death: f64,
}

impl Pair {
    pub fn new(birth: f64, death: f64) -> Self {
        Self { birth, death }
    }

    pub fn is_essential(&self) -> bool {
        self.death == f64::INFINITY
    }

    fn cmp_key(&self, other: &Self) -> std::cmp::Ordering {
        self.birth
            .total_cmp(&other.birth)
            .then(self.death.total_cmp(&other.death))
    }
}

/// Per-dimension multisets of persistence pairs.
///
/// Values live on the oriented axis: superlevel diagrams hold negated filter
/// values, so `birth <= death` always holds. Pairs are kept sorted, so two
/// diagrams are equal as multisets iff their pair lists are equal.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceDiagram {
    policy: ZeroPairPolicy,
    direction: Direction,
    dims: Vec<Vec<Pair>>,
}

impl PersistenceDiagram {
    pub fn new(policy: ZeroPairPolicy, direction: Direction, dims: Vec<Vec<Pair>>) -> Self {
        let mut d = Self {
            policy,
            direction,
            dims,
        };
        for pairs in &mut d.dims {
            if policy == ZeroPairPolicy::Drop {
                pairs.retain(|p| p.birth != p.death);
            }
            pairs.sort_by(Pair::cmp_key);
        }
        d
    }

    pub fn policy(&self) -> ZeroPairPolicy {
        self.policy
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Highest dimension stored, or `None` for a diagram without dimensions.
    pub fn max_dim(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    /// Pairs of dimension `k`; empty when `k` was not computed.
    pub fn pairs(&self, k: usize) -> &[Pair] {
        self.dims.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn essential_count(&self, k: usize) -> usize {
        self.pairs(k).iter().filter(|p| p.is_essential()).count()
    }

    /// `{"dims": {"0": [[b, d], ...], ...}}` with `"inf"` for infinite deaths.
    pub fn to_json(&self) -> serde_json::Value {
        let dims: serde_json::Map<String, serde_json::Value> = self
            .dims
            .iter()
            .enumerate()
            .map(|(k, pairs)| {
                let list = pairs
                    .iter()
                    .map(|p| serde_json::json!([json_value(p.birth), json_value(p.death)]))
                    .collect();
                (k.to_string(), serde_json::Value::Array(list))
            })
            .collect();
        serde_json::json!({
            "direction": self.direction,
            "zero_pairs": self.policy,
            "dims": dims,
        })
    }

    /// CSV with columns `dim,birth,death`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["dim", "birth", "death"])?;
        for (k, pairs) in self.dims.iter().enumerate() {
            for p in pairs {
                w.write_record([k.to_string(), fmt_value(p.birth), fmt_value(p.death)])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

fn json_value(x: f64) -> serde_json::Value {
    if x == f64::INFINITY {
        serde_json::Value::from("inf")
    } else {
        serde_json::Value::from(x)
    }
}

fn fmt_value(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_string()
    } else {
        x.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PdOptions {
    pub zero_pairs: ZeroPairPolicy,
    /// Skip columns known to reduce to zero. Disabling it gives the plain
    /// left-to-right reduction.
    pub clearing: bool,
}

impl Default for PdOptions {
    fn default() -> Self {
        Self {
            zero_pairs: ZeroPairPolicy::Drop,
            clearing: true,
        }
    }
}

/// Persistence diagram in dimensions `0..=max_hom_dim`, dropping
/// zero-persistence pairs.
pub fn compute_pd(filt: &Filtration, max_hom_dim: usize) -> Result<PersistenceDiagram> {
    compute_pd_with(filt, max_hom_dim, PdOptions::default())
}

pub fn compute_pd_with(
    filt: &Filtration,
    max_hom_dim: usize,
    opts: PdOptions,
) -> Result<PersistenceDiagram> {
    check_dims(filt, max_hom_dim)?;
    let top = max_hom_dim + 1;
    let bm = BoundaryMatrix::build(filt, top)?;
    let n = bm.columns.len();

    let mut reduced: Vec<Vec<usize>> = bm.columns;
    // pivot row -> column whose reduced pivot it is
    let mut owner = vec![usize::MAX; n];
    let mut cleared = vec![false; n];

    let mut order: Vec<usize> = (0..n).filter(|&j| bm.dims[j] >= 1).collect();
    if opts.clearing {
        // top dimension first; stable sort keeps filtration order within a dim
        order.sort_by_key(|&j| std::cmp::Reverse(bm.dims[j]));
    }
    for j in order {
        if cleared[j] {
            reduced[j].clear();
            continue;
        }
        let mut col = std::mem::take(&mut reduced[j]);
        while let Some(&pivot) = col.last() {
            let other = owner[pivot];
            if other == usize::MAX {
                break;
            }
            col = symmetric_difference(&col, &reduced[other]);
        }
        if let Some(&pivot) = col.last() {
            owner[pivot] = j;
            if opts.clearing {
                cleared[pivot] = true;
            }
        }
        reduced[j] = col;
    }

    let value = |j: usize| filt.thresholds()[bm.births[j]];
    let mut dims = vec![Vec::new(); max_hom_dim + 1];
    for j in 0..n {
        let d = bm.dims[j];
        if let Some(&pivot) = reduced[j].last() {
            let k = bm.dims[pivot];
            if k <= max_hom_dim {
                dims[k].push(Pair::new(value(pivot), value(j)));
            }
        } else if d <= max_hom_dim && owner[j] == usize::MAX {
            dims[d].push(Pair::new(value(j), f64::INFINITY));
        }
    }
    Ok(PersistenceDiagram::new(
        opts.zero_pairs,
        filt.direction(),
        dims,
    ))
}

/// Betti numbers of the final complex, dimensions `0..=max_hom_dim`.
pub fn betti_numbers(filt: &Filtration, max_hom_dim: usize) -> Result<Vec<usize>> {
    let pd = compute_pd(filt, max_hom_dim)?;
    Ok((0..=max_hom_dim).map(|k| pd.essential_count(k)).collect())
}

/// Dimension-0 diagram by union-find with the elder rule: when an edge joins
/// two components, the one whose oldest vertex comes later in the
/// filtration dies.
pub fn pd0_unionfind(filt: &Filtration, policy: ZeroPairPolicy) -> Result<PersistenceDiagram> {
    if filt.maxdim() < 1 {
        return invalid("dimension-0 persistence needs the edges of the filtration");
    }
    let mut index: HashMap<VertexId, usize> = HashMap::new();
    let mut births = Vec::new();
    let mut dsu = Dsu::default();
    let mut pairs = Vec::new();
    for (s, b) in filt.simplices() {
        let t = filt.thresholds()[*b];
        match s.vertices() {
            [v] => {
                index.insert(*v, dsu.push());
                births.push(t);
            }
            [a, c] => {
                let ia = *index.get(a).ok_or_else(|| {
                    Error::Structure(format!("edge {a}-{c} before its vertex {a}"))
                })?;
                let ic = *index.get(c).ok_or_else(|| {
                    Error::Structure(format!("edge {a}-{c} before its vertex {c}"))
                })?;
                let (ra, rc) = (dsu.find(ia), dsu.find(ic));
                if ra == rc {
                    continue;
                }
                // roots are the oldest member of their component
                let (elder, younger) = if ra < rc { (ra, rc) } else { (rc, ra) };
                pairs.push(Pair::new(births[younger], t));
                dsu.parent[younger] = elder;
            }
            _ => {}
        }
    }
    for (i, &b) in births.iter().enumerate() {
        if dsu.find(i) == i {
            pairs.push(Pair::new(b, f64::INFINITY));
        }
    }
    Ok(PersistenceDiagram::new(
        policy,
        filt.direction(),
        vec![pairs],
    ))
}

#[derive(Default)]
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn push(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

fn check_dims(filt: &Filtration, max_hom_dim: usize) -> Result<()> {
    if max_hom_dim + 1 > filt.maxdim() {
        return invalid(format!(
            "diagrams up to dimension {max_hom_dim} need simplices up to dimension {}, \
             but the filtration stops at {}",
            max_hom_dim + 1,
            filt.maxdim()
        ));
    }
    Ok(())
}

/// Sparse boundary matrix in canonical filtration order, restricted to
/// simplices of dimension `<= top`.
struct BoundaryMatrix {
    columns: Vec<Vec<usize>>,
    dims: Vec<usize>,
    births: Vec<usize>,
}

impl BoundaryMatrix {
    fn build(filt: &Filtration, top: usize) -> Result<Self> {
        let simplices: Vec<_> = filt
            .simplices()
            .iter()
            .filter(|(s, _)| s.dim() <= top)
            .collect();
        let mut position: HashMap<&[VertexId], usize> = HashMap::with_capacity(simplices.len());
        let mut columns = Vec::with_capacity(simplices.len());
        let mut dims = Vec::with_capacity(simplices.len());
        let mut births = Vec::with_capacity(simplices.len());
        for (j, (s, b)) in simplices.iter().enumerate() {
            let mut col = Vec::with_capacity(s.dim() + 1);
            for face in s.facets() {
                match position.get(face.as_slice()) {
                    Some(&i) if births[i] <= *b => col.push(i),
                    _ => {
                        return Err(Error::Structure(format!(
                            "face {face:?} of {:?} missing or born later",
                            s.vertices()
                        )))
                    }
                }
            }
            col.sort_unstable();
            position.insert(s.vertices(), j);
            columns.push(col);
            dims.push(s.dim());
            births.push(*b);
        }
        Ok(Self {
            columns,
            dims,
            births,
        })
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter::VertexFilter;
    use crate::filtration::{build_sublevel, Filtration};
    use crate::graph::named::*;
    use crate::graph::Graph;

    const INF: f64 = f64::INFINITY;

    fn pairs(pd: &PersistenceDiagram, k: usize) -> Vec<(f64, f64)> {
        pd.pairs(k).iter().map(|p| (p.birth, p.death)).collect()
    }

    #[test]
    fn single_vertex() {
        let (g, _) = Graph::from_parts([1], []);
        let f: VertexFilter = [(1, 4.0)].into_iter().collect();
        let pd = compute_pd(&build_sublevel(&g, &f, 1).unwrap(), 0).unwrap();
        assert_eq!(pairs(&pd, 0), vec![(4.0, INF)]);
    }

    #[test]
    fn five_cycle_degree() {
        let c5 = cycle(5);
        let filt = build_sublevel(&c5, &VertexFilter::degree(&c5), 2).unwrap();
        let pd = compute_pd(&filt, 1).unwrap();
        assert_eq!(pairs(&pd, 0), vec![(2.0, INF)]);
        assert_eq!(pairs(&pd, 1), vec![(2.0, INF)]);
        assert_eq!(betti_numbers(&filt, 1).unwrap(), vec![1, 1]);
    }

    #[test]
    fn triangle_with_increasing_filter() {
        let f: VertexFilter = [(1, 1.0), (2, 2.0), (3, 3.0)].into_iter().collect();
        let filt = build_sublevel(&complete(3), &f, 2).unwrap();
        let pd = compute_pd(&filt, 1).unwrap();
        assert_eq!(pairs(&pd, 0), vec![(1.0, INF)]);
        assert!(pd.pairs(1).is_empty());

        let keep = PdOptions {
            zero_pairs: ZeroPairPolicy::Keep,
            clearing: true,
        };
        let pd = compute_pd_with(&filt, 1, keep).unwrap();
        assert_eq!(pairs(&pd, 0), vec![(1.0, INF), (2.0, 2.0), (3.0, 3.0)]);
        assert_eq!(pairs(&pd, 1), vec![(3.0, 3.0)]);
    }

    #[test]
    fn betti_examples() {
        let k4 = complete(4);
        let filt = build_sublevel(&k4, &VertexFilter::constant(&k4, 0.0).unwrap(), 3).unwrap();
        assert_eq!(betti_numbers(&filt, 2).unwrap(), vec![1, 0, 0]);

        let two = Graph::from_edges([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
        let filt = build_sublevel(&two, &VertexFilter::constant(&two, 0.0).unwrap(), 2).unwrap();
        assert_eq!(betti_numbers(&filt, 1).unwrap(), vec![2, 0]);
    }

    #[test]
    fn octahedron_has_a_void() {
        // K_{2,2,2}: the octahedron is a 2-sphere
        let mut edges = Vec::new();
        for a in 1..=6u64 {
            for b in a + 1..=6 {
                if !(a % 2 == 1 && b == a + 1) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(edges);
        let filt = build_sublevel(&g, &VertexFilter::constant(&g, 0.0).unwrap(), 3).unwrap();
        assert_eq!(betti_numbers(&filt, 2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn dimension_cap_enforced() {
        let c5 = cycle(5);
        let filt = build_sublevel(&c5, &VertexFilter::degree(&c5), 1).unwrap();
        assert!(compute_pd(&filt, 1).is_err());
        assert!(compute_pd(&filt, 0).is_ok());
    }

    #[test]
    fn closure_violation_is_structural() {
        let text = "# maxdim 1\n0 1\n0 1 2\n";
        assert!(matches!(
            Filtration::parse_text(text.as_bytes()),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn union_find_elder_rule() {
        let (g, _) = Graph::from_parts([1, 2], []);
        let f: VertexFilter = [(1, 1.0), (2, 2.0)].into_iter().collect();
        let filt = build_sublevel(&g, &f, 1).unwrap();
        let pd = pd0_unionfind(&filt, ZeroPairPolicy::Drop).unwrap();
        assert_eq!(pairs(&pd, 0), vec![(1.0, INF), (2.0, INF)]);

        let g = path(2);
        let filt = build_sublevel(&g, &f, 1).unwrap();
        let drop = pd0_unionfind(&filt, ZeroPairPolicy::Drop).unwrap();
        assert_eq!(pairs(&drop, 0), vec![(1.0, INF)]);
        let keep = pd0_unionfind(&filt, ZeroPairPolicy::Keep).unwrap();
        assert_eq!(pairs(&keep, 0), vec![(1.0, INF), (2.0, 2.0)]);
    }

    #[test]
    fn union_find_needs_edges() {
        let g = path(2);
        let filt = build_sublevel(&g, &VertexFilter::degree(&g), 0).unwrap();
        assert!(pd0_unionfind(&filt, ZeroPairPolicy::Drop).is_err());
    }

    #[test]
    fn json_and_csv_output() {
        let c5 = cycle(5);
        let filt = build_sublevel(&c5, &VertexFilter::degree(&c5), 2).unwrap();
        let pd = compute_pd(&filt, 1).unwrap();
        let json = pd.to_json();
        assert_eq!(json["dims"]["1"], serde_json::json!([[2.0, "inf"]]));
        let mut buf = Vec::new();
        pd.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "dim,birth,death\n0,2,inf\n1,2,inf\n"
        );
    }
}
