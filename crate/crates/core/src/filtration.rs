//! Clique-complex filtrations of graphs.
//!
//! Three kinds are supported: sublevel and superlevel filtrations induced by
//! a [`VertexFilter`], and the power filtration whose `n`-th complex is the
//! clique complex of the `n`-th graph power.
//!
//! Threshold values are stored *oriented*: superlevel values are negated so
//! that thresholds always increase along the filtration. Use
//! [`Filtration::display_value`] to get values back on the filter's scale.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::coral::peel;
use crate::error::{invalid, Error, Result};
use crate::filter::VertexFilter;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Sublevel,
    Superlevel,
    Power,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Sublevel => "sublevel",
            Direction::Superlevel => "superlevel",
            Direction::Power => "power",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sub" | "sublevel" => Ok(Direction::Sublevel),
            "super" | "superlevel" => Ok(Direction::Superlevel),
            "power" => Ok(Direction::Power),
            other => invalid(format!("unknown filtration direction {other:?}")),
        }
    }
}

/// A clique given by its vertex ids in strictly ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts and deduplicates `vertices`; errors when empty.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return invalid("a simplex needs at least one vertex");
        }
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, in the order obtained by dropping vertex 0, 1, ...
    pub fn facets(&self) -> impl Iterator<Item = Vec<VertexId>> + '_ {
        let n = self.0.len();
        (0..n).filter(move |_| n > 1).map(move |skip| {
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect()
        })
    }
}

/// How thresholds are chosen for filter-induced filtrations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum ThresholdSpec {
    /// Every distinct filter value is a threshold.
    #[default]
    Distinct,
    /// Values are rounded up to the next multiple of the step, in the
    /// direction of the filtration.
    Step(f64),
}

impl ThresholdSpec {
    fn snap(self, oriented: f64) -> f64 {
        match self {
            ThresholdSpec::Distinct => oriented,
            ThresholdSpec::Step(d) => (oriented / d).ceil() * d + 0.0,
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            ThresholdSpec::Step(d) if !(d.is_finite() && d > 0.0) => {
                invalid(format!("threshold step must be positive, got {d}"))
            }
            _ => Ok(()),
        }
    }
}

/// Sorted distinct values of `f`.
pub fn thresholds_of(f: &VertexFilter) -> Result<Vec<f64>> {
    thresholds_with(f, ThresholdSpec::Distinct)
}

/// Sorted distinct values of `f` after applying `spec` (sublevel scale).
pub fn thresholds_with(f: &VertexFilter, spec: ThresholdSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    if f.is_empty() {
        return invalid("cannot take thresholds of an empty filter");
    }
    Ok(sorted_distinct(f.iter().map(|(_, x)| spec.snap(x))))
}

fn sorted_distinct(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// All cliques of `g` with `1..=max_size` vertices, each exactly once,
/// ordered by size and then lexicographically.
///
/// Cliques are grown along a degeneracy ordering, only ever adding later
/// common neighbors, so no clique is produced twice.
pub fn enumerate_cliques(g: &Graph, max_size: usize) -> Vec<Simplex> {
    let mut out = Vec::new();
    for_each_clique(g, max_size, |c| {
        let mut ids: Vec<VertexId> = c.iter().map(|&i| g.id(i)).collect();
        ids.sort_unstable();
        out.push(Simplex(ids));
    });
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Calls `visit` with the local indices of every clique of size
/// `1..=max_size`.
pub(crate) fn for_each_clique(g: &Graph, max_size: usize, mut visit: impl FnMut(&[usize])) {
    if max_size == 0 {
        return;
    }
    let n = g.vertex_count();
    let (_, order) = peel(g);
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut clique = Vec::with_capacity(max_size);
    for v in 0..n {
        let mut later: Vec<usize> = g
            .adj_local(v)
            .iter()
            .map(|&w| w as usize)
            .filter(|&w| rank[w] > rank[v])
            .collect();
        later.sort_unstable_by_key(|&w| rank[w]);
        clique.push(v);
        extend(g, &mut clique, &later, max_size, &mut visit);
        clique.pop();
    }
}

fn extend(
    g: &Graph,
    clique: &mut Vec<usize>,
    candidates: &[usize],
    max_size: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    visit(clique);
    if clique.len() == max_size {
        return;
    }
    for (i, &c) in candidates.iter().enumerate() {
        let nc = g.adj_local(c);
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| nc.binary_search(&(w as u32)).is_ok())
            .collect();
        clique.push(c);
        extend(g, clique, &next, max_size, visit);
        clique.pop();
    }
}

/// A filtered clique complex truncated at `maxdim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtration {
    direction: Direction,
    thresholds: Vec<f64>,
    simplices: Vec<(Simplex, usize)>,
    maxdim: usize,
}

impl Filtration {
    fn assemble(
        direction: Direction,
        thresholds: Vec<f64>,
        mut simplices: Vec<(Simplex, usize)>,
        maxdim: usize,
    ) -> Self {
        simplices.sort_by(|(a, ia), (b, ib)| {
            ia.cmp(ib)
                .then_with(|| a.0.len().cmp(&b.0.len()))
                .then_with(|| a.0.cmp(&b.0))
        });
        let filt = Self {
            direction,
            thresholds,
            simplices,
            maxdim,
        };
        debug_assert!(filt.check_closure().is_ok());
        filt
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Oriented threshold values, strictly increasing.
    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    /// Threshold `index` on the scale of the original filter.
    pub fn display_value(&self, index: usize) -> f64 {
        orient(self.direction, self.thresholds[index])
    }

    /// Simplices with their birth indices, in canonical order: ascending
    /// birth index, then dimension, then vertex tuple.
    pub fn simplices(&self) -> &[(Simplex, usize)] {
        &self.simplices
    }

    pub fn maxdim(&self) -> usize {
        self.maxdim
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Number of simplices of each dimension `0..=maxdim`.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.maxdim + 1];
        for (s, _) in &self.simplices {
            counts[s.dim()] += 1;
        }
        counts
    }

    /// Verifies that every face of every simplex is present no later than
    /// the simplex itself, that the order is canonical, and that dimensions
    /// respect `maxdim`.
    pub fn check_closure(&self) -> Result<()> {
        let mut birth: HashMap<&[VertexId], usize> = HashMap::with_capacity(self.simplices.len());
        for (s, i) in &self.simplices {
            if *i >= self.thresholds.len() {
                return Err(Error::Structure(format!(
                    "simplex {:?} has birth index {i} past the last threshold",
                    s.0
                )));
            }
            if s.dim() > self.maxdim {
                return Err(Error::Structure(format!(
                    "simplex {:?} exceeds maxdim {}",
                    s.0, self.maxdim
                )));
            }
            if birth.insert(&s.0, *i).is_some() {
                return Err(Error::Structure(format!("duplicate simplex {:?}", s.0)));
            }
        }
        for (s, i) in &self.simplices {
            for face in s.facets() {
                match birth.get(face.as_slice()) {
                    Some(fi) if fi <= i => {}
                    Some(_) => {
                        return Err(Error::Structure(format!(
                            "face {face:?} of {:?} is born after it",
                            s.0
                        )))
                    }
                    None => {
                        return Err(Error::Structure(format!(
                            "face {face:?} of {:?} is missing",
                            s.0
                        )))
                    }
                }
            }
        }
        let canonical = self.simplices.windows(2).all(|w| {
            let ((a, ia), (b, ib)) = (&w[0], &w[1]);
            (ia, a.0.len(), &a.0) < (ib, b.0.len(), &b.0)
        });
        if !canonical {
            return Err(Error::Structure(
                "simplices are not in canonical order".into(),
            ));
        }
        Ok(())
    }

    /// Line format: optional `#` header lines, then one simplex per line as
    /// `birth_value v0 v1 ... vk` in canonical order. Birth values are on the
    /// filter's own scale.
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# direction {}", self.direction)?;
        writeln!(out, "# maxdim {}", self.maxdim)?;
        write!(out, "# thresholds")?;
        for i in 0..self.thresholds.len() {
            write!(out, " {}", self.display_value(i))?;
        }
        writeln!(out)?;
        for (s, i) in &self.simplices {
            write!(out, "{}", self.display_value(*i))?;
            for v in &s.0 {
                write!(out, " {v}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }

    /// Parses the format written by [`Filtration::write_text`]. Missing
    /// headers default to a sublevel filtration whose thresholds are the
    /// distinct birth values and whose `maxdim` is the largest dimension
    /// seen. The result is re-sorted canonically and checked for closure.
    pub fn parse_text<R: BufRead>(input: R) -> Result<Filtration> {
        let mut direction = Direction::Sublevel;
        let mut maxdim: Option<usize> = None;
        let mut declared: Option<Vec<f64>> = None;
        let mut rows: Vec<(f64, Simplex, usize)> = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let lineno = lineno + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: lineno, msg };
            if let Some(header) = line.strip_prefix('#') {
                let mut parts = header.split_whitespace();
                match parts.next() {
                    Some("direction") => {
                        let d = parts
                            .next()
                            .ok_or_else(|| perr("missing direction".into()))?;
                        direction = d.parse().map_err(|e: Error| perr(e.to_string()))?;
                    }
                    Some("maxdim") => {
                        let d = parts.next().ok_or_else(|| perr("missing maxdim".into()))?;
                        maxdim = Some(d.parse().map_err(|_| perr(format!("bad maxdim {d:?}")))?);
                    }
                    Some("thresholds") => {
                        let vals = parts
                            .map(|t| parse_value(t).map_err(&perr))
                            .collect::<Result<Vec<f64>>>()?;
                        declared = Some(vals);
                    }
                    _ => {}
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let value = parse_value(parts.next().unwrap()).map_err(&perr)?;
            let verts = parts
                .map(|t| {
                    t.parse::<VertexId>()
                        .map_err(|_| perr(format!("bad vertex id {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if verts.is_empty() {
                return Err(perr("simplex without vertices".into()));
            }
            if verts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(perr("vertices must be strictly ascending".into()));
            }
            rows.push((value, Simplex(verts), lineno));
        }

        let oriented = |x: f64| orient(direction, x);
        let thresholds = match declared {
            Some(vals) => {
                let t: Vec<f64> = vals.into_iter().map(oriented).collect();
                if t.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Format("thresholds must be strictly monotone".into()));
                }
                t
            }
            None => sorted_distinct(rows.iter().map(|(v, _, _)| oriented(*v))),
        };
        let maxdim =
            maxdim.unwrap_or_else(|| rows.iter().map(|(_, s, _)| s.dim()).max().unwrap_or(0));
        let mut simplices = Vec::with_capacity(rows.len());
        for (value, s, lineno) in rows {
            let o = oriented(value);
            let idx = thresholds
                .binary_search_by(|t| t.total_cmp(&o))
                .map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("value {value} is not a threshold"),
                })?;
            simplices.push((s, idx));
        }
        simplices.sort_by(|(a, ia), (b, ib)| {
            ia.cmp(ib)
                .then_with(|| a.0.len().cmp(&b.0.len()))
                .then_with(|| a.0.cmp(&b.0))
        });
        let filt = Filtration {
            direction,
            thresholds,
            simplices,
            maxdim,
        };
        filt.check_closure()?;
        Ok(filt)
    }
}

fn parse_value(token: &str) -> std::result::Result<f64, String> {
    match token.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x + 0.0),
        _ => Err(format!("bad value {token:?}")),
    }
}

/// Maps between the filter scale and the oriented scale (an involution).
fn orient(direction: Direction, x: f64) -> f64 {
    match direction {
        Direction::Superlevel => 0.0 - x,
        _ => x,
    }
}

/// Sublevel filtration with one threshold per distinct filter value.
pub fn build_sublevel(g: &Graph, f: &VertexFilter, maxdim: usize) -> Result<Filtration> {
    build_filtered(g, f, maxdim, Direction::Sublevel, ThresholdSpec::Distinct)
}

/// Superlevel filtration with one threshold per distinct filter value.
pub fn build_superlevel(g: &Graph, f: &VertexFilter, maxdim: usize) -> Result<Filtration> {
    build_filtered(g, f, maxdim, Direction::Superlevel, ThresholdSpec::Distinct)
}

/// Filter-induced filtration in either direction. A simplex enters at the
/// threshold where its last vertex enters.
pub fn build_filtered(
    g: &Graph,
    f: &VertexFilter,
    maxdim: usize,
    direction: Direction,
    spec: ThresholdSpec,
) -> Result<Filtration> {
    if direction == Direction::Power {
        return invalid("use build_power for power filtrations");
    }
    spec.validate()?;
    let values: Vec<f64> = g
        .vertices()
        .iter()
        .map(|&v| f.value(v).map(|x| spec.snap(orient(direction, x))))
        .collect::<Result<_>>()?;
    let thresholds = sorted_distinct(values.iter().copied());
    let mut simplices = Vec::new();
    for_each_clique(g, maxdim + 1, |c| {
        let birth = c
            .iter()
            .map(|&i| values[i])
            .fold(f64::NEG_INFINITY, f64::max);
        let idx = thresholds.partition_point(|&t| t < birth);
        let mut ids: Vec<VertexId> = c.iter().map(|&i| g.id(i)).collect();
        ids.sort_unstable();
        simplices.push((Simplex(ids), idx));
    });
    Ok(Filtration::assemble(
        direction, thresholds, simplices, maxdim,
    ))
}

/// Power filtration: vertices at step 0, and a clique enters at the largest
/// pairwise graph distance among its vertices. Steps run `0..=max_power`;
/// pairs in different components never become adjacent.
pub fn build_power(g: &Graph, maxdim: usize, max_power: usize) -> Result<Filtration> {
    let power = g.power(max_power)?;
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n).map(|s| g.bfs_local(s, max_power)).collect();
    let thresholds: Vec<f64> = (0..=max_power).map(|i| i as f64).collect();
    let mut simplices = Vec::new();
    for_each_clique(&power, maxdim + 1, |c| {
        let mut birth = 0;
        for (a, &u) in c.iter().enumerate() {
            for &w in &c[a + 1..] {
                birth = birth.max(dist[u][w]);
            }
        }
        let mut ids: Vec<VertexId> = c.iter().map(|&i| power.id(i)).collect();
        ids.sort_unstable();
        simplices.push((Simplex(ids), birth));
    });
    Ok(Filtration::assemble(
        Direction::Power,
        thresholds,
        simplices,
        maxdim,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn births(filt: &Filtration) -> Vec<(Vec<VertexId>, f64)> {
        filt.simplices()
            .iter()
            .map(|(s, i)| (s.vertices().to_vec(), filt.display_value(*i)))
            .collect()
    }

    #[test]
    fn threshold_examples() {
        let f: VertexFilter = [(1, 2.0), (2, 2.0), (3, 5.0)].into_iter().collect();
        assert_eq!(thresholds_of(&f).unwrap(), vec![2.0, 5.0]);
        let f: VertexFilter = [(1, 3.0)].into_iter().collect();
        assert_eq!(thresholds_of(&f).unwrap(), vec![3.0]);
        assert_eq!(
            thresholds_of(&VertexFilter::degree(&cycle(5))).unwrap(),
            vec![2.0]
        );
        assert!(thresholds_of(&VertexFilter::new()).is_err());
    }

    #[test]
    fn step_thresholds_round_up() {
        let f: VertexFilter = [(1, 1.0), (2, 4.0), (3, 5.0), (4, 9.0)]
            .into_iter()
            .collect();
        assert_eq!(
            thresholds_with(&f, ThresholdSpec::Step(4.0)).unwrap(),
            vec![4.0, 8.0, 12.0]
        );
        assert!(thresholds_with(&f, ThresholdSpec::Step(0.0)).is_err());
    }

    #[test]
    fn clique_counts() {
        let k4 = enumerate_cliques(&complete(4), 3);
        assert_eq!(k4.len(), 14);
        let c5 = enumerate_cliques(&cycle(5), 4);
        assert_eq!(c5.len(), 10);
        assert!(enumerate_cliques(&complete(3), 0).is_empty());
    }

    #[test]
    fn sublevel_max_rule() {
        let f: VertexFilter = [(1, 1.0), (2, 2.0), (3, 3.0)].into_iter().collect();
        let filt = build_sublevel(&complete(3), &f, 2).unwrap();
        let b = births(&filt);
        let expect = vec![
            (vec![1], 1.0),
            (vec![2], 2.0),
            (vec![1, 2], 2.0),
            (vec![3], 3.0),
            (vec![1, 3], 3.0),
            (vec![2, 3], 3.0),
            (vec![1, 2, 3], 3.0),
        ];
        assert_eq!(b, expect);
    }

    #[test]
    fn sublevel_degenerate_cases() {
        let c5 = cycle(5);
        let filt = build_sublevel(&c5, &VertexFilter::degree(&c5), 2).unwrap();
        assert_eq!(filt.len(), 10);
        assert!(filt.simplices().iter().all(|(_, i)| *i == 0));
        assert_eq!(filt.thresholds(), &[2.0]);

        let (single, _) = Graph::from_parts([4], []);
        let f: VertexFilter = [(4, 7.5)].into_iter().collect();
        let filt = build_sublevel(&single, &f, 1).unwrap();
        assert_eq!(births(&filt), vec![(vec![4], 7.5)]);
    }

    #[test]
    fn superlevel_examples() {
        let f: VertexFilter = [(1, 1.0), (2, 2.0), (3, 3.0)].into_iter().collect();
        let filt = build_superlevel(&complete(3), &f, 2).unwrap();
        let first: Vec<_> = filt.simplices().iter().filter(|(_, i)| *i == 0).collect();
        assert_eq!(first.len(), 1);
        assert_eq!(first[0].0.vertices(), &[3]);

        let c = cycle(4);
        let constant = VertexFilter::constant(&c, 1.0).unwrap();
        let sup = build_superlevel(&c, &constant, 2).unwrap();
        let sub = build_sublevel(&c, &constant, 2).unwrap();
        assert_eq!(sup.simplices(), sub.simplices());

        let p = path(3);
        let filt = build_superlevel(&p, &VertexFilter::degree(&p), 1).unwrap();
        let b = births(&filt);
        assert_eq!(b[0], (vec![2], 2.0));
        assert!(b[1..].iter().all(|(_, v)| *v == 1.0));
    }

    #[test]
    fn superlevel_is_negated_sublevel() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]);
        let f = VertexFilter::degree(&g);
        let sup = build_superlevel(&g, &f, 2).unwrap();
        let sub = build_sublevel(&g, &f.negated(), 2).unwrap();
        assert_eq!(sup.thresholds(), sub.thresholds());
        assert_eq!(sup.simplices(), sub.simplices());
    }

    #[test]
    fn power_examples() {
        let filt = build_power(&cycle(6), 5, 3).unwrap();
        let b = births(&filt);
        assert!(b
            .iter()
            .filter(|(s, _)| s.len() == 1)
            .all(|(_, v)| *v == 0.0));
        let edges: Vec<_> = b
            .iter()
            .filter(|(s, v)| s.len() == 2 && *v == 1.0)
            .collect();
        assert_eq!(edges.len(), 6);
        let top = b.iter().find(|(s, _)| s.len() == 6).unwrap();
        assert_eq!(top.1, 3.0);

        let k = build_power(&complete(5), 3, 2).unwrap();
        assert!(k.simplices().iter().all(|(_, i)| *i <= 1));

        let p = build_power(&path(4), 2, 3).unwrap();
        let tri = births(&p)
            .into_iter()
            .find(|(s, _)| s == &vec![1, 2, 3])
            .unwrap();
        assert_eq!(tri.1, 2.0);
        assert!(build_power(&path(4), 2, 0).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 1), (3, 4)]);
        let f = VertexFilter::degree(&g);
        for filt in [
            build_sublevel(&g, &f, 2).unwrap(),
            build_superlevel(&g, &f, 2).unwrap(),
            build_power(&g, 2, 2).unwrap(),
        ] {
            let mut buf = Vec::new();
            filt.write_text(&mut buf).unwrap();
            let back = Filtration::parse_text(buf.as_slice()).unwrap();
            assert_eq!(back, filt);
        }
    }

    #[test]
    fn text_format_errors() {
        let missing_face = "1 1 2\n";
        assert!(matches!(
            Filtration::parse_text(missing_face.as_bytes()),
            Err(Error::Structure(_))
        ));
        let bad_order = "1 1\n1 2\n0 1 2\n";
        assert!(Filtration::parse_text(bad_order.as_bytes()).is_err());
        let bad_token = "1 1\nx 2\n";
        assert!(matches!(
            Filtration::parse_text(bad_token.as_bytes()),
            Err(Error::Parse { line: 2, .. })
        ));
        let unsorted = "1 2\n1 1\n1 2 1\n";
        assert!(Filtration::parse_text(unsorted.as_bytes()).is_err());
    }

    #[test]
    fn closure_detects_late_face() {
        let filt = Filtration {
            direction: Direction::Sublevel,
            thresholds: vec![0.0, 1.0],
            simplices: vec![
                (Simplex(vec![1]), 0),
                (Simplex(vec![1, 2]), 0),
                (Simplex(vec![2]), 1),
            ],
            maxdim: 1,
        };
        assert!(filt.check_closure().is_err());
    }
}
