//! Undirected simple graphs with stable vertex ids.
//!
//! Vertex ids are arbitrary `u64` values and are never renumbered: every
//! reduction in this crate returns a graph whose ids are a subset of the
//! input ids, so filter values and reports stay traceable.

use std::collections::VecDeque;

use crate::error::{invalid, Result};

pub type VertexId = u64;

/// Counts of input anomalies merged away while building a [`Graph`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct NormalizeStats {
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        sorted_subset(&self.0, &other.0)
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<VertexId>> for VertexSet {
    fn from(v: Vec<VertexId>) -> Self {
        v.into_iter().collect()
    }
}

pub(crate) fn sorted_subset<T: Ord>(small: &[T], big: &[T]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut j = 0;
    for x in small {
        while j < big.len() && big[j] < *x {
            j += 1;
        }
        if j == big.len() || big[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Undirected simple graph in adjacency-list form.
///
/// Internally vertices are addressed by their rank in the sorted id list, so
/// sorted local adjacency lists are also sorted by id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<VertexId>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph whose vertices are exactly the endpoints of `edges`.
    pub fn from_edges<I: IntoIterator<Item = (VertexId, VertexId)>>(edges: I) -> Self {
        Self::from_parts(std::iter::empty(), edges).0
    }

    /// Builds a simple graph from an explicit vertex list plus edges. Edge
    /// endpoints are added as vertices; self-loops are dropped and repeated
    /// or reversed edges merged.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> (Self, NormalizeStats)
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut stats = NormalizeStats::default();
        let mut ids: Vec<VertexId> = vertices.into_iter().collect();
        let mut pairs = Vec::new();
        for (a, b) in edges {
            ids.push(a);
            ids.push(b);
            if a == b {
                stats.self_loops += 1;
            } else {
                pairs.push((a.min(b), a.max(b)));
            }
        }
        ids.sort_unstable();
        ids.dedup();
        let before = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        stats.duplicate_edges = before - pairs.len();

        let mut adj = vec![Vec::new(); ids.len()];
        for &(a, b) in &pairs {
            let ia = ids.binary_search(&a).unwrap() as u32;
            let ib = ids.binary_search(&b).unwrap() as u32;
            adj[ia as usize].push(ib);
            adj[ib as usize].push(ia);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let edge_count = pairs.len();
        (
            Self {
                ids,
                adj,
                edge_count,
            },
            stats,
        )
    }

    pub(crate) fn from_local(ids: Vec<VertexId>, adj: Vec<Vec<u32>>) -> Self {
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Self {
            ids,
            adj,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(self.ids.clone())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    pub(crate) fn local(&self, v: VertexId) -> Result<usize> {
        match self.ids.binary_search(&v) {
            Ok(i) => Ok(i),
            Err(_) => invalid(format!("unknown vertex id {v}")),
        }
    }

    pub(crate) fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub(crate) fn adj_local(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub(crate) fn local_adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.adj[self.local(v)?].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> Result<impl Iterator<Item = VertexId> + '_> {
        let i = self.local(v)?;
        Ok(self.adj[i].iter().map(move |&j| self.ids[j as usize]))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.ids.binary_search(&u), self.ids.binary_search(&v)) {
            (Ok(a), Ok(b)) => self.adj[a].binary_search(&(b as u32)).is_ok(),
            _ => false,
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, list)| {
            list.iter()
                .filter(move |&&j| (j as usize) > i)
                .map(move |&j| (self.ids[i], self.ids[j as usize]))
        })
    }

    /// Closed neighborhood `{v} ∪ adj(v)`.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        let i = self.local(v)?;
        Ok(self.adj[i]
            .iter()
            .map(|&j| self.ids[j as usize])
            .chain(std::iter::once(v))
            .collect())
    }

    /// Subgraph induced by `s`, keeping the original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        let mut keep = vec![false; self.ids.len()];
        for v in s.iter() {
            keep[self.local(v)?] = true;
        }
        Ok(self.induced_by_mask(&keep))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> Graph {
        let mut remap = vec![u32::MAX; self.ids.len()];
        let mut ids = Vec::new();
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = ids.len() as u32;
                ids.push(self.ids[i]);
            }
        }
        let adj = keep
            .iter()
            .enumerate()
            .filter(|(_, &k)| k)
            .map(|(i, _)| {
                self.adj[i]
                    .iter()
                    .filter(|&&j| keep[j as usize])
                    .map(|&j| remap[j as usize])
                    .collect()
            })
            .collect();
        Graph::from_local(ids, adj)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.ids.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut cell = Vec::new();
            while let Some(u) = queue.pop_front() {
                cell.push(self.ids[u]);
                for &w in &self.adj[u] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w as usize);
                    }
                }
            }
            cell.sort_unstable();
            out.push(cell);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// BFS distances from local index `src`, stopping at depth `limit`.
    /// Unreached vertices get `usize::MAX`.
    pub(crate) fn bfs_local(&self, src: usize, limit: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.ids.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if dist[u] == limit {
                continue;
            }
            for &w in &self.adj[u] {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices within `hops` of `v`, including `v`.
    pub fn ball(&self, v: VertexId, hops: usize) -> Result<VertexSet> {
        let dist = self.bfs_local(self.local(v)?, hops);
        Ok(dist
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != usize::MAX)
            .map(|(i, _)| self.ids[i])
            .collect())
    }

    /// Largest finite graph distance (0 for graphs with fewer than two
    /// vertices or no edges).
    pub fn diameter(&self) -> usize {
        (0..self.ids.len())
            .map(|s| {
                self.bfs_local(s, usize::MAX)
                    .into_iter()
                    .filter(|&d| d != usize::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// The `n`-th power: `u ~ v` iff `0 < d(u, v) <= n`.
    pub fn power(&self, n: usize) -> Result<Graph> {
        if n < 1 {
            return invalid("graph power requires n >= 1");
        }
        let adj = (0..self.ids.len())
            .map(|s| {
                self.bfs_local(s, n)
                    .into_iter()
                    .enumerate()
                    .filter(|&(i, d)| i != s && d != usize::MAX)
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect();
        Ok(Graph::from_local(self.ids.clone(), adj))
    }

    /// Mean of local clustering coefficients; vertices of degree < 2
    /// contribute 0, and the empty graph has coefficient 0.
    pub fn clustering_coefficient(&self) -> f64 {
        if self.ids.is_empty() {
            return 0.0;
        }
        let total: f64 = (0..self.ids.len()).map(|i| self.local_clustering(i)).sum();
        total / self.ids.len() as f64
    }

    fn local_clustering(&self, i: usize) -> f64 {
        let nbrs = &self.adj[i];
        let d = nbrs.len();
        if d < 2 {
            return 0.0;
        }
        let mut links = 0usize;
        for &a in nbrs {
            links += intersection_count(&self.adj[a as usize], nbrs);
        }
        // every neighbor pair was counted from both ends
        links as f64 / (d * (d - 1)) as f64
    }
}

pub(crate) fn intersection_count(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Small named graphs used throughout tests, examples and the CLI fixtures.
pub mod named {
    use super::{Graph, VertexId};

    /// Complete graph on ids `1..=n`.
    pub fn complete(n: u64) -> Graph {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push((a, b));
            }
        }
        Graph::from_parts(1..=n, edges).0
    }

    /// Cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: u64) -> Graph {
        let edges = (1..=n).map(|a| (a, a % n + 1));
        Graph::from_parts(1..=n, edges).0
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: u64) -> Graph {
        Graph::from_parts(1..=n, (1..n).map(|a| (a, a + 1))).0
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: u64) -> Graph {
        Graph::from_parts(0..=leaves, (1..=leaves).map(|l| (0, l))).0
    }

    /// Disjoint union; ids must not collide.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let verts: Vec<VertexId> = a.vertices().iter().chain(b.vertices()).copied().collect();
        let edges: Vec<_> = a.edges().chain(b.edges()).collect();
        Graph::from_parts(verts, edges).0
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn degree_examples() {
        let k4 = complete(4);
        assert!(k4.vertices().iter().all(|&v| k4.degree(v).unwrap() == 3));
        let (iso, _) = Graph::from_parts([7], []);
        assert_eq!(iso.degree(7).unwrap(), 0);
        let c5 = cycle(5);
        assert!(c5.vertices().iter().all(|&v| c5.degree(v).unwrap() == 2));
        assert!(c5.degree(99).is_err());
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p = path(3);
        assert_eq!(
            p.closed_neighborhood(2).unwrap(),
            VertexSet::from(vec![1, 2, 3])
        );
        let (iso, _) = Graph::from_parts([4], []);
        assert_eq!(
            iso.closed_neighborhood(4).unwrap(),
            VertexSet::from(vec![4])
        );
        let c4 = cycle(4);
        assert_eq!(
            c4.closed_neighborhood(1).unwrap(),
            VertexSet::from(vec![1, 2, 4])
        );
        assert!(c4.closed_neighborhood(0).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let k3 = complete(4)
            .induced_subgraph(&VertexSet::from(vec![1, 2, 3]))
            .unwrap();
        assert_eq!(k3, complete(3));
        let empty = cycle(4).induced_subgraph(&VertexSet::new()).unwrap();
        assert!(empty.is_empty());
        let p = cycle(4)
            .induced_subgraph(&VertexSet::from(vec![1, 2, 3]))
            .unwrap();
        assert_eq!(p, path(3));
        assert!(cycle(4)
            .induced_subgraph(&VertexSet::from(vec![1, 9]))
            .is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(cycle(5).connected_components(), vec![vec![1, 2, 3, 4, 5]]);
        let (g, _) = Graph::from_parts([10], [(1, 2), (2, 3), (3, 1)]);
        let sizes: Vec<usize> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 1]);
        assert!(Graph::new().connected_components().is_empty());
    }

    #[test]
    fn power_examples() {
        let c6 = cycle(6).power(3).unwrap();
        assert_eq!(c6.edge_count(), 15);
        let g = cycle(7);
        assert_eq!(g.power(1).unwrap(), g);
        let p = path(4).power(2).unwrap();
        let edges: Vec<_> = p.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert!(g.power(0).is_err());
    }

    #[test]
    fn power_never_joins_components() {
        let g = disjoint_union(&path(3), &Graph::from_edges([(10, 11)]));
        let p = g.power(5).unwrap();
        assert_eq!(p.edge_count(), 4);
        assert!(!p.has_edge(1, 10));
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(complete(4).clustering_coefficient(), 1.0);
        assert_eq!(cycle(5).clustering_coefficient(), 0.0);
        assert_eq!(star(4).clustering_coefficient(), 0.0);
        assert_eq!(Graph::new().clustering_coefficient(), 0.0);
        // triangle with a pendant on vertex 1: locals 1/3, 1, 1, 0
        let g = Graph::from_edges([(1, 2), (2, 3), (1, 3), (1, 4)]);
        let expected = (1.0 / 3.0 + 1.0 + 1.0 + 0.0) / 4.0;
        assert!((g.clustering_coefficient() - expected).abs() < 1e-12);
    }

    #[test]
    fn normalization_counts() {
        let (g, stats) = Graph::from_parts([], [(1, 1), (1, 2), (2, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            stats,
            NormalizeStats {
                self_loops: 1,
                duplicate_edges: 2
            }
        );
    }

    #[test]
    fn diameter_and_ball() {
        assert_eq!(cycle(6).diameter(), 3);
        assert_eq!(path(5).ball(3, 1).unwrap(), VertexSet::from(vec![2, 3, 4]));
    }
}
