//! k-core decomposition and the core-based reduction.
//!
//! Persistence diagrams of dimension `j` and above only depend on the
//! `(j + 1)`-core of the graph, provided the filter values of the surviving
//! vertices are carried over unchanged from the original graph.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::filter::VertexFilter;
use crate::graph::{Graph, VertexId};

/// Coreness of every vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoreMap {
    coreness: BTreeMap<VertexId, usize>,
}

impl CoreMap {
    pub fn get(&self, v: VertexId) -> Option<usize> {
        self.coreness.get(&v).copied()
    }

    /// Largest coreness; 0 for the empty graph.
    pub fn degeneracy(&self) -> usize {
        self.coreness.values().copied().max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.coreness.iter().map(|(&v, &c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.coreness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coreness.is_empty()
    }
}

/// Bucket peeling in O(|V| + |E|) (Batagelj & Zaversnik).
///
/// Returns per-local-index coreness and the removal order, which is a
/// degeneracy ordering of the graph.
pub(crate) fn peel(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let adj = g.local_adjacency();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);

    let mut bin = vec![0usize; max_deg + 1];
    for &d in &deg {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[deg[v]];
        vert[pos[v]] = v;
        bin[deg[v]] += 1;
    }
    for d in (1..=max_deg).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        let v = vert[i];
        for &u in &adj[v] {
            let u = u as usize;
            if deg[u] > deg[v] {
                // swap u with the first vertex of its bin, then shrink the bin
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }
    (deg, vert)
}

/// Coreness of every vertex via linear-time bucket peeling.
pub fn core_numbers(g: &Graph) -> CoreMap {
    let (core, _) = peel(g);
    CoreMap {
        coreness: core
            .into_iter()
            .enumerate()
            .map(|(i, c)| (g.id(i), c))
            .collect(),
    }
}

/// Maximal induced subgraph with minimum degree `k`, read off the bucket
/// peeler's coreness values.
pub fn kcore(g: &Graph, k: usize) -> Graph {
    let (core, _) = peel(g);
    let keep: Vec<bool> = core.iter().map(|&c| c >= k).collect();
    g.induced_by_mask(&keep)
}

/// Pass-based peeling: sweep the vertices, deleting every vertex whose
/// current degree is below `k`, until a sweep deletes nothing.
///
/// Kept as an independent reference for [`kcore`].
pub fn kcore_naive(g: &Graph, k: usize) -> Graph {
    let n = g.vertex_count();
    let adj = g.local_adjacency();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for u in 0..n {
            if alive[u] && deg[u] < k {
                alive[u] = false;
                changed = true;
                for &w in &adj[u] {
                    if alive[w as usize] {
                        deg[w as usize] -= 1;
                    }
                }
            }
        }
    }
    g.induced_by_mask(&alive)
}

/// Returns the `(k + 1)`-core of `g` together with `f` restricted to it.
///
/// The restricted filter keeps the original values; nothing is recomputed on
/// the reduced graph. Diagrams of dimension `k` and higher are unchanged for
/// connected graphs.
pub fn coral_reduce(g: &Graph, f: &VertexFilter, k: usize) -> Result<(Graph, VertexFilter)> {
    f.check_covers(g)?;
    let core = kcore(g, k + 1);
    let restricted = f.restrict_to(&core)?;
    Ok((core, restricted))
}
