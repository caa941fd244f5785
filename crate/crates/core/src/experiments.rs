//! Experiments on higher Betti numbers of clique complexes.
//!
//! Betti numbers in dimension `j >= 1` only depend on the `(j + 1)`-core,
//! so both experiments peel the graph first and build the complex of the
//! (usually much smaller) core.

use rayon::prelude::*;
use serde::Serialize;

use crate::coral::kcore;
use crate::error::Result;
use crate::filter::VertexFilter;
use crate::filtration::build_sublevel;
use crate::graph::Graph;
use crate::persistence::betti_numbers;
use crate::verify::random_graph;

/// Betti number `dim >= 1` of the clique complex of `g`.
pub fn clique_betti(g: &Graph, dim: usize) -> Result<usize> {
    let core = kcore(g, dim + 1);
    if core.is_empty() {
        return Ok(0);
    }
    let f = VertexFilter::constant(&core, 0.0)?;
    let filt = build_sublevel(&core, &f, dim + 1)?;
    Ok(betti_numbers(&filt, dim)?[dim])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusteringRow {
    pub graph: String,
    pub clustering: f64,
    pub betti_2: usize,
    pub betti_3: usize,
}

/// Average clustering coefficient against Betti 2 and 3 per graph.
pub fn clustering_betti(graphs: &[(String, Graph)]) -> Result<Vec<ClusteringRow>> {
    graphs
        .par_iter()
        .map(|(name, g)| {
            Ok(ClusteringRow {
                graph: name.clone(),
                clustering: g.clustering_coefficient(),
                betti_2: clique_betti(g, 2)?,
                betti_3: clique_betti(g, 3)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KahleRow {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub betti_2: usize,
    pub nontrivial: bool,
}

/// Betti 2 of `G(n, p)` for every `(p, seed)` combination.
pub fn kahle_sweep(n: usize, ps: &[f64], seeds: &[u64]) -> Result<Vec<KahleRow>> {
    let jobs: Vec<(f64, u64)> = ps
        .iter()
        .flat_map(|&p| seeds.iter().map(move |&s| (p, s)))
        .collect();
    jobs.par_iter()
        .map(|&(p, seed)| {
            let betti_2 = clique_betti(&random_graph(n, p, seed)?, 2)?;
            Ok(KahleRow {
                n,
                p,
                seed,
                betti_2,
                nontrivial: betti_2 > 0,
            })
        })
        .collect()
}
