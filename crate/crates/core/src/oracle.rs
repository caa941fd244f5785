//! Brute-force persistence for cross-checking.
//!
//! Shares nothing with [`crate::persistence`] beyond the input filtration:
//! for every pair of thresholds `i <= j` it computes the rank of the map
//! `H_k(K_i) -> H_k(K_j)` from dense GF(2) matrices,
//!
//! ```text
//! rank = rank[Z_k(K_i) | B_k(K_j)] - rank B_k(K_j),
//! ```
//!
//! and reads off bar multiplicities by inclusion-exclusion. Zero-length
//! bars never appear. Intended for complexes with a few hundred simplices.

use std::collections::HashMap;

use crate::error::{invalid, Result};
use crate::filtration::Filtration;
use crate::graph::VertexId;
use crate::persistence::{Pair, PersistenceDiagram, ZeroPairPolicy};

/// Dense bit vector over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn lowest(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank of a set of vectors by Gaussian elimination.
fn rank(rows: &[BitRow]) -> usize {
    let mut basis: Vec<(usize, BitRow)> = Vec::new();
    for r in rows {
        let mut r = r.clone();
        while let Some(p) = r.lowest() {
            match basis.iter().find(|(q, _)| *q == p) {
                Some((_, b)) => r.xor(b),
                None => {
                    basis.push((p, r));
                    break;
                }
            }
        }
    }
    basis.len()
}

/// Basis of the kernel of the boundary map restricted to `cells` (vectors
/// indexed over the `k`-cells), given boundaries as rows over `(k-1)`-cells.
fn kernel(cells: &[usize], boundary: &[BitRow], width: usize) -> Vec<BitRow> {
    // eliminate on augmented rows [boundary | identity]
    let mut rows: Vec<(BitRow, BitRow)> = cells
        .iter()
        .map(|&c| {
            let mut tag = BitRow::zeros(width);
            tag.set(c);
            (boundary[c].clone(), tag)
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for i in 0..rows.len() {
        while let Some(p) = rows[i].0.lowest() {
            match pivots.iter().find(|(q, _)| *q == p) {
                Some(&(_, r)) => {
                    let (b, t) = rows[r].clone();
                    rows[i].0.xor(&b);
                    rows[i].1.xor(&t);
                }
                None => {
                    pivots.push((p, i));
                    break;
                }
            }
        }
        if rows[i].0.lowest().is_none() {
            out.push(rows[i].1.clone());
        }
    }
    out
}

/// Diagram in dimensions `0..=max_hom_dim` computed from persistent Betti
/// numbers. Always uses the drop policy.
pub fn brute_force_pd(filt: &Filtration, max_hom_dim: usize) -> Result<PersistenceDiagram> {
    if max_hom_dim + 1 > filt.maxdim() {
        return invalid("oracle needs simplices one dimension above the diagram");
    }
    let m = filt.thresholds().len();
    // cells per dimension, with birth index
    let mut cells: Vec<Vec<(&[VertexId], usize)>> = vec![Vec::new(); max_hom_dim + 2];
    for (s, b) in filt.simplices() {
        if s.dim() <= max_hom_dim + 1 {
            cells[s.dim()].push((s.vertices(), *b));
        }
    }
    let index: Vec<HashMap<&[VertexId], usize>> = cells
        .iter()
        .map(|cs| cs.iter().enumerate().map(|(i, (v, _))| (*v, i)).collect())
        .collect();
    // boundary[d][c]: boundary of d-cell c as a row over (d-1)-cells
    let boundary: Vec<Vec<BitRow>> = (0..cells.len())
        .map(|d| {
            cells[d]
                .iter()
                .map(|(verts, _)| {
                    let width = if d == 0 { 1 } else { cells[d - 1].len() };
                    let mut row = BitRow::zeros(width);
                    if d > 0 {
                        for skip in 0..verts.len() {
                            let face: Vec<VertexId> = verts
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| i != skip)
                                .map(|(_, &v)| v)
                                .collect();
                            row.set(index[d - 1][face.as_slice()]);
                        }
                    }
                    row
                })
                .collect()
        })
        .collect();

    let mut dims = Vec::new();
    for k in 0..=max_hom_dim {
        let present = |d: usize, t: usize| -> Vec<usize> {
            cells[d]
                .iter()
                .enumerate()
                .filter(|(_, (_, b))| *b <= t)
                .map(|(i, _)| i)
                .collect()
        };
        let width = cells[k].len();
        let cycles: Vec<Vec<BitRow>> = (0..m)
            .map(|t| kernel(&present(k, t), &boundary[k], width))
            .collect();
        let bounds: Vec<Vec<BitRow>> = (0..m)
            .map(|t| {
                present(k + 1, t)
                    .into_iter()
                    .map(|c| boundary[k + 1][c].clone())
                    .collect()
            })
            .collect();
        let bound_rank: Vec<usize> = bounds.iter().map(|b| rank(b)).collect();
        // beta[i][j] = rank H_k(K_i) -> H_k(K_j), i <= j
        let mut beta = vec![vec![0usize; m]; m];
        for i in 0..m {
            for j in i..m {
                let mut stacked = cycles[i].clone();
                stacked.extend(bounds[j].iter().cloned());
                beta[i][j] = rank(&stacked) - bound_rank[j];
            }
        }
        let b = |i: isize, j: usize| -> isize {
            if i < 0 {
                0
            } else {
                beta[i as usize][j] as isize
            }
        };
        let t = filt.thresholds();
        let mut pairs = Vec::new();
        for i in 0..m {
            let ii = i as isize;
            for j in i + 1..m {
                let mult = b(ii, j - 1) - b(ii - 1, j - 1) - b(ii, j) + b(ii - 1, j);
                debug_assert!(mult >= 0);
                for _ in 0..mult {
                    pairs.push(Pair::new(t[i], t[j]));
                }
            }
            let essential = b(ii, m - 1) - b(ii - 1, m - 1);
            for _ in 0..essential {
                pairs.push(Pair::new(t[i], f64::INFINITY));
            }
        }
        dims.push(pairs);
    }
    Ok(PersistenceDiagram::new(
        ZeroPairPolicy::Drop,
        filt.direction(),
        dims,
    ))
}
