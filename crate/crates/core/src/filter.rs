//! Vertex filtering functions.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexId};

/// A real value per vertex id.
///
/// Values must be finite. Reductions restrict a filter to the surviving
/// vertices without recomputing anything, so a degree filter keeps the
/// degrees of the original graph.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VertexFilter {
    values: BTreeMap<VertexId, f64>,
}

impl VertexFilter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: VertexId, value: f64) -> Result<()> {
        if !value.is_finite() {
            return invalid(format!("filter value for vertex {v} is not finite"));
        }
        // keep -0.0 out so threshold dedup sees a single zero
        self.values.insert(v, value + 0.0);
        Ok(())
    }

    pub fn get(&self, v: VertexId) -> Option<f64> {
        self.values.get(&v).copied()
    }

    pub fn value(&self, v: VertexId) -> Result<f64> {
        match self.values.get(&v) {
            Some(&x) => Ok(x),
            None => invalid(format!("filter has no value for vertex {v}")),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        self.values.iter().map(|(&v, &x)| (v, x))
    }

    /// Errors unless every vertex of `g` has a value.
    pub fn check_covers(&self, g: &Graph) -> Result<()> {
        for &v in g.vertices() {
            self.value(v)?;
        }
        Ok(())
    }

    /// Restriction to the vertices of `g`, keeping the stored values.
    pub fn restrict_to(&self, g: &Graph) -> Result<VertexFilter> {
        let mut values = BTreeMap::new();
        for &v in g.vertices() {
            values.insert(v, self.value(v)?);
        }
        Ok(Self { values })
    }

    pub fn negated(&self) -> VertexFilter {
        Self {
            values: self.values.iter().map(|(&v, &x)| (v, 0.0 - x)).collect(),
        }
    }

    /// Degree of each vertex in `g`.
    pub fn degree(g: &Graph) -> VertexFilter {
        Self {
            values: g
                .vertices()
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, g.adj_local(i).len() as f64))
                .collect(),
        }
    }

    pub fn constant(g: &Graph, c: f64) -> Result<VertexFilter> {
        let mut f = Self::new();
        for &v in g.vertices() {
            f.insert(v, c)?;
        }
        Ok(f)
    }
}

impl FromIterator<(VertexId, f64)> for VertexFilter {
    /// Non-finite values are skipped; use [`VertexFilter::insert`] to get an
    /// error instead.
    fn from_iter<I: IntoIterator<Item = (VertexId, f64)>>(iter: I) -> Self {
        let mut f = Self::new();
        for (v, x) in iter {
            let _ = f.insert(v, x);
        }
        f
    }
}
