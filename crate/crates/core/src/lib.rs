//! Exact persistence diagrams of vertex-filtered graphs through clique
//! complexes, together with two reductions that leave the diagrams intact:
//! k-core restriction ([`coral`]) and dominated-vertex pruning ([`prunit`]).
//!
//! ```
//! use coralprune::prelude::*;
//! use coralprune::graph::named::cycle;
//!
//! let g = cycle(5);
//! let f = VertexFilter::degree(&g);
//! let filt = build_sublevel(&g, &f, 2).unwrap();
//! let pd = compute_pd(&filt, 1).unwrap();
//! assert_eq!(pd.essential_count(1), 1);
//! ```

pub mod coral;
pub mod datasets;
pub mod error;
pub mod experiments;
pub mod filter;
pub mod filtration;
pub mod graph;
pub mod oracle;
pub mod persistence;
pub mod prunit;
pub mod report;
pub mod verify;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::coral::{coral_reduce, core_numbers, kcore, kcore_naive, CoreMap};
    pub use crate::error::{Error, Result};
    pub use crate::filter::VertexFilter;
    pub use crate::filtration::{
        build_filtered, build_power, build_sublevel, build_superlevel, enumerate_cliques,
        thresholds_of, Direction, Filtration, Simplex, ThresholdSpec,
    };
    pub use crate::graph::{Graph, VertexId, VertexSet};
    pub use crate::persistence::{
        betti_numbers, compute_pd, compute_pd_with, pd0_unionfind, Pair, PdOptions,
        PersistenceDiagram, ZeroPairPolicy,
    };
    pub use crate::prunit::{
        dominated_by, find_prunable, prunit, prunit_with, PruneMode, PruneOptions, PruneTrace,
    };
}
