//! Equitable partitions of graphs into induced forests.
//!
//! The crate turns colorings and degeneracy orderings into equitable vertex
//! partitions whose parts induce forests (or star forests, or forests of
//! in- and out-stars in an orientation), and ships the exact search oracles
//! and independent certificate checks used to validate every result.
//!
//! The main entry points are:
//!
//! - [`merge::merge_partition`]: a `k`-class acyclic (or star) coloring into
//!   `k - 1` equitable induced forests (star forests).
//! - [`extend::extend_partition`]: lift an `l`-part equitable forest
//!   partitioner for a hereditary class to any `k >= l` parts.
//! - [`route::forests_from_degenerate`] and [`route::equitable_forests`]:
//!   the degeneracy pipeline and the top-level facade.
//! - [`oracle::brute_force_equitable`]: exhaustive ground truth.
//! - [`certify`]: predicates, partition verification and certificates.
//!
//! ```
//! use equiforest::generate;
//! use equiforest::route::{equitable_forests, RouteConfig, Strategy};
//! use equiforest::certify::verify_partition;
//!
//! let g = generate::cycle(5).unwrap();
//! let p = equitable_forests(&g, 2, Strategy::ViaAcyclic, &RouteConfig::default()).unwrap();
//! assert_eq!(p.sizes(), vec![2, 3]);
//! assert!(verify_partition(&g, &p).is_valid());
//! ```

pub mod certify;
pub mod coloring;
pub mod error;
pub mod extend;
pub mod formats;
pub mod generate;
pub mod graph;
mod masks;
pub mod merge;
pub mod oracle;
pub mod partition;
pub mod route;

pub use error::{Error, GraphError};
pub use graph::{degeneracy, induced_subgraph, Degeneracy, Graph, Induced, Orientation, VertexSet};
pub use partition::{PartKind, Partition};

/// Environment variable that overrides every exact-search cap.
pub const EXACT_CAP_ENV: &str = "EQUIFOREST_EXACT_CAP";

/// Reads [`EXACT_CAP_ENV`], if set to a valid integer.
pub fn exact_cap_override() -> Option<usize> {
    std::env::var(EXACT_CAP_ENV).ok()?.trim().parse().ok()
}
