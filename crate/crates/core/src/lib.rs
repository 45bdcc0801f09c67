//! Partitioning of planar point sets (matrix eigenvalues) into the connected
//! components of their δ-closeness graph.
//!
//! Three interchangeable clusterers are provided:
//!
//! - [`naive::cluster_naive`]: enumerate every pair and merge those within δ
//!   (Θ(n²)), with either disjoint-set representation from [`dsu`].
//! - [`real::cluster_real`]: sort-and-split for purely real inputs (O(n log n)).
//! - [`delaunay_cluster::cluster_delaunay`]: build the Delaunay triangulation,
//!   drop edges longer than δ and take connected components (O(n log n) expected).
//!
//! All geometry is generic over a [`Scalar`] (`f32` or `f64`); the aliases at the
//! crate root fix the binary64 instantiation used by the CLI and file formats.
//! Geometric predicates are evaluated with a floating-point filter backed by exact
//! integer arithmetic, see [`predicates`].

pub mod bench;
mod deadline;
pub mod delaunay;
pub mod delaunay_cluster;
pub mod dsu;
mod error;
pub mod generate;
pub mod naive;
mod point;
pub mod predicates;
pub mod real;
mod scalar;
pub mod spectrum;
pub mod validate;

pub use delaunay::{BuildOptions, DelaunayEdge, DuplicatePolicy, InsertionOrder, Triangulation};
pub use delaunay_cluster::{cluster_delaunay, pruned_edge_count, DelaunayOptions};
pub use dsu::{DisjointSets, DsuKind, DsuState, ForestDsu, LabelVectorDsu};
pub use error::{Error, Result};
pub use naive::cluster_naive;
pub use point::{Closeness, Point};
pub use predicates::{ArithmeticMode, Kernel, PredicateStats, Sign};
pub use real::cluster_real;
pub use scalar::Scalar;
pub use spectrum::{
    broadcast_labels, deduplicate, perturb, reduce_conjugate_pairs, Clustering, Spectrum,
};

/// A point in the plane standing for a real or complex eigenvalue, in binary64.
pub type PlanePoint = Point<f64>;
/// Single-precision point.
pub type PlanePoint32 = Point<f32>;
/// Binary64 spectrum.
pub type Spectrum64 = Spectrum<f64>;
/// Binary64 triangulation.
pub type Triangulation64 = Triangulation<f64>;
/// Binary64 predicate kernel.
pub type Kernel64 = Kernel<f64>;
