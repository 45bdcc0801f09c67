//! Clustering through the Delaunay triangulation.
//!
//! Every edge of the δ-closeness graph joins points in the same component of
//! the Delaunay edges no longer than δ, so the components of the pruned
//! triangulation are exactly the clusters. The triangulation has O(n) edges,
//! which makes the union phase linear.

use crate::deadline::Deadline;
use crate::delaunay::{BuildOptions, DuplicatePolicy, InsertionOrder, Triangulation};
use crate::dsu::{DisjointSets, DsuKind, DsuState};
use crate::error::{Error, Result};
use crate::point::Closeness;
use crate::predicates::{ArithmeticMode, PredicateStats};
use crate::scalar::Scalar;
use crate::spectrum::{broadcast_labels, deduplicate, perturb, Clustering, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DelaunayOptions<T> {
    pub seed: u64,
    pub mode: ArithmeticMode,
    pub dsu: DsuKind,
    /// Collapse exactly equal points before triangulating.
    pub dedup: bool,
    /// Displace every point by up to this much before anything else.
    pub perturb: Option<T>,
    /// What the triangulation does with points that still coincide.
    pub duplicates: DuplicatePolicy,
    pub order: InsertionOrder,
}

impl<T> Default for DelaunayOptions<T> {
    fn default() -> Self {
        Self {
            seed: 0,
            mode: ArithmeticMode::Filtered,
            dsu: DsuKind::Forest,
            dedup: true,
            perturb: None,
            duplicates: DuplicatePolicy::Reject,
            order: InsertionOrder::Brio,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DelaunayRun {
    /// Labels per raw input position.
    pub clustering: Clustering,
    /// Points handed to the triangulation.
    pub triangulated: usize,
    pub finite_edges: usize,
    /// Finite edges of length at most δ.
    pub kept_edges: usize,
    pub stats: PredicateStats,
}

/// Connected components of the δ-closeness graph, computed from the pruned
/// Delaunay triangulation.
pub fn cluster_delaunay<T: Scalar>(
    s: &Spectrum<T>,
    delta: T,
    opts: &DelaunayOptions<T>,
) -> Result<Clustering> {
    Ok(cluster_delaunay_detailed(s, delta, opts)?.clustering)
}

/// Like [`cluster_delaunay`], also reporting triangulation sizes and
/// predicate counters.
pub fn cluster_delaunay_detailed<T: Scalar>(
    s: &Spectrum<T>,
    delta: T,
    opts: &DelaunayOptions<T>,
) -> Result<DelaunayRun> {
    run(s, delta, opts, &Deadline::none())
}

pub(crate) fn run<T: Scalar>(
    s: &Spectrum<T>,
    delta: T,
    opts: &DelaunayOptions<T>,
    deadline: &Deadline,
) -> Result<DelaunayRun> {
    let closeness = Closeness::new(delta)?;
    if s.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let mut work = match opts.perturb {
        Some(m) => perturb(s, m, opts.seed)?,
        None => s.clone(),
    };
    if opts.dedup {
        work = deduplicate(&work);
    }
    let build = BuildOptions {
        seed: opts.seed,
        mode: opts.mode,
        duplicates: opts.duplicates,
        order: opts.order,
        check_each_insertion: false,
    };
    let t = Triangulation::build_with_deadline(work.points(), &build, deadline).map_err(
        |e| match e {
            Error::DuplicatePoint { first, second } => {
                let (a, b) = (work.origin_index()[first], work.origin_index()[second]);
                Error::DuplicatePoint {
                    first: a.min(b),
                    second: a.max(b),
                }
            }
            other => other,
        },
    )?;

    let edges = t.finite_edges();
    let mut dsu = DsuState::new(opts.dsu, work.len());
    let mut kept = 0;
    for e in &edges {
        if closeness.close_sq(e.squared_length) {
            kept += 1;
            dsu.union(e.a, e.b)?;
        }
    }
    for (dup, v) in t.aliases() {
        dsu.union(dup, v)?;
    }
    let clustering = broadcast_labels(&dsu.partition(), &work)?;
    Ok(DelaunayRun {
        clustering,
        triangulated: work.len(),
        finite_edges: edges.len(),
        kept_edges: kept,
        stats: t.predicate_stats(),
    })
}

/// Number of Delaunay edges no longer than δ, after deduplication.
pub fn pruned_edge_count<T: Scalar>(s: &Spectrum<T>, delta: T, seed: u64) -> Result<usize> {
    let opts = DelaunayOptions {
        seed,
        ..Default::default()
    };
    Ok(cluster_delaunay_detailed(s, delta, &opts)?.kept_edges)
}
