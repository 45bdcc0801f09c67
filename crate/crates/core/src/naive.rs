//! Quadratic pairwise clustering.
//!
//! Step `i` compares point `i` with every later point `j` that is not already in
//! its cluster and merges the two clusters when `|p_i - p_j| <= δ`. The
//! same-cluster shortcut can be switched off to count all `n(n-1)/2` distance
//! evaluations.

use crate::deadline::Deadline;
use crate::dsu::{DisjointSets, DsuKind, DsuState};
use crate::error::{Error, Result};
use crate::point::{check_finite, Closeness, Point};
use crate::scalar::Scalar;
use crate::spectrum::{broadcast_labels, Clustering, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveOptions {
    pub dsu: DsuKind,
    pub skip_same_cluster: bool,
}

impl Default for NaiveOptions {
    fn default() -> Self {
        Self {
            dsu: DsuKind::Forest,
            skip_same_cluster: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct NaiveRun {
    pub clustering: Clustering,
    pub distance_evaluations: u64,
}

/// Clusters a point slice directly; labels are per point.
pub fn cluster_naive_points<T: Scalar>(
    points: &[Point<T>],
    delta: T,
    opts: NaiveOptions,
) -> Result<NaiveRun> {
    check_finite(points)?;
    run(points, Closeness::new(delta)?, opts, &Deadline::none())
}

pub(crate) fn run<T: Scalar>(
    points: &[Point<T>],
    closeness: Closeness<T>,
    opts: NaiveOptions,
    deadline: &Deadline,
) -> Result<NaiveRun> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptySpectrum);
    }
    let mut dsu = DsuState::new(opts.dsu, n);
    let mut evaluations = 0u64;
    for i in 0..n {
        deadline.check()?;
        let pi = points[i];
        for (j, &pj) in points.iter().enumerate().skip(i + 1) {
            if j % 4096 == 0 {
                deadline.check()?;
            }
            if opts.skip_same_cluster && dsu.same_set(i, j)? {
                continue;
            }
            evaluations += 1;
            if closeness.close(pi, pj) {
                dsu.union(i, j)?;
            }
        }
    }
    Ok(NaiveRun {
        clustering: dsu.partition(),
        distance_evaluations: evaluations,
    })
}

/// Connected components of the δ-closeness graph of the representatives,
/// broadcast to every raw input position.
pub fn cluster_naive<T: Scalar>(s: &Spectrum<T>, delta: T, dsu: DsuKind) -> Result<Clustering> {
    let out = cluster_naive_points(
        s.points(),
        delta,
        NaiveOptions {
            dsu,
            skip_same_cluster: true,
        },
    )?;
    broadcast_labels(&out.clustering, s)
}

/// Number of pair-distance computations performed by one naive run.
pub fn count_distance_evaluations<T: Scalar>(
    s: &Spectrum<T>,
    delta: T,
    skip_same_cluster: bool,
) -> Result<u64> {
    let opts = NaiveOptions {
        dsu: DsuKind::Forest,
        skip_same_cluster,
    };
    Ok(cluster_naive_points(s.points(), delta, opts)?.distance_evaluations)
}
