//! Admissibility checking and a brute-force component oracle.
//!
//! A partition is δ-admissible when points in different clusters are more than
//! δ apart and every point of a non-singleton cluster has a partner in its own
//! cluster within δ. The connected components of the δ-closeness graph are
//! always admissible, but so are coarser partitions such as the trivial one.
//!
//! Everything here is quadratic on purpose and shares no code with the
//! clusterers, so it can serve as their reference.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::point::{check_finite, Point};
use crate::scalar::Scalar;
use crate::spectrum::Clustering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// Points `i` and `j` lie in different clusters but within δ.
    SeparationBetween {
        i: usize,
        j: usize,
    },
    /// Point `i` has no other member of its (non-singleton) cluster within δ.
    SeparationWithin {
        i: usize,
    },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

fn check_delta<T: Scalar>(delta: T) -> Result<()> {
    if delta > T::zero() && delta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidDelta(delta.to_f64().unwrap_or(f64::NAN)))
    }
}

#[inline]
fn within<T: Scalar>(a: Point<T>, b: Point<T>, delta: T) -> bool {
    let (dx, dy) = (a.re - b.re, a.im - b.im);
    dx * dx + dy * dy <= delta * delta
}

/// Checks both separation criteria, reporting the first violation found.
pub fn is_admissible<T: Scalar>(
    points: &[Point<T>],
    delta: T,
    c: &Clustering,
) -> Result<Admissibility> {
    check_delta(delta)?;
    check_finite(points)?;
    if c.len() != points.len() {
        return Err(Error::LabelMismatch {
            expected: points.len(),
            got: c.len(),
        });
    }
    let labels = c.labels();
    let n = points.len();
    let mut size = vec![0usize; c.k() + 1];
    for &l in labels {
        size[l] += 1;
    }
    let mut has_partner = vec![false; n];
    for i in 0..n {
        for j in i + 1..n {
            if within(points[i], points[j], delta) {
                if labels[i] != labels[j] {
                    return Ok(Admissibility::SeparationBetween { i, j });
                }
                has_partner[i] = true;
                has_partner[j] = true;
            }
        }
    }
    match (0..n).find(|&i| size[labels[i]] > 1 && !has_partner[i]) {
        Some(i) => Ok(Admissibility::SeparationWithin { i }),
        None => Ok(Admissibility::Admissible),
    }
}

/// Components of the δ-closeness graph by breadth-first search over an
/// explicit edge list.
pub fn oracle_components<T: Scalar>(points: &[Point<T>], delta: T) -> Result<Clustering> {
    check_delta(delta)?;
    check_finite(points)?;
    let n = points.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if within(points[i], points[j], delta) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut comp = vec![0usize; n];
    let mut k = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if comp[s] != 0 {
            continue;
        }
        k += 1;
        comp[s] = k;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if comp[w] == 0 {
                    comp[w] = k;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(Clustering::from_labels(comp))
}

/// True when every connected component lies inside a single cluster of `c`.
pub fn components_refine_admissible<T: Scalar>(
    points: &[Point<T>],
    delta: T,
    c: &Clustering,
) -> Result<bool> {
    if c.len() != points.len() {
        return Err(Error::LabelMismatch {
            expected: points.len(),
            got: c.len(),
        });
    }
    Ok(oracle_components(points, delta)?.refines(c))
}
