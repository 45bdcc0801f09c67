//! Sort-and-split clustering of real spectra.
//!
//! After sorting, consecutive points more than δ apart mark a gap; prefix sums
//! of the gap flags are the cluster labels.

use crate::error::{Error, Result};
use crate::point::{check_finite, Closeness, Point};
use crate::scalar::Scalar;
use crate::spectrum::{broadcast_labels, Clustering, Spectrum};

/// Gap flags over sorted positions; the first flag is always set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapVector(Vec<bool>);

impl GapVector {
    pub fn new(flags: Vec<bool>) -> Result<Self> {
        match flags.first() {
            Some(true) => Ok(Self(flags)),
            Some(false) => Err(Error::InvalidParameter("first gap flag must be set".into())),
            None => Err(Error::EmptySpectrum),
        }
    }

    /// Gap flags of points already sorted by real part.
    pub fn from_sorted<T: Scalar>(sorted: &[Point<T>], closeness: &Closeness<T>) -> Result<Self> {
        if sorted.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        let mut g = Vec::with_capacity(sorted.len());
        g.push(true);
        g.extend(sorted.windows(2).map(|w| !closeness.close(w[0], w[1])));
        Ok(Self(g))
    }

    pub fn flags(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `c_i = g_1 + ... + g_i`.
pub fn prefix_sum(g: &GapVector) -> Vec<usize> {
    g.0.iter()
        .scan(0usize, |acc, &gap| {
            *acc += gap as usize;
            Some(*acc)
        })
        .collect()
}

/// Clusters a slice of real points; labels are per point.
pub fn cluster_real_points<T: Scalar>(points: &[Point<T>], delta: T) -> Result<Clustering> {
    let closeness = Closeness::new(delta)?;
    check_finite(points)?;
    if let Some(index) = points.iter().position(|p| !p.is_real()) {
        return Err(Error::NonRealPoint {
            index,
            im: points[index].im.to_f64().unwrap_or(f64::NAN),
        });
    }
    if points.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    // finite values, so partial_cmp never fails; sort_by is stable
    order.sort_by(|&a, &b| points[a].re.partial_cmp(&points[b].re).unwrap());
    let sorted: Vec<Point<T>> = order.iter().map(|&i| points[i]).collect();
    let c = prefix_sum(&GapVector::from_sorted(&sorted, &closeness)?);
    let mut labels = vec![0usize; points.len()];
    for (pos, &i) in order.iter().enumerate() {
        labels[i] = c[pos];
    }
    Ok(Clustering::from_labels(labels))
}

/// Sort-and-split over the representatives of a real spectrum, broadcast to
/// every raw position.
pub fn cluster_real<T: Scalar>(s: &Spectrum<T>, delta: T) -> Result<Clustering> {
    let c = cluster_real_points(s.points(), delta)?;
    broadcast_labels(&c, s)
}
