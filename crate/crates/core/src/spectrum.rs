//! Input representation and preprocessing.
//!
//! A [`Spectrum`] keeps the raw input next to the points that are actually
//! clustered (the *representatives*). Conjugate-pair reduction and exact
//! deduplication only ever remove raw points from the representative list;
//! the provenance recorded here lets [`broadcast_labels`] map a clustering of
//! the representatives back onto every raw input position.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::{check_finite, Point};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    raw: Vec<Point<T>>,
    points: Vec<Point<T>>,
    origin_index: Vec<usize>,
    /// Per raw position: the raw position whose conjugate this point is.
    conjugate_of: Vec<Option<usize>>,
    /// Per raw position: index of the representative it collapses onto.
    /// `None` exactly for conjugate-linked positions.
    multiplicity_group: Vec<Option<usize>>,
}

impl<T: Scalar> Spectrum<T> {
    /// Identity spectrum: every raw point is its own representative.
    pub fn from_points(raw: Vec<Point<T>>) -> Result<Self> {
        check_finite(&raw)?;
        let n = raw.len();
        Ok(Self {
            points: raw.clone(),
            raw,
            origin_index: (0..n).collect(),
            conjugate_of: vec![None; n],
            multiplicity_group: (0..n).map(Some).collect(),
        })
    }

    /// Real spectrum from a list of real numbers.
    pub fn from_reals(values: &[T]) -> Result<Self> {
        Self::from_points(values.iter().map(|&x| Point::real(x)).collect())
    }

    /// Number of representatives.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn raw_len(&self) -> usize {
        self.raw.len()
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn raw_points(&self) -> &[Point<T>] {
        &self.raw
    }

    /// Raw position of each representative.
    pub fn origin_index(&self) -> &[usize] {
        &self.origin_index
    }

    pub fn conjugate_of(&self, raw_position: usize) -> Option<usize> {
        self.conjugate_of[raw_position]
    }

    pub fn multiplicity_group(&self, raw_position: usize) -> Option<usize> {
        self.multiplicity_group[raw_position]
    }

    /// Number of raw positions dropped as conjugates of another input.
    pub fn linked_conjugates(&self) -> usize {
        self.conjugate_of.iter().filter(|c| c.is_some()).count()
    }

    /// Representative index that a raw position is clustered with.
    pub fn representative_of(&self, raw_position: usize) -> usize {
        let own = match self.conjugate_of[raw_position] {
            Some(partner) => partner,
            None => raw_position,
        };
        self.multiplicity_group[own].expect("conjugate partner is never itself linked")
    }

    /// True if two representatives compare equal.
    pub fn has_duplicates(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.points.len());
        self.points.iter().any(|p| !seen.insert(p.exact_key()))
    }

    /// Largest coordinate magnitude over the representatives.
    pub fn max_abs_coordinate(&self) -> T {
        self.points
            .iter()
            .fold(T::zero(), |m, p| m.max(p.re.abs()).max(p.im.abs()))
    }
}

/// Keeps one member of every complex-conjugate pair (the one with positive
/// imaginary part); the dropped member is linked so it inherits the label.
///
/// Negative-imaginary points are matched greedily in input order against the
/// earliest unmatched point with coordinates `(re, -im)`. Unmatched points are
/// kept as ordinary representatives.
pub fn reduce_conjugate_pairs<T: Scalar>(raw: Vec<Point<T>>) -> Result<Spectrum<T>> {
    check_finite(&raw)?;
    let n = raw.len();
    let mut upper: HashMap<_, VecDeque<usize>> = HashMap::new();
    for (i, p) in raw.iter().enumerate() {
        if p.im > T::zero() {
            upper.entry(p.exact_key()).or_default().push_back(i);
        }
    }

    let mut conjugate_of = vec![None; n];
    for (q, p) in raw.iter().enumerate() {
        if p.im < T::zero() {
            if let Some(queue) = upper.get_mut(&p.conj().exact_key()) {
                conjugate_of[q] = queue.pop_front();
            }
        }
    }

    let mut points = Vec::with_capacity(n);
    let mut origin_index = Vec::with_capacity(n);
    let mut multiplicity_group = vec![None; n];
    for (i, p) in raw.iter().enumerate() {
        if conjugate_of[i].is_none() {
            multiplicity_group[i] = Some(points.len());
            points.push(*p);
            origin_index.push(i);
        }
    }

    Ok(Spectrum {
        raw,
        points,
        origin_index,
        conjugate_of,
        multiplicity_group,
    })
}

/// Collapses representatives with equal coordinates onto the first of them.
///
/// Equality is exact (no tolerance); the grouping is found by a stable
/// lexicographic sort, so the cost is O(n log n).
pub fn deduplicate<T: Scalar>(s: &Spectrum<T>) -> Spectrum<T> {
    let n = s.points.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (s.points[a], s.points[b]);
        pa.re
            .partial_cmp(&pb.re)
            .unwrap()
            .then(pa.im.partial_cmp(&pb.im).unwrap())
    });

    // keeper[i] = smallest representative index equal to representative i
    let mut keeper: Vec<usize> = (0..n).collect();
    let mut run_start = 0;
    for w in 1..=n {
        if w == n || s.points[order[w]] != s.points[order[run_start]] {
            // stable sort: order[run_start] is the smallest index in the run
            let first = order[run_start];
            for &i in &order[run_start..w] {
                keeper[i] = first;
            }
            run_start = w;
        }
    }

    let mut renumber = vec![usize::MAX; n];
    let mut points = Vec::new();
    let mut origin_index = Vec::new();
    for i in 0..n {
        if keeper[i] == i {
            renumber[i] = points.len();
            points.push(s.points[i]);
            origin_index.push(s.origin_index[i]);
        }
    }

    let multiplicity_group = s
        .multiplicity_group
        .iter()
        .map(|g| g.map(|old| renumber[keeper[old]]))
        .collect();

    Spectrum {
        raw: s.raw.clone(),
        points,
        origin_index,
        conjugate_of: s.conjugate_of.clone(),
        multiplicity_group,
    }
}

/// Displaces every representative coordinate by an independent uniform draw
/// from `[-magnitude, magnitude]`.
///
/// The generator is ChaCha8 seeded with `seed`, so results are reproducible
/// across platforms. A zero magnitude returns the spectrum unchanged.
pub fn perturb<T: Scalar>(s: &Spectrum<T>, magnitude: T, seed: u64) -> Result<Spectrum<T>> {
    if !magnitude.is_finite() || magnitude < T::zero() {
        return Err(Error::InvalidParameter(format!(
            "perturbation magnitude must be nonnegative and finite, got {magnitude}"
        )));
    }
    if magnitude == T::zero() {
        return Ok(s.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = s.clone();
    for p in &mut out.points {
        p.re = p.re + rng.random_range(-magnitude..=magnitude);
        p.im = p.im + rng.random_range(-magnitude..=magnitude);
    }
    check_finite(&out.points)?;
    Ok(out)
}

/// Maps a clustering of the representatives of `s` onto every raw position.
pub fn broadcast_labels<T: Scalar>(c: &Clustering, s: &Spectrum<T>) -> Result<Clustering> {
    if c.len() != s.len() {
        return Err(Error::LabelMismatch {
            expected: s.len(),
            got: c.len(),
        });
    }
    Ok(Clustering::from_labels(
        (0..s.raw_len()).map(|r| c.labels[s.representative_of(r)]),
    ))
}

/// A partition given as one cluster label per element.
///
/// Labels are always canonical: contiguous `1..=k`, numbered in order of first
/// appearance. Two clusterings are therefore equal as set partitions exactly
/// when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clustering {
    labels: Vec<usize>,
    k: usize,
}

impl Clustering {
    /// Canonicalises arbitrary labels.
    pub fn from_labels<L, I>(labels: I) -> Self
    where
        L: Eq + Hash,
        I: IntoIterator<Item = L>,
    {
        let mut seen: HashMap<L, usize> = HashMap::new();
        let labels: Vec<usize> = labels
            .into_iter()
            .map(|l| {
                let next = seen.len() + 1;
                *seen.entry(l).or_insert(next)
            })
            .collect();
        Self {
            k: seen.len(),
            labels,
        }
    }

    /// Wraps labels that are already canonical.
    pub(crate) fn from_canonical(labels: Vec<usize>, k: usize) -> Self {
        debug_assert!(Self::is_canonical(&labels));
        debug_assert_eq!(labels.iter().copied().max().unwrap_or(0), k);
        Self { labels, k }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            labels: (1..=n).collect(),
            k: n,
        }
    }

    fn is_canonical(labels: &[usize]) -> bool {
        let mut next = 1;
        labels.iter().all(|&l| {
            if l == next {
                next += 1;
                true
            } else {
                l >= 1 && l < next
            }
        })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Members of each cluster, cluster `i` at position `i - 1`.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l - 1].push(i);
        }
        out
    }

    /// True if every cluster of `self` lies inside one cluster of `coarser`.
    pub fn refines(&self, coarser: &Clustering) -> bool {
        if self.len() != coarser.len() {
            return false;
        }
        let mut image = vec![0usize; self.k + 1];
        self.labels
            .iter()
            .zip(&coarser.labels)
            .all(|(&fine, &coarse)| match image[fine] {
                0 => {
                    image[fine] = coarse;
                    true
                }
                seen => seen == coarse,
            })
    }
}
