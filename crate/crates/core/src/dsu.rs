//! Disjoint-set structures for connected components.
//!
//! Two representations sit behind [`DisjointSets`]:
//!
//! - [`LabelVectorDsu`] keeps one cluster label per element. Merging labels
//!   `x < y` rewrites every `y` to `x` and decrements every label above `y`, so
//!   the labels stay contiguous `1..=k` after every union. A union scans the whole
//!   vector (Θ(n)); since at most `n - 1` unions can succeed, the total union work
//!   is bounded by `n²`. [`LabelVectorDsu::scan_work`] counts it.
//! - [`ForestDsu`] is the rooted forest with union by rank and path compression.

use crate::error::{Error, Result};
use crate::spectrum::Clustering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DsuKind {
    LabelVector,
    #[default]
    Forest,
}

pub trait DisjointSets {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Identifier of the set containing `i`.
    fn find(&mut self, i: usize) -> Result<usize>;

    /// Merges the sets of `i` and `j`; returns false if they were already merged.
    fn union(&mut self, i: usize, j: usize) -> Result<bool>;

    fn same_set(&mut self, i: usize, j: usize) -> Result<bool> {
        Ok(self.find(i)? == self.find(j)?)
    }

    /// Canonical labels, numbered by first appearance in element order.
    fn partition(&self) -> Clustering;
}

#[inline]
fn check(i: usize, len: usize) -> Result<()> {
    if i < len {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, len })
    }
}

#[derive(Debug, Clone)]
pub struct LabelVectorDsu {
    labels: Vec<usize>,
    k: usize,
    scan_work: u64,
    unions: u64,
}

impl LabelVectorDsu {
    pub fn new(n: usize) -> Self {
        Self {
            labels: (1..=n).collect(),
            k: n,
            scan_work: 0,
            unions: 0,
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn num_sets(&self) -> usize {
        self.k
    }

    /// Elements visited by relabeling scans so far.
    pub fn scan_work(&self) -> u64 {
        self.scan_work
    }

    /// Successful unions so far.
    pub fn unions(&self) -> u64 {
        self.unions
    }
}

impl DisjointSets for LabelVectorDsu {
    fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    fn find(&mut self, i: usize) -> Result<usize> {
        check(i, self.labels.len())?;
        Ok(self.labels[i])
    }

    fn union(&mut self, i: usize, j: usize) -> Result<bool> {
        let (a, b) = (self.find(i)?, self.find(j)?);
        if a == b {
            return Ok(false);
        }
        let (x, y) = if a < b { (a, b) } else { (b, a) };
        for l in &mut self.labels {
            if *l == y {
                *l = x;
            } else if *l > y {
                *l -= 1;
            }
        }
        self.scan_work += self.labels.len() as u64;
        self.unions += 1;
        self.k -= 1;
        Ok(true)
    }

    fn partition(&self) -> Clustering {
        // label of a set = 1 + number of sets whose least element is smaller,
        // which is exactly first-appearance numbering
        Clustering::from_canonical(self.labels.clone(), self.k)
    }
}

#[derive(Debug, Clone)]
pub struct ForestDsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl ForestDsu {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn root(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    /// Number of parent links between `i` and its root, without compressing.
    pub fn depth(&self, mut i: usize) -> usize {
        let mut d = 0;
        while self.parent[i] != i {
            i = self.parent[i];
            d += 1;
        }
        d
    }

    pub fn rank(&self, i: usize) -> u8 {
        self.rank[i]
    }

    pub fn parent(&self, i: usize) -> usize {
        self.parent[i]
    }
}

impl DisjointSets for ForestDsu {
    fn len(&self) -> usize {
        self.parent.len()
    }

    fn find(&mut self, i: usize) -> Result<usize> {
        check(i, self.parent.len())?;
        let root = self.root(i);
        let mut cur = i;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        Ok(root)
    }

    fn union(&mut self, i: usize, j: usize) -> Result<bool> {
        let (a, b) = (self.find(i)?, self.find(j)?);
        if a == b {
            return Ok(false);
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
        Ok(true)
    }

    fn partition(&self) -> Clustering {
        let n = self.parent.len();
        let mut label_of_root = vec![0usize; n];
        let mut k = 0;
        let labels = (0..n)
            .map(|i| {
                let r = self.root(i);
                if label_of_root[r] == 0 {
                    k += 1;
                    label_of_root[r] = k;
                }
                label_of_root[r]
            })
            .collect();
        Clustering::from_canonical(labels, k)
    }
}

/// Either representation, selected at runtime.
#[derive(Debug, Clone)]
pub enum DsuState {
    LabelVector(LabelVectorDsu),
    Forest(ForestDsu),
}

impl DsuState {
    pub fn new(kind: DsuKind, n: usize) -> Self {
        match kind {
            DsuKind::LabelVector => Self::LabelVector(LabelVectorDsu::new(n)),
            DsuKind::Forest => Self::Forest(ForestDsu::new(n)),
        }
    }

    pub fn kind(&self) -> DsuKind {
        match self {
            Self::LabelVector(_) => DsuKind::LabelVector,
            Self::Forest(_) => DsuKind::Forest,
        }
    }
}

impl DisjointSets for DsuState {
    fn len(&self) -> usize {
        match self {
            Self::LabelVector(d) => d.len(),
            Self::Forest(d) => d.len(),
        }
    }

    #[inline]
    fn find(&mut self, i: usize) -> Result<usize> {
        match self {
            Self::LabelVector(d) => d.find(i),
            Self::Forest(d) => d.find(i),
        }
    }

    fn union(&mut self, i: usize, j: usize) -> Result<bool> {
        match self {
            Self::LabelVector(d) => d.union(i, j),
            Self::Forest(d) => d.union(i, j),
        }
    }

    fn partition(&self) -> Clustering {
        match self {
            Self::LabelVector(d) => d.partition(),
            Self::Forest(d) => d.partition(),
        }
    }
}
