//! Reference implementations for tests: exact predicates over `i128` grids and
//! `BigRational`, a brute-force Delaunay graph, and random instance builders.
//!
//! Nothing here calls into the library's predicates or clusterers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use eigclust::{PlanePoint, Spectrum64};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Points with coordinates `k / 2^bits`, `0 <= k < 2^bits`.
pub fn grid_points(rng: &mut impl Rng, n: usize, bits: u32) -> Vec<PlanePoint> {
    let scale = (1u64 << bits) as f64;
    (0..n)
        .map(|_| {
            let x = rng.random_range(0..1u64 << bits) as f64 / scale;
            let y = rng.random_range(0..1u64 << bits) as f64 / scale;
            PlanePoint::new(x, y)
        })
        .collect()
}

/// Exact integer image of a grid point.
pub fn to_int(p: PlanePoint, bits: u32) -> (i128, i128) {
    let scale = (1u64 << bits) as f64;
    let (x, y) = (p.re * scale, p.im * scale);
    assert!(
        x.fract() == 0.0 && y.fract() == 0.0,
        "{p:?} is off the grid"
    );
    (x as i128, y as i128)
}

pub fn orient_i(a: (i128, i128), b: (i128, i128), c: (i128, i128)) -> i128 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

/// Sign of the lifted determinant; positive when `d` is inside the circle of
/// counterclockwise `a, b, c`.
pub fn incircle_i(a: (i128, i128), b: (i128, i128), c: (i128, i128), d: (i128, i128)) -> i128 {
    let row = |p: (i128, i128)| {
        let (x, y) = (p.0 - d.0, p.1 - d.1);
        (x, y, x * x + y * y)
    };
    let (ax, ay, al) = row(a);
    let (bx, by, bl) = row(b);
    let (cx, cy, cl) = row(c);
    (ax * (by * cl - bl * cy) - ay * (bx * cl - bl * cx) + al * (bx * cy - by * cx)).signum()
}

fn q(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

fn sign_q(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn orient_q(a: PlanePoint, b: PlanePoint, c: PlanePoint) -> i32 {
    let (ax, ay, bx, by, cx, cy) = (q(a.re), q(a.im), q(b.re), q(b.im), q(c.re), q(c.im));
    sign_q(&((bx - &ax) * (cy - &ay) - (by - &ay) * (cx - &ax)))
}

/// Raw lifted determinant sign (no orientation normalisation).
pub fn incircle_q(a: PlanePoint, b: PlanePoint, c: PlanePoint, d: PlanePoint) -> i32 {
    let (dx, dy) = (q(d.re), q(d.im));
    let row = |p: PlanePoint| {
        let (x, y) = (q(p.re) - &dx, q(p.im) - &dy);
        let l = &x * &x + &y * &y;
        (x, y, l)
    };
    let (ax, ay, al) = row(a);
    let (bx, by, bl) = row(b);
    let (cx, cy, cl) = row(c);
    let det = &ax * (&by * &cl - &bl * &cy) - &ay * (&bx * &cl - &bl * &cx)
        + &al * (&bx * &cy - &by * &cx);
    sign_q(&det)
}

fn strictly_inside_segment(i: (i128, i128), j: (i128, i128), p: (i128, i128)) -> bool {
    orient_i(i, j, p) == 0 && {
        let dot = (p.0 - i.0) * (j.0 - i.0) + (p.1 - i.1) * (j.1 - i.1);
        let len = (j.0 - i.0) * (j.0 - i.0) + (j.1 - i.1) * (j.1 - i.1);
        dot > 0 && dot < len
    }
}

/// Pairs `(i, j)`, `i < j`, for which some closed disk has both points on its
/// boundary and contains no other input point.
///
/// Disks through `i` and `j` have centers on the bisector. A point strictly
/// left of `i -> j` is covered once the center moves far enough left, a point
/// strictly right once it moves far enough right, and a point on the open
/// segment is always covered. So an empty disk exists iff no point lies on
/// the open segment and the most constraining left and right points leave a
/// gap, i.e. the right one lies strictly outside the circle through `i, j` and
/// the left one.
pub fn delaunay_graph(pts: &[(i128, i128)]) -> BTreeSet<(usize, usize)> {
    let n = pts.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let (pi, pj) = (pts[i], pts[j]);
            if (0..n).any(|k| k != i && k != j && strictly_inside_segment(pi, pj, pts[k])) {
                continue;
            }
            let mut left: Option<usize> = None;
            let mut right: Option<usize> = None;
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                match orient_i(pi, pj, pts[k]) {
                    1 => match left {
                        Some(a) if incircle_i(pi, pj, pts[a], pts[k]) <= 0 => {}
                        _ => left = Some(k),
                    },
                    -1 => match right {
                        Some(b) if incircle_i(pj, pi, pts[b], pts[k]) <= 0 => {}
                        _ => right = Some(k),
                    },
                    _ => {}
                }
            }
            let ok = match (left, right) {
                (Some(a), Some(b)) => incircle_i(pi, pj, pts[a], pts[b]) < 0,
                _ => true,
            };
            if ok {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Components of the closeness graph by depth-first search; the comparator is
/// the same squared-distance test the library documents.
pub fn components(points: &[PlanePoint], delta: f64) -> Vec<usize> {
    let n = points.len();
    let close = |a: PlanePoint, b: PlanePoint| {
        let (dx, dy) = (a.re - b.re, a.im - b.im);
        dx * dx + dy * dy <= delta * delta
    };
    let mut label = vec![0usize; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != 0 {
            continue;
        }
        next += 1;
        label[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if label[w] == 0 && close(points[u], points[w]) {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
    }
    label
}

/// Set-partition equality of two label vectors.
pub fn same_partition(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut ab = std::collections::HashMap::new();
    let mut ba = std::collections::HashMap::new();
    a.iter()
        .zip(b)
        .all(|(x, y)| *ab.entry(x).or_insert(y) == y && *ba.entry(y).or_insert(x) == x)
}

/// A random instance from one of several families, including dyadic grids on
/// which many distances equal δ exactly.
pub fn random_instance(rng: &mut impl Rng, n: usize, family: usize) -> Spectrum64 {
    let pts: Vec<PlanePoint> = match family % 5 {
        0 => (0..n)
            .map(|_| PlanePoint::new(rng.random_range(0.0..1.0), rng.random_range(0.0..1.0)))
            .collect(),
        1 => {
            let mut v = vec![PlanePoint::new(0.0, 0.0)];
            for i in 1..n {
                let r = 0.2 * ((i % 5) + 1) as f64;
                let t: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                v.push(PlanePoint::new(r * t.cos(), r * t.sin()));
            }
            v
        }
        2 => (0..n)
            .map(|i| {
                let s = i % 9;
                let (cx, cy) = ((s % 3) as f64 * 0.15, (s / 3) as f64 * 0.15);
                PlanePoint::new(
                    cx + rng.random_range(-0.02..0.02),
                    cy + rng.random_range(-0.02..0.02),
                )
            })
            .collect(),
        // sixteenths: distances 1/8 and 5/16 (3-4-5) occur exactly
        3 => grid_points(rng, n, 4),
        _ => (0..n)
            .map(|_| {
                let x = rng.random_range(0..24) as f64 / 16.0;
                PlanePoint::new(x, if rng.random_bool(0.5) { 0.0 } else { x / 2.0 })
            })
            .collect(),
    };
    Spectrum64::from_points(pts).unwrap()
}
