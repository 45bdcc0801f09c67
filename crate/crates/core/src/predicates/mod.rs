//! Orientation and in-circle predicates with selectable arithmetic.
//!
//! In [`ArithmeticMode::Filtered`] each predicate is first evaluated in the
//! scalar type together with a static forward error bound. The float sign is
//! returned only when `|det|` exceeds the bound; otherwise the exact sign is
//! recomputed over big integers. The bounds are the classic first-stage ones
//! for these determinants, with `u` the unit roundoff:
//!
//! ```text
//! orient2d:  |det| > (3 + 16u)·u · (|(ax-cx)(by-cy)| + |(ay-cy)(bx-cx)|)
//! incircle:  |det| > (10 + 96u)·u · permanent
//! ```
//!
//! where the permanent is the in-circle expansion with every product replaced
//! by its absolute value. They assume no underflow or overflow in the
//! intermediate products, so the filter only runs when every nonzero
//! coordinate difference lies in `[FILTER_MIN, FILTER_MAX]` of the scalar;
//! all other inputs take the exact route directly.

mod exact;

use std::cell::Cell;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::scalar::Scalar;

use exact::{incircle_det, incircle_diffs, orient_terms};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Float>(x: T) -> Self {
        if x > T::zero() {
            Sign::Positive
        } else if x < T::zero() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArithmeticMode {
    /// Plain floating point; fast but may return wrong signs near degeneracy.
    Float,
    #[default]
    Filtered,
    /// Every call evaluated exactly.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PredicateStats {
    pub orient_calls: u64,
    pub incircle_calls: u64,
    /// Calls answered in floating point.
    pub fast_path: u64,
    /// Calls answered by exact evaluation.
    pub exact: u64,
}

impl PredicateStats {
    pub fn calls(&self) -> u64 {
        self.orient_calls + self.incircle_calls
    }

    /// Share of calls that needed exact evaluation.
    pub fn fallback_fraction(&self) -> f64 {
        match self.calls() {
            0 => 0.0,
            n => self.exact as f64 / n as f64,
        }
    }
}

/// Predicate evaluator carrying its mode and its own counters.
#[derive(Debug, Clone, Default)]
pub struct Kernel<T> {
    mode: ArithmeticMode,
    stats: Cell<PredicateStats>,
    _scalar: std::marker::PhantomData<T>,
}

#[inline]
fn xy<T: Scalar>(p: Point<T>) -> [T; 2] {
    [p.re, p.im]
}

#[inline]
fn in_filter_range<T: Scalar>(diffs: &[T]) -> bool {
    diffs.iter().all(|d| {
        let a = d.abs();
        a == T::zero() || (a >= T::FILTER_MIN && a <= T::FILTER_MAX)
    })
}

fn unit_roundoff<T: Scalar>() -> T {
    T::epsilon() / (T::one() + T::one())
}

fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("small constant")
}

impl<T: Scalar> Kernel<T> {
    pub fn new(mode: ArithmeticMode) -> Self {
        Self {
            mode,
            stats: Cell::new(PredicateStats::default()),
            _scalar: std::marker::PhantomData,
        }
    }

    pub fn mode(&self) -> ArithmeticMode {
        self.mode
    }

    pub fn stats(&self) -> PredicateStats {
        self.stats.get()
    }

    pub fn reset_stats(&self) {
        self.stats.set(PredicateStats::default());
    }

    fn record(&self, orient: bool, exact: bool) {
        let mut s = self.stats.get();
        if orient {
            s.orient_calls += 1;
        } else {
            s.incircle_calls += 1;
        }
        if exact {
            s.exact += 1;
        } else {
            s.fast_path += 1;
        }
        self.stats.set(s);
    }

    /// Sign of `(b - a) x (c - a)`: positive when `a, b, c` turn counterclockwise.
    pub fn orient2d(&self, a: Point<T>, b: Point<T>, c: Point<T>) -> Sign {
        if self.mode != ArithmeticMode::Exact {
            let (left, right) = orient_terms(xy(a), xy(b), xy(c));
            let det = left - right;
            if self.mode == ArithmeticMode::Float {
                self.record(true, false);
                return Sign::of(det);
            }
            let diffs = [a.re - c.re, a.im - c.im, b.re - c.re, b.im - c.im];
            if in_filter_range(&diffs) {
                let u = unit_roundoff::<T>();
                let bound = (lit::<T>(3.0) + lit::<T>(16.0) * u) * u * (left.abs() + right.abs())
                    + T::min_positive_value();
                if det.abs() > bound {
                    self.record(true, false);
                    return Sign::of(det);
                }
            }
        }
        self.record(true, true);
        exact::orient2d_exact(xy(a), xy(b), xy(c))
    }

    /// Sign of the in-circle determinant for counterclockwise `a, b, c`:
    /// positive when `d` lies strictly inside their circumcircle.
    ///
    /// The orientation of `a, b, c` is not checked.
    pub(crate) fn incircle_ccw(&self, a: Point<T>, b: Point<T>, c: Point<T>, d: Point<T>) -> Sign {
        if self.mode != ArithmeticMode::Exact {
            let diffs = incircle_diffs(xy(a), xy(b), xy(c), xy(d));
            let det = incircle_det(&diffs);
            if self.mode == ArithmeticMode::Float {
                self.record(false, false);
                return Sign::of(det);
            }
            if in_filter_range(&diffs) {
                let [adx, ady, bdx, bdy, cdx, cdy] = diffs;
                let alift = adx * adx + ady * ady;
                let blift = bdx * bdx + bdy * bdy;
                let clift = cdx * cdx + cdy * cdy;
                let permanent = ((bdx * cdy).abs() + (cdx * bdy).abs()) * alift
                    + ((cdx * ady).abs() + (adx * cdy).abs()) * blift
                    + ((adx * bdy).abs() + (bdx * ady).abs()) * clift;
                let u = unit_roundoff::<T>();
                let bound =
                    (lit::<T>(10.0) + lit::<T>(96.0) * u) * u * permanent + T::min_positive_value();
                if det.abs() > bound {
                    self.record(false, false);
                    return Sign::of(det);
                }
            }
        }
        self.record(false, true);
        exact::incircle_exact(xy(a), xy(b), xy(c), xy(d))
    }

    /// Positive when `d` lies strictly inside the circle through `a, b, c`,
    /// zero when the four points are cocircular, for either orientation of
    /// `a, b, c`. Collinear `a, b, c` have no circumcircle and are rejected.
    pub fn incircle(&self, a: Point<T>, b: Point<T>, c: Point<T>, d: Point<T>) -> Result<Sign> {
        match self.orient2d(a, b, c) {
            Sign::Zero => Err(Error::Collinear),
            Sign::Positive => Ok(self.incircle_ccw(a, b, c, d)),
            Sign::Negative => Ok(self.incircle_ccw(a, b, c, d).flip()),
        }
    }
}

/// Exact orientation sign, independent of any kernel.
pub fn orient2d_exact<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>) -> Sign {
    exact::orient2d_exact(xy(a), xy(b), xy(c))
}

/// Exact in-circle determinant sign for counterclockwise `a, b, c`.
pub fn incircle_exact<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>, d: Point<T>) -> Sign {
    exact::incircle_exact(xy(a), xy(b), xy(c), xy(d))
}
