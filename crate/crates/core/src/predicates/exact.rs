//! Determinant kernels shared by the floating-point and exact routes, and the
//! conversion of binary floating-point coordinates to a common integer grid.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Float, Signed, Zero};

use super::Sign;

/// Minimal arithmetic needed by the kernels.
pub(crate) trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<R: Clone + Add<Output = R> + Sub<Output = R> + Mul<Output = R>> Ring for R {}

/// `(a - c) x (b - c)`, written as the two product terms `(left, right)` with
/// `det = left - right`.
#[inline]
pub(crate) fn orient_terms<R: Ring>(a: [R; 2], b: [R; 2], c: [R; 2]) -> (R, R) {
    let [ax, ay] = a;
    let [bx, by] = b;
    let [cx, cy] = c;
    let left = (ax - cx.clone()) * (by - cy.clone());
    let right = (ay - cy) * (bx - cx);
    (left, right)
}

/// Coordinate differences relative to `d`, in the order
/// `[adx, ady, bdx, bdy, cdx, cdy]`.
#[inline]
pub(crate) fn incircle_diffs<R: Ring>(a: [R; 2], b: [R; 2], c: [R; 2], d: [R; 2]) -> [R; 6] {
    let [dx, dy] = d;
    [
        a[0].clone() - dx.clone(),
        a[1].clone() - dy.clone(),
        b[0].clone() - dx.clone(),
        b[1].clone() - dy.clone(),
        c[0].clone() - dx,
        c[1].clone() - dy,
    ]
}

/// The in-circle determinant from precomputed differences; positive when `d`
/// is inside the circle through counterclockwise `a, b, c`.
#[inline]
pub(crate) fn incircle_det<R: Ring>(diffs: &[R; 6]) -> R {
    let [adx, ady, bdx, bdy, cdx, cdy] = diffs.clone();
    let alift = adx.clone() * adx.clone() + ady.clone() * ady.clone();
    let blift = bdx.clone() * bdx.clone() + bdy.clone() * bdy.clone();
    let clift = cdx.clone() * cdx.clone() + cdy.clone() * cdy.clone();
    let ab = adx.clone() * bdy.clone() - bdx.clone() * ady.clone();
    let bc = bdx * cdy.clone() - cdx.clone() * bdy;
    let ca = cdx * ady - adx * cdy;
    alift * bc + blift * ca + clift * ab
}

/// Scales every coordinate by one common power of two so all become integers.
///
/// Every finite binary float is `± m · 2^e`; shifting by the smallest exponent
/// present gives exact integers with the same ratios, so determinant signs are
/// preserved.
pub(crate) fn to_integer_grid<T: Float, const N: usize>(coords: [T; N]) -> [BigInt; N] {
    let decoded = coords.map(|x| x.integer_decode());
    let emin = decoded
        .iter()
        .filter(|(m, _, _)| *m != 0)
        .map(|&(_, e, _)| e)
        .min()
        .unwrap_or(0);
    decoded.map(|(m, e, s)| {
        if m == 0 {
            BigInt::zero()
        } else {
            let v = BigInt::from(m) << ((e - emin) as usize);
            if s < 0 {
                -v
            } else {
                v
            }
        }
    })
}

pub(crate) fn sign_of_bigint(x: &BigInt) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub(crate) fn orient2d_exact<T: Float>(a: [T; 2], b: [T; 2], c: [T; 2]) -> Sign {
    let [ax, ay, bx, by, cx, cy] = to_integer_grid([a[0], a[1], b[0], b[1], c[0], c[1]]);
    let (left, right) = orient_terms([ax, ay], [bx, by], [cx, cy]);
    sign_of_bigint(&(left - right))
}

pub(crate) fn incircle_exact<T: Float>(a: [T; 2], b: [T; 2], c: [T; 2], d: [T; 2]) -> Sign {
    let [ax, ay, bx, by, cx, cy, dx, dy] =
        to_integer_grid([a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1]]);
    let diffs = incircle_diffs([ax, ay], [bx, by], [cx, cy], [dx, dy]);
    sign_of_bigint(&incircle_det(&diffs))
}
