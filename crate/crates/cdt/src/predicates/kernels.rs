//! Determinant kernels shared by every evaluation tier.
//!
//! The same generic expression tree is instantiated with `f64` (filtered
//! stage), [`Interval`](super::interval::Interval) (conservative stage) and
//! [`Expansion`](super::expansion::Expansion) (exact stage), so a sign
//! certified by a cheaper tier is a sign of exactly the expression the exact
//! tier would evaluate.

use std::ops::{Add, Mul, Sub};

use super::point::GenericPoint;

pub trait Num: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn from_f64(x: f64) -> Self;
}

impl Num for f64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
}

impl Num for super::interval::Interval {
    #[inline]
    fn from_f64(x: f64) -> Self {
        super::interval::Interval::point(x)
    }
}

impl Num for super::expansion::Expansion {
    #[inline]
    fn from_f64(x: f64) -> Self {
        super::expansion::Expansion::from(x)
    }
}

/// Coordinates of the linear combination `t*p + (1-t)*q`, evaluated as
/// `p + (1-t)*(q - p)`: algebraically identical, and built only from the
/// quantities the filter delta measures (|p|, |q - p|, t).
pub fn lnc_lambda<T: Num>(p: [T; 3], q: [T; 3], t: T) -> [T; 3] {
    let d = sub3(&q, &p);
    let s = T::from_f64(1.0) - t;
    lnc_lambda_from_diff(p, d, s)
}

/// Lambda from the precomputed difference `d = q - p` and complement
/// `s = 1 - t`; split out so the error-bound derivation can model the
/// measured quantities directly.
pub fn lnc_lambda_from_diff<T: Num>(p: [T; 3], d: [T; 3], s: T) -> [T; 3] {
    [
        p[0].clone() + s.clone() * d[0].clone(),
        p[1].clone() + s.clone() * d[1].clone(),
        p[2].clone() + s * d[2].clone(),
    ]
}

pub fn lift_point<T: Num>(p: &GenericPoint) -> [T; 3] {
    match p {
        GenericPoint::Explicit(e) => {
            [T::from_f64(e.x), T::from_f64(e.y), T::from_f64(e.z)]
        }
        GenericPoint::Lnc(l) => lnc_lambda(
            [T::from_f64(l.p.x), T::from_f64(l.p.y), T::from_f64(l.p.z)],
            [T::from_f64(l.q.x), T::from_f64(l.q.y), T::from_f64(l.q.z)],
            T::from_f64(l.t),
        ),
    }
}

pub fn sub3<T: Num>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[0].clone() - b[0].clone(),
        a[1].clone() - b[1].clone(),
        a[2].clone() - b[2].clone(),
    ]
}

fn det3<T: Num>(r0: &[T; 3], r1: &[T; 3], r2: &[T; 3]) -> T {
    let m12 = r1[1].clone() * r2[2].clone() - r1[2].clone() * r2[1].clone();
    let m02 = r1[0].clone() * r2[2].clone() - r1[2].clone() * r2[0].clone();
    let m01 = r1[0].clone() * r2[1].clone() - r1[1].clone() * r2[0].clone();
    r0[0].clone() * m12 - r0[1].clone() * m02 + r0[2].clone() * m01
}

/// Sign-bearing value of the orient3d determinant over already-lifted rows.
pub fn orient3d_value<T: Num>(p: [[T; 3]; 4]) -> T {
    let [a, b, c, d] = p;
    let r0 = sub3(&a, &d);
    let r1 = sub3(&b, &d);
    let r2 = sub3(&c, &d);
    det3(&r0, &r1, &r2)
}

/// Sign-bearing value of the inSphere determinant over already-lifted rows.
pub fn insphere_value<T: Num>(p: [[T; 3]; 5]) -> T {
    let [a, b, c, d, e] = p;
    insphere_value_from_rows([sub3(&a, &e), sub3(&b, &e), sub3(&c, &e), sub3(&d, &e)])
}

/// inSphere determinant from precomputed rows `p_k - p_5`; split out so the
/// error-bound derivation can model the measured differences directly.
pub fn insphere_value_from_rows<T: Num>(rows: [[T; 3]; 4]) -> T {
    let norms: [T; 4] = [
        norm2(&rows[0]),
        norm2(&rows[1]),
        norm2(&rows[2]),
        norm2(&rows[3]),
    ];
    // Expansion along the squared-norm column of the 4x4 determinant.
    let m0 = det3(&rows[1], &rows[2], &rows[3]);
    let m1 = det3(&rows[0], &rows[2], &rows[3]);
    let m2 = det3(&rows[0], &rows[1], &rows[3]);
    let m3 = det3(&rows[0], &rows[1], &rows[2]);
    let [n0, n1, n2, n3] = norms;
    n1 * m1 + n3 * m3 - (n0 * m0 + n2 * m2)
}

fn norm2<T: Num>(v: &[T; 3]) -> T {
    v[0].clone() * v[0].clone() + v[1].clone() * v[1].clone() + v[2].clone() * v[2].clone()
}

pub fn orient3d_eval<T: Num>(args: &[&GenericPoint; 4]) -> T {
    orient3d_value([
        lift_point(args[0]),
        lift_point(args[1]),
        lift_point(args[2]),
        lift_point(args[3]),
    ])
}

pub fn insphere_eval<T: Num>(args: &[&GenericPoint; 5]) -> T {
    insphere_value([
        lift_point(args[0]),
        lift_point(args[1]),
        lift_point(args[2]),
        lift_point(args[3]),
        lift_point(args[4]),
    ])
}
