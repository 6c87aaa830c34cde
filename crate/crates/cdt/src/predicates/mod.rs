//! Exact-sign geometric predicates over explicit and LNC implicit points.
//!
//! Evaluation is tiered: a plain double computation guarded by a semi-static
//! filter, then interval arithmetic, then exact expansion arithmetic. The
//! dispatcher moves implicit arguments to the front of the argument list by
//! adjacent swaps (tracking parity), so only 5 orient3d and 6 inSphere
//! kernel variants exist.

pub mod expansion;
pub mod filters;
pub mod interval;
pub mod kernels;
pub mod oracle;
mod point;

pub use filters::{filter_bound, filter_spec, FilterSpec, PredicateVariant, FILTER_SPECS};
pub use point::{ExplicitPoint3, GenericPoint, LNCPoint, Sign};

use expansion::Expansion;
use interval::Interval;

/// Stable-partitions `args` so implicit points come first, returning the
/// number of implicit points and the parity of the adjacent swaps used
/// (true = odd).
fn implicit_first<'a, const N: usize>(
    args: [&'a GenericPoint; N],
) -> ([&'a GenericPoint; N], u8, bool) {
    let mut out = args;
    let mut front = 0usize;
    let mut swaps = 0usize;
    for i in 0..N {
        if out[i].is_implicit() {
            // bubble position i down to position `front`
            let mut j = i;
            while j > front {
                out.swap(j, j - 1);
                swaps += 1;
                j -= 1;
            }
            front += 1;
        }
    }
    (out, front as u8, swaps % 2 == 1)
}

fn orient3d_permuted(args: &[&GenericPoint; 4], n: u8) -> Sign {
    // Tier 1: doubles guarded by the semi-static filter.
    let det = kernels::orient3d_eval::<f64>(args);
    let eps = filter_bound(
        PredicateVariant::Orient3d(n),
        &args.map(|a| a as &GenericPoint),
    );
    if det > eps {
        return Sign::Positive;
    }
    if det < -eps {
        return Sign::Negative;
    }
    // Tier 2: intervals.
    if let Some(s) = kernels::orient3d_eval::<Interval>(args).signum() {
        return Sign::from_i32(s);
    }
    // Tier 3: exact.
    Sign::from_i32(kernels::orient3d_eval::<Expansion>(args).signum())
}

fn insphere_permuted(args: &[&GenericPoint; 5], n: u8) -> Sign {
    let det = kernels::insphere_eval::<f64>(args);
    let eps = filter_bound(
        PredicateVariant::InSphere(n),
        &args.map(|a| a as &GenericPoint),
    );
    if det > eps {
        return Sign::Positive;
    }
    if det < -eps {
        return Sign::Negative;
    }
    if let Some(s) = kernels::insphere_eval::<Interval>(args).signum() {
        return Sign::from_i32(s);
    }
    Sign::from_i32(kernels::insphere_eval::<Expansion>(args).signum())
}

/// Exact sign of the orient3d determinant: positive when `d` lies on the
/// positive side of the plane through `(a, b, c)` (so a tetrahedron stored
/// as `(a, b, c, d)` is valid iff the result is `Positive`).
pub fn orient3d(a: &GenericPoint, b: &GenericPoint, c: &GenericPoint, d: &GenericPoint) -> Sign {
    let (args, n, odd) = implicit_first([a, b, c, d]);
    let s = orient3d_permuted(&args, n);
    if odd {
        s.flip()
    } else {
        s
    }
}

/// Exact sign of the inSphere determinant. For a positively oriented
/// `(a, b, c, d)`, `Positive` means `e` lies strictly inside the
/// circumsphere, `Negative` strictly outside, `Zero` on it; for a negative
/// orientation the inside/outside meanings are exchanged.
pub fn in_sphere(
    a: &GenericPoint,
    b: &GenericPoint,
    c: &GenericPoint,
    d: &GenericPoint,
    e: &GenericPoint,
) -> Sign {
    let (args, n, odd) = implicit_first([a, b, c, d, e]);
    let s = insphere_permuted(&args, n);
    if odd {
        s.flip()
    } else {
        s
    }
}

/// True iff `p` belongs to the closed volume of the positively oriented
/// tetrahedron `(t0, t1, t2, t3)`.
pub fn point_in_tetrahedron(
    p: &GenericPoint,
    t0: &GenericPoint,
    t1: &GenericPoint,
    t2: &GenericPoint,
    t3: &GenericPoint,
) -> bool {
    if orient3d(t0, t1, t2, p) == Sign::Negative {
        return false;
    }
    if orient3d(t0, t1, p, t3) == Sign::Negative {
        return false;
    }
    if orient3d(t0, p, t2, t3) == Sign::Negative {
        return false;
    }
    if orient3d(p, t1, t2, t3) == Sign::Negative {
        return false;
    }
    true
}

/// True iff segment `(s1, s2)` meets triangle `(v0, v1, v2)` while not
/// being coplanar with it; the crossing point may lie anywhere in the
/// closed triangle.
pub fn segment_intersects_triangle(
    s1: &GenericPoint,
    s2: &GenericPoint,
    v0: &GenericPoint,
    v1: &GenericPoint,
    v2: &GenericPoint,
) -> bool {
    if orient3d(v0, v1, v2, s1) == orient3d(v0, v1, v2, s2) {
        return false;
    }
    let w01 = orient3d(v0, v1, s1, s2);
    let w12 = orient3d(v1, v2, s1, s2);
    let w20 = orient3d(v2, v0, s1, s2);
    if w01.as_i32() * w12.as_i32() < 0 {
        return false;
    }
    if w12.as_i32() * w20.as_i32() < 0 {
        return false;
    }
    if w20.as_i32() * w01.as_i32() < 0 {
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::oracle::{rational_sign_oracle, PredicateId};
    use super::*;

    fn ep(x: f64, y: f64, z: f64) -> GenericPoint {
        GenericPoint::explicit(x, y, z)
    }

    fn lnc(p: [f64; 3], q: [f64; 3], t: f64) -> GenericPoint {
        GenericPoint::Lnc(LNCPoint::new(p.into(), q.into(), t).unwrap())
    }

    #[test]
    fn orient3d_reference_cases() {
        let o = ep(0.0, 0.0, 0.0);
        let x = ep(1.0, 0.0, 0.0);
        let y = ep(0.0, 1.0, 0.0);
        let z = ep(0.0, 0.0, 1.0);
        assert_eq!(orient3d(&o, &x, &y, &z), Sign::Negative);
        let w = ep(1.0, 1.0, 0.0);
        assert_eq!(orient3d(&o, &x, &y, &w), Sign::Zero);
        // t=0.5 LNC on (0,0,0)-(2,0,0) equals the explicit midpoint.
        let m = lnc([0.0, 0.0, 0.0], [2.0, 0.0, 0.0], 0.5);
        let s_implicit = orient3d(&m, &y, &z, &o);
        let s_explicit = orient3d(&x, &y, &z, &o);
        assert_eq!(s_implicit, s_explicit);
        assert_eq!(s_explicit, Sign::Positive);
    }

    #[test]
    fn insphere_reference_cases() {
        let a = ep(1.0, 0.0, 0.0);
        let b = ep(0.0, 0.0, 0.0);
        let c = ep(0.0, 1.0, 0.0);
        let d = ep(0.0, 0.0, 1.0);
        assert_eq!(orient3d(&a, &b, &c, &d), Sign::Positive);
        assert_eq!(
            in_sphere(&a, &b, &c, &d, &ep(0.25, 0.25, 0.25)),
            Sign::Positive
        );
        assert_eq!(in_sphere(&a, &b, &c, &d, &ep(2.0, 2.0, 2.0)), Sign::Negative);
        // (1,1,0) is at squared distance 0.75 from the circumcenter
        // (0.5,0.5,0.5), the squared circumradius.
        assert_eq!(in_sphere(&a, &b, &c, &d, &ep(1.0, 1.0, 0.0)), Sign::Zero);
    }

    #[test]
    fn permutation_antisymmetry() {
        let a = ep(0.1, 0.2, 0.3);
        let b = ep(1.7, -0.4, 0.2);
        let c = ep(-0.3, 1.1, 0.9);
        let d = ep(0.4, 0.6, -1.2);
        let e = lnc([0.0, 0.0, 0.0], [1.0, 2.0, 3.0], 0.375);
        let s = orient3d(&a, &b, &c, &d);
        assert_eq!(orient3d(&b, &a, &c, &d), s.flip());
        assert_eq!(orient3d(&a, &c, &b, &d), s.flip());
        assert_eq!(orient3d(&a, &b, &d, &c), s.flip());
        let si = in_sphere(&a, &b, &c, &d, &e);
        assert_eq!(in_sphere(&b, &a, &c, &d, &e), si.flip());
        assert_eq!(in_sphere(&a, &c, &b, &d, &e), si.flip());
        assert_eq!(in_sphere(&a, &b, &d, &c, &e), si.flip());
    }

    #[test]
    fn mixed_patterns_agree_with_oracle() {
        let pts = [
            ep(0.25, 0.5, 0.125),
            lnc([0.0, 0.0, 0.0], [1.0, 0.5, 0.25], 0.3),
            ep(-0.5, 0.75, 1.0),
            lnc([1.0, 1.0, 1.0], [-1.0, 0.5, 2.0], 0.71),
            lnc([0.5, -0.25, 0.75], [2.0, 1.0, -1.0], 0.125),
        ];
        for sel in [
            [0usize, 1, 2, 3],
            [1, 0, 2, 3],
            [1, 3, 4, 0],
            [1, 3, 4, 2],
            [0, 2, 1, 4],
        ] {
            let args: Vec<&GenericPoint> = sel.iter().map(|&i| &pts[i]).collect();
            let got = orient3d(args[0], args[1], args[2], args[3]);
            let want = rational_sign_oracle(PredicateId::Orient3d, &args);
            assert_eq!(got, want, "selection {sel:?}");
        }
        let all: Vec<&GenericPoint> = pts.iter().collect();
        let got = in_sphere(all[0], all[1], all[2], all[3], all[4]);
        let want = rational_sign_oracle(PredicateId::InSphere, &all);
        assert_eq!(got, want);
    }

    #[test]
    fn lnc_with_dyadic_t_matches_explicit() {
        // 0.25*(4,8,-4) + 0.75*(0,0,0) = (1,2,-1), exactly representable.
        let l = lnc([4.0, 8.0, -4.0], [0.0, 0.0, 0.0], 0.25);
        let x = ep(1.0, 2.0, -1.0);
        let b = ep(3.0, -1.0, 0.5);
        let c = ep(-2.0, 0.5, 1.5);
        let d = ep(0.25, 4.0, -3.0);
        let e = ep(1.0, 1.0, 1.0);
        assert_eq!(orient3d(&l, &b, &c, &d), orient3d(&x, &b, &c, &d));
        assert_eq!(in_sphere(&l, &b, &c, &d, &e), in_sphere(&x, &b, &c, &d, &e));
    }

    #[test]
    fn point_in_tetrahedron_cases() {
        let t0 = ep(1.0, 0.0, 0.0);
        let t1 = ep(0.0, 0.0, 0.0);
        let t2 = ep(0.0, 1.0, 0.0);
        let t3 = ep(0.0, 0.0, 1.0);
        assert_eq!(orient3d(&t0, &t1, &t2, &t3), Sign::Positive);
        assert!(point_in_tetrahedron(&ep(0.25, 0.25, 0.25), &t0, &t1, &t2, &t3));
        assert!(point_in_tetrahedron(&t0, &t0, &t1, &t2, &t3));
        assert!(!point_in_tetrahedron(&ep(1.0, 1.0, 1.0), &t0, &t1, &t2, &t3));
    }

    #[test]
    fn segment_triangle_cases() {
        let v0 = ep(0.0, 0.0, 0.0);
        let v1 = ep(1.0, 0.0, 0.0);
        let v2 = ep(0.0, 1.0, 0.0);
        assert!(segment_intersects_triangle(
            &ep(0.3, 0.3, -1.0),
            &ep(0.3, 0.3, 1.0),
            &v0,
            &v1,
            &v2
        ));
        // Segment in the triangle's plane: excluded by contract.
        assert!(!segment_intersects_triangle(
            &ep(0.2, 0.2, 0.0),
            &ep(0.9, 0.9, 0.0),
            &v0,
            &v1,
            &v2
        ));
        assert!(!segment_intersects_triangle(
            &ep(5.0, 5.0, -1.0),
            &ep(5.0, 5.0, 1.0),
            &v0,
            &v1,
            &v2
        ));
    }
}
