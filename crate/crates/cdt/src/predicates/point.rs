//! Point representations: explicit FP points and implicit linear-combination
//! (LNC) points that live exactly on an input segment.

use crate::{CdtError, Result};

/// Exact sign of a predicate determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    #[inline]
    pub fn from_i32(s: i32) -> Sign {
        match s.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    #[inline]
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// A 3D point with explicit double-precision coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExplicitPoint3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ExplicitPoint3 {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(CdtError::InvalidPlc(format!(
                "non-finite coordinate ({x}, {y}, {z})"
            )));
        }
        Ok(ExplicitPoint3 { x, y, z })
    }

    #[inline]
    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for ExplicitPoint3 {
    fn from(c: [f64; 3]) -> Self {
        ExplicitPoint3 {
            x: c[0],
            y: c[1],
            z: c[2],
        }
    }
}

/// An implicit point at `t*p + (1-t)*q` on the input segment `(p, q)`.
///
/// The position is exact by definition: it is never evaluated to floating
/// point during meshing, only consumed by the indirect predicates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LNCPoint {
    pub p: ExplicitPoint3,
    pub q: ExplicitPoint3,
    pub t: f64,
}

impl LNCPoint {
    pub fn new(p: ExplicitPoint3, q: ExplicitPoint3, t: f64) -> Result<Self> {
        if !(t > 0.0 && t < 1.0) {
            return Err(CdtError::Precision(format!(
                "LNC parameter t={t} outside the open interval (0,1)"
            )));
        }
        if p == q {
            return Err(CdtError::InvalidPlc(
                "LNC point on a degenerate segment (p == q)".into(),
            ));
        }
        Ok(LNCPoint { p, q, t })
    }
}

/// Either an explicit point or an implicit LNC point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenericPoint {
    Explicit(ExplicitPoint3),
    Lnc(LNCPoint),
}

impl GenericPoint {
    pub fn explicit(x: f64, y: f64, z: f64) -> Self {
        GenericPoint::Explicit(ExplicitPoint3 { x, y, z })
    }

    #[inline]
    pub fn is_implicit(&self) -> bool {
        matches!(self, GenericPoint::Lnc(_))
    }

    /// Floating-point approximation of the position (exact for explicit
    /// points). Used only for walk heuristics and Steiner parameter math,
    /// never for predicate decisions.
    pub fn approx(&self) -> [f64; 3] {
        match self {
            GenericPoint::Explicit(e) => e.coords(),
            GenericPoint::Lnc(l) => {
                let p = l.p.coords();
                let q = l.q.coords();
                [
                    q[0] + l.t * (p[0] - q[0]),
                    q[1] + l.t * (p[1] - q[1]),
                    q[2] + l.t * (p[2] - q[2]),
                ]
            }
        }
    }
}

impl From<ExplicitPoint3> for GenericPoint {
    fn from(e: ExplicitPoint3) -> Self {
        GenericPoint::Explicit(e)
    }
}

impl From<LNCPoint> for GenericPoint {
    fn from(l: LNCPoint) -> Self {
        GenericPoint::Lnc(l)
    }
}
