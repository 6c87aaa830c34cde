//! Exact rational geometry helpers.
//!
//! Positions of implicit points, audit-time measures (volumes, areas,
//! collinearity) and the reference-point argmax are all computed over
//! `BigRational` so that no decision in the pipeline depends on rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::predicates::{GenericPoint, Sign};

pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoint3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

pub fn rat(x: f64) -> Rat {
    BigRational::from_float(x).expect("finite double")
}

impl RatPoint3 {
    pub fn from_generic(p: &GenericPoint) -> RatPoint3 {
        match p {
            GenericPoint::Explicit(e) => RatPoint3 {
                x: rat(e.x),
                y: rat(e.y),
                z: rat(e.z),
            },
            GenericPoint::Lnc(l) => {
                let t = rat(l.t);
                let omt = Rat::one() - t.clone();
                RatPoint3 {
                    x: t.clone() * rat(l.p.x) + omt.clone() * rat(l.q.x),
                    y: t.clone() * rat(l.p.y) + omt.clone() * rat(l.q.y),
                    z: t * rat(l.p.z) + omt * rat(l.q.z),
                }
            }
        }
    }

    pub fn sub(&self, o: &RatPoint3) -> RatPoint3 {
        RatPoint3 {
            x: self.x.clone() - o.x.clone(),
            y: self.y.clone() - o.y.clone(),
            z: self.z.clone() - o.z.clone(),
        }
    }

    pub fn dot(&self, o: &RatPoint3) -> Rat {
        self.x.clone() * o.x.clone()
            + self.y.clone() * o.y.clone()
            + self.z.clone() * o.z.clone()
    }

    pub fn cross(&self, o: &RatPoint3) -> RatPoint3 {
        RatPoint3 {
            x: self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone(),
            y: self.z.clone() * o.x.clone() - self.x.clone() * o.z.clone(),
            z: self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone(),
        }
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }
}

pub fn sign_of(r: &Rat) -> Sign {
    if r.is_positive() {
        Sign::Positive
    } else if r.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// Six times the signed volume of the tetrahedron (a, b, c, d), oriented as
/// the orient3d determinant.
pub fn six_volume(a: &RatPoint3, b: &RatPoint3, c: &RatPoint3, d: &RatPoint3) -> Rat {
    let u = a.sub(d);
    let v = b.sub(d);
    let w = c.sub(d);
    u.dot(&v.cross(&w))
}

/// Four times the squared area of the triangle (a, b, c).
pub fn four_area2(a: &RatPoint3, b: &RatPoint3, c: &RatPoint3) -> Rat {
    let u = b.sub(a);
    let v = c.sub(a);
    u.cross(&v).norm2()
}

/// True if `p` lies exactly on segment (a, b), strictly between the
/// endpoints.
pub fn strictly_between(a: &RatPoint3, b: &RatPoint3, p: &RatPoint3) -> bool {
    let u = b.sub(a);
    let w = p.sub(a);
    if !w.cross(&u).norm2().is_zero() {
        return false;
    }
    let s = w.dot(&u);
    s.is_positive() && s < u.norm2()
}

/// Correctly rounded conversion to the nearest double (ties to even).
///
/// Values produced by the pipeline are convex combinations of input
/// coordinates, so overflow cannot occur; subnormals are handled.
pub fn rat_to_f64_nearest(r: &Rat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    if r.is_negative() {
        return -rat_to_f64_nearest(&-r.clone());
    }
    let num = r.numer();
    let den = r.denom();
    // Scale so that num*2^shift/den lands in [2^53, 2^54).
    let bits = num.bits() as i64 - den.bits() as i64;
    let mut shift = 54 - bits;
    let mut scaled = shift_bigint(num, shift);
    let mut quo = &scaled / den;
    while quo.bits() < 54 {
        shift += 1;
        scaled = shift_bigint(num, shift);
        quo = &scaled / den;
    }
    while quo.bits() > 54 {
        shift -= 1;
        scaled = shift_bigint(num, shift);
        quo = &scaled / den;
    }
    // quo has exactly 54 bits; round the last bit to nearest-even.
    let rem = &scaled - &quo * den;
    let half_bit = quo.clone() & BigInt::one();
    let mut mantissa: BigInt = quo >> 1;
    let round_up = if half_bit.is_zero() {
        false
    } else if !rem.is_zero() {
        true
    } else {
        // exact tie: round to even
        !(mantissa.clone() & BigInt::one()).is_zero()
    };
    if round_up {
        mantissa += 1;
    }
    let m = mantissa.to_f64().expect("53/54-bit mantissa fits");
    let exp = -(shift - 1) as i32;
    let v = m * 2f64.powi(exp);
    debug_assert!(v.is_finite());
    v
}

fn shift_bigint(n: &BigInt, shift: i64) -> BigInt {
    if shift >= 0 {
        n << (shift as usize)
    } else {
        n >> ((-shift) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{ExplicitPoint3, LNCPoint};
    use rand::{Rng, SeedableRng};

    #[test]
    fn lnc_position_is_exact_combination() {
        let p = ExplicitPoint3::new(0.0, 0.0, 0.0).unwrap();
        let q = ExplicitPoint3::new(2.0, 0.0, 0.0).unwrap();
        let l = GenericPoint::Lnc(LNCPoint::new(p, q, 0.5).unwrap());
        let r = RatPoint3::from_generic(&l);
        assert_eq!(r.x, rat(1.0));
        assert!(r.y.is_zero() && r.z.is_zero());
    }

    #[test]
    fn round_trip_doubles() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let x: f64 = rng.gen_range(-1e12..1e12) * 10f64.powi(rng.gen_range(-12..12));
            assert_eq!(rat_to_f64_nearest(&rat(x)), x, "value {x}");
        }
        assert_eq!(rat_to_f64_nearest(&rat(0.0)), 0.0);
    }

    #[test]
    fn nearest_rounding_of_thirds() {
        // 1/3 rounds to the double nearest to 1/3.
        let third = Rat::new(BigInt::from(1), BigInt::from(3));
        let v = rat_to_f64_nearest(&third);
        let above = v.next_up();
        let below = v.next_down();
        let err = (rat(v) - third.clone()).abs();
        assert!(err <= (rat(above) - third.clone()).abs());
        assert!(err <= (rat(below) - third).abs());
    }

    #[test]
    fn nearest_rounding_ties_to_even() {
        // 1 + 2^-53 is exactly between 1.0 and 1.0+2^-52; even mantissa wins.
        let tie = Rat::one() + Rat::new(BigInt::from(1), BigInt::from(1u64 << 53));
        assert_eq!(rat_to_f64_nearest(&tie), 1.0);
    }

    #[test]
    fn betweenness() {
        let a = RatPoint3 {
            x: rat(0.0),
            y: rat(0.0),
            z: rat(0.0),
        };
        let b = RatPoint3 {
            x: rat(3.0),
            y: rat(3.0),
            z: rat(0.0),
        };
        let mid = RatPoint3 {
            x: rat(1.5),
            y: rat(1.5),
            z: rat(0.0),
        };
        let off = RatPoint3 {
            x: rat(1.5),
            y: rat(1.6),
            z: rat(0.0),
        };
        assert!(strictly_between(&a, &b, &mid));
        assert!(!strictly_between(&a, &b, &off));
        assert!(!strictly_between(&a, &b, &a));
        assert!(!strictly_between(&a, &b, &b));
    }
}
