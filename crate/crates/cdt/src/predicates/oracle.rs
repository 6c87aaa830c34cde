//! Arbitrary-precision rational sign oracle.
//!
//! Evaluates the same determinants as the tiered predicates but over
//! `BigRational`, through an entirely separate code path. Used by the test
//! suite to certify the production predicates; kept out of the production
//! pipeline.

use crate::exact::{sign_of, Rat, RatPoint3};
use crate::predicates::{GenericPoint, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredicateId {
    Orient3d,
    InSphere,
}

fn det3_rat(r: &[[Rat; 3]; 3]) -> Rat {
    let m12 = r[1][1].clone() * r[2][2].clone() - r[1][2].clone() * r[2][1].clone();
    let m02 = r[1][0].clone() * r[2][2].clone() - r[1][2].clone() * r[2][0].clone();
    let m01 = r[1][0].clone() * r[2][1].clone() - r[1][1].clone() * r[2][0].clone();
    r[0][0].clone() * m12 - r[0][1].clone() * m02 + r[0][2].clone() * m01
}

pub fn orient3d_rational(args: &[&GenericPoint; 4]) -> Rat {
    let p: Vec<RatPoint3> = args.iter().map(|a| RatPoint3::from_generic(a)).collect();
    let rows: Vec<[Rat; 3]> = (0..3)
        .map(|i| {
            let d = p[i].sub(&p[3]);
            [d.x, d.y, d.z]
        })
        .collect();
    det3_rat(&[rows[0].clone(), rows[1].clone(), rows[2].clone()])
}

pub fn insphere_rational(args: &[&GenericPoint; 5]) -> Rat {
    let p: Vec<RatPoint3> = args.iter().map(|a| RatPoint3::from_generic(a)).collect();
    let mut rows = Vec::with_capacity(4);
    for i in 0..4 {
        let d = p[i].sub(&p[4]);
        let n = d.norm2();
        rows.push(([d.x, d.y, d.z], n));
    }
    // Laplace expansion along the norm column.
    let minor = |skip: usize| -> Rat {
        let kept: Vec<&[Rat; 3]> = (0..4).filter(|&i| i != skip).map(|i| &rows[i].0).collect();
        det3_rat(&[kept[0].clone(), kept[1].clone(), kept[2].clone()])
    };
    let mut det = Rat::from_integer(0.into());
    for (k, row) in rows.iter().enumerate() {
        let term = row.1.clone() * minor(k);
        if k % 2 == 0 {
            det -= term;
        } else {
            det += term;
        }
    }
    det
}

/// Exact sign of the requested determinant, straight from rational
/// arithmetic. The production tiered path must agree with this on every
/// input.
pub fn rational_sign_oracle(id: PredicateId, args: &[&GenericPoint]) -> Sign {
    match id {
        PredicateId::Orient3d => {
            let a: &[&GenericPoint; 4] = args.try_into().expect("orient3d takes 4 points");
            sign_of(&orient3d_rational(a))
        }
        PredicateId::InSphere => {
            let a: &[&GenericPoint; 5] = args.try_into().expect("inSphere takes 5 points");
            sign_of(&insphere_rational(a))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn orient3d_reference_value() {
        let a = GenericPoint::explicit(0.0, 0.0, 0.0);
        let b = GenericPoint::explicit(1.0, 0.0, 0.0);
        let c = GenericPoint::explicit(0.0, 1.0, 0.0);
        let d = GenericPoint::explicit(0.0, 0.0, 1.0);
        let det = orient3d_rational(&[&a, &b, &c, &d]);
        assert_eq!(det.to_f64().unwrap(), -1.0);
    }

    #[test]
    fn insphere_reference_value() {
        let a = GenericPoint::explicit(1.0, 0.0, 0.0);
        let b = GenericPoint::explicit(0.0, 0.0, 0.0);
        let c = GenericPoint::explicit(0.0, 1.0, 0.0);
        let d = GenericPoint::explicit(0.0, 0.0, 1.0);
        let e = GenericPoint::explicit(0.25, 0.25, 0.25);
        let det = insphere_rational(&[&a, &b, &c, &d, &e]);
        assert_eq!(det.to_f64().unwrap(), 0.5625);
    }
}
