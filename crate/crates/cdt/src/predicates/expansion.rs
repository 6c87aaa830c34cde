//! Floating-point expansion arithmetic (Shewchuk's primitives).
//!
//! An expansion represents a real number exactly as a sum of nonoverlapping
//! doubles stored in increasing magnitude order. All operations here are
//! exact; the final sign of an expansion is the sign of its largest
//! component. Products use the splitter trick, not FMA, so results do not
//! depend on contraction being available.

use std::ops::{Add, Mul, Neg, Sub};

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1

#[inline(always)]
fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let x = a + b;
    let bvirt = x - a;
    (x, b - bvirt)
}

#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let x = a + b;
    let bvirt = x - a;
    let avirt = x - bvirt;
    let bround = b - bvirt;
    let around = a - avirt;
    (x, around + bround)
}

#[inline(always)]
fn two_diff(a: f64, b: f64) -> (f64, f64) {
    let x = a - b;
    let bvirt = a - x;
    let avirt = x + bvirt;
    let bround = bvirt - b;
    let around = a - avirt;
    (x, around + bround)
}

#[inline(always)]
fn split(a: f64) -> (f64, f64) {
    let c = SPLITTER * a;
    let abig = c - a;
    let ahi = c - abig;
    (ahi, a - ahi)
}

#[inline(always)]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let x = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let err1 = x - ahi * bhi;
    let err2 = err1 - alo * bhi;
    let err3 = err2 - ahi * blo;
    (x, alo * blo - err3)
}

/// h = e + b, zero components eliminated.
fn grow_expansion_zeroelim(e: &[f64], b: f64, h: &mut Vec<f64>) {
    h.clear();
    let mut q = b;
    for &enow in e {
        let (qnew, hh) = two_sum(q, enow);
        q = qnew;
        if hh != 0.0 {
            h.push(hh);
        }
    }
    if q != 0.0 || h.is_empty() {
        h.push(q);
    }
}

/// h = e + f, both nonoverlapping and increasing; result likewise.
fn fast_expansion_sum_zeroelim(e: &[f64], f: &[f64], h: &mut Vec<f64>) {
    h.clear();
    let (elen, flen) = (e.len(), f.len());
    let mut eindex = 0;
    let mut findex = 0;
    let mut enow = e[0];
    let mut fnow = f[0];
    let mut q;
    if (fnow > enow) == (fnow > -enow) {
        q = enow;
        eindex += 1;
    } else {
        q = fnow;
        findex += 1;
    }
    if eindex < elen && findex < flen {
        enow = e[eindex];
        fnow = f[findex];
        let (qnew, hh) = if (fnow > enow) == (fnow > -enow) {
            eindex += 1;
            fast_two_sum(enow, q)
        } else {
            findex += 1;
            fast_two_sum(fnow, q)
        };
        q = qnew;
        if hh != 0.0 {
            h.push(hh);
        }
        while eindex < elen && findex < flen {
            enow = e[eindex];
            fnow = f[findex];
            let (qnew, hh) = if (fnow > enow) == (fnow > -enow) {
                eindex += 1;
                two_sum(q, enow)
            } else {
                findex += 1;
                two_sum(q, fnow)
            };
            q = qnew;
            if hh != 0.0 {
                h.push(hh);
            }
        }
    }
    while eindex < elen {
        let (qnew, hh) = two_sum(q, e[eindex]);
        eindex += 1;
        q = qnew;
        if hh != 0.0 {
            h.push(hh);
        }
    }
    while findex < flen {
        let (qnew, hh) = two_sum(q, f[findex]);
        findex += 1;
        q = qnew;
        if hh != 0.0 {
            h.push(hh);
        }
    }
    if q != 0.0 || h.is_empty() {
        h.push(q);
    }
}

/// h = e * b, zero components eliminated.
fn scale_expansion_zeroelim(e: &[f64], b: f64, h: &mut Vec<f64>) {
    h.clear();
    let (mut q, hh) = two_product(e[0], b);
    if hh != 0.0 {
        h.push(hh);
    }
    for &enow in &e[1..] {
        let (product1, product0) = two_product(enow, b);
        let (sum, hh) = two_sum(q, product0);
        if hh != 0.0 {
            h.push(hh);
        }
        let (qnew, hh) = fast_two_sum(product1, sum);
        q = qnew;
        if hh != 0.0 {
            h.push(hh);
        }
    }
    if q != 0.0 || h.is_empty() {
        h.push(q);
    }
}

/// In-place compression preserving the exact value (Shewchuk, fig. 15).
fn compress(e: &[f64]) -> Vec<f64> {
    let elen = e.len();
    let mut g = vec![0.0; elen];
    let mut q = e[elen - 1];
    let mut bottom = elen - 1;
    for i in (0..elen - 1).rev() {
        let (qnew, small) = fast_two_sum(q, e[i]);
        if small != 0.0 {
            g[bottom] = qnew;
            bottom -= 1;
            q = small;
        } else {
            q = qnew;
        }
    }
    g[bottom] = q;
    let mut h = Vec::with_capacity(elen - bottom);
    for &gi in &g[bottom + 1..] {
        let (qnew, small) = fast_two_sum(gi, q);
        if small != 0.0 {
            h.push(small);
        }
        q = qnew;
    }
    h.push(q);
    h
}

/// An exact multi-component floating-point value.
///
/// The empty component list represents zero; otherwise components are
/// nonoverlapping and sorted by increasing magnitude.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion(Vec<f64>);

impl Expansion {
    pub fn zero() -> Self {
        Expansion(Vec::new())
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    fn normalized(mut v: Vec<f64>) -> Self {
        if v.len() == 1 && v[0] == 0.0 {
            v.clear();
        } else if v.len() > 8 {
            v = compress(&v);
            if v.len() == 1 && v[0] == 0.0 {
                v.clear();
            }
        }
        Expansion(v)
    }

    /// Sign of the exact value: the sign of the largest-magnitude component.
    pub fn signum(&self) -> i32 {
        match self.0.last() {
            None => 0,
            Some(&c) if c > 0.0 => 1,
            Some(&c) if c < 0.0 => -1,
            _ => 0,
        }
    }

    /// Approximate value (sum of components, largest last).
    pub fn estimate(&self) -> f64 {
        self.0.iter().sum()
    }
}

impl From<f64> for Expansion {
    fn from(x: f64) -> Self {
        if x == 0.0 {
            Expansion::zero()
        } else {
            Expansion(vec![x])
        }
    }
}

impl Add for Expansion {
    type Output = Expansion;
    fn add(self, rhs: Expansion) -> Expansion {
        if self.0.is_empty() {
            return rhs;
        }
        if rhs.0.is_empty() {
            return self;
        }
        let mut h = Vec::with_capacity(self.0.len() + rhs.0.len());
        if rhs.0.len() == 1 {
            grow_expansion_zeroelim(&self.0, rhs.0[0], &mut h);
        } else if self.0.len() == 1 {
            grow_expansion_zeroelim(&rhs.0, self.0[0], &mut h);
        } else {
            fast_expansion_sum_zeroelim(&self.0, &rhs.0, &mut h);
        }
        Expansion::normalized(h)
    }
}

impl Sub for Expansion {
    type Output = Expansion;
    fn sub(self, rhs: Expansion) -> Expansion {
        self + (-rhs)
    }
}

impl Neg for Expansion {
    type Output = Expansion;
    fn neg(mut self) -> Expansion {
        for c in &mut self.0 {
            *c = -*c;
        }
        self
    }
}

impl Mul for Expansion {
    type Output = Expansion;
    fn mul(self, rhs: Expansion) -> Expansion {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Expansion::zero();
        }
        let (small, large) = if self.0.len() <= rhs.0.len() {
            (&self.0, &rhs.0)
        } else {
            (&rhs.0, &self.0)
        };
        let mut acc = Expansion::zero();
        let mut h = Vec::with_capacity(2 * large.len());
        for &b in small {
            scale_expansion_zeroelim(large, b, &mut h);
            acc = acc + Expansion::normalized(std::mem::take(&mut h));
        }
        acc
    }
}
