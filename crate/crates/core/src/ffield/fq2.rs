use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::fp::{smallest_nonresidue, FpElem};
use crate::error::{Error, Result};

/// Element u + v·α of F_p² = F_p[α]/(α² − d), d the smallest non-residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fq2Elem {
    u: FpElem,
    v: FpElem,
    d: FpElem,
}

impl Fq2Elem {
    /// Builds an element; `d` must be the non-residue shared by all operands.
    pub fn new(u: FpElem, v: FpElem, d: FpElem) -> Self {
        Fq2Elem { u, v, d }
    }

    /// Convenience constructor computing the canonical non-residue for `p`.
    pub fn from_ints(u: i64, v: i64, p: u32) -> Self {
        let d = FpElem::from_u32(smallest_nonresidue(p), p);
        Fq2Elem { u: FpElem::new(u, p), v: FpElem::new(v, p), d }
    }

    pub fn embed(x: FpElem, d: FpElem) -> Self {
        Fq2Elem { u: x, v: FpElem::zero(x.modulus()), d }
    }

    pub fn parts(self) -> (FpElem, FpElem) {
        (self.u, self.v)
    }

    pub fn nonresidue(self) -> FpElem {
        self.d
    }

    pub fn modulus(self) -> u32 {
        self.u.modulus()
    }

    pub fn is_zero(self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn one(d: FpElem) -> Self {
        Fq2Elem::embed(FpElem::one(d.modulus()), d)
    }

    /// Norm to F_p: u² − d·v².
    pub fn norm(self) -> FpElem {
        self.u * self.u - self.d * self.v * self.v
    }

    pub fn conj(self) -> Self {
        Fq2Elem { u: self.u, v: -self.v, d: self.d }
    }

    pub fn pow(self, e: &num_bigint::BigUint) -> Self {
        let mut acc = Fq2Elem::one(self.d);
        for i in (0..e.bits()).rev() {
            acc = acc * acc;
            if e.bit(i) {
                acc = acc * self;
            }
        }
        acc
    }

    /// u^((p²−1)/2) read as ±1, or 0 for zero.
    pub fn quad_char(self) -> Result<i8> {
        let p = self.modulus();
        if p == 2 {
            return Err(Error::UnsupportedCharacteristic);
        }
        if self.is_zero() {
            return Ok(0);
        }
        let q = num_bigint::BigUint::from(p) * p;
        let r = self.pow(&((q - 1u32) / 2u32));
        let one = Fq2Elem::one(self.d);
        Ok(if r == one { 1 } else { -1 })
    }

    /// Same character via the norm map, which is what the counting loops use.
    pub fn quad_char_by_norm(self) -> Result<i8> {
        self.norm().quad_char()
    }
}

impl fmt::Debug for Fq2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·α (α² = {}, mod {})", self.u, self.v, self.d, self.modulus())
    }
}

impl Add for Fq2Elem {
    type Output = Fq2Elem;
    fn add(self, r: Fq2Elem) -> Fq2Elem {
        Fq2Elem { u: self.u + r.u, v: self.v + r.v, d: self.d }
    }
}

impl Sub for Fq2Elem {
    type Output = Fq2Elem;
    fn sub(self, r: Fq2Elem) -> Fq2Elem {
        Fq2Elem { u: self.u - r.u, v: self.v - r.v, d: self.d }
    }
}

impl Neg for Fq2Elem {
    type Output = Fq2Elem;
    fn neg(self) -> Fq2Elem {
        Fq2Elem { u: -self.u, v: -self.v, d: self.d }
    }
}

impl Mul for Fq2Elem {
    type Output = Fq2Elem;
    fn mul(self, r: Fq2Elem) -> Fq2Elem {
        Fq2Elem {
            u: self.u * r.u + self.d * self.v * r.v,
            v: self.u * r.v + self.v * r.u,
            d: self.d,
        }
    }
}
