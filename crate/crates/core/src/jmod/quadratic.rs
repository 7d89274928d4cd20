use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// x + y·√d with exact rational x, y and a fixed integer d (not necessarily
/// squarefree; only the relation (√d)² = d is used).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticNumber {
    pub x: BigRational,
    pub y: BigRational,
    pub d: BigInt,
}

impl QuadraticNumber {
    pub fn new(x: BigRational, y: BigRational, d: BigInt) -> Self {
        QuadraticNumber { x, y, d }
    }

    pub fn rational(x: BigRational) -> Self {
        QuadraticNumber { x, y: BigRational::zero(), d: BigInt::one() }
    }

    pub fn from_int(n: i64, d: &BigInt) -> Self {
        QuadraticNumber { x: BigRational::from_integer(n.into()), y: BigRational::zero(), d: d.clone() }
    }

    pub fn conj(&self) -> Self {
        QuadraticNumber { x: self.x.clone(), y: -self.y.clone(), d: self.d.clone() }
    }

    /// x² − d·y².
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - BigRational::from_integer(self.d.clone()) * &self.y * &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadraticNumber::from_int(1, &self.d);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn same_field(&self, o: &Self) -> BigInt {
        // rationals (y = 0) mix with anything
        if self.y.is_zero() {
            o.d.clone()
        } else {
            assert!(o.y.is_zero() || o.d == self.d, "mixed quadratic fields");
            self.d.clone()
        }
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, o: &QuadraticNumber) -> QuadraticNumber {
        let d = self.same_field(o);
        QuadraticNumber { x: &self.x + &o.x, y: &self.y + &o.y, d }
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, o: &QuadraticNumber) -> QuadraticNumber {
        let d = self.same_field(o);
        QuadraticNumber { x: &self.x - &o.x, y: &self.y - &o.y, d }
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, o: &QuadraticNumber) -> QuadraticNumber {
        let d = self.same_field(o);
        let dr = BigRational::from_integer(d.clone());
        QuadraticNumber {
            x: &self.x * &o.x + dr * &self.y * &o.y,
            y: &self.x * &o.y + &self.y * &o.x,
            d,
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber { x: -self.x.clone(), y: -self.y.clone(), d: self.d.clone() }
    }
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a nonnegative rational, if it is a square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(BigRational::new(n, d))
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    int_sqrt_exact(n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic() {
        let d = BigInt::from(-5);
        let a = QuadraticNumber::new(q(1, 2), q(3, 1), d.clone());
        let b = a.conj();
        // (x + y√d)(x − y√d) = norm
        let p = &a * &b;
        assert!(p.y.is_zero());
        assert_eq!(p.x, a.norm());
        assert_eq!(a.norm(), q(1, 4) + q(45, 1));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(rational_sqrt(&q(2, 1)), None);
        assert_eq!(rational_sqrt(&q(-4, 1)), None);
        assert!(is_perfect_square(&BigInt::from(64)));
    }
}
