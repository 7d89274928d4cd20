use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Checks that `p` is an odd prime that fits the word-sized arithmetic used here.
pub fn check_odd_prime(p: u64) -> Result<u32> {
    if p == 2 {
        return Err(Error::UnsupportedCharacteristic);
    }
    if p < 3 || p > u32::MAX as u64 || !num_prime::nt_funcs::is_prime64(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    Ok(p as u32)
}

/// Residue class modulo an odd prime. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElem {
    value: u32,
    p: u32,
}

impl FpElem {
    pub fn new(value: i64, p: u32) -> Self {
        let v = value.rem_euclid(p as i64) as u32;
        FpElem { value: v, p }
    }

    #[inline]
    pub fn from_u32(value: u32, p: u32) -> Self {
        debug_assert!(value < p);
        FpElem { value, p }
    }

    pub fn zero(p: u32) -> Self {
        FpElem { value: 0, p }
    }

    pub fn one(p: u32) -> Self {
        FpElem { value: 1 % p, p }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = FpElem::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        Ok(self.pow(self.p as u64 - 2))
    }

    /// Legendre symbol by Euler's criterion.
    pub fn quad_char(self) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::UnsupportedCharacteristic);
        }
        if self.value == 0 {
            return Ok(0);
        }
        let r = self.pow((self.p as u64 - 1) / 2).value;
        Ok(if r == 1 { 1 } else { -1 })
    }

    /// Square root with the smaller of the two representatives, by Tonelli-Shanks.
    pub fn sqrt(self) -> Option<Self> {
        let p = self.p;
        if self.value == 0 {
            return Some(self);
        }
        if self.quad_char().ok()? != 1 {
            return None;
        }
        let r = if p % 4 == 3 {
            self.pow((p as u64 + 1) / 4)
        } else {
            let mut q = (p - 1) as u64;
            let mut s = 0u32;
            while q % 2 == 0 {
                q /= 2;
                s += 1;
            }
            let z = (2..p)
                .map(|z| FpElem::from_u32(z, p))
                .find(|z| z.quad_char() == Ok(-1))
                .expect("odd prime has a non-residue");
            let mut m = s;
            let mut c = z.pow(q);
            let mut t = self.pow(q);
            let mut r = self.pow(q.div_ceil(2));
            while t.value != 1 {
                let mut i = 0;
                let mut t2 = t;
                while t2.value != 1 {
                    t2 *= t2;
                    i += 1;
                }
                let b = c.pow(1u64 << (m - i - 1));
                m = i;
                c = b * b;
                t *= c;
                r *= b;
            }
            r
        };
        let other = -r;
        Some(if other.value < r.value { other } else { r })
    }
}

pub fn quad_char(u: FpElem) -> Result<i8> {
    u.quad_char()
}

pub fn fp_sqrt(u: FpElem) -> Option<FpElem> {
    u.sqrt()
}

impl fmt::Debug for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpElem {
    type Output = FpElem;
    #[inline]
    fn add(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.value + rhs.value;
        FpElem { value: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
}

impl Sub for FpElem {
    type Output = FpElem;
    #[inline]
    fn sub(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.p, rhs.p);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.p - rhs.value
        };
        FpElem { value: v, p: self.p }
    }
}

impl Mul for FpElem {
    type Output = FpElem;
    #[inline]
    fn mul(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.p, rhs.p);
        let v = (self.value as u64 * rhs.value as u64 % self.p as u64) as u32;
        FpElem { value: v, p: self.p }
    }
}

impl Neg for FpElem {
    type Output = FpElem;
    fn neg(self) -> FpElem {
        FpElem { value: if self.value == 0 { 0 } else { self.p - self.value }, p: self.p }
    }
}

impl AddAssign for FpElem {
    fn add_assign(&mut self, rhs: FpElem) {
        *self = *self + rhs;
    }
}

impl SubAssign for FpElem {
    fn sub_assign(&mut self, rhs: FpElem) {
        *self = *self - rhs;
    }
}

impl MulAssign for FpElem {
    fn mul_assign(&mut self, rhs: FpElem) {
        *self = *self * rhs;
    }
}

/// Precomputed data for one prime: a Legendre table and the smallest non-residue.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u32,
    chi: Vec<i8>,
    nonresidue: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        let p = check_odd_prime(p)?;
        let mut chi = vec![-1i8; p as usize];
        chi[0] = 0;
        for x in 1..=(p as u64 - 1) / 2 {
            chi[(x * x % p as u64) as usize] = 1;
        }
        let nonresidue = (2..p).find(|&x| chi[x as usize] == -1).expect("odd prime");
        Ok(PrimeField { p, chi, nonresidue })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn chi(&self, x: u32) -> i8 {
        self.chi[x as usize]
    }

    pub fn chi_table(&self) -> &[i8] {
        &self.chi
    }

    pub fn nonresidue(&self) -> u32 {
        self.nonresidue
    }

    pub fn elem(&self, v: i64) -> FpElem {
        FpElem::new(v, self.p)
    }
}

/// Smallest quadratic non-residue mod p.
pub fn smallest_nonresidue(p: u32) -> u32 {
    (2..p)
        .find(|&x| FpElem::from_u32(x, p).quad_char() == Ok(-1))
        .expect("odd prime has a non-residue")
}
