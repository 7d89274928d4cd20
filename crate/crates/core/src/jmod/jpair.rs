use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::modpoly::ModularPolynomial;
use super::quadratic::{rational_sqrt, QuadraticNumber};
use crate::error::{Error, Result};

/// The j-invariants of the two elliptic curves behind V_[a,a,c], as the roots of
/// X² − trace·X + norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JPair {
    pub a: i64,
    pub c: i64,
    pub trace: BigRational,
    pub norm: BigRational,
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn poly2(terms: &[(i64, u32, u32)], a: &BigRational, c: &BigRational) -> BigRational {
    terms.iter().fold(BigRational::zero(), |acc, &(k, i, j)| acc + r(k) * a.pow(i as i32) * c.pow(j as i32))
}

/// 2·(numerator of the trace), integer coefficients (k, deg a, deg c).
const TRACE_NUM_2: [(i64, u32, u32); 27] = [
    (2048, 10, 2),
    (4096, 10, 1),
    (2048, 10, 0),
    (-1024, 8, 3),
    (-9216, 8, 2),
    (-15360, 8, 1),
    (-7168, 8, 0),
    (64, 6, 4),
    (3136, 6, 3),
    (15552, 6, 2),
    (21952, 6, 1),
    (9472, 6, 0),
    (-144, 4, 4),
    (-3360, 4, 3),
    (-12032, 4, 2),
    (-14560, 4, 1),
    (-5744, 4, 0),
    (108, 2, 4),
    (1404, 2, 3),
    (4020, 2, 2),
    (4212, 2, 1),
    (1520, 2, 0),
    (-27, 0, 4),
    (-162, 0, 3),
    (-360, 0, 2),
    (-350, 0, 1),
    (-125, 0, 0),
];

const NORM_BASE: [(i64, u32, u32); 8] =
    [(16, 4, 2), (48, 4, 0), (-24, 2, 2), (-32, 2, 1), (-72, 2, 0), (9, 0, 2), (30, 0, 1), (25, 0, 0)];

/// Trace and norm of the pair for V_[a,a,c].
///
/// Both are closed forms in a and c. The normalization (an overall 256 on the
/// trace, 256² on the norm) is pinned by the three reference pairs in the tests.
pub fn j_pair(a: i64, c: i64) -> Result<JPair> {
    if a * a == 1 || c * c == 1 {
        return Err(Error::DegenerateFamily(format!("j-invariants need a, c ≠ ±1, got a = {a}, c = {c}")));
    }
    let (ar, cr) = (r(a), r(c));
    let trace_den = r(2) * (r(a) - r(1)) * (r(a) + r(1)) * (r(c) - r(1)).pow(2) * (r(c) + r(1)).pow(2);
    let trace = r(256) * poly2(&TRACE_NUM_2, &ar, &cr) / trace_den;
    let base = poly2(&NORM_BASE, &ar, &cr);
    let norm_den = r(16) * (r(a) - r(1)).pow(2) * (r(a) + r(1)).pow(2) * (r(c) - r(1)).pow(4) * (r(c) + r(1)).pow(2);
    let norm = r(65536) * base.pow(3) / norm_den;
    Ok(JPair { a, c, trace, norm })
}

impl JPair {
    /// D' = 4a² − 2c − 2; the pair generates Q(√D').
    pub fn field_discriminant(&self) -> BigInt {
        BigInt::from(4 * self.a * self.a - 2 * self.c - 2)
    }

    /// trace² − 4·norm.
    pub fn discriminant(&self) -> BigRational {
        &self.trace * &self.trace - r(4) * &self.norm
    }

    /// The two j-invariants as x ± y·√D'. Fails if the discriminant is not D'
    /// times a rational square.
    pub fn roots(&self) -> Result<(QuadraticNumber, QuadraticNumber)> {
        let d = self.field_discriminant();
        let disc = self.discriminant();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let x = &self.trace * &half;
        let y = if disc.is_zero() {
            BigRational::zero()
        } else if d.is_zero() {
            return Err(Error::Consistency("nonzero discriminant with D' = 0".into()));
        } else {
            let ratio = &disc / BigRational::from_integer(d.clone());
            rational_sqrt(&ratio)
                .ok_or_else(|| Error::Consistency(format!("discriminant not in the square class of D' = {d}")))?
                * &half
        };
        let j1 = QuadraticNumber::new(x.clone(), y.clone(), d.clone());
        Ok((j1.clone(), j1.conj()))
    }

    /// Rational roots when D' is a perfect square.
    pub fn rational_roots(&self) -> Option<(BigRational, BigRational)> {
        let s = rational_sqrt(&self.discriminant())?;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let lo = (&self.trace - &s) * &half;
        let hi = (&self.trace + &s) * &half;
        Some((lo, hi))
    }
}

/// The common j-invariant for V_[0,0,c]: (1728c³ + 8640c² + 14400c + 8000)/(c³ − c² − c + 1).
pub fn j_equal_case(c: i64) -> Result<BigRational> {
    let den = c * c * c - c * c - c + 1;
    if den == 0 {
        return Err(Error::DegenerateFamily(format!("j_equal_case needs c ≠ ±1, got {c}")));
    }
    let cc = BigInt::from(c);
    let num = BigInt::from(1728) * cc.pow(3) + BigInt::from(8640) * cc.pow(2) + BigInt::from(14400) * &cc + 8000;
    Ok(BigRational::new(num, BigInt::from(den)))
}

/// True iff Φ_n(j1, j2) = 0 exactly. Levels 2 to 5 are shipped.
pub fn modular_relation_check(j1: &QuadraticNumber, j2: &QuadraticNumber, n: u32) -> Result<bool> {
    let phi = ModularPolynomial::load(n)?;
    Ok(phi.eval(j1, j2).is_zero())
}

/// [`modular_relation_check`] applied to the two roots of a pair.
pub fn pair_is_isogenous(pair: &JPair, n: u32) -> Result<bool> {
    let (j1, j2) = pair.roots()?;
    modular_relation_check(&j1, &j2, n)
}
