use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use super::rank::{analyze, RankAnalysis};
use super::weil::WeilPolynomial;
use crate::error::{Error, Result};

/// A class in ℚ*/(ℚ*)², represented by a signed squarefree integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(BigInt);

impl SquareClass {
    /// The class of a nonzero integer.
    pub fn of(n: &BigInt) -> Result<SquareClass> {
        if n.is_zero() {
            return Err(Error::Multiplicity("zero has no square class".into()));
        }
        let s = squarefree_part(&n.magnitude().clone());
        Ok(SquareClass(BigInt::from_biguint(n.sign(), s)))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn negate(&self) -> SquareClass {
        SquareClass(-self.0.clone())
    }

    /// Class of a product: (a·b)/gcd(a,b)².
    pub fn mul(&self, o: &SquareClass) -> SquareClass {
        let g = self.0.gcd(&o.0);
        SquareClass(&self.0 * &o.0 / (&g * &g))
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for SquareClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let n: BigInt = s.parse().map_err(|e| Error::Parse(format!("square class {s:?}: {e}")))?;
        SquareClass::of(&n)
    }
}

impl Serialize for SquareClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for SquareClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Product of the primes dividing n to an odd power.
pub fn squarefree_part(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    if let Some(x) = n.to_u64() {
        return BigUint::from(squarefree_part_u64(x));
    }
    if let Some(x) = n.to_u128() {
        let f = num_prime::nt_funcs::factorize128(x);
        return f.into_iter().filter(|(_, e)| e % 2 == 1).map(|(q, _)| BigUint::from(q)).product();
    }
    let f = num_prime::nt_funcs::factorize(n.clone());
    f.into_iter().filter(|(_, e)| e % 2 == 1).map(|(q, _)| q).product()
}

pub fn squarefree_part_u64(n: u64) -> u64 {
    if n <= 1 {
        return n;
    }
    num_prime::nt_funcs::factorize64(n).into_iter().filter(|(_, e)| e % 2 == 1).map(|(q, _)| q).product()
}

/// Sign (−1)^(ρ−1) from the signature (1, ρ−1) of the Picard lattice.
fn hodge_sign(rho: u32) -> Sign {
    if rho % 2 == 1 { Sign::Plus } else { Sign::Minus }
}

/// Literal Artin-Tate evaluation: divide Φ_q by (T − q) exactly ρ times, evaluate at
/// q, divide by q^{21−ρ} and take the signed square class.
pub fn artin_tate_square_class(phi_q: &WeilPolynomial, rho: u32) -> Result<SquareClass> {
    let q = phi_q.q();
    let bound = analyze(phi_q).bound;
    if bound != rho {
        return Err(Error::Consistency(format!(
            "rank bound {bound} over F_q differs from the multiplicity {rho}"
        )));
    }
    let mut f = phi_q.assembled();
    let lin = IntPoly::linear_root(&q);
    for i in 0..rho {
        f = f.div_exact(&lin).ok_or_else(|| {
            Error::Multiplicity(format!("T = q has multiplicity {i} < {rho}"))
        })?;
    }
    let h = f.eval(&q);
    if h.is_zero() {
        return Err(Error::Multiplicity(format!("T = q has multiplicity > {rho}")));
    }
    // R = h / q^{21−ρ}; the power of q only matters through its parity
    let e = 21i64 - rho as i64;
    let r = if e.rem_euclid(2) == 1 { h * &q } else { h };
    Ok(signed(SquareClass::of(&r)?, rho))
}

/// Applies (−1)^(ρ−1). R itself is positive (a product of |q − α|² over conjugate
/// pairs, times q), but a negative value would be carried through, not hidden.
fn signed(c: SquareClass, rho: u32) -> SquareClass {
    if hodge_sign(rho) == Sign::Minus { c.negate() } else { c }
}

/// Square class of the Artin-Tate discriminant without building Φ over F_{p^k}.
///
/// Write t for the degree-6 part with its cyclotomic factors removed. Over F_q,
/// q = p^k, R ≡ p^k·t(p) for odd k and R ≡ t(p)·t(−p) for even k modulo squares:
/// for each conjugate pair of roots p·e^{±iθ}, (2 − 2cos kθ)/(2 − 2cos θ) (odd k) and
/// (2 − 2cos kθ)/(4 − 4cos²θ) (even k) are squares of polynomials in cos θ, and the
/// product of these over all pairs is rational.
pub fn disc_class_fast(phi: &WeilPolynomial, analysis: &RankAnalysis, k: u32) -> Result<SquareClass> {
    if phi.k != 1 {
        return Err(Error::Consistency("fast route expects the polynomial over F_p".into()));
    }
    let p = BigInt::from(phi.p);
    let t = &analysis.transcendental;
    let tp = t.eval(&p);
    let value = if k % 2 == 1 {
        tp * &p
    } else {
        tp * t.eval(&-&p)
    };
    if value.is_zero() {
        return Err(Error::Multiplicity("transcendental part vanishes at ±p".into()));
    }
    Ok(signed(SquareClass::of(&value)?, analysis.bound))
}
