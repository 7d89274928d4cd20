use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients, ascending order,
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn one() -> Self {
        IntPoly { c: vec![BigInt::one()] }
    }

    /// T − r.
    pub fn linear_root(r: &BigInt) -> Self {
        IntPoly::new(vec![-r.clone(), BigInt::one()])
    }

    /// T^m − r.
    pub fn binomial(m: usize, r: &BigInt) -> Self {
        let mut c = vec![BigInt::zero(); m + 1];
        c[0] = -r.clone();
        c[m] = BigInt::one();
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_one())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::default();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.c.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Division by a monic polynomial: (quotient, remainder).
    pub fn divrem_monic(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !d.is_monic() {
            return Err(Error::Consistency("divisor must be monic".into()));
        }
        let dd = d.degree().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((IntPoly::default(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let lead = std::mem::take(&mut r[i + dd]);
            if !lead.is_zero() {
                for (j, dj) in d.c[..dd].iter().enumerate() {
                    r[i + j] -= &lead * dj;
                }
            }
            q[i] = lead;
        }
        r.truncate(dd);
        Ok((IntPoly::new(q), IntPoly::new(r)))
    }

    /// Quotient when `d` divides exactly, otherwise `None`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.divrem_monic(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Power sums s_1..s_n of the roots of a monic polynomial (Newton identities).
    pub fn power_sums(&self, n: usize) -> Result<Vec<BigInt>> {
        if !self.is_monic() {
            return Err(Error::Consistency("power sums need a monic polynomial".into()));
        }
        let d = self.degree().unwrap();
        // elementary symmetric functions: P = Σ (−1)^k e_k T^{d−k}
        let e: Vec<BigInt> = (0..=d)
            .map(|k| if k % 2 == 0 { self.coeff(d - k) } else { -self.coeff(d - k) })
            .collect();
        let mut s = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..k.min(d + 1) {
                let t = &e[i] * &s[k - i];
                if i % 2 == 1 { acc += t } else { acc -= t }
            }
            if k <= d {
                let t = BigInt::from(k) * &e[k];
                if k % 2 == 1 { acc += t } else { acc -= t }
            }
            s[k] = acc;
        }
        s.remove(0);
        Ok(s)
    }

    /// The monic polynomial of degree n with the given power sums s_1..s_n.
    pub fn from_power_sums(s: &[BigInt]) -> Result<IntPoly> {
        let n = s.len();
        let mut e = vec![BigInt::zero(); n + 1];
        e[0] = BigInt::one();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let t = &e[k - i] * &s[i - 1];
                if i % 2 == 1 { acc += t } else { acc -= t }
            }
            let kk = BigInt::from(k);
            if !(&acc % &kk).is_zero() {
                return Err(Error::Consistency(format!("Newton identity not integral at k={k}")));
            }
            e[k] = acc / kk;
        }
        let c = (0..=n)
            .map(|i| {
                let k = n - i;
                if k % 2 == 0 { e[k].clone() } else { -e[k].clone() }
            })
            .collect();
        Ok(IntPoly::new(c))
    }

    /// Monic polynomial whose roots are the k-th powers of the roots of `self`.
    pub fn power_roots(&self, k: u32) -> Result<IntPoly> {
        if k == 0 {
            return Err(Error::ZeroExtension);
        }
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Ok(self.clone());
        }
        let s = self.power_sums(d * k as usize)?;
        let sk: Vec<BigInt> = (1..=d).map(|j| s[j * k as usize - 1].clone()).collect();
        IntPoly::from_power_sums(&sk)
    }

    /// Largest absolute coefficient, for diagnostics.
    pub fn height(&self) -> BigInt {
        self.c.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.c.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        write!(f, "IntPoly[{}]", parts.join(", "))
    }
}
