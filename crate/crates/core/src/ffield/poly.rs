use std::fmt;

use super::fp::FpElem;
use crate::error::{Error, Result};

/// Dense univariate polynomial over F_p, coefficients in ascending order.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<u32>,
    p: u32,
}

/// Irreducible factor degrees with multiplicities, sorted ascending.
pub type FactorPattern = Vec<(usize, usize)>;

#[inline]
fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    (a as u64 * b as u64 % p as u64) as u32
}

fn powmod_u32(mut b: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    powmod_u32(a, p as u64 - 2, p)
}

impl FpPoly {
    /// Builds from signed integer coefficients (ascending), reducing mod p.
    pub fn from_ints(coeffs: &[i64], p: u32) -> Self {
        let c = coeffs.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect();
        Self::from_raw(c, p)
    }

    pub fn from_elems(coeffs: &[FpElem], p: u32) -> Self {
        Self::from_raw(coeffs.iter().map(|x| x.value()).collect(), p)
    }

    /// Coefficients must already be reduced.
    pub fn from_raw(mut coeffs: Vec<u32>, p: u32) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs, p }
    }

    pub fn zero(p: u32) -> Self {
        FpPoly { coeffs: Vec::new(), p }
    }

    pub fn one(p: u32) -> Self {
        FpPoly { coeffs: vec![1], p }
    }

    /// The monomial x.
    pub fn x(p: u32) -> Self {
        FpPoly { coeffs: vec![0, 1], p }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, t: u32) -> u32 {
        let p = self.p as u64;
        let t = t as u64;
        self.coeffs.iter().rev().fold(0u64, |acc, &c| (acc * t + c as u64) % p) as u32
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let s = self.coeff(i) + o.coeff(i);
                if s >= self.p { s - self.p } else { s }
            })
            .collect();
        FpPoly::from_raw(c, self.p)
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FpPoly {
        let c = self.coeffs.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect();
        FpPoly::from_raw(c, self.p)
    }

    pub fn scale(&self, s: u32) -> FpPoly {
        let c = self.coeffs.iter().map(|&x| mulmod(x, s, self.p)).collect();
        FpPoly::from_raw(c, self.p)
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u64;
        let mut c = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a as u64 * b as u64) % p;
            }
        }
        FpPoly::from_raw(c.into_iter().map(|x| x as u32).collect(), self.p)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(invmod(self.leading(), self.p))
    }

    pub fn derivative(&self) -> FpPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &x)| mulmod(x, (i as u64 % self.p as u64) as u32, self.p))
            .collect();
        FpPoly::from_raw(c, self.p)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, d: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero(self.p))?;
        let p = self.p;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((FpPoly::zero(p), self.clone()));
        }
        let inv = invmod(d.leading(), p);
        let mut q = vec![0u32; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = mulmod(r[i + dd], inv, p);
            q[i] = c;
            if c != 0 {
                for (j, &dj) in d.coeffs.iter().enumerate() {
                    let t = mulmod(c, dj, p);
                    r[i + j] = if r[i + j] >= t { r[i + j] - t } else { r[i + j] + p - t };
                }
            }
        }
        r.truncate(dd);
        Ok((FpPoly::from_raw(q, p), FpPoly::from_raw(r, p)))
    }

    pub fn rem(&self, d: &FpPoly) -> Result<FpPoly> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    fn exact_div(&self, d: &FpPoly) -> FpPoly {
        let (q, r) = self.divrem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// self^e mod m.
    pub fn powmod(&self, e: &num_bigint::BigUint, m: &FpPoly) -> Result<FpPoly> {
        let base = self.rem(m)?;
        let mut acc = FpPoly::one(self.p).rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Full factorization into monic irreducibles with multiplicities, sorted by
    /// (degree, coefficients). The leading coefficient is dropped.
    pub fn factor(&self) -> Result<Vec<(FpPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        for (g, m) in squarefree_decomposition(&self.monic()) {
            for (d, part) in distinct_degree(&g)? {
                for h in equal_degree(&part, d)? {
                    out.push((h, m));
                }
            }
        }
        out.sort_by(|a, b| (a.0.degree(), &a.0.coeffs, a.1).cmp(&(b.0.degree(), &b.0.coeffs, b.1)));
        Ok(out)
    }
}

/// Yun-style squarefree decomposition with the characteristic-p correction.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        // f is a p-th power
        let root = pth_root(f);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let root = pth_root(&c);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as usize));
        }
    }
    out
}

fn pth_root(f: &FpPoly) -> FpPoly {
    // Over F_p the Frobenius fixes coefficients, so the p-th root just subsamples.
    let p = f.p as usize;
    let c = f.coeffs.iter().step_by(p).copied().collect();
    FpPoly::from_raw(c, f.p)
}

/// Splits a monic squarefree polynomial into products of equal-degree irreducibles.
fn distinct_degree(f: &FpPoly) -> Result<Vec<(usize, FpPoly)>> {
    let p = f.p;
    let x = FpPoly::x(p);
    let pe = num_bigint::BigUint::from(p);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g)?;
    let mut d = 1;
    while let Some(deg) = g.degree() {
        if deg < 2 * d {
            if deg > 0 {
                out.push((deg, g));
            }
            break;
        }
        h = h.powmod(&pe, &g)?;
        let gd = g.gcd(&h.sub(&x));
        if gd.degree().unwrap_or(0) > 0 {
            g = g.exact_div(&gd);
            h = h.rem(&g)?;
            out.push((d, gd));
        }
        d += 1;
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting with a deterministic sequence of trial polynomials.
fn equal_degree(f: &FpPoly, d: usize) -> Result<Vec<FpPoly>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let p = f.p;
    let q = num_bigint::BigUint::from(p).pow(d as u32);
    let e = (q - 1u32) / 2u32;
    let mut seed = 0u64;
    loop {
        seed += 1;
        let a = trial_poly(seed, n, p);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = f.gcd(&a);
        let split = if g.degree().unwrap_or(0) > 0 && g.degree() != f.degree() {
            Some(g)
        } else {
            let b = a.powmod(&e, f)?.sub(&FpPoly::one(p));
            let g = f.gcd(&b);
            match g.degree() {
                Some(k) if k > 0 && k < n => Some(g),
                _ => None,
            }
        };
        if let Some(g) = split {
            let h = f.exact_div(&g);
            let mut out = equal_degree(&g, d)?;
            out.extend(equal_degree(&h, d)?);
            return Ok(out);
        }
        if seed > 100_000 {
            return Err(Error::Consistency("equal-degree splitting did not terminate".into()));
        }
    }
}

fn trial_poly(seed: u64, n: usize, p: u32) -> FpPoly {
    // Digits of seed in base p give the coefficients, plus a leading x^k.
    let mut s = seed;
    let mut c = Vec::new();
    while s > 0 && c.len() < n {
        c.push((s % p as u64) as u32);
        s /= p as u64;
    }
    c.push(1);
    FpPoly::from_raw(c, p)
}

/// Degrees and multiplicities of the irreducible factors of f.
pub fn factor_pattern(f: &FpPoly) -> Result<FactorPattern> {
    let mut pat: FactorPattern =
        f.factor()?.into_iter().map(|(g, m)| (g.degree().unwrap(), m)).collect();
    pat.sort();
    Ok(pat)
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{i}"),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t2_plus_1_patterns() {
        let f5 = FpPoly::from_ints(&[1, 0, 1], 5);
        assert_eq!(factor_pattern(&f5).unwrap(), vec![(1, 1), (1, 1)]);
        let f7 = FpPoly::from_ints(&[1, 0, 1], 7);
        assert_eq!(factor_pattern(&f7).unwrap(), vec![(2, 1)]);
        let lin = FpPoly::from_ints(&[-1, 1], 13);
        assert_eq!(factor_pattern(&lin).unwrap(), vec![(1, 1)]);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(factor_pattern(&FpPoly::zero(5)), Err(Error::ZeroPolynomial));
        assert_eq!(factor_pattern(&FpPoly::one(5)).unwrap(), vec![]);
    }

    #[test]
    fn repeated_and_pth_power_factors() {
        // (t-1)^2 (t^2+1) over F_7
        let a = FpPoly::from_ints(&[-1, 1], 7);
        let b = FpPoly::from_ints(&[1, 0, 1], 7);
        let f = a.mul(&a).mul(&b);
        assert_eq!(factor_pattern(&f).unwrap(), vec![(1, 2), (2, 1)]);
        // (t+2)^5 over F_5 has zero derivative
        let c = FpPoly::from_ints(&[2, 1], 5);
        let mut g = FpPoly::one(5);
        for _ in 0..5 {
            g = g.mul(&c);
        }
        assert_eq!(factor_pattern(&g).unwrap(), vec![(1, 5)]);
        // (t^2+1)^3 (t+1)^3 over F_3
        let q = FpPoly::from_ints(&[1, 0, 1], 3);
        let l = FpPoly::from_ints(&[1, 1], 3);
        let ql = q.mul(&l);
        let h = ql.mul(&ql).mul(&ql).mul(&l);
        assert_eq!(factor_pattern(&h).unwrap(), vec![(1, 4), (2, 3)]);
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducible quadratics and cubics over F_5
        let p = 5u32;
        let mut quad = 0;
        for a in 0..p {
            for b in 0..p {
                let f = FpPoly::from_raw(vec![b, a, 1], p);
                if factor_pattern(&f).unwrap() == vec![(2, 1)] {
                    quad += 1;
                }
            }
        }
        assert_eq!(quad, (p * p - p) / 2);
        let mut cubic = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let f = FpPoly::from_raw(vec![c, b, a, 1], p);
                    if factor_pattern(&f).unwrap() == vec![(3, 1)] {
                        cubic += 1;
                    }
                }
            }
        }
        assert_eq!(cubic, (p * p * p - p) / 3);
    }

    #[test]
    fn divrem_roundtrip() {
        let f = FpPoly::from_ints(&[3, 1, 4, 1, 5, 9, 2, 6], 11);
        let d = FpPoly::from_ints(&[2, 7, 1, 8], 11);
        let (q, r) = f.divrem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree().unwrap() < 3);
    }
}
