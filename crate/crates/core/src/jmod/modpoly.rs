use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::quadratic::QuadraticNumber;
use crate::error::{Error, Result};

/// Classical modular polynomial Φ_n(X, Y) with its symmetric coefficient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPolynomial {
    pub level: u32,
    /// c_{ij} for i ≤ j; the entry for (j, i) is the same.
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

const PHI_2: &str = include_str!("../../data/modpoly/phi_2.txt");
const PHI_3: &str = include_str!("../../data/modpoly/phi_3.txt");
const PHI_4: &str = include_str!("../../data/modpoly/phi_4.txt");
const PHI_5: &str = include_str!("../../data/modpoly/phi_5.txt");

impl ModularPolynomial {
    /// Parses "n <level>" followed by lines "i j coeff".
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| Error::ModPolyFormat("empty file".into()))?;
        let level = match head.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", n] => n.parse().map_err(|_| Error::ModPolyFormat(format!("bad level in {head:?}")))?,
            _ => return Err(Error::ModPolyFormat(format!("bad header {head:?}"))),
        };
        let mut coeffs = BTreeMap::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [i, j, c] = parts[..] else {
                return Err(Error::ModPolyFormat(format!("bad line {line:?}")));
            };
            let bad = |_| Error::ModPolyFormat(format!("bad line {line:?}"));
            let (i, j): (u32, u32) = (i.parse().map_err(bad)?, j.parse().map_err(bad)?);
            let c: BigInt = c.parse().map_err(|_| Error::ModPolyFormat(format!("bad coefficient in {line:?}")))?;
            let key = (i.min(j), i.max(j));
            if coeffs.insert(key, c.clone()).is_some_and(|old| old != c) {
                return Err(Error::ModPolyFormat(format!("conflicting entries for {key:?}")));
            }
        }
        let poly = ModularPolynomial { level, coeffs };
        if poly.degree() == 0 {
            return Err(Error::ModPolyFormat("no monomials".into()));
        }
        Ok(poly)
    }

    /// The shipped table for level 2..=5.
    pub fn load(level: u32) -> Result<&'static ModularPolynomial> {
        static CACHE: OnceLock<Vec<ModularPolynomial>> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            [PHI_2, PHI_3, PHI_4, PHI_5]
                .iter()
                .map(|t| ModularPolynomial::parse(t).expect("shipped modular polynomial"))
                .collect()
        });
        all.iter().find(|m| m.level == level).ok_or(Error::UnsupportedLevel(level))
    }

    /// Degree in each variable.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i.min(j), i.max(j))).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &QuadraticNumber, y: &QuadraticNumber) -> QuadraticNumber {
        let n = self.degree() as usize;
        let xp: Vec<QuadraticNumber> = (0..=n).map(|e| x.pow(e as u32)).collect();
        let yp: Vec<QuadraticNumber> = (0..=n).map(|e| y.pow(e as u32)).collect();
        let mut acc = QuadraticNumber::rational(BigRational::from_integer(0.into()));
        for (&(i, j), c) in &self.coeffs {
            let c = QuadraticNumber::rational(BigRational::from_integer(c.clone()));
            let (i, j) = (i as usize, j as usize);
            let mut term = &xp[i] * &yp[j];
            if i != j {
                term = &term + &(&xp[j] * &yp[i]);
            }
            acc = &acc + &(&c * &term);
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let r = self.eval(&QuadraticNumber::rational(x.clone()), &QuadraticNumber::rational(y.clone()));
        r.x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn shipped_tables() {
        for n in 2..=5u32 {
            let m = ModularPolynomial::load(n).unwrap();
            assert_eq!(m.level, n);
            // degree of Φ_n is ψ(n) = n·Π(1 + 1/q)
            let psi = match n {
                2 => 3,
                3 => 4,
                4 => 6,
                5 => 6,
                _ => unreachable!(),
            };
            assert_eq!(m.degree(), psi);
            assert_eq!(m.coeff(psi, 0), BigInt::from(1));
            assert_eq!(m.coeff(0, psi), BigInt::from(1));
        }
        assert_eq!(ModularPolynomial::load(7), Err(Error::UnsupportedLevel(7)));
    }

    #[test]
    fn cm_pair_on_phi2() {
        let m = ModularPolynomial::load(2).unwrap();
        let j = |n: i64| BigRational::from_integer(n.into());
        assert!(m.eval_rational(&j(1728), &j(287496)).is_zero());
        assert!(m.eval_rational(&j(287496), &j(1728)).is_zero());
        // 1 + i and √−2 are endomorphisms of degree 2, while Z[ζ₃] has no element of norm 2
        assert!(m.eval_rational(&j(1728), &j(1728)).is_zero());
        assert!(!m.eval_rational(&j(0), &j(0)).is_zero());
        assert!(m.eval_rational(&j(8000), &j(8000)).is_zero());
    }

    #[test]
    fn parse_errors() {
        assert!(ModularPolynomial::parse("").is_err());
        assert!(ModularPolynomial::parse("m 2\n0 0 1").is_err());
        assert!(ModularPolynomial::parse("n 2\n0 x 1").is_err());
        assert!(ModularPolynomial::parse("n 2\n0 1 1\n1 0 2").is_err());
        let m = ModularPolynomial::parse("n 2\n# comment\n0 1 5\n1 0 5\n").unwrap();
        assert_eq!(m.coeff(1, 0), BigInt::from(5));
    }
}
