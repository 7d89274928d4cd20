use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::intpoly::IntPoly;
use super::weil::WeilPolynomial;

/// Orders n with φ(n) ≤ 6, the only cyclotomic factors a sextic can have.
pub const CYCLOTOMIC_ORDERS: [u32; 13] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18];

/// The n-th cyclotomic polynomial, by dividing T^n − 1 by Φ_d for proper divisors d.
pub fn cyclotomic(n: u32) -> IntPoly {
    let mut f = IntPoly::binomial(n as usize, &BigInt::one());
    for d in 1..n {
        if n % d == 0 {
            f = f.div_exact(&cyclotomic(d)).expect("cyclotomic divisibility");
        }
    }
    f
}

/// Ψ_n(T) = q^{φ(n)}·Φ_n(T/q): monic, roots q·ζ for primitive n-th roots ζ.
pub fn scaled_cyclotomic(n: u32, q: &BigInt) -> IntPoly {
    let phi = cyclotomic(n);
    let d = phi.degree().unwrap();
    IntPoly::new((0..=d).map(|i| phi.coeff(i) * q.pow((d - i) as u32)).collect())
}

/// Removes all factors Ψ_n with repeated exact division. Returns the remaining
/// factor and the multiplicities found.
pub fn strip_cyclotomic(f: &IntPoly, q: &BigInt) -> (IntPoly, Vec<(u32, u32)>) {
    let mut g = f.clone();
    let mut found = Vec::new();
    for n in CYCLOTOMIC_ORDERS {
        let psi = scaled_cyclotomic(n, q);
        let mut m = 0;
        while g.degree().unwrap_or(0) >= psi.degree().unwrap() {
            match g.div_exact(&psi) {
                Some(h) => {
                    g = h;
                    m += 1;
                }
                None => break,
            }
        }
        if m > 0 {
            found.push((n, m));
        }
    }
    (g, found)
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// Cyclotomic analysis of one Frobenius polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankAnalysis {
    /// 16 plus the number of roots of the degree-6 part of the form q·ζ.
    pub bound: u32,
    /// (n, multiplicity) for each Ψ_n dividing the degree-6 part.
    pub cyclotomic: Vec<(u32, u32)>,
    /// What remains after removing the cyclotomic factors; degree 22 − bound.
    pub transcendental: IntPoly,
    /// lcm of cyclotomic orders and node orbit lengths: the extension over which
    /// every class of the bound is defined.
    pub ext_degree: u32,
}

pub fn analyze(phi: &WeilPolynomial) -> RankAnalysis {
    let q = phi.q();
    let (rest, cyc) = strip_cyclotomic(&phi.transcendental_part, &q);
    let bound = 16 + cyc.iter().map(|&(n, m)| euler_phi(n) * m).sum::<u32>();
    let ext = cyc.iter().map(|&(n, _)| n).chain(phi.node_part.iter().copied()).fold(1u32, |a, b| a.lcm(&b));
    RankAnalysis { bound, cyclotomic: cyc, transcendental: rest, ext_degree: ext }
}

/// Number of Frobenius eigenvalues of the form q·ζ.
pub fn rank_bound(phi: &WeilPolynomial) -> u32 {
    analyze(phi).bound
}

#[cfg(test)]
mod tests {
    use super::super::weil::{assemble_phi, exterior_square};
    use super::*;
    use crate::genus2::H1CharPoly;

    fn lin_pow(r: i64, e: u32) -> IntPoly {
        IntPoly::linear_root(&BigInt::from(r)).pow(e)
    }

    #[test]
    fn cyclotomic_table() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        for n in CYCLOTOMIC_ORDERS {
            assert_eq!(cyclotomic(n).degree().unwrap() as u32, euler_phi(n));
            assert!(euler_phi(n) <= 6);
        }
        // every n with φ(n) ≤ 6 is listed
        let all: Vec<u32> = (1..200).filter(|&n| euler_phi(n) <= 6).collect();
        assert_eq!(all, CYCLOTOMIC_ORDERS.to_vec());
    }

    #[test]
    fn bound_examples() {
        let p = 13i64;
        let phi = assemble_phi(&lin_pow(p, 2).mul(&lin_pow(-p, 4)), &[1; 16], 13).unwrap();
        assert_eq!(rank_bound(&phi), 22);
        // (T−p)(T+p)·q(T) with q = T⁴ + (2p² − 1)T² + p⁴ irreducible and not cyclotomic
        let quartic = IntPoly::from_i64(&[p * p * p * p, 0, 2 * p * p - 1, 0, 1]);
        let six = lin_pow(p, 1).mul(&lin_pow(-p, 1)).mul(&quartic);
        let phi = assemble_phi(&six, &[1; 16], 13).unwrap();
        let a = analyze(&phi);
        assert_eq!(a.bound, 18);
        assert_eq!(a.cyclotomic, vec![(1, 1), (2, 1)]);
        assert_eq!(a.ext_degree, 2);
        let h = H1CharPoly { e1: 0, e2: 0, p: 13 };
        let phi = assemble_phi(&exterior_square(&h).unwrap(), &[1; 16], 13).unwrap();
        assert_eq!(rank_bound(&phi), 22);
    }
}
