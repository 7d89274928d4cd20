//! Word-sized arithmetic over F_p and F_p², Legendre symbols, square roots,
//! polynomial factorization patterns and points on conics.

mod conic;
mod fp;
mod fq2;
mod poly;

pub use conic::{conic_point, normalized_points, TernaryForm};
pub use fp::{check_odd_prime, fp_sqrt, quad_char, smallest_nonresidue, FpElem, PrimeField};
pub use fq2::Fq2Elem;
pub use poly::{factor_pattern, FactorPattern, FpPoly};

/// Primes in `[lo, hi]` in increasing order.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&n| num_prime::nt_funcs::is_prime64(n)).collect()
}
