use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::coeffs::KummerCoeffs;
use super::form::{kummer_form, tetra_form_from_squares, Coeff, QuarticForm};
use crate::error::{Error, Result};
use crate::ffield::FpElem;

/// Outcome of a substitution check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Verified,
    Failed,
    /// The prerequisites (square roots, nonzero parameters) do not hold mod p.
    Inapplicable,
}

impl Check {
    pub fn holds(self) -> bool {
        self == Check::Verified
    }
}

/// Substitutes the linear map attached to a root X of X² + 2aX + 1 into
/// Q_[a,a,c] and compares with the tetrahedroid whose squared parameters are
/// (c+1, c−1, X²(c−1), X²(c−1), c−1, 4X²(X+a)²(c−1)).
///
/// The map as usually displayed lands on Q_[a,c,a]; it is composed here with the
/// swap y ↔ z, which identifies Q_[a,c,a] with Q_[a,a,c].
pub fn verify_kumeq_iso(a: i64, c: i64, p: u32) -> Result<Check> {
    if p == 2 {
        return Err(Error::UnsupportedCharacteristic);
    }
    crate::ffield::check_odd_prime(p as u64)?;
    if a.abs() == 1 || c.abs() == 1 {
        return Err(Error::DegenerateFamily(format!("[{a},{a},{c}] has a unit entry")));
    }
    let disc = FpElem::new(a * a - 1, p);
    let Some(s) = disc.sqrt() else { return Ok(Check::Inapplicable) };
    let fa = FpElem::new(a, p);
    let fc = FpElem::new(c, p);
    let one = FpElem::one(p);
    if s.is_zero() || (fc - one).is_zero() || (fc + one).is_zero() {
        return Ok(Check::Inapplicable);
    }
    let target = kummer_form(&KummerCoeffs::new(a, a, c)).reduce(p);
    for x in [-fa + s, -fa - s] {
        let tetra = kumeq_tetra(fa, fc, x)?;
        let pulled = target.substitute(&kumeq_matrix(x)?);
        if !pulled.is_scalar_multiple_of(&tetra) {
            return Ok(Check::Failed);
        }
    }
    Ok(Check::Verified)
}

fn kumeq_tetra(a: FpElem, c: FpElem, x: FpElem) -> Result<QuarticForm> {
    let one = c.lift(1);
    let x2 = x * x;
    let cm = c - one;
    let xa = x + a;
    let four = c.lift(4);
    tetra_form_from_squares([c + one, cm, x2 * cm, x2 * cm, cm, four * x2 * xa * xa * cm])
}

/// Rows give (x, z, y, w) of Q_[a,a,c] in terms of (t1, t2, t3, t4).
fn kumeq_matrix(x: FpElem) -> Result<[[FpElem; 4]; 4]> {
    let z = x.lift(0);
    let one = x.lift(1);
    let d = (one - x * x).inv()?;
    // u = (t3 − X t4)/(1 − X²), v = (t4 − X t3)/(1 − X²)
    let u = [z, z, d, -x * d];
    let v = [z, z, -x * d, d];
    let neg = |r: [FpElem; 4]| r.map(|e| -e);
    let add = |r: [FpElem; 4], s: [FpElem; 4]| [r[0] + s[0], r[1] + s[1], r[2] + s[2], r[3] + s[3]];
    let t1 = [one, z, z, z];
    let t2 = [z, one, z, z];
    let row_x = add(neg(t2), neg(u));
    let row_y = add(neg(t1), v);
    let row_z = add(t2, neg(u));
    let row_w = add(t1, v);
    // the y <-> z swap: the second coordinate of Q_[a,a,c] receives row_z
    Ok([row_x, row_z, row_y, row_w])
}

/// Checks on random points that (x₂y₃ : x₁y₁ : x₃y₂ : x₀y₀) maps E₁ × E₂ into the
/// tetrahedroid with squared parameters (κ₂−1, 1, κ₂, κ₁−1, −1, κ₁), where
/// Eᵢ: x₁² = x₀² − x₂², x₃² = x₀² − κᵢx₂².
///
/// Only the squares of the parameters enter the quartic, so no square roots are
/// needed and the check is never inapplicable for that reason.
pub fn verify_weber_map(k1: FpElem, k2: FpElem, p: u32) -> Result<Check> {
    if p == 2 {
        return Err(Error::UnsupportedCharacteristic);
    }
    for k in [k1, k2] {
        if k.is_zero() || k.value() == 1 {
            return Err(Error::DegenerateFamily(format!("kappa = {} gives a singular curve", k.value())));
        }
    }
    let one = FpElem::one(p);
    let tetra = tetra_form_from_squares([k2 - one, one, k2, k1 - one, -one, k1])?;
    let e1 = weber_points(k1, p);
    let e2 = weber_points(k2, p);
    if e1.is_empty() || e2.is_empty() {
        return Ok(Check::Inapplicable);
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..e1.len()).flat_map(|i| (0..e2.len()).map(move |j| (i, j))).collect();
    let seed = (p as u64) << 40 ^ (k1.value() as u64) << 20 ^ k2.value() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(64);
    let z = k1.lift(0);
    for (i, j) in pairs {
        let (x, y) = (e1[i], e2[j]);
        let img = [x[2] * y[3], x[1] * y[1], x[3] * y[2], x[0] * y[0]];
        if !tetra.eval_or(&img, z).is_zero() {
            return Ok(Check::Failed);
        }
    }
    Ok(Check::Verified)
}

/// Affine points (1 : x₁ : x₂ : x₃) of x₁² = 1 − x₂², x₃² = 1 − κx₂² over F_p.
fn weber_points(k: FpElem, p: u32) -> Vec<[FpElem; 4]> {
    let one = FpElem::one(p);
    let mut out = Vec::new();
    for t in 0..p {
        let x2 = FpElem::from_u32(t, p);
        let (Some(r1), Some(r3)) = ((one - x2 * x2).sqrt(), (one - k * x2 * x2).sqrt()) else {
            continue;
        };
        for s1 in [r1, -r1] {
            for s3 in [r3, -r3] {
                let pt = [one, s1, x2, s3];
                if !out.contains(&pt) {
                    out.push(pt);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kumeq_examples() {
        assert_eq!(verify_kumeq_iso(2, 17, 11), Ok(Check::Verified));
        assert_eq!(verify_kumeq_iso(2, 17, 7), Ok(Check::Inapplicable));
        assert!(verify_kumeq_iso(1, 17, 11).is_err());
        assert!(verify_kumeq_iso(2, 17, 2).is_err());
    }

    #[test]
    fn kumeq_many_primes() {
        for (a, c) in [(5, 17), (3, 19), (2, 9), (7, 7), (4, -9)] {
            let mut verified = 0;
            for p in crate::ffield::primes_in(3, 80) {
                match verify_kumeq_iso(a, c, p as u32).unwrap() {
                    Check::Verified => verified += 1,
                    Check::Inapplicable => {}
                    Check::Failed => panic!("[{a},{a},{c}] failed at {p}"),
                }
            }
            assert!(verified >= 3);
        }
    }

    #[test]
    fn weber_examples() {
        let p = 10007;
        for (k1, k2) in [(5, 9), (7, 7), (3, 100), (2, 10006)] {
            let r = verify_weber_map(FpElem::new(k1, p), FpElem::new(k2, p), p).unwrap();
            assert_eq!(r, Check::Verified, "({k1},{k2})");
        }
        let p = 101;
        assert_eq!(verify_weber_map(FpElem::new(6, p), FpElem::new(6, p), p), Ok(Check::Verified));
        assert!(verify_weber_map(FpElem::new(0, p), FpElem::new(6, p), p).is_err());
        assert!(verify_weber_map(FpElem::new(6, p), FpElem::new(1, p), p).is_err());
    }

    #[test]
    fn weber_detects_wrong_parameters() {
        // swapping the roles of κ₁ and κ₂ breaks the identity for distinct κ
        let p = 10007;
        let k1 = FpElem::new(5, p);
        let k2 = FpElem::new(9, p);
        let one = FpElem::one(p);
        let wrong = tetra_form_from_squares([k1 - one, one, k1, k2 - one, -one, k2]).unwrap();
        let e1 = weber_points(k1, p);
        let e2 = weber_points(k2, p);
        let bad = e1.iter().take(5).flat_map(|x| e2.iter().take(5).map(move |y| (x, y))).any(|(x, y)| {
            let img = [x[2] * y[3], x[1] * y[1], x[3] * y[2], x[0] * y[0]];
            !wrong.eval_or(&img, FpElem::zero(p)).is_zero()
        });
        assert!(bad);
    }
}
