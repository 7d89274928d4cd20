use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::intpoly::IntPoly;
use super::rank::strip_cyclotomic;
use crate::error::{Error, Result};
use crate::genus2::H1CharPoly;

/// Frobenius polynomial on H² of the resolved Kummer surface over F_q, q = p^k,
/// kept factored: a degree-6 part from Λ²H¹ and one factor T^m − q^m per node orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilPolynomial {
    pub p: u32,
    /// Extension degree k; the polynomial lives over F_{p^k}.
    pub k: u32,
    /// Monic, degree 6, roots of absolute value q.
    pub transcendental_part: IntPoly,
    /// Orbit lengths of Frobenius on the sixteen nodes, sorted.
    pub node_part: Vec<u32>,
}

impl WeilPolynomial {
    pub fn q(&self) -> BigInt {
        BigInt::from(self.p).pow(self.k)
    }

    pub fn node_factor(&self) -> IntPoly {
        let q = self.q();
        self.node_part
            .iter()
            .fold(IntPoly::one(), |acc, &m| acc.mul(&IntPoly::binomial(m as usize, &q.pow(m))))
    }

    /// The full degree-22 polynomial.
    pub fn assembled(&self) -> IntPoly {
        self.transcendental_part.mul(&self.node_factor())
    }

    /// Trace of Frobenius on H² (sum of all 22 roots).
    pub fn trace(&self) -> BigInt {
        let nodes: u32 = self.node_part.iter().filter(|&&m| m == 1).count() as u32;
        -self.transcendental_part.coeff(5) + self.q() * nodes
    }

    /// Trace of the degree-6 part alone.
    pub fn t6(&self) -> BigInt {
        -self.transcendental_part.coeff(5)
    }

    /// Multiplicity of the root T = q.
    pub fn multiplicity_of_q(&self) -> u32 {
        let mut g = self.transcendental_part.clone();
        let lin = IntPoly::linear_root(&self.q());
        let mut m = 0;
        while let Some(h) = g.div_exact(&lin) {
            g = h;
            m += 1;
        }
        m + self.node_part.len() as u32
    }
}

/// Λ² of the H¹ polynomial: power sums s_k(Λ²) = (s_k² − s_{2k})/2.
pub fn exterior_square(h: &H1CharPoly) -> Result<IntPoly> {
    let p4 = IntPoly::from_i64(&h.coeffs());
    let s = p4.power_sums(12)?;
    let mut t = Vec::with_capacity(6);
    for k in 1..=6 {
        let num = &s[k - 1] * &s[k - 1] - &s[2 * k - 1];
        if num.is_odd() {
            return Err(Error::Consistency("odd numerator in exterior square".into()));
        }
        t.push(num / 2);
    }
    IntPoly::from_power_sums(&t)
}

pub fn assemble_phi(p6: &IntPoly, partition: &[u32], p: u32) -> Result<WeilPolynomial> {
    if p6.degree() != Some(6) || !p6.is_monic() {
        return Err(Error::Consistency("transcendental part must be monic of degree 6".into()));
    }
    if partition.iter().sum::<u32>() != 16 || partition.contains(&0) {
        return Err(Error::Consistency(format!("{partition:?} is not a partition of 16")));
    }
    let mut node_part = partition.to_vec();
    node_part.sort();
    Ok(WeilPolynomial { p, k: 1, transcendental_part: p6.clone(), node_part })
}

/// Functional equation T²²Φ(q²/T) = ±q²²Φ(T) and |root| = q for every root.
pub fn weil_check(phi: &WeilPolynomial) -> bool {
    functional_equation_sign(&phi.assembled(), &phi.q()).is_some() && roots_on_circle(phi)
}

/// The sign ε of T^n·Φ(q²/T) = ε·q^n·Φ(T), if the equation holds.
pub fn functional_equation_sign(f: &IntPoly, q: &BigInt) -> Option<i32> {
    let n = f.degree()?;
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return None;
    }
    // coefficient of T^j on the left is c_{n−j}·q^{2(n−j)}, on the right ε·q^n·c_j
    let qn = q.pow(n as u32);
    let lead = f.coeff(n) * q.pow(2 * n as u32);
    let eps = if lead == &qn * &c0 {
        1
    } else if lead == -(&qn * &c0) {
        -1
    } else {
        return None;
    };
    for j in 0..=n {
        let lhs = f.coeff(n - j) * q.pow(2 * (n - j) as u32);
        let rhs = &qn * f.coeff(j) * eps;
        if lhs != rhs {
            return None;
        }
    }
    Some(eps)
}

fn roots_on_circle(phi: &WeilPolynomial) -> bool {
    // Node roots are q·ζ by construction; cyclotomic factors of the degree-6 part
    // likewise. Only the remaining factor needs a numerical check.
    let (rest, _) = strip_cyclotomic(&phi.transcendental_part, &phi.q());
    let Some(d) = rest.degree() else { return false };
    if d == 0 {
        return true;
    }
    // g(S) = q^{−d}·rest(qS) has its roots on the unit circle
    let q = phi.q();
    let coeffs: Vec<f64> = (0..=d)
        .map(|i| {
            let num = rest.coeff(i);
            let den = q.pow((d - i) as u32);
            ratio_to_f64(&num, &den)
        })
        .collect();
    match polynomial_roots(&coeffs) {
        Some(roots) => roots.iter().all(|r| (r.norm() - 1.0).abs() < 1e-6),
        None => false,
    }
}

fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    // Scale down both to keep the conversion in range.
    let shift = den.bits().saturating_sub(60).min(num.bits().saturating_sub(60));
    let n = (num >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (den >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Durand-Kerner iteration on a polynomial with leading coefficient 1 in f64.
pub fn polynomial_roots(c: &[f64]) -> Option<Vec<Complex64>> {
    let d = c.len() - 1;
    let lead = c[d];
    if lead == 0.0 || !c.iter().all(|x| x.is_finite()) {
        return None;
    }
    let c: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    Some(roots)
}

/// The polynomial over F_{p^k}: roots λ ↦ λ^k, node orbits of length m split into
/// gcd(m, k) orbits of length m / gcd(m, k).
pub fn extension_charpoly(phi: &WeilPolynomial, k: u32) -> Result<WeilPolynomial> {
    if k == 0 {
        return Err(Error::ZeroExtension);
    }
    let six = phi.transcendental_part.power_roots(k)?;
    let mut nodes = Vec::new();
    for &m in &phi.node_part {
        let g = m.gcd(&k);
        nodes.extend(std::iter::repeat(m / g).take(g as usize));
    }
    nodes.sort();
    Ok(WeilPolynomial { p: phi.p, k: phi.k * k, transcendental_part: six, node_part: nodes })
}

/// True when |c_0| = q^{deg}.
pub fn constant_term_check(f: &IntPoly, q: &BigInt) -> bool {
    f.degree().is_some_and(|n| f.coeff(0).abs() == q.pow(n as u32))
}
