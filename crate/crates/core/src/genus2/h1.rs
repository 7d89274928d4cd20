use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// P₄(T) = T⁴ − e1·T³ + e2·T² − p·e1·T + p², the Frobenius polynomial on H¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct H1CharPoly {
    pub e1: i64,
    pub e2: i64,
    pub p: u32,
}

impl H1CharPoly {
    /// Coefficients in ascending order.
    pub fn coeffs(&self) -> [i64; 5] {
        let p = self.p as i64;
        [p * p, -p * self.e1, self.e2, -self.e1, 1]
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.coeffs().iter().rev().fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    /// #J(F_p) = P₄(1).
    pub fn jacobian_order(&self) -> i128 {
        self.eval(1)
    }

    /// The quadratic twist: e1 ↦ −e1.
    pub fn twist(&self) -> H1CharPoly {
        H1CharPoly { e1: -self.e1, ..*self }
    }

    /// The four roots, via P₄(T) = T²·h(T + p/T) with h(X) = X² − e1·X + e2 − 2p.
    pub fn roots(&self) -> [Complex64; 4] {
        let p = self.p as f64;
        let e1 = self.e1 as f64;
        let disc = Complex64::new(e1 * e1 - 4.0 * (self.e2 as f64 - 2.0 * p), 0.0).sqrt();
        let xs = [(e1 + disc) / 2.0, (e1 - disc) / 2.0];
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for (k, x) in xs.into_iter().enumerate() {
            let d = (x * x - 4.0 * p).sqrt();
            out[2 * k] = (x + d) / 2.0;
            out[2 * k + 1] = (x - d) / 2.0;
        }
        out
    }

    /// Exact test that all roots have absolute value √p: the real quadratic h has
    /// both roots in [−2√p, 2√p].
    pub fn satisfies_weil_bounds(&self) -> bool {
        let p = self.p as i128;
        let e1 = self.e1 as i128;
        let c = self.e2 as i128 - 2 * p;
        let disc = e1 * e1 - 4 * c;
        // h(±2√p) = 2p + e2 ∓ 2e1√p ≥ 0, vertex e1/2 inside the interval
        let m = 2 * p + self.e2 as i128;
        disc >= 0 && m >= 0 && m * m >= 4 * e1 * e1 * p && e1 * e1 <= 16 * p
    }
}

/// Frobenius polynomial on H¹ from #C(F_p) and #C(F_p²).
pub fn h1_charpoly(n1: u64, n2: u64, p: u32) -> Result<H1CharPoly> {
    let pi = p as i64;
    let s1 = pi + 1 - n1 as i64;
    let s2 = pi * pi + 1 - n2 as i64;
    let num = s1 * s1 - s2;
    if num % 2 != 0 {
        return Err(Error::InconsistentCounts);
    }
    let h = H1CharPoly { e1: s1, e2: num / 2, p };
    if !h.satisfies_weil_bounds() {
        return Err(Error::WeilBound { e1: h.e1, e2: h.e2, p });
    }
    Ok(h)
}
