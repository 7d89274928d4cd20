use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{FpPoly, TernaryForm};
use crate::kummer::{arithmetic_bad_reason, BadReason, KummerCoeffs};

/// A coordinate plane x_i = 0; each is a trope of Q_[a,b,c].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Trope {
    X,
    Y,
    Z,
    W,
}

impl Trope {
    pub const ALL: [Trope; 4] = [Trope::X, Trope::Y, Trope::Z, Trope::W];

    pub fn index(self) -> usize {
        match self {
            Trope::X => 0,
            Trope::Y => 1,
            Trope::Z => 2,
            Trope::W => 3,
        }
    }

    /// The three coordinates that survive on the plane, in increasing order.
    pub fn local_coords(self) -> [usize; 3] {
        let i = self.index();
        let mut out = [0; 3];
        let mut k = 0;
        for j in 0..4 {
            if j != i {
                out[k] = j;
                k += 1;
            }
        }
        out
    }
}

/// Branch sextic of the genus-2 curve attached to one trope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropeSextic {
    /// f(t) = F(1, t) for the binary sextic F; degree 5 or 6 and squarefree.
    pub f: FpPoly,
    pub p: u32,
    pub trope: Trope,
    /// Conic point (in local coordinates) used for the parametrization.
    pub base_point: [u32; 3],
    /// For each local coordinate line, the binary quadratic (s², st, t² coefficients)
    /// whose roots are the parameters of the two nodes on it.
    pub quadratics: [[u32; 3]; 3],
    /// Coefficient m ∈ {a, b, c} governing the node pair of each quadratic.
    pub governing: [i64; 3],
}

impl TropeSextic {
    pub fn degree(&self) -> usize {
        self.f.degree().expect("nonzero sextic")
    }

    /// f(t) of one quadratic with s = 1.
    pub fn quadratic_poly(&self, l: usize) -> FpPoly {
        FpPoly::from_raw(self.quadratics[l].to_vec(), self.p)
    }
}

fn bad(p: u32, reason: BadReason) -> Error {
    Error::BadPrime { p, reason }
}

/// Builds the branch sextic on a trope by parametrizing its conic from a rational
/// point and pulling back the three coordinate lines that cut out the nodes.
pub fn trope_to_sextic(coeffs: &KummerCoeffs, p: u32, trope: Trope) -> Result<TropeSextic> {
    if let Some(r) = arithmetic_bad_reason(coeffs, p) {
        return Err(bad(p, r));
    }
    let phi = coeffs.phi_matrix();
    let loc = trope.local_coords();
    let mut m = [[0i64; 3]; 3];
    for (r, &i) in loc.iter().enumerate() {
        for (c, &j) in loc.iter().enumerate() {
            m[r][c] = phi[i][j];
        }
    }
    let conic = TernaryForm::from_matrix(m, p);
    if conic.det() == 0 {
        return Err(bad(p, BadReason::DividesK));
    }
    // Prefer a base point off the coordinate lines; small p may only offer points
    // on them (x² + y² + z² mod 5), which is fine for the construction.
    let base = conic
        .points()
        .find(|v| v.iter().all(|&x| x != 0))
        .or_else(|| conic.points().next())
        .ok_or_else(|| bad(p, BadReason::NoBasePoint))?;
    let pm = p as u64;
    // Directions: the unit vectors other than the first nonzero base coordinate.
    let j0 = base.iter().position(|&x| x != 0).expect("projective point");
    let mut dirs = (0..3).filter(|&j| j != j0).map(|j| {
        let mut e = [0u32; 3];
        e[j] = 1;
        e
    });
    let l1 = dirs.next().unwrap();
    let l2 = dirs.next().unwrap();
    // With R = s·L1 + t·L2: X(s,t) = Q(R)·P0 − 2B(P0,R)·R, each coordinate a binary quadratic.
    let q11 = conic.bilinear(&l1, &l1) as u64;
    let q12 = conic.bilinear(&l1, &l2) as u64;
    let q22 = conic.bilinear(&l2, &l2) as u64;
    let b1 = conic.bilinear(&base, &l1) as u64;
    let b2 = conic.bilinear(&base, &l2) as u64;
    let mut quadratics = [[0u32; 3]; 3];
    for k in 0..3 {
        let pk = base[k] as u64;
        // Q(R) = q11 s² + 2 q12 st + q22 t²; B(P0,R) = b1 s + b2 t
        let mut c = [q11 * pk % pm, 2 * q12 % pm * pk % pm, q22 * pk % pm];
        let (r1, r2) = (l1[k] as u64, l2[k] as u64);
        // subtract 2(b1 s + b2 t)(r1 s + r2 t)
        let sub = [2 * b1 * r1 % pm, 2 * (b1 * r2 + b2 * r1) % pm, 2 * b2 * r2 % pm];
        for i in 0..3 {
            c[i] = (c[i] + pm - sub[i]) % pm;
        }
        quadratics[k] = [c[0] as u32, c[1] as u32, c[2] as u32];
    }
    let governing = loc.map(|l| phi[trope.index()][l]);
    let mut f = FpPoly::one(p);
    for q in &quadratics {
        f = f.mul(&FpPoly::from_raw(q.to_vec(), p));
    }
    let deg = f.degree().unwrap_or(0);
    if deg < 5 || !f.is_squarefree() {
        return Err(bad(p, BadReason::SexticNotSquarefree));
    }
    Ok(TropeSextic { f, p, trope, base_point: base, quadratics, governing })
}
