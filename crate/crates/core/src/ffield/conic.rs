use crate::error::{Error, Result};

/// Symmetric ternary quadratic form q(v) = vᵀ M v over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    m: [[u32; 3]; 3],
    p: u32,
}

impl TernaryForm {
    /// From a symmetric integer matrix (the off-diagonal entries are half the
    /// cross-term coefficients).
    pub fn from_matrix(m: [[i64; 3]; 3], p: u32) -> Self {
        let mut r = [[0u32; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                debug_assert_eq!(m[i][j], m[j][i], "matrix must be symmetric");
                r[i][j] = m[i][j].rem_euclid(p as i64) as u32;
            }
        }
        TernaryForm { m: r, p }
    }

    /// Diagonal form α x² + β y² + γ z².
    pub fn diagonal(a: i64, b: i64, c: i64, p: u32) -> Self {
        Self::from_matrix([[a, 0, 0], [0, b, 0], [0, 0, c]], p)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn matrix(&self) -> &[[u32; 3]; 3] {
        &self.m
    }

    pub fn bilinear(&self, u: &[u32; 3], v: &[u32; 3]) -> u32 {
        let p = self.p as u64;
        let mut s = 0u64;
        for i in 0..3 {
            for j in 0..3 {
                s = (s + self.m[i][j] as u64 * u[i] as u64 % p * v[j] as u64) % p;
            }
        }
        s as u32
    }

    pub fn eval(&self, v: &[u32; 3]) -> u32 {
        self.bilinear(v, v)
    }

    pub fn det(&self) -> u32 {
        let p = self.p as i128;
        let m = |i: usize, j: usize| self.m[i][j] as i128;
        let d = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        d.rem_euclid(p) as u32
    }

    /// All zeros in P²(F_p) as normalized representatives, in the fixed search order
    /// (1,y,z) lexicographic, then (0,1,z), then (0,0,1).
    pub fn points(&self) -> impl Iterator<Item = [u32; 3]> + '_ {
        normalized_points(self.p).filter(move |v| self.eval(v) == 0)
    }
}

/// Normalized representatives of P²(F_p) in the search order used throughout.
pub fn normalized_points(p: u32) -> impl Iterator<Item = [u32; 3]> {
    let affine = (0..p).flat_map(move |y| (0..p).map(move |z| [1, y, z]));
    let line = (0..p).map(|z| [0, 1, z]);
    affine.chain(line).chain(std::iter::once([0, 0, 1]))
}

/// First zero of a nondegenerate conic in the fixed search order.
pub fn conic_point(q: &TernaryForm) -> Result<[u32; 3]> {
    if q.det() == 0 {
        return Err(Error::DegenerateConic(q.p));
    }
    q.points().next().ok_or(Error::DegenerateConic(q.p))
}
