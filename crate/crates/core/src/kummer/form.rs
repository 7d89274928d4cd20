use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeffs::KummerCoeffs;
use crate::error::{Error, Result};
use crate::ffield::FpElem;

/// Coefficient ring for [`Form`]. The integer instance is exact; the F_p instance
/// carries its modulus, so constants are built relative to an existing element.
pub trait Coeff:
    Copy + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn is_zero(&self) -> bool;
    /// The integer `n` in the same ring as `self`.
    fn lift(&self, n: i64) -> Self;
}

impl Coeff for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn lift(&self, n: i64) -> Self {
        n
    }
}

impl Coeff for FpElem {
    fn is_zero(&self) -> bool {
        FpElem::is_zero(*self)
    }
    fn lift(&self, n: i64) -> Self {
        FpElem::new(n, self.modulus())
    }
}

/// Exponent vector of a monomial in (x, y, z, w).
pub type Monomial = [u8; 4];

/// Homogeneous polynomial in four variables, stored sparsely with no zero terms.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<C> {
    terms: BTreeMap<Monomial, C>,
}

/// Quartic forms over F_p: the object most verification code works with.
pub type QuarticForm = Form<FpElem>;
/// Quartic forms with exact integer coefficients.
pub type IntQuarticForm = Form<i64>;

impl<C: Coeff> Form<C> {
    pub fn zero() -> Self {
        Form { terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut f = Form::zero();
        f.add_term(m, c);
        f
    }

    /// The variable `i` with coefficient `one`.
    pub fn var(i: usize, one: C) -> Self {
        let mut m = [0u8; 4];
        m[i] = 1;
        Form::monomial(m, one)
    }

    pub fn linear(coeffs: [C; 4]) -> Self {
        let mut f = Form::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            let mut m = [0u8; 4];
            m[i] = 1;
            f.add_term(m, c);
        }
        f
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = *e + c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Option<C> {
        self.terms.get(&m).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of any term (all terms share it); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.iter().map(|&e| e as u32).sum())
    }

    pub fn add(&self, o: &Form<C>) -> Form<C> {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, *c);
        }
        r
    }

    pub fn sub(&self, o: &Form<C>) -> Form<C> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Form<C> {
        self.scale_by(|c| -c)
    }

    pub fn scale(&self, s: C) -> Form<C> {
        self.scale_by(|c| c * s)
    }

    fn scale_by(&self, f: impl Fn(C) -> C) -> Form<C> {
        let mut r = Form::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, f(*c));
        }
        r
    }

    pub fn mul(&self, o: &Form<C>) -> Form<C> {
        let mut r = Form::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = [m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]];
                r.add_term(m, *c1 * *c2);
            }
        }
        r
    }

    pub fn eval(&self, pt: &[C; 4]) -> Option<C> {
        let mut acc: Option<C> = None;
        for (m, c) in &self.terms {
            let mut t = *c;
            for i in 0..4 {
                for _ in 0..m[i] {
                    t = t * pt[i];
                }
            }
            acc = Some(match acc {
                Some(a) => a + t,
                None => t,
            });
        }
        acc
    }

    /// Value at a point, with `zero` returned for the zero form.
    pub fn eval_or(&self, pt: &[C; 4], zero: C) -> C {
        self.eval(pt).unwrap_or(zero)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Form<C> {
        let mut r = Form::zero();
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut m2 = *m;
                m2[i] -= 1;
                r.add_term(m2, c.lift(m[i] as i64) * *c);
            }
        }
        r
    }

    /// Substitutes x_i = Σ_j M[i][j] t_j.
    pub fn substitute(&self, m: &[[C; 4]; 4]) -> Form<C> {
        let lin: Vec<Form<C>> = (0..4).map(|i| Form::linear(m[i])).collect();
        let mut r = Form::zero();
        for (mono, c) in &self.terms {
            let mut t = Form::monomial([0; 4], *c);
            for i in 0..4 {
                for _ in 0..mono[i] {
                    t = t.mul(&lin[i]);
                }
            }
            r = r.add(&t);
        }
        r
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(C) -> D) -> Form<D> {
        let mut r = Form::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, f(*c));
        }
        r
    }
}

impl Form<i64> {
    pub fn reduce(&self, p: u32) -> QuarticForm {
        self.map(|c| FpElem::new(c, p))
    }
}

impl Form<FpElem> {
    /// Returns λ with self = λ·other, if such a nonzero scalar exists.
    pub fn scalar_ratio(&self, other: &Form<FpElem>) -> Option<FpElem> {
        let (m0, c0) = other.terms.iter().next()?;
        let s = self.terms.get(m0)?;
        let lambda = *s * c0.inv().ok()?;
        if lambda.is_zero() {
            return None;
        }
        (other.scale(lambda) == *self).then_some(lambda)
    }

    pub fn is_scalar_multiple_of(&self, other: &Form<FpElem>) -> bool {
        self.scalar_ratio(other).is_some()
    }
}

/// The quadric φ = Σx_i² + 2a(yz+xw) + 2b(xz+yw) + 2c(xy+zw) over the integers.
pub fn kummer_phi(k: &KummerCoeffs) -> Form<i64> {
    let m = k.phi_matrix();
    let mut f = Form::zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut mono = [0u8; 4];
            mono[i] += 1;
            mono[j] += 1;
            f.add_term(mono, m[i][j]);
        }
    }
    f
}

/// The Kummer quartic 16·k·xyzw − φ² as an exact integer form.
pub fn kummer_form(k: &KummerCoeffs) -> IntQuarticForm {
    let phi = kummer_phi(k);
    let mut f = phi.mul(&phi).neg();
    f.add_term([1, 1, 1, 1], 16 * k.k_value());
    f
}

/// Parameters of the tetrahedroid family, in the order a01, a02, a03, a12, a13, a23.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TetraCoeffs {
    pub a: [FpElem; 6],
}

/// Index of a_{ij} (i < j) in [`TetraCoeffs::a`].
fn tetra_index(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!("diagonal entry"),
    }
}

impl TetraCoeffs {
    pub fn new(a: [FpElem; 6]) -> Result<Self> {
        if a.iter().any(|x| x.is_zero()) {
            return Err(Error::DegenerateFamily("tetrahedroid parameter is zero".into()));
        }
        Ok(TetraCoeffs { a })
    }

    pub fn get(&self, i: usize, j: usize) -> FpElem {
        self.a[tetra_index(i, j)]
    }
}

/// The tetrahedroid quartic given the squares s_{ij} = a_{ij}² (order as in
/// [`TetraCoeffs`]). The bordered determinant only involves squares; expanding it
/// gives −Σ_{i,j} adj(A)_{ij} x_i² x_j² where A = (s_{ij}) has zero diagonal.
pub fn tetra_form_from_squares(s: [FpElem; 6]) -> Result<QuarticForm> {
    if s.iter().any(|x| x.is_zero()) {
        return Err(Error::DegenerateFamily("tetrahedroid parameter is zero".into()));
    }
    let zero = s[0].lift(0);
    let mut a = [[zero; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                a[i][j] = s[tetra_index(i, j)];
            }
        }
    }
    let adj = adjugate4(&a);
    let mut f = Form::zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut m = [0u8; 4];
            m[i] += 2;
            m[j] += 2;
            f.add_term(m, -adj[i][j]);
        }
    }
    Ok(f)
}

pub fn tetra_form(t: &TetraCoeffs) -> Result<QuarticForm> {
    let sq = t.a.map(|x| x * x);
    tetra_form_from_squares(sq)
}

/// Literal 5×5 bordered determinant [[0, x²ᵀ], [x², A]] evaluated at a point;
/// used to validate the expansion above.
pub fn tetra_bordered_det(s: [FpElem; 6], pt: &[FpElem; 4]) -> FpElem {
    let zero = s[0].lift(0);
    let mut m = [[zero; 5]; 5];
    for i in 0..4 {
        m[0][i + 1] = pt[i] * pt[i];
        m[i + 1][0] = pt[i] * pt[i];
        for j in 0..4 {
            if i != j {
                m[i + 1][j + 1] = s[tetra_index(i, j)];
            }
        }
    }
    det_generic(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn det_generic<C: Coeff>(m: &[Vec<C>]) -> C {
    // Laplace expansion; only used on tiny matrices.
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut acc = m[0][0].lift(0);
    for j in 0..n {
        let minor: Vec<Vec<C>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &v)| v).collect()).collect();
        let t = m[0][j] * det_generic(&minor);
        acc = if j % 2 == 0 { acc + t } else { acc - t };
    }
    acc
}

fn adjugate4<C: Coeff>(a: &[[C; 4]; 4]) -> [[C; 4]; 4] {
    let zero = a[0][1].lift(0);
    let mut adj = [[zero; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let minor: Vec<Vec<C>> = (0..4)
                .filter(|&r| r != j)
                .map(|r| (0..4).filter(|&c| c != i).map(|c| a[r][c]).collect())
                .collect();
            let d = det_generic(&minor);
            adj[i][j] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    adj
}
