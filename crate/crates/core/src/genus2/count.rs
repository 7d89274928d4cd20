use crate::error::{Error, Result};
use crate::ffield::{FpElem, FpPoly, Fq2Elem, PrimeField};
use crate::par::{self, Exec};

/// Points at infinity of y² = f(t) on the smooth model: two or none for degree six
/// (as lc(f) is a square or not in F_q), one for degree five.
fn points_at_infinity(f: &FpPoly, chi_lc: i8) -> u64 {
    match f.degree() {
        Some(6) => (1 + chi_lc) as u64,
        Some(5) => 1,
        d => panic!("curve model of degree {d:?}"),
    }
}

fn check_model(f: &FpPoly) -> Result<()> {
    match f.degree() {
        Some(5) | Some(6) if f.is_squarefree() => Ok(()),
        _ => Err(Error::Consistency(format!("not a squarefree quintic or sextic: {f:?}"))),
    }
}

/// #C(F_p) by a direct character sum.
pub fn count_points_fp(f: &FpPoly) -> Result<u64> {
    check_model(f)?;
    let field = PrimeField::new(f.modulus() as u64)?;
    let p = f.modulus();
    let s: i64 = (0..p).map(|t| field.chi(f.eval(t)) as i64).sum();
    let inf = points_at_infinity(f, field.chi(f.leading()));
    Ok((p as i64 + s) as u64 + inf)
}

/// #C(F_p²) by evaluating f at every element of F_p² (Horner over F_p[α]).
pub fn count_points_fp2_naive(f: &FpPoly) -> Result<u64> {
    check_model(f)?;
    let p = f.modulus();
    let d = FpElem::from_u32(crate::ffield::smallest_nonresidue(p), p);
    let coeffs: Vec<Fq2Elem> =
        f.coeffs().iter().map(|&c| Fq2Elem::embed(FpElem::from_u32(c, p), d)).collect();
    let mut s = 0i64;
    for u in 0..p {
        for v in 0..p {
            let t = Fq2Elem::new(FpElem::from_u32(u, p), FpElem::from_u32(v, p), d);
            let val = coeffs.iter().rev().fold(Fq2Elem::embed(FpElem::zero(p), d), |acc, &c| acc * t + c);
            s += val.quad_char_by_norm()? as i64;
        }
    }
    // every element of F_p^* is a square in F_p²
    let inf = points_at_infinity(f, 1);
    Ok(((p as i64) * (p as i64) + s) as u64 + inf)
}

/// #C(F_p²) in O(p²) word operations.
///
/// For t ∉ F_p with minimal polynomial X² − uX + w, χ_{p²}(f(t)) = χ_p(N f(t)) and
/// N f(t) = Res(f, X² − uX + w) = α²w + αβu + β², where αX + β = f mod (X² − uX + w).
/// For fixed u that resultant is a polynomial of degree ≤ 6 in w, stepped with forward
/// differences. Summing over all (u, w) also visits split and repeated quadratics, whose
/// contributions are removed using the values of f on F_p.
pub fn count_points_fp2(f: &FpPoly, field: &PrimeField, exec: Exec) -> Result<u64> {
    check_model(f)?;
    let p = f.modulus();
    if field.p() != p {
        return Err(Error::Consistency("field and polynomial moduli differ".into()));
    }
    let mut fc = [0u32; 7];
    for (i, &c) in f.coeffs().iter().enumerate() {
        fc[i] = c;
    }
    let chi = field.chi_table();
    let mut sum_chi = 0i64;
    let mut nonzero = 0i64;
    for t in 0..p {
        let c = chi[f.eval(t) as usize] as i64;
        sum_chi += c;
        nonzero += c * c;
    }
    let all = par::sum_range(exec, p, |us| resultant_char_sum(&fc, p, chi, us));
    // {t1, t2} ⊂ F_p distinct: χ(f(t1) f(t2)); t1 = t2: χ(f(t)²)
    let split = (sum_chi * sum_chi - nonzero) / 2;
    let irreducible = all - split - nonzero;
    let affine = (p as i64) * (p as i64) + nonzero + 2 * irreducible;
    Ok(affine as u64 + points_at_infinity(f, 1))
}

#[inline(always)]
fn addm(a: u32, b: u32, p: u32) -> u32 {
    // branch-free: when s < p the wrapped difference is huge and min picks s
    let s = a + b;
    s.min(s.wrapping_sub(p))
}

/// Forward differences Δ^j R(0), j = 0..6, of w ↦ Res(f, X² − uX + w).
fn resultant_differences(fc: &[u32; 7], p: u32, u: u32) -> [u32; 7] {
    let pm = p as u64;
    let mut d = [0u32; 7];
    for w in 0..7u64 {
        let wm = w % pm;
        // f mod (X² − uX + w) = αX + β by Horner
        let (mut al, mut be) = (0u64, 0u64);
        for &c in fc.iter().rev() {
            let na = (al * u as u64 + be) % pm;
            let nb = (c as u64 + pm - al * wm % pm) % pm;
            al = na;
            be = nb;
        }
        let r = (al * al % pm * wm + al * be % pm * u as u64 + be * be) % pm;
        d[w as usize] = r as u32;
    }
    for j in 1..7 {
        for i in (j..7).rev() {
            d[i] = addm(d[i], p - d[i - 1], p);
        }
    }
    d
}

/// Σ over u in the range and all w of χ(Res(f, X² − uX + w)).
fn resultant_char_sum(fc: &[u32; 7], p: u32, chi: &[i8], us: std::ops::Range<u32>) -> i64 {
    let mut total = 0i64;
    for u in us {
        let [mut d0, mut d1, mut d2, mut d3, mut d4, mut d5, d6] = resultant_differences(fc, p, u);
        let mut acc = 0i32;
        for _ in 0..p {
            acc += chi[d0 as usize] as i32;
            d0 = addm(d0, d1, p);
            d1 = addm(d1, d2, p);
            d2 = addm(d2, d3, p);
            d3 = addm(d3, d4, p);
            d4 = addm(d4, d5, p);
            d5 = addm(d5, d6, p);
        }
        total += acc as i64;
    }
    total
}

/// Counts pairs (t, y) with y² = f(t) by trying every y; a second, independent
/// scanner for small fields. `ext` is 1 or 2.
pub fn count_points_by_pairs(f: &FpPoly, ext: u32) -> Result<u64> {
    check_model(f)?;
    let p = f.modulus();
    match ext {
        1 => {
            let mut n = 0u64;
            for t in 0..p {
                let v = f.eval(t) as u64;
                n += (0..p as u64).filter(|y| y * y % p as u64 == v).count() as u64;
            }
            let lc_square = (1..p as u64).any(|y| y * y % p as u64 == f.leading() as u64);
            let inf = match f.degree() {
                Some(6) => 2 * lc_square as u64,
                _ => 1,
            };
            Ok(n + inf)
        }
        2 => {
            let d = FpElem::from_u32(crate::ffield::smallest_nonresidue(p), p);
            let elems: Vec<Fq2Elem> = (0..p)
                .flat_map(|u| (0..p).map(move |v| (u, v)))
                .map(|(u, v)| Fq2Elem::new(FpElem::from_u32(u, p), FpElem::from_u32(v, p), d))
                .collect();
            let squares: std::collections::HashMap<Fq2Elem, u64> =
                elems.iter().fold(Default::default(), |mut m, &y| {
                    *m.entry(y * y).or_insert(0) += 1;
                    m
                });
            let coeffs: Vec<Fq2Elem> =
                f.coeffs().iter().map(|&c| Fq2Elem::embed(FpElem::from_u32(c, p), d)).collect();
            let mut n = 0;
            for &t in &elems {
                let val = coeffs.iter().rev().fold(Fq2Elem::embed(FpElem::zero(p), d), |acc, &c| acc * t + c);
                n += squares.get(&val).copied().unwrap_or(0);
            }
            Ok(n + match f.degree() {
                Some(6) => 2,
                _ => 1,
            })
        }
        _ => Err(Error::Consistency(format!("extension degree {ext} not supported"))),
    }
}
