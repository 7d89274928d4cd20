use crate::error::{Error, Result};
use crate::ffield::{factor_pattern, FpElem, PrimeField};
use crate::frobchar::{
    analyze, assemble_phi, disc_class_fast, exterior_square, node_action, weil_check, PrimeRecord,
};
use crate::genus2::{count_points_fp, count_points_fp2, h1_charpoly, trope_to_sextic, Trope, TropeSextic};
use crate::kummer::{good_prime_test, obvious_node_orbits, BadReason, KummerCoeffs, Reduction, Splitting};
use crate::par::Exec;

/// Result of the pipeline at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeOutcome {
    Good(Box<PrimeRecord>),
    Bad(BadReason),
}

impl PrimeOutcome {
    pub fn record(&self) -> Option<&PrimeRecord> {
        match self {
            PrimeOutcome::Good(r) => Some(r),
            PrimeOutcome::Bad(_) => None,
        }
    }
}

/// Checks that each coordinate-line quadratic splits exactly when its governing
/// entry m has m² − 1 a square.
fn check_quadratics(s: &TropeSextic) -> Result<()> {
    for (l, q) in s.quadratics.iter().enumerate() {
        let p = s.p;
        let [c0, c1, c2] = q.map(|x| FpElem::from_u32(x, p));
        let disc = c1 * c1 - FpElem::new(4, p) * c0 * c2;
        let got = match disc.quad_char()? {
            1 => Splitting::Split,
            -1 => Splitting::Inert,
            _ => Splitting::Ramified,
        };
        let want = Splitting::of(s.governing[l], p);
        if got != want {
            return Err(Error::Consistency(format!(
                "line quadratic {l} at p = {p} is {got:?}, entry {} says {want:?}",
                s.governing[l]
            )));
        }
    }
    Ok(())
}

/// Runs the whole chain for one surface and one prime: reduction test, trope
/// sextic, point counts, H¹ and H² polynomials, rank bound and square class.
pub fn analyze_prime(coeffs: &KummerCoeffs, p: u32, exec: Exec) -> Result<PrimeOutcome> {
    if let Reduction::Bad(r) = good_prime_test(coeffs, p) {
        return Ok(PrimeOutcome::Bad(r));
    }
    let sextic = trope_to_sextic(coeffs, p, Trope::W)?;
    check_quadratics(&sextic)?;
    let field = PrimeField::new(p as u64)?;
    let n1 = count_points_fp(&sextic.f)?;
    let n2 = count_points_fp2(&sextic.f, &field, exec)?;
    let h1 = h1_charpoly(n1, n2, p)?;
    let six = exterior_square(&h1)?;
    let pattern = factor_pattern(&sextic.f)?;
    let mut obvious = obvious_node_orbits(coeffs, p)?;
    let partition = node_action(&pattern, &mut obvious)?;
    let phi = assemble_phi(&six, &partition, p)?;
    if !weil_check(&phi) {
        return Err(Error::Consistency(format!("{coeffs} at p = {p}: Weil check failed")));
    }
    let analysis = analyze(&phi);
    let disc = disc_class_fast(&phi, &analysis, analysis.ext_degree)?;
    Ok(PrimeOutcome::Good(Box::new(PrimeRecord {
        surface: *coeffs,
        p,
        n1,
        n2,
        e1: h1.e1,
        e2: h1.e2,
        rank_bound: analysis.bound,
        disc_class: Some(disc),
        ext_degree: analysis.ext_degree,
        node_partition: partition,
        phi,
    })))
}
