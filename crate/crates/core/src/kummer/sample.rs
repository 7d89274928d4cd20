use super::coeffs::KummerCoeffs;

/// Bound on |a|, |b|, |c| in the sample.
pub const SAMPLE_BOX: i64 = 30;

/// Why a vector of the coefficient box is left out of the sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exclusion {
    /// Some entry is ±1: the quartic contains singular lines.
    UnitEntry,
    /// k = 0: the quartic is a double quadric. In the box this happens exactly for
    /// [2,2,7], [3,3,17] and [2,7,26].
    NonReduced,
}

pub fn exclusion(c: &KummerCoeffs) -> Option<Exclusion> {
    if c.as_array().iter().any(|m| m.abs() == 1) {
        Some(Exclusion::UnitEntry)
    } else if c.k_value() == 0 {
        Some(Exclusion::NonReduced)
    } else {
        None
    }
}

/// All [a, b, c] with |a| ≤ b ≤ c ≤ 30 that survive [`exclusion`], sorted.
pub fn enumerate_sample() -> Vec<KummerCoeffs> {
    let mut out = Vec::new();
    for c in 0..=SAMPLE_BOX {
        for b in 0..=c {
            for a in -b..=b {
                let v = KummerCoeffs::new(a, b, c);
                if exclusion(&v).is_none() {
                    out.push(v);
                }
            }
        }
    }
    out.sort();
    out
}
