use std::fmt;

use serde::{Deserialize, Serialize};

use super::coeffs::KummerCoeffs;
use crate::error::{Error, Result};
use crate::ffield::FpElem;
use crate::genus2::{trope_to_sextic, Trope};

/// Reason a prime fails the good-reduction test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BadReason {
    Characteristic2,
    /// p divides k: the reduction is a double quadric.
    DividesK,
    /// p divides m² − 1 for an entry m: the reduction contains singular lines.
    SingularLine { m: i64 },
    /// The branch sextic on the chosen trope has a repeated root.
    SexticNotSquarefree,
    /// No usable base point on the trope conic.
    NoBasePoint,
}

impl fmt::Display for BadReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BadReason::Characteristic2 => write!(f, "characteristic 2"),
            BadReason::DividesK => write!(f, "p divides k"),
            BadReason::SingularLine { m } => write!(f, "p divides {m}^2-1"),
            BadReason::SexticNotSquarefree => write!(f, "trope sextic not squarefree"),
            BadReason::NoBasePoint => write!(f, "no base point off the branch locus"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    Good,
    Bad(BadReason),
}

impl Reduction {
    pub fn is_good(self) -> bool {
        self == Reduction::Good
    }
}

/// Cheap arithmetic part of the good-reduction test (no curve is built).
pub fn arithmetic_bad_reason(coeffs: &KummerCoeffs, p: u32) -> Option<BadReason> {
    if p == 2 {
        return Some(BadReason::Characteristic2);
    }
    let p = p as i64;
    if coeffs.k_value().rem_euclid(p) == 0 {
        return Some(BadReason::DividesK);
    }
    for m in coeffs.as_array() {
        if (m * m - 1).rem_euclid(p) == 0 {
            return Some(BadReason::SingularLine { m });
        }
    }
    None
}

/// Good iff the reduction mod p is a quartic with sixteen ordinary double points.
pub fn good_prime_test(coeffs: &KummerCoeffs, p: u32) -> Reduction {
    if let Some(r) = arithmetic_bad_reason(coeffs, p) {
        return Reduction::Bad(r);
    }
    match trope_to_sextic(coeffs, p, Trope::W) {
        Ok(_) => Reduction::Good,
        Err(Error::BadPrime { reason, .. }) => Reduction::Bad(reason),
        Err(_) => Reduction::Bad(BadReason::NoBasePoint),
    }
}

/// Behaviour of the quadratic t² + 2mt + 1 over F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl Splitting {
    pub fn of(m: i64, p: u32) -> Splitting {
        match FpElem::new(m * m - 1, p).quad_char() {
            Ok(1) => Splitting::Split,
            Ok(-1) => Splitting::Inert,
            _ => Splitting::Ramified,
        }
    }
}

/// Frobenius data on the twelve nodes lying on coordinate lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeOrbitData {
    /// Splitting for m = a, b, c; each governs two pairs of nodes.
    pub splitting: [Splitting; 3],
    /// F_p-rational obvious nodes, with explicit coordinates.
    pub rational_nodes: Vec<[u32; 4]>,
    /// Orbit lengths on the remaining four nodes, once known.
    pub hidden: Option<Vec<u32>>,
}

impl NodeOrbitData {
    /// Orbit lengths on the twelve obvious nodes, sorted.
    pub fn obvious_partition(&self) -> Vec<u32> {
        let mut v = Vec::new();
        for s in self.splitting {
            match s {
                Splitting::Split => v.extend([1; 4]),
                _ => v.extend([2; 2]),
            }
        }
        v.sort();
        v
    }

    /// Full partition of 16 once the hidden part is filled in.
    pub fn total_partition(&self) -> Option<Vec<u32>> {
        let mut v = self.obvious_partition();
        v.extend(self.hidden.as_ref()?);
        v.sort();
        Some(v)
    }
}

/// Roots r of r² + 2mr + 1 in F_p (empty unless split).
fn unit_quadratic_roots(m: i64, p: u32) -> Vec<u32> {
    let disc = FpElem::new(m * m - 1, p);
    match disc.sqrt() {
        Some(s) if !s.is_zero() => {
            let mm = FpElem::new(-m, p);
            let mut r = vec![(mm + s).value(), (mm - s).value()];
            r.sort();
            r
        }
        _ => Vec::new(),
    }
}

/// Scales a projective point so its first nonzero coordinate is 1.
pub fn normalize_point(v: [u32; 4], p: u32) -> [u32; 4] {
    let Some(&lead) = v.iter().find(|&&x| x != 0) else { return v };
    let inv = FpElem::from_u32(lead, p).inv().expect("nonzero");
    v.map(|x| (FpElem::from_u32(x, p) * inv).value())
}

/// Splitting flags and rational coordinates of the twelve obvious nodes.
pub fn obvious_node_orbits(coeffs: &KummerCoeffs, p: u32) -> Result<NodeOrbitData> {
    if p == 2 {
        return Err(Error::UnsupportedCharacteristic);
    }
    let mut splitting = [Splitting::Split; 3];
    let mut nodes = Vec::new();
    for (idx, m) in coeffs.as_array().into_iter().enumerate() {
        let s = Splitting::of(m, p);
        if s == Splitting::Ramified {
            return Err(Error::Ramified(m));
        }
        splitting[idx] = s;
        for r in unit_quadratic_roots(m, p) {
            // two coordinate lines per entry, see the matrix of φ
            let pts: [[u32; 4]; 2] = match idx {
                0 => [[0, r, 1, 0], [r, 0, 0, 1]],
                1 => [[0, r, 0, 1], [r, 0, 1, 0]],
                _ => [[0, 0, r, 1], [r, 1, 0, 0]],
            };
            nodes.extend(pts.map(|v| normalize_point(v, p)));
        }
    }
    nodes.sort();
    Ok(NodeOrbitData { splitting, rational_nodes: nodes, hidden: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_surface_primes() {
        let s = KummerCoeffs::new(3, 11, 21);
        assert!(!good_prime_test(&s, 11).is_good());
        assert!(good_prime_test(&s, 7).is_good());
        assert!(!good_prime_test(&s, 2).is_good());
        let bad: Vec<u32> = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
            .into_iter()
            .filter(|&p| !good_prime_test(&s, p).is_good())
            .collect();
        assert_eq!(bad, vec![2, 3, 5, 11, 17]);
    }

    #[test]
    fn splitting_examples() {
        let d5 = obvious_node_orbits(&KummerCoeffs::new(0, 2, 3), 5).unwrap();
        assert_eq!(d5.splitting[0], Splitting::Split);
        let pair: Vec<_> = d5.rational_nodes.iter().filter(|v| v[0] == 0 && v[3] == 0).collect();
        assert_eq!(pair.len(), 2);
        let d7 = obvious_node_orbits(&KummerCoeffs::new(0, 2, 3), 7).unwrap();
        assert_eq!(d7.splitting[0], Splitting::Inert);
        assert_eq!(obvious_node_orbits(&KummerCoeffs::new(1, 2, 3), 11), Err(Error::Ramified(1)));
    }
}
