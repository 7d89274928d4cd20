use serde::{Deserialize, Serialize};

use super::prime::PrimeOutcome;
use crate::frobchar::{PrimeRecord, SquareClass};
use crate::kummer::{BadReason, KummerCoeffs};

/// One line of `records.jsonl`. Big integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordLine {
    pub surface: [i64; 3],
    pub p: u32,
    pub good: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(rename = "N1", default, skip_serializing_if = "Option::is_none")]
    pub n1: Option<u64>,
    #[serde(rename = "N2", default, skip_serializing_if = "Option::is_none")]
    pub n2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_partition: Option<Vec<u32>>,
    /// Ascending coefficients of the degree-22 polynomial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_coeffs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disc_class: Option<SquareClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ext_degree: Option<u32>,
}

impl RecordLine {
    pub fn bad(surface: &KummerCoeffs, p: u32, reason: BadReason) -> Self {
        RecordLine {
            surface: surface.as_array(),
            p,
            good: false,
            reason: Some(reason.to_string()),
            n1: None,
            n2: None,
            e1: None,
            e2: None,
            node_partition: None,
            phi_coeffs: None,
            rank_bound: None,
            disc_class: None,
            ext_degree: None,
        }
    }

    pub fn good(r: &PrimeRecord) -> Self {
        RecordLine {
            surface: r.surface.as_array(),
            p: r.p,
            good: true,
            reason: None,
            n1: Some(r.n1),
            n2: Some(r.n2),
            e1: Some(r.e1),
            e2: Some(r.e2),
            node_partition: Some(r.node_partition.clone()),
            phi_coeffs: Some(r.phi.assembled().coeffs().iter().map(|c| c.to_string()).collect()),
            rank_bound: Some(r.rank_bound),
            disc_class: r.disc_class.clone(),
            ext_degree: Some(r.ext_degree),
        }
    }

    pub fn from_outcome(surface: &KummerCoeffs, p: u32, o: &PrimeOutcome) -> Self {
        match o {
            PrimeOutcome::Good(r) => RecordLine::good(r),
            PrimeOutcome::Bad(reason) => RecordLine::bad(surface, p, *reason),
        }
    }

    pub fn coeffs(&self) -> KummerCoeffs {
        let [a, b, c] = self.surface;
        KummerCoeffs::new(a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::analyze_prime;
    use crate::par::Exec;

    #[test]
    fn json_roundtrip() {
        let c = KummerCoeffs::new(3, 11, 21);
        for p in [7u32, 11] {
            let o = analyze_prime(&c, p, Exec::Sequential).unwrap();
            let line = RecordLine::from_outcome(&c, p, &o);
            let s = serde_json::to_string(&line).unwrap();
            let back: RecordLine = serde_json::from_str(&s).unwrap();
            assert_eq!(back, line);
            if p == 7 {
                assert!(s.contains("\"N1\":8"));
                assert!(s.contains("\"disc_class\":\""));
                assert_eq!(line.phi_coeffs.as_ref().unwrap().len(), 23);
            } else {
                assert!(s.contains("\"reason\""));
                assert!(!s.contains("rank_bound"));
            }
        }
    }
}
