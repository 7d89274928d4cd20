use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::artin_tate::SquareClass;
use super::weil::WeilPolynomial;
use crate::error::{Error, Result};
use crate::kummer::KummerCoeffs;

/// Everything computed for one surface at one good prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRecord {
    pub surface: KummerCoeffs,
    pub p: u32,
    pub n1: u64,
    pub n2: u64,
    pub e1: i64,
    pub e2: i64,
    pub phi: WeilPolynomial,
    pub rank_bound: u32,
    pub disc_class: Option<SquareClass>,
    /// Extension degree used for the discriminant.
    pub ext_degree: u32,
    pub node_partition: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedBound {
    pub surface: KummerCoeffs,
    /// Smallest even bound seen.
    pub best: u32,
    /// best − 1, when two records at `best` carry different classes.
    pub refined: Option<u32>,
    /// Distinct classes seen at the best bound, but refinement would undercut
    /// the known lower bound.
    pub floor_conflict: bool,
    /// The prime at which the reported bound was first established, scanning
    /// primes in increasing order.
    pub finishing_prime: u32,
    pub primes_used: usize,
}

impl CombinedBound {
    /// The bound to report: the refined one when available.
    pub fn bound(&self) -> u32 {
        self.refined.unwrap_or(self.best)
    }
}

/// Incremental form of [`combine_bounds`], fed one prime at a time in increasing
/// order. Used by the early-stopping scan.
#[derive(Clone, Debug)]
pub struct BoundTracker {
    surface: KummerCoeffs,
    known_floor: Option<u32>,
    best: Option<u32>,
    classes: BTreeSet<SquareClass>,
    last_p: u32,
    reported: Option<u32>,
    finishing: u32,
    count: usize,
}

impl BoundTracker {
    pub fn new(surface: KummerCoeffs, known_floor: Option<u32>) -> Self {
        BoundTracker {
            surface,
            known_floor,
            best: None,
            classes: BTreeSet::new(),
            last_p: 0,
            reported: None,
            finishing: 0,
            count: 0,
        }
    }

    pub fn push(&mut self, rank_bound: u32, p: u32, class: Option<&SquareClass>) -> Result<()> {
        if p <= self.last_p {
            return Err(Error::Consistency(format!("prime {p} out of order after {}", self.last_p)));
        }
        self.last_p = p;
        self.count += 1;
        match self.best {
            Some(b) if rank_bound > b => {}
            Some(b) if rank_bound == b => {
                self.classes.extend(class.cloned());
            }
            _ => {
                self.best = Some(rank_bound);
                self.classes = class.cloned().into_iter().collect();
            }
        }
        let now = self.current_bound();
        if self.reported.map_or(true, |r| now < r) {
            self.reported = Some(now);
            self.finishing = p;
        }
        Ok(())
    }

    fn refinement(&self) -> (Option<u32>, bool) {
        let Some(best) = self.best else { return (None, false) };
        if self.classes.len() < 2 {
            return (None, false);
        }
        match self.known_floor {
            Some(f) if best - 1 < f => (None, true),
            _ => (Some(best - 1), false),
        }
    }

    fn current_bound(&self) -> u32 {
        let (refined, _) = self.refinement();
        refined.or(self.best).unwrap_or(u32::MAX)
    }

    /// Reported bound so far, if any prime has been seen.
    pub fn bound(&self) -> Option<u32> {
        self.best.map(|_| self.current_bound())
    }

    pub fn finish(&self) -> Result<CombinedBound> {
        let best = self.best.ok_or(Error::EmptyRecords)?;
        let (refined, floor_conflict) = self.refinement();
        Ok(CombinedBound {
            surface: self.surface,
            best,
            refined,
            floor_conflict,
            finishing_prime: self.finishing,
            primes_used: self.count,
        })
    }
}

/// Combines the records of one surface: the smallest bound, lowered by one when
/// two primes attaining it disagree on the discriminant class.
pub fn combine_bounds(records: &[PrimeRecord], known_floor: Option<u32>) -> Result<CombinedBound> {
    let first = records.first().ok_or(Error::EmptyRecords)?;
    let mut sorted: Vec<&PrimeRecord> = records.iter().collect();
    sorted.sort_by_key(|r| r.p);
    let mut t = BoundTracker::new(first.surface, known_floor);
    for r in sorted {
        if r.surface != first.surface {
            return Err(Error::Consistency("records from different surfaces".into()));
        }
        t.push(r.rank_bound, r.p, r.disc_class.as_ref())?;
    }
    t.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrimeQuality {
    Good,
    NotGood,
}

/// A prime is good for a surface when its bound exceeds the geometric rank by at most one.
pub fn classify_prime(record: &PrimeRecord, geometric_rank: u32) -> PrimeQuality {
    if record.rank_bound <= geometric_rank + 1 {
        PrimeQuality::Good
    } else {
        PrimeQuality::NotGood
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::super::intpoly::IntPoly;
    use super::super::weil::assemble_phi;
    use super::*;

    fn rec(p: u32, bound: u32, class: i64) -> PrimeRecord {
        let six = IntPoly::linear_root(&BigInt::from(p)).pow(6);
        PrimeRecord {
            surface: KummerCoeffs::new(3, 11, 21),
            p,
            n1: 0,
            n2: 0,
            e1: 0,
            e2: 0,
            phi: assemble_phi(&six, &[1; 16], p).unwrap(),
            rank_bound: bound,
            disc_class: Some(SquareClass::of(&BigInt::from(class)).unwrap()),
            ext_degree: 1,
            node_partition: vec![1; 16],
        }
    }

    #[test]
    fn refinement_rules() {
        let c = combine_bounds(&[rec(7, 18, -1), rec(13, 18, -2)], None).unwrap();
        assert_eq!((c.best, c.bound(), c.finishing_prime), (18, 17, 13));
        let c = combine_bounds(&[rec(7, 18, -1), rec(13, 18, -1)], None).unwrap();
        assert_eq!((c.bound(), c.finishing_prime), (18, 7));
        let c = combine_bounds(&[rec(7, 20, 5), rec(13, 18, -1), rec(19, 18, -2)], None).unwrap();
        assert_eq!((c.bound(), c.finishing_prime, c.primes_used), (17, 19, 3));
        // the square class at a higher bound is irrelevant
        let c = combine_bounds(&[rec(7, 20, 5), rec(13, 18, -1), rec(19, 20, -2)], None).unwrap();
        assert_eq!(c.bound(), 18);
        assert_eq!(combine_bounds(&[], None), Err(Error::EmptyRecords));
    }

    #[test]
    fn unsorted_input_is_scanned_in_order() {
        let c = combine_bounds(&[rec(19, 18, -2), rec(7, 20, 3), rec(13, 18, -1)], None).unwrap();
        assert_eq!((c.bound(), c.finishing_prime), (17, 19));
    }

    #[test]
    fn floor_blocks_refinement() {
        let c = combine_bounds(&[rec(7, 18, -1), rec(13, 18, -2)], Some(18)).unwrap();
        assert_eq!(c.bound(), 18);
        assert!(c.floor_conflict);
    }

    #[test]
    fn prime_quality() {
        assert_eq!(classify_prime(&rec(7, 18, 1), 17), PrimeQuality::Good);
        assert_eq!(classify_prime(&rec(7, 20, 1), 17), PrimeQuality::NotGood);
        assert_eq!(classify_prime(&rec(7, 18, 1), 18), PrimeQuality::Good);
    }
}
