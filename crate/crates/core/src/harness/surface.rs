use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::prime::{analyze_prime, PrimeOutcome};
use super::record::RecordLine;
use crate::error::Result;
use crate::ffield::primes_in;
use crate::frobchar::{BoundTracker, CombinedBound, PrimeRecord, SquareClass};
use crate::kummer::{BadReason, KummerCoeffs, RankClass};
use crate::par::Exec;

/// The scan of one surface over the primes up to `pmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReport {
    pub coeffs: KummerCoeffs,
    pub class: RankClass,
    pub pmax: u32,
    pub target: Option<u32>,
    /// Good primes in increasing order.
    pub records: Vec<PrimeRecord>,
    pub bad_primes: Vec<(u32, BadReason)>,
    /// `None` when no good prime was found.
    pub combined: Option<CombinedBound>,
    /// Present iff the target was reached.
    pub finishing_prime: Option<u32>,
    /// Square classes at primes of bound 18.
    pub square_classes: BTreeMap<SquareClass, u32>,
}

impl SurfaceReport {
    pub fn bound(&self) -> Option<u32> {
        self.combined.as_ref().map(|c| c.bound())
    }

    pub fn no_good_prime(&self) -> bool {
        self.combined.is_none()
    }

    /// All primes scanned, good and bad, as JSONL lines in increasing order.
    pub fn record_lines(&self) -> Vec<RecordLine> {
        let mut lines: Vec<RecordLine> = self.records.iter().map(RecordLine::good).collect();
        lines.extend(self.bad_primes.iter().map(|&(p, r)| RecordLine::bad(&self.coeffs, p, r)));
        lines.sort_by_key(|l| l.p);
        lines
    }

    pub fn summary(&self) -> SurfaceLine {
        SurfaceLine {
            surface: self.coeffs.as_array(),
            class: self.class,
            target: self.target,
            pmax: self.pmax,
            bound: self.bound(),
            best_even: self.combined.as_ref().map(|c| c.best),
            refined: self.combined.as_ref().is_some_and(|c| c.refined.is_some()),
            floor_conflict: self.combined.as_ref().is_some_and(|c| c.floor_conflict),
            finishing_prime: self.finishing_prime,
            last_prime: self.records.last().map(|r| r.p),
            good_primes: self.records.len(),
            bad_primes: self.bad_primes.iter().map(|b| b.0).collect(),
        }
    }
}

/// One line of `surfaces.jsonl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceLine {
    pub surface: [i64; 3],
    pub class: RankClass,
    pub target: Option<u32>,
    pub pmax: u32,
    pub bound: Option<u32>,
    pub best_even: Option<u32>,
    pub refined: bool,
    pub floor_conflict: bool,
    pub finishing_prime: Option<u32>,
    pub last_prime: Option<u32>,
    pub good_primes: usize,
    pub bad_primes: Vec<u32>,
}

impl SurfaceLine {
    pub fn coeffs(&self) -> KummerCoeffs {
        let [a, b, c] = self.surface;
        KummerCoeffs::new(a, b, c)
    }
}

/// Scans the primes up to `pmax` in increasing order, stopping once the combined
/// bound is at most `target`. The family lower bound of the surface's class is
/// used as the floor for the two-prime refinement.
pub fn run_surface(coeffs: &KummerCoeffs, pmax: u32, target: Option<u32>, exec: Exec) -> Result<SurfaceReport> {
    let class = coeffs.rank_class();
    let mut tracker = BoundTracker::new(*coeffs, Some(class.target()));
    let mut records = Vec::new();
    let mut bad_primes = Vec::new();
    let mut square_classes = BTreeMap::new();
    let mut finishing_prime = None;
    for p in primes_in(2, pmax as u64) {
        let p = p as u32;
        match analyze_prime(coeffs, p, exec)? {
            PrimeOutcome::Bad(r) => bad_primes.push((p, r)),
            PrimeOutcome::Good(r) => {
                tracker.push(r.rank_bound, p, r.disc_class.as_ref())?;
                if r.rank_bound == 18 {
                    if let Some(c) = &r.disc_class {
                        *square_classes.entry(c.clone()).or_insert(0) += 1;
                    }
                }
                records.push(*r);
            }
        }
        if let (Some(t), Some(b)) = (target, tracker.bound()) {
            if b <= t {
                finishing_prime = Some(p);
                break;
            }
        }
    }
    let combined = tracker.finish().ok();
    if target.is_none() {
        // without a target the reported bound itself is the goal
        finishing_prime = combined.as_ref().map(|c| c.finishing_prime);
    }
    Ok(SurfaceReport { coeffs: *coeffs, class, pmax, target, records, bad_primes, combined, finishing_prime, square_classes })
}
