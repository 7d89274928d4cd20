use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::batch::{RECORDS_FILE, SURFACES_FILE};
use super::record::RecordLine;
use super::surface::{SurfaceLine, SurfaceReport};
use crate::error::{Error, Result};
use crate::frobchar::SquareClass;
use crate::kummer::RankClass;

/// Finishing-prime histogram of one class: how many surfaces needed each prime.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinishHistogram {
    pub total: usize,
    pub finished: BTreeMap<u32, usize>,
}

impl FinishHistogram {
    /// Rows (prime, cases finished, cases left afterwards).
    pub fn rows(&self) -> Vec<(u32, usize, usize)> {
        let mut left = self.total;
        self.finished
            .iter()
            .map(|(&p, &n)| {
                left -= n;
                (p, n, left)
            })
            .collect()
    }

    pub fn left(&self) -> usize {
        self.total - self.finished.values().sum::<usize>()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeProportion {
    pub good: usize,
    pub above_18: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceProportion {
    pub surface: [i64; 3],
    pub rank_18: usize,
    pub good: usize,
}

impl SurfaceProportion {
    pub fn fraction(&self) -> f64 {
        self.rank_18 as f64 / self.good.max(1) as f64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsBundle {
    pub pmax: u32,
    /// With early stopping the per-prime statistics only cover the primes scanned.
    pub early_stop: bool,
    pub surfaces: usize,
    pub no_good_prime: usize,
    /// Final bound → number of surfaces.
    pub distribution: BTreeMap<u32, usize>,
    pub table1: BTreeMap<RankClass, FinishHistogram>,
    /// Per prime, over surfaces whose final bound is 17.
    pub fig2: BTreeMap<u32, PrimeProportion>,
    /// Surfaces with final bound at most 18.
    pub fig3: Vec<SurfaceProportion>,
    /// Distinct classes at bound-18 primes, per surface of final bound 17.
    pub classes_per_surface: Vec<([i64; 3], usize)>,
    /// Frequency of each class over the same surfaces and primes.
    pub class_frequency: BTreeMap<SquareClass, u64>,
    /// The same frequencies, per surface.
    pub surface_class_frequency: BTreeMap<[i64; 3], BTreeMap<SquareClass, u64>>,
    /// Surfaces where two classes clashed at the family lower bound.
    pub floor_conflicts: Vec<[i64; 3]>,
}

impl StatsBundle {
    /// Least-squares C for the model proportion ≈ C/√p.
    pub fn fit_c(&self) -> Option<f64> {
        let (mut num, mut den) = (0.0, 0.0);
        for (&p, v) in &self.fig2 {
            if v.good == 0 {
                continue;
            }
            let prop = v.above_18 as f64 / v.good as f64;
            num += prop / (p as f64).sqrt();
            den += 1.0 / p as f64;
        }
        (den > 0.0).then(|| num / den)
    }

    /// Histogram of the fig3 fractions over `bins` equal bins of [0, 1].
    pub fn fig3_histogram(&self, bins: usize) -> Vec<usize> {
        let mut h = vec![0; bins];
        for s in &self.fig3 {
            let b = ((s.fraction() * bins as f64) as usize).min(bins - 1);
            h[b] += 1;
        }
        h
    }

    pub fn table1_csv(&self) -> String {
        let mut s = String::from("class,prime,finished,left\n");
        for (class, h) in &self.table1 {
            for (p, n, left) in h.rows() {
                let _ = writeln!(s, "{},{p},{n},{left}", class.target());
            }
        }
        s
    }

    pub fn fig2_csv(&self) -> String {
        let mut s = String::from("p,good,above_18,proportion\n");
        for (p, v) in &self.fig2 {
            let prop = v.above_18 as f64 / v.good.max(1) as f64;
            let _ = writeln!(s, "{p},{},{},{prop:.6}", v.good, v.above_18);
        }
        s
    }

    /// The least-squares C of [`fit_c`](Self::fit_c) and the number of primes used.
    pub fn fig2_fit_csv(&self) -> String {
        let primes = self.fig2.values().filter(|v| v.good > 0).count();
        let c = self.fit_c().map_or(String::new(), |c| format!("{c:.6}"));
        format!("c,primes\n{c},{primes}\n")
    }

    pub fn fig3_csv(&self) -> String {
        let mut s = String::from("a,b,c,rank_18,good,fraction\n");
        for v in &self.fig3 {
            let [a, b, c] = v.surface;
            let _ = writeln!(s, "{a},{b},{c},{},{},{:.6}", v.rank_18, v.good, v.fraction());
        }
        s
    }

    /// The most frequent class of a surface, ties going to the smaller class.
    pub fn top_class(&self, surface: &[i64; 3]) -> Option<(&SquareClass, u64)> {
        let t = self.surface_class_frequency.get(surface)?;
        t.iter().fold(None, |best, (c, &n)| match best {
            Some((_, m)) if m >= n => best,
            _ => Some((c, n)),
        })
    }

    /// Per surface: distinct classes and the most frequent one.
    pub fn classes_csv(&self) -> String {
        let mut s = String::from("a,b,c,distinct_classes,top_class,top_count\n");
        for (v, n) in &self.classes_per_surface {
            let [a, b, c] = *v;
            let (top, count) = self.top_class(v).map_or((String::new(), 0), |(c, n)| (c.to_string(), n));
            let _ = writeln!(s, "{a},{b},{c},{n},{top},{count}");
        }
        s
    }

    /// Global class frequencies, most frequent first.
    pub fn class_frequency_csv(&self) -> String {
        let mut s = String::from("class,count\n");
        let mut freq: Vec<_> = self.class_frequency.iter().collect();
        freq.sort_by(|x, y| y.1.cmp(x.1).then(x.0.cmp(y.0)));
        for (c, n) in freq {
            let _ = writeln!(s, "{c},{n}");
        }
        s
    }

    /// Full per-surface frequency tables.
    pub fn surface_classes_csv(&self) -> String {
        let mut s = String::from("a,b,c,class,count\n");
        for ([a, b, c], t) in &self.surface_class_frequency {
            for (cls, n) in t {
                let _ = writeln!(s, "{a},{b},{c},{cls},{n}");
            }
        }
        s
    }
}

/// Bound and class of one good prime, all the statistics need.
#[derive(Clone, Debug)]
pub struct PrimeStat {
    pub p: u32,
    pub rank_bound: u32,
    pub disc_class: Option<SquareClass>,
}

/// Accumulates statistics one surface at a time.
#[derive(Clone, Debug)]
pub struct StatsBuilder {
    bundle: StatsBundle,
}

impl StatsBuilder {
    pub fn new(pmax: u32, early_stop: bool) -> Self {
        let mut table1 = BTreeMap::new();
        for c in [RankClass::Generic, RankClass::TwoEqual, RankClass::Exceptional] {
            table1.insert(c, FinishHistogram::default());
        }
        StatsBuilder {
            bundle: StatsBundle {
                pmax,
                early_stop,
                surfaces: 0,
                no_good_prime: 0,
                distribution: BTreeMap::new(),
                table1,
                fig2: BTreeMap::new(),
                fig3: Vec::new(),
                classes_per_surface: Vec::new(),
                class_frequency: BTreeMap::new(),
                surface_class_frequency: BTreeMap::new(),
                floor_conflicts: Vec::new(),
            },
        }
    }

    pub fn add_surface(&mut self, s: &SurfaceLine, primes: &[PrimeStat]) {
        let b = &mut self.bundle;
        b.surfaces += 1;
        let h = b.table1.entry(s.class).or_default();
        h.total += 1;
        if let Some(p) = s.finishing_prime.filter(|_| s.bound.is_some_and(|x| x <= s.class.target())) {
            *h.finished.entry(p).or_insert(0) += 1;
        }
        if s.floor_conflict {
            b.floor_conflicts.push(s.surface);
        }
        let Some(bound) = s.bound else {
            b.no_good_prime += 1;
            return;
        };
        *b.distribution.entry(bound).or_insert(0) += 1;
        if bound == 17 {
            for r in primes {
                let e = b.fig2.entry(r.p).or_default();
                e.good += 1;
                if r.rank_bound > 18 {
                    e.above_18 += 1;
                }
            }
            let mut table = BTreeMap::new();
            for r in primes.iter().filter(|r| r.rank_bound == 18) {
                if let Some(c) = &r.disc_class {
                    *table.entry(c.clone()).or_insert(0) += 1;
                    *b.class_frequency.entry(c.clone()).or_insert(0) += 1;
                }
            }
            b.classes_per_surface.push((s.surface, table.len()));
            b.surface_class_frequency.insert(s.surface, table);
        }
        if bound <= 18 {
            b.fig3.push(SurfaceProportion {
                surface: s.surface,
                rank_18: primes.iter().filter(|r| r.rank_bound == 18).count(),
                good: primes.len(),
            });
        }
    }

    pub fn add_report(&mut self, r: &SurfaceReport) {
        let primes: Vec<PrimeStat> = r
            .records
            .iter()
            .map(|x| PrimeStat { p: x.p, rank_bound: x.rank_bound, disc_class: x.disc_class.clone() })
            .collect();
        self.add_surface(&r.summary(), &primes);
    }

    /// Statistics of the first `limit` surfaces stored in a batch directory.
    pub fn from_dir(dir: &Path, pmax: u32, early_stop: bool, limit: usize) -> Result<Self> {
        let mut builder = StatsBuilder::new(pmax, early_stop);
        let sp = dir.join(SURFACES_FILE);
        if !sp.exists() {
            return Ok(builder);
        }
        let surfaces: Vec<SurfaceLine> = BufReader::new(File::open(&sp)?)
            .lines()
            .take(limit)
            .map(|l| Ok(serde_json::from_str(&l?)?))
            .collect::<Result<_>>()?;
        let mut by_surface: BTreeMap<[i64; 3], Vec<PrimeStat>> = BTreeMap::new();
        let rp = dir.join(RECORDS_FILE);
        if rp.exists() {
            for line in BufReader::new(File::open(&rp)?).lines() {
                let r: RecordLine = serde_json::from_str(&line?)?;
                if !r.good {
                    continue;
                }
                let rank_bound = r.rank_bound.ok_or_else(|| Error::Parse("good record without rank_bound".into()))?;
                by_surface.entry(r.surface).or_default().push(PrimeStat { p: r.p, rank_bound, disc_class: r.disc_class });
            }
        }
        for s in &surfaces {
            let primes = by_surface.remove(&s.surface).unwrap_or_default();
            builder.add_surface(s, &primes);
        }
        Ok(builder)
    }

    pub fn finish(self) -> StatsBundle {
        self.bundle
    }
}

/// Statistics recomputed from a batch directory.
pub fn stats_from_dir(dir: &Path) -> Result<StatsBundle> {
    let cfg: super::batch::BatchConfig =
        serde_json::from_str(&std::fs::read_to_string(dir.join(super::batch::CONFIG_FILE))?)?;
    Ok(StatsBuilder::from_dir(dir, cfg.pmax, cfg.early_stop, usize::MAX)?.finish())
}
