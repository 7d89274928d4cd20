use std::collections::BTreeSet;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::record::RecordLine;
use super::stats::{StatsBuilder, StatsBundle};
use super::surface::{run_surface, SurfaceLine};
use crate::error::{Error, Result};
use crate::kummer::KummerCoeffs;
use crate::par::{self, Exec};

pub const SIGN_CONVENTION: &str = "disc_class carries the sign (-1)^(rho-1)";

/// Everything that determines the output of a batch. Thread count is not part
/// of it: results do not depend on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchConfig {
    pub sample: String,
    pub pmax: u32,
    /// Stop each surface at its class target (the sequential protocol); otherwise
    /// every prime up to pmax is scanned.
    pub early_stop: bool,
    /// Write the degree-22 coefficients into each record.
    pub phi_coeffs: bool,
    pub disc_sign_convention: String,
}

impl BatchConfig {
    pub fn new(sample: &str, pmax: u32, early_stop: bool) -> Self {
        BatchConfig {
            sample: sample.to_string(),
            pmax,
            early_stop,
            phi_coeffs: true,
            disc_sign_convention: SIGN_CONVENTION.to_string(),
        }
    }
}

pub const RECORDS_FILE: &str = "records.jsonl";
pub const SURFACES_FILE: &str = "surfaces.jsonl";
pub const CONFIG_FILE: &str = "config.json";

/// Surfaces handed to the pool at a time; output is flushed after each chunk.
const CHUNK: usize = 64;

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

/// Reads the finished surfaces of an earlier run and drops records of any
/// surface whose summary line was never written.
fn prepare_resume(dir: &Path, config: &BatchConfig) -> Result<Vec<SurfaceLine>> {
    let cfg_path = path(dir, CONFIG_FILE);
    if cfg_path.exists() {
        let old: BatchConfig = serde_json::from_str(&fs::read_to_string(&cfg_path)?)?;
        if &old != config {
            return Err(Error::Consistency(format!(
                "{} holds a batch with a different configuration",
                dir.display()
            )));
        }
    } else {
        fs::write(&cfg_path, serde_json::to_string_pretty(config)? + "\n")?;
    }
    let mut done = Vec::new();
    let sp = path(dir, SURFACES_FILE);
    if sp.exists() {
        let text = fs::read_to_string(&sp)?;
        for line in text.lines() {
            // a torn last line is treated as unfinished
            match serde_json::from_str::<SurfaceLine>(line) {
                Ok(s) => done.push(s),
                Err(_) => break,
            }
        }
        let mut out = String::new();
        for s in &done {
            out += &serde_json::to_string(s)?;
            out.push('\n');
        }
        fs::write(&sp, out)?;
    }
    let finished: BTreeSet<[i64; 3]> = done.iter().map(|s| s.surface).collect();
    let rp = path(dir, RECORDS_FILE);
    if rp.exists() {
        let tmp = path(dir, "records.jsonl.tmp");
        {
            let mut w = BufWriter::new(File::create(&tmp)?);
            for line in BufReader::new(File::open(&rp)?).lines() {
                let line = line?;
                if let Ok(r) = serde_json::from_str::<RecordLine>(&line) {
                    if finished.contains(&r.surface) {
                        writeln!(w, "{line}")?;
                    }
                }
            }
            w.flush()?;
        }
        fs::rename(&tmp, &rp)?;
    }
    Ok(done)
}

/// Result of a batch: one summary per surface, in sample order, and the statistics.
#[derive(Clone, Debug)]
pub struct BatchOutcome {
    pub surfaces: Vec<SurfaceLine>,
    pub stats: StatsBundle,
}

/// Runs the sample in sample order. Surfaces are spread over the rayon pool,
/// primes within a surface are scanned in order. With `out` set, records are
/// appended after each chunk and an interrupted run resumes where it stopped.
pub fn run_batch(
    sample: &[KummerCoeffs],
    config: &BatchConfig,
    threads: usize,
    out: Option<&Path>,
) -> Result<BatchOutcome> {
    let mut surfaces = Vec::new();
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        surfaces = prepare_resume(dir, config)?;
        for (s, c) in surfaces.iter().zip(sample) {
            if s.surface != c.as_array() {
                return Err(Error::Consistency("existing output belongs to another sample".into()));
            }
        }
    }
    let mut stats = StatsBuilder::new(config.pmax, config.early_stop);
    if let Some(dir) = out {
        // statistics of the resumed part come from the files
        stats = StatsBuilder::from_dir(dir, config.pmax, config.early_stop, surfaces.len())?;
    }
    let start = surfaces.len();
    for chunk in sample[start..].chunks(CHUNK) {
        let reports = par::with_threads(threads, || {
            par::map(Exec::Parallel, chunk, |c| {
                let target = config.early_stop.then(|| c.rank_class().target());
                run_surface(c, config.pmax, target, Exec::Sequential)
            })
        });
        let reports: Vec<_> = reports.into_iter().collect::<Result<_>>()?;
        if let Some(dir) = out {
            let mut rw = BufWriter::new(OpenOptions::new().create(true).append(true).open(path(dir, RECORDS_FILE))?);
            for r in &reports {
                for mut line in r.record_lines() {
                    if !config.phi_coeffs {
                        line.phi_coeffs = None;
                    }
                    writeln!(rw, "{}", serde_json::to_string(&line)?)?;
                }
            }
            rw.flush()?;
            let mut sw = BufWriter::new(OpenOptions::new().create(true).append(true).open(path(dir, SURFACES_FILE))?);
            for r in &reports {
                writeln!(sw, "{}", serde_json::to_string(&r.summary())?)?;
            }
            sw.flush()?;
        }
        for r in &reports {
            stats.add_report(r);
            surfaces.push(r.summary());
        }
    }
    Ok(BatchOutcome { surfaces, stats: stats.finish() })
}
