use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use picard_core::harness::{
    run_batch, run_surface, stats_from_dir, subsample, verify_oracles, BatchConfig, StatsBundle,
};
use picard_core::kummer::{enumerate_sample, KummerCoeffs};
use picard_core::par::{self, Exec};

#[derive(Parser)]
#[command(name = "picard", version, about = "Picard rank upper bounds for Kummer quartics")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Scan one surface and write one JSON line per prime.
    Surface {
        /// a,b,c
        #[arg(long, value_parser = parse_coeffs, allow_hyphen_values = true)]
        coeffs: KummerCoeffs,
        #[arg(long, default_value_t = 1000)]
        pmax: u32,
        /// Stop as soon as the combined bound reaches this value.
        #[arg(long)]
        target: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a whole sample and persist records into a directory (resumable).
    Batch {
        #[arg(long, default_value = "default")]
        sample: String,
        #[arg(long, default_value_t = 1000)]
        pmax: u32,
        /// 0 picks the rayon default.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        out: PathBuf,
        /// Scan every prime up to pmax instead of stopping at the class target.
        #[arg(long)]
        full: bool,
        /// Leave the degree-22 coefficients out of the records.
        #[arg(long)]
        no_phi_coeffs: bool,
        /// Only the first N surfaces of the sample.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Recompute statistics from a batch directory and write CSV files into it.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        table1: bool,
        #[arg(long)]
        fig2: bool,
        #[arg(long)]
        fig3: bool,
        #[arg(long)]
        classes: bool,
        /// Where the CSV files go; defaults to the input directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force cross-checks on a subsample.
    Verify {
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 31)]
        pmax: u32,
        #[arg(long, default_value_t = 50)]
        surfaces: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

type Render = fn(&StatsBundle) -> String;

fn parse_coeffs(s: &str) -> Result<KummerCoeffs, String> {
    s.parse::<KummerCoeffs>().map_err(|e| e.to_string())
}

fn sample_by_name(name: &str) -> Result<Vec<KummerCoeffs>> {
    match name {
        "default" => Ok(enumerate_sample()),
        _ => bail!("unknown sample {name:?}; only \"default\" is defined"),
    }
}

fn main() -> Result<()> {
    match Cli::parse().cmd {
        Cmd::Surface { coeffs, pmax, target, out } => {
            if !coeffs.is_valid_member() {
                bail!("{coeffs} is not a member of the family");
            }
            let report = run_surface(&coeffs, pmax, target, Exec::Parallel)?;
            let mut w: Box<dyn Write> = match &out {
                Some(p) => Box::new(BufWriter::new(fs::File::create(p).with_context(|| p.display().to_string())?)),
                None => Box::new(std::io::stdout().lock()),
            };
            for line in report.record_lines() {
                writeln!(w, "{}", serde_json::to_string(&line)?)?;
            }
            w.flush()?;
            eprintln!("{}", serde_json::to_string(&report.summary())?);
        }
        Cmd::Batch { sample, pmax, threads, out, full, no_phi_coeffs, limit } => {
            let mut all = sample_by_name(&sample)?;
            if let Some(n) = limit {
                all.truncate(n);
            }
            let mut config = BatchConfig::new(&sample, pmax, !full);
            config.phi_coeffs = !no_phi_coeffs;
            let outcome = run_batch(&all, &config, threads, Some(&out))?;
            print_summary(&outcome.stats);
        }
        Cmd::Stats { input, table1, fig2, fig3, classes, out } => {
            let stats = stats_from_dir(&input)?;
            let dir = out.unwrap_or_else(|| input.clone());
            fs::create_dir_all(&dir)?;
            let all = !(table1 || fig2 || fig3 || classes);
            let outputs: [(bool, &str, Render); 7] = [
                (table1, "table1.csv", StatsBundle::table1_csv),
                (fig2, "fig2.csv", StatsBundle::fig2_csv),
                (fig2, "fig2_fit.csv", StatsBundle::fig2_fit_csv),
                (fig3, "fig3.csv", StatsBundle::fig3_csv),
                (classes, "classes.csv", StatsBundle::classes_csv),
                (classes, "class_frequency.csv", StatsBundle::class_frequency_csv),
                (classes, "surface_classes.csv", StatsBundle::surface_classes_csv),
            ];
            for (on, name, render) in outputs {
                if on || all {
                    let p = dir.join(name);
                    fs::write(&p, render(&stats))?;
                    eprintln!("wrote {}", p.display());
                }
            }
            print_summary(&stats);
        }
        Cmd::Verify { oracle, pmax, surfaces, seed, threads } => {
            if !oracle {
                bail!("only --oracle checks are implemented");
            }
            let picked = subsample(&enumerate_sample(), surfaces, seed);
            let rep = par::with_threads(threads, || verify_oracles(&picked, pmax, Exec::Parallel))?;
            for (name, t) in &rep.checks {
                let status = if t.failed == 0 { "ok" } else { "FAIL" };
                println!("{status:4} {name:24} passed {:6} failed {}", t.passed, t.failed);
                for f in &t.failures {
                    println!("     {f}");
                }
            }
            if !rep.all_passed() {
                bail!("oracle failures");
            }
        }
    }
    Ok(())
}

fn print_summary(s: &StatsBundle) {
    println!("surfaces {} (no good prime: {})", s.surfaces, s.no_good_prime);
    let dist: Vec<String> = s.distribution.iter().map(|(b, n)| format!("{b}: {n}")).collect();
    println!("distribution {{{}}}", dist.join(", "));
    for (class, h) in &s.table1 {
        println!("class {} total {} left {}", class.target(), h.total, h.left());
    }
    if let Some(c) = s.fit_c() {
        println!("fitted C {c:.4}");
    }
}
