//! Scanning primes, persisting records and reproducing the summary statistics.

mod batch;
mod prime;
mod record;
mod stats;
mod surface;
mod verify;

pub use batch::{run_batch, BatchConfig, BatchOutcome, CONFIG_FILE, RECORDS_FILE, SIGN_CONVENTION, SURFACES_FILE};
pub use prime::{analyze_prime, PrimeOutcome};
pub use record::RecordLine;
pub use stats::{
    stats_from_dir, FinishHistogram, PrimeProportion, PrimeStat, StatsBuilder, StatsBundle, SurfaceProportion,
};
pub use surface::{run_surface, SurfaceLine, SurfaceReport};
pub use verify::{subsample, verify_oracles, verify_surface, Tally, VerifyReport};
