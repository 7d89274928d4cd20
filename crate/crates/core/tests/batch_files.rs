use std::fs;
use std::path::Path;

use picard_core::harness::{run_batch, stats_from_dir, BatchConfig, RECORDS_FILE, SURFACES_FILE};
use picard_core::kummer::{enumerate_sample, KummerCoeffs};

fn small_sample() -> Vec<KummerCoeffs> {
    enumerate_sample().into_iter().step_by(97).take(150).collect()
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn reruns_are_byte_identical() {
    let sample = small_sample();
    let cfg = BatchConfig::new("default", 200, true);
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    run_batch(&sample, &cfg, 1, Some(a.path())).unwrap();
    run_batch(&sample, &cfg, 0, Some(b.path())).unwrap();
    for f in [RECORDS_FILE, SURFACES_FILE, "config.json"] {
        assert_eq!(read(a.path(), f), read(b.path(), f), "{f}");
    }
}

#[test]
fn interrupted_batch_resumes_to_the_same_result() {
    let sample = small_sample();
    let cfg = BatchConfig::new("default", 100, false);
    let whole = tempfile::tempdir().unwrap();
    let full = run_batch(&sample, &cfg, 0, Some(whole.path())).unwrap();

    let part = tempfile::tempdir().unwrap();
    run_batch(&sample[..70], &cfg, 0, Some(part.path())).unwrap();
    // tear the last summary line and leave stray records of an unfinished surface
    let sp = part.path().join(SURFACES_FILE);
    let text = read(part.path(), SURFACES_FILE);
    fs::write(&sp, &text[..text.len() - 20]).unwrap();
    let resumed = run_batch(&sample, &cfg, 0, Some(part.path())).unwrap();

    assert_eq!(resumed.surfaces, full.surfaces);
    assert_eq!(resumed.stats, full.stats);
    assert_eq!(read(part.path(), RECORDS_FILE), read(whole.path(), RECORDS_FILE));
    assert_eq!(read(part.path(), SURFACES_FILE), read(whole.path(), SURFACES_FILE));
    assert_eq!(stats_from_dir(part.path()).unwrap(), full.stats);
}

#[test]
fn config_mismatch_is_refused() {
    let sample = small_sample();
    let dir = tempfile::tempdir().unwrap();
    run_batch(&sample[..5], &BatchConfig::new("default", 50, true), 0, Some(dir.path())).unwrap();
    assert!(run_batch(&sample[..5], &BatchConfig::new("default", 60, true), 0, Some(dir.path())).is_err());
}

#[test]
fn histogram_totals_equal_class_sizes() {
    let sample = small_sample();
    let out = run_batch(&sample, &BatchConfig::new("default", 200, true), 0, None).unwrap();
    let st = out.stats;
    let total: usize = st.table1.values().map(|h| h.total).sum();
    assert_eq!(total, sample.len());
    for (class, h) in &st.table1 {
        let n = sample.iter().filter(|c| c.rank_class() == *class).count();
        assert_eq!(h.total, n);
        let finished: usize = h.finished.values().sum();
        assert_eq!(finished + h.left(), n);
    }
    assert_eq!(st.distribution.values().sum::<usize>() + st.no_good_prime, sample.len());
}
