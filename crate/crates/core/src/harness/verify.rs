use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::prime::{analyze_prime, PrimeOutcome};
use crate::error::Result;
use crate::ffield::{primes_in, smallest_nonresidue, PrimeField};
use crate::frobchar::{
    analyze, artin_tate_square_class, disc_class_fast, exterior_square, extension_charpoly, functional_equation_sign,
};
use crate::genus2::{count_points_fp, count_points_fp2, count_points_fp2_naive, h1_charpoly, trope_to_sextic, Trope};
use crate::kummer::{brute_force_surface_counts, obvious_node_orbits, KummerCoeffs};
use crate::par::Exec;

/// Pass and fail counts of one oracle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    /// The first few failures, as "[a,b,c] p".
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: BTreeMap<String, Tally>,
}

impl VerifyReport {
    fn record(&mut self, name: &str, ok: bool, c: &KummerCoeffs, p: u32) {
        let t = self.checks.entry(name.to_string()).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            if t.failures.len() < 10 {
                t.failures.push(format!("{c} {p}"));
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.values().all(|t| t.failed == 0 && t.passed > 0)
    }

    pub fn merge(&mut self, other: VerifyReport) {
        for (k, v) in other.checks {
            let t = self.checks.entry(k).or_default();
            t.passed += v.passed;
            t.failed += v.failed;
            t.failures.extend(v.failures);
            t.failures.truncate(10);
        }
    }
}

/// A fixed pseudo-random subsample, in sample order.
pub fn subsample(all: &[KummerCoeffs], n: usize, seed: u64) -> Vec<KummerCoeffs> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx = sample(&mut rng, all.len(), n.min(all.len())).into_vec();
    idx.sort();
    idx.into_iter().map(|i| all[i]).collect()
}

/// Runs every brute-force cross-check on one surface for the odd primes up to pmax.
pub fn verify_surface(c: &KummerCoeffs, pmax: u32) -> Result<VerifyReport> {
    let mut rep = VerifyReport::default();
    for p in primes_in(3, pmax as u64) {
        let p = p as u32;
        let outcome = analyze_prime(c, p, Exec::Sequential)?;
        let brute = brute_force_surface_counts(c, p);
        let PrimeOutcome::Good(r) = outcome else {
            continue;
        };
        let pi = BigInt::from(p);
        // points on the quartic and on its resolution
        let q_formula = &pi * &pi + 1 + r.phi.t6();
        rep.record("lefschetz_quartic", q_formula == BigInt::from(brute.points), c, p);
        let n = brute.rational_nodes.len() as u64;
        let v_brute = BigInt::from(brute.points + n * p as u64);
        rep.record("lefschetz_resolution", &pi * &pi + 1 + r.phi.trace() == v_brute, c, p);
        rep.record("good_reduction_brute", brute.looks_good(), c, p);
        let fixed = r.node_partition.iter().filter(|&&m| m == 1).count() as u64;
        rep.record("node_fixed_points", fixed == n, c, p);
        let obvious = obvious_node_orbits(c, p)?;
        rep.record(
            "obvious_nodes_rational",
            obvious.rational_nodes.iter().all(|v| brute.rational_nodes.contains(v)),
            c,
            p,
        );
        rep.record("functional_equation", functional_equation_sign(&r.phi.assembled(), &r.phi.q()).is_some(), c, p);

        // twist of the curve and the other three tropes give the same degree-6 part
        let s = trope_to_sextic(c, p, Trope::W)?;
        let field = PrimeField::new(p as u64)?;
        let twisted = s.f.scale(smallest_nonresidue(p));
        let n1 = count_points_fp(&twisted)?;
        let n2 = count_points_fp2(&twisted, &field, Exec::Sequential)?;
        let h = h1_charpoly(n1, n2, p)?;
        rep.record("twist_invariance", exterior_square(&h)? == r.phi.transcendental_part, c, p);
        rep.record("twist_flips_trace", h.e1 == -r.e1, c, p);
        let mut same = true;
        for t in [Trope::X, Trope::Y, Trope::Z] {
            let st = trope_to_sextic(c, p, t)?;
            let n1 = count_points_fp(&st.f)?;
            let n2 = count_points_fp2(&st.f, &field, Exec::Sequential)?;
            same &= exterior_square(&h1_charpoly(n1, n2, p)?)? == r.phi.transcendental_part;
        }
        rep.record("trope_independence", same, c, p);
        rep.record("fp2_fast_vs_naive", count_points_fp2_naive(&s.f)? == r.n2, c, p);

        // square class: fast route, literal route, and stability under doubling k
        let an = analyze(&r.phi);
        let k = an.ext_degree;
        let fast = disc_class_fast(&r.phi, &an, k)?;
        let literal = artin_tate_square_class(&extension_charpoly(&r.phi, k)?, r.rank_bound)?;
        rep.record("disc_class_literal", fast == literal, c, p);
        let doubled = artin_tate_square_class(&extension_charpoly(&r.phi, 2 * k)?, r.rank_bound)?;
        rep.record("disc_class_stable", doubled == literal, c, p);
    }
    Ok(rep)
}

/// The oracle suite over a list of surfaces.
pub fn verify_oracles(surfaces: &[KummerCoeffs], pmax: u32, exec: Exec) -> Result<VerifyReport> {
    let parts = crate::par::map(exec, surfaces, |c| verify_surface(c, pmax));
    let mut rep = VerifyReport::default();
    for r in parts {
        rep.merge(r?);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_surface_passes() {
        let rep = verify_surface(&KummerCoeffs::new(3, 11, 21), 31).unwrap();
        assert!(rep.all_passed(), "{rep:?}");
    }

    #[test]
    fn subsample_is_deterministic() {
        let all = crate::kummer::enumerate_sample();
        let a = subsample(&all, 50, 7);
        assert_eq!(a, subsample(&all, 50, 7));
        assert_eq!(a.len(), 50);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }
}
