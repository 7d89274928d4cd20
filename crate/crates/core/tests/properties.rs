use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use picard_core::ffield::FpElem;
use picard_core::frobchar::{weil_check, BoundTracker, SquareClass};
use picard_core::harness::{analyze_prime, PrimeOutcome};
use picard_core::jmod::{inert_prime_prediction, InertPrediction, ModularPolynomial};
use picard_core::kummer::{brute_force_surface_counts, KummerCoeffs};
use picard_core::par::Exec;

const SMALL_PRIMES: [u32; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

fn member() -> impl Strategy<Value = KummerCoeffs> {
    (-30i64..=30, -30i64..=30, -30i64..=30)
        .prop_map(|(a, b, c)| KummerCoeffs::new(a, b, c))
        .prop_filter("±1 entries and k = 0 are excluded", |c| c.is_valid_member())
}

fn aac_member() -> impl Strategy<Value = KummerCoeffs> {
    (2i64..=12, -30i64..=30)
        .prop_map(|(a, c)| KummerCoeffs::new(a, a, c))
        .prop_filter("needs a member", |c| c.is_valid_member())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lefschetz_matches_brute_force(c in member(), i in 0usize..SMALL_PRIMES.len()) {
        let p = SMALL_PRIMES[i];
        let brute = brute_force_surface_counts(&c, p);
        match analyze_prime(&c, p, Exec::Sequential).unwrap() {
            PrimeOutcome::Good(r) => {
                let pi = BigInt::from(p);
                prop_assert_eq!(&pi * &pi + 1 + r.phi.t6(), BigInt::from(brute.points));
                prop_assert!(weil_check(&r.phi));
                prop_assert!(r.rank_bound % 2 == 0 && (2..=22).contains(&r.rank_bound));
                prop_assert_eq!(r.node_partition.iter().sum::<u32>(), 16);
            }
            PrimeOutcome::Bad(_) => {}
        }
    }

    #[test]
    fn sequential_and_parallel_agree(c in member(), i in 4usize..SMALL_PRIMES.len()) {
        let p = SMALL_PRIMES[i];
        let a = analyze_prime(&c, p, Exec::Sequential).unwrap();
        let b = analyze_prime(&c, p, Exec::Parallel).unwrap();
        prop_assert_eq!(a.record(), b.record());
    }

    #[test]
    fn inert_primes_give_bound_twenty(c in aac_member(), i in 0usize..SMALL_PRIMES.len()) {
        let p = SMALL_PRIMES[i];
        if let PrimeOutcome::Good(r) = analyze_prime(&c, p, Exec::Sequential).unwrap() {
            if inert_prime_prediction(&c, p).unwrap() == InertPrediction::PredictedAtLeast20 {
                prop_assert!(r.rank_bound >= 20, "{} at {}: {}", c, p, r.rank_bound);
            }
        }
    }
}

proptest! {
    #[test]
    fn tracker_bound_is_monotone(
        steps in prop::collection::vec((prop::sample::select(vec![2u32, 4, 18, 20, 22]), 1i64..6), 1..12),
        floor in prop::option::of(prop::sample::select(vec![17u32, 18, 19])),
    ) {
        let mut t = BoundTracker::new(KummerCoeffs::new(3, 11, 21), floor);
        let mut best_even = u32::MAX;
        let mut last = u32::MAX;
        for (p, (rho, cls)) in steps.into_iter().enumerate() {
            let class = SquareClass::of(&BigInt::from(cls)).unwrap();
            t.push(rho, 3 + p as u32, Some(&class)).unwrap();
            best_even = best_even.min(rho);
            let b = t.bound().unwrap();
            prop_assert!(b <= last);
            prop_assert!(b == best_even || b + 1 == best_even);
            if let Some(f) = floor {
                prop_assert!(b >= f.min(best_even));
            }
            last = b;
        }
    }

    #[test]
    fn square_classes_multiply(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        prop_assume!(a != 0 && b != 0);
        let (ca, cb) = (SquareClass::of(&a.into()).unwrap(), SquareClass::of(&b.into()).unwrap());
        prop_assert_eq!(SquareClass::of(&BigInt::from(a * b)).unwrap(), ca.mul(&cb));
        prop_assert_eq!(SquareClass::of(&BigInt::from(a * b * b)).unwrap(), ca);
    }

    #[test]
    fn modular_polynomials_are_symmetric(n in 2u32..=5, x in -50i64..50, y in -50i64..50, d in 1i64..7) {
        let m = ModularPolynomial::load(n).unwrap();
        let (x, y) = (BigRational::new(x.into(), d.into()), BigRational::new(y.into(), 1.into()));
        prop_assert_eq!(m.eval_rational(&x, &y), m.eval_rational(&y, &x));
    }

    #[test]
    fn field_inverse_and_euler(v in 1i64..10_000, i in 0usize..SMALL_PRIMES.len()) {
        let p = SMALL_PRIMES[i];
        let x = FpElem::new(v, p);
        prop_assume!(!x.is_zero());
        prop_assert_eq!((x * x.inv().unwrap()).value(), 1);
        let chi = x.quad_char().unwrap();
        prop_assert_eq!(x.sqrt().is_some(), chi == 1);
    }
}
