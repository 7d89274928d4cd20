//! Frobenius on H² of the resolved Kummer surface: the degree-22 polynomial,
//! rank bounds, Artin-Tate square classes and the combination of primes.

mod artin_tate;
mod combine;
mod intpoly;
mod nodes;
mod rank;
mod weil;

pub use artin_tate::{artin_tate_square_class, disc_class_fast, squarefree_part, squarefree_part_u64, SquareClass};
pub use combine::{classify_prime, combine_bounds, BoundTracker, CombinedBound, PrimeQuality, PrimeRecord};
pub use intpoly::IntPoly;
pub use nodes::{node_action, two_torsion_cycles};
pub use rank::{analyze, cyclotomic, euler_phi, rank_bound, scaled_cyclotomic, strip_cyclotomic, RankAnalysis, CYCLOTOMIC_ORDERS};
pub use weil::{
    assemble_phi, constant_term_check, exterior_square, extension_charpoly, functional_equation_sign, polynomial_roots,
    weil_check, WeilPolynomial,
};
