//! j-invariants of the elliptic curves behind the tetrahedroid cases, classical
//! modular polynomials, and the inert-prime predictor.

mod inert;
mod jpair;
mod modpoly;
mod quadratic;

pub use inert::{inert_prime_prediction, InertPrediction};
pub use jpair::{j_equal_case, j_pair, modular_relation_check, pair_is_isogenous, JPair};
pub use modpoly::ModularPolynomial;
pub use quadratic::{is_perfect_square, rational_sqrt, QuadraticNumber};
