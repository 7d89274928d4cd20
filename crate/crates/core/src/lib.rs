//! Upper bounds for the geometric Picard rank of Kummer quartic surfaces
//! `Q_[a,b,c]` by reduction modulo primes.
//!
//! The pipeline for one surface and one prime p is:
//!
//! 1. [`kummer::good_prime_test`] rejects p when the reduction is not a
//!    quartic with sixteen ordinary double points.
//! 2. [`genus2::trope_to_sextic`] builds the genus-2 curve whose Jacobian
//!    covers the surface, and [`genus2::h1_charpoly`] turns point counts over
//!    F_p and F_p² into the Frobenius polynomial on H¹.
//! 3. [`frobchar`] takes the exterior square, adds the sixteen node classes
//!    and counts eigenvalues of the form p·ζ. The Artin-Tate square class is
//!    attached so that two primes can be compared.
//! 4. [`harness`] scans primes and combines them into a bound.

pub mod error;
pub mod ffield;
pub mod frobchar;
pub mod genus2;
pub mod harness;
pub mod jmod;
pub mod kummer;
pub mod par;

pub use error::{Error, Result};
