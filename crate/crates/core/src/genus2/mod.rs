//! The genus-2 curve attached to a trope, its point counts over F_p and F_p²,
//! and the Frobenius polynomial on H¹.

mod count;
mod h1;
mod sextic;

pub use count::{count_points_by_pairs, count_points_fp, count_points_fp2, count_points_fp2_naive};
pub use h1::{h1_charpoly, H1CharPoly};
pub use sextic::{trope_to_sextic, Trope, TropeSextic};

use crate::error::{Error, Result};
use crate::ffield::PrimeField;
use crate::par::Exec;

/// #C(F_q) for q = p (`extension` 1) or q = p² (`extension` 2).
pub fn count_curve_points(s: &TropeSextic, extension: u32) -> Result<u64> {
    match extension {
        1 => count_points_fp(&s.f),
        2 => count_points_fp2(&s.f, &PrimeField::new(s.p as u64)?, Exec::Sequential),
        e => Err(Error::Consistency(format!("extension degree {e} not supported"))),
    }
}
