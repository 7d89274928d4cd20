use serde::{Deserialize, Serialize};

use super::quadratic::is_perfect_square;
use crate::error::{Error, Result};
use crate::ffield::FpElem;
use crate::kummer::KummerCoeffs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InertPrediction {
    /// p is inert in Q(√D'): the rank bound at p is at least 20.
    PredictedAtLeast20,
    NoPrediction,
    /// D' = 4a² − 2c − 2 is a perfect square, so no prime is inert.
    Inapplicable,
}

/// Predicts bound ≥ 20 at primes inert in Q(√(4a² − 2c − 2)) for a surface
/// with two entries of equal absolute value.
pub fn inert_prime_prediction(coeffs: &KummerCoeffs, p: u32) -> Result<InertPrediction> {
    let (a, c) = coeffs
        .aac_form()
        .ok_or_else(|| Error::Shape(format!("{coeffs} has no two entries of equal absolute value")))?;
    let d = 4 * a * a - 2 * c - 2;
    if is_perfect_square(&d.into()) {
        return Ok(InertPrediction::Inapplicable);
    }
    Ok(match FpElem::new(d, p).quad_char()? {
        -1 => InertPrediction::PredictedAtLeast20,
        _ => InertPrediction::NoPrediction,
    })
}
