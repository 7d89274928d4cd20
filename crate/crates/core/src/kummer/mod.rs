//! The Kummer family Q_[a,b,c] and the tetrahedroid family, their nodes and
//! reductions, the sample of 9452 surfaces, and brute-force oracles over F_p.

mod brute;
mod coeffs;
mod form;
mod iso;
mod reduction;
mod sample;

pub use brute::{brute_force_surface_counts, projective_points, SurfaceCounts};
pub use coeffs::{k_value, KummerCoeffs, RankClass};
pub use form::{
    kummer_form, kummer_phi, tetra_bordered_det, tetra_form, tetra_form_from_squares, Coeff, Form,
    IntQuarticForm, Monomial, QuarticForm, TetraCoeffs,
};
pub use iso::{verify_kumeq_iso, verify_weber_map, Check};
pub use reduction::{
    arithmetic_bad_reason, good_prime_test, normalize_point, obvious_node_orbits, BadReason,
    NodeOrbitData, Reduction, Splitting,
};
pub use sample::{enumerate_sample, exclusion, Exclusion, SAMPLE_BOX};
