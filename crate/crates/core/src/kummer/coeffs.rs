use std::fmt;

use serde::{Deserialize, Serialize};

/// The parameter vector [a, b, c] of the Kummer quartic Q_[a,b,c].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KummerCoeffs {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// Expected geometric Picard rank class of a sample surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RankClass {
    /// No coincidence among |a|, |b|, |c|: expected rank 17.
    Generic,
    /// Two entries of equal absolute value: expected rank 18.
    TwoEqual,
    /// |a| = |b| = |c|, or two entries zero: expected rank at least 19.
    Exceptional,
}

impl RankClass {
    /// The bound at which the sequential scan stops.
    pub fn target(self) -> u32 {
        match self {
            RankClass::Generic => 17,
            RankClass::TwoEqual => 18,
            RankClass::Exceptional => 19,
        }
    }
}

impl KummerCoeffs {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        KummerCoeffs { a, b, c }
    }

    pub fn as_array(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    /// k = a² + b² + c² − 1 − 2abc.
    pub fn k_value(&self) -> i64 {
        let (a, b, c) = (self.a, self.b, self.c);
        a * a + b * b + c * c - 1 - 2 * a * b * c
    }

    /// Symmetric matrix of φ in the variable order (x, y, z, w).
    pub fn phi_matrix(&self) -> [[i64; 4]; 4] {
        let (a, b, c) = (self.a, self.b, self.c);
        [[1, c, b, a], [c, 1, a, b], [b, a, 1, c], [a, b, c, 1]]
    }

    /// No entry is ±1 (no singular lines) and k ≠ 0 (reduced surface).
    pub fn is_valid_member(&self) -> bool {
        self.as_array().iter().all(|m| m.abs() != 1) && self.k_value() != 0
    }

    pub fn rank_class(&self) -> RankClass {
        let [a, b, c] = self.as_array().map(i64::abs);
        let zeros = [a, b, c].iter().filter(|&&m| m == 0).count();
        if (a == b && b == c) || zeros >= 2 {
            RankClass::Exceptional
        } else if a == b || b == c || a == c {
            RankClass::TwoEqual
        } else {
            RankClass::Generic
        }
    }

    /// Rewrites a surface with two entries of equal absolute value as an
    /// isomorphic [a, a, c] (sign changes and permutations of the variables).
    pub fn aac_form(&self) -> Option<(i64, i64)> {
        let v = self.as_array();
        // Changing the sign of two entries and permuting entries both preserve the
        // isomorphism class of the quartic.
        for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            if v[i].abs() == v[j].abs() {
                let a = v[i].abs();
                let mut c = v[l];
                if v[i] != v[j] {
                    // one sign flip on the pair forces one on the third entry
                    c = -c;
                }
                return Some((a, c));
            }
        }
        None
    }
}

impl fmt::Display for KummerCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

impl std::str::FromStr for KummerCoeffs {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<i64> = s
            .trim_matches(|c| c == '[' || c == ']')
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| crate::Error::Parse(format!("coefficients {s:?}: {e}")))?;
        match parts.as_slice() {
            [a, b, c] => Ok(KummerCoeffs::new(*a, *b, *c)),
            _ => Err(crate::Error::Parse(format!("expected three coefficients, got {s:?}"))),
        }
    }
}

/// k = a² + b² + c² − 1 − 2abc.
pub fn k_value(coeffs: &KummerCoeffs) -> i64 {
    coeffs.k_value()
}
