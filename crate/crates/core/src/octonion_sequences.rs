//! Third-order Jacobsthal octonions `JO_n` and Jacobsthal-Lucas octonions
//! `jO_n`: coefficient `s` is the scalar term at index `n + s`.
//!
//! Closed forms are kept in integer-cleared shape over 7:
//!
//! ```text
//! 7 JO_n = 2^{n+1} alpha - eps_n
//! 7 jO_n = 2^{n+3} alpha + 3 eps_n
//! ```
//!
//! with `alpha = sum 2^s e_s` and `eps_n` the period-3 octonion whose
//! coefficient `s` is `V_{n+s}`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::octonion::{Coefficient, Octonion};
use crate::scalar::{exact_div, pow2, ResidueClass, SequenceCache, SequenceKind, CORRECTION_TABLE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OctonionSequenceKind {
    /// Third-order Jacobsthal octonions.
    JO,
    /// Third-order Jacobsthal-Lucas octonions.
    #[allow(non_camel_case_types)]
    jO,
}

impl OctonionSequenceKind {
    pub const ALL: [OctonionSequenceKind; 2] = [OctonionSequenceKind::JO, OctonionSequenceKind::jO];

    /// The scalar sequence supplying the coefficients.
    pub const fn scalar_kind(self) -> SequenceKind {
        match self {
            OctonionSequenceKind::JO => SequenceKind::ThirdOrderJacobsthal,
            OctonionSequenceKind::jO => SequenceKind::ThirdOrderJacobsthalLucas,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            OctonionSequenceKind::JO => "JO",
            OctonionSequenceKind::jO => "jO",
        }
    }
}

impl fmt::Display for OctonionSequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `alpha = (1, 2, 4, ..., 128)`.
pub fn alpha() -> Octonion {
    Octonion::new(std::array::from_fn(pow2))
}

/// The three rows of `eps`, by `n mod 3`.
pub const EPSILON_TABLE: [[i64; 8]; 3] = [
    [2, -3, 1, 2, -3, 1, 2, -3],
    [-3, 1, 2, -3, 1, 2, -3, 1],
    [1, 2, -3, 1, 2, -3, 1, 2],
];

// Each row is the correction table read cyclically from its residue.
const _: () = {
    let mut r = 0;
    while r < 3 {
        let mut s = 0;
        while s < 8 {
            assert!(EPSILON_TABLE[r][s] == CORRECTION_TABLE[(r + s) % 3]);
            s += 1;
        }
        r += 1;
    }
};

/// `eps_n`; period 3 in `n`.
pub fn epsilon_hat(n: usize) -> Octonion {
    Octonion::from(EPSILON_TABLE[ResidueClass::of(n).get()])
}

pub(crate) fn oct_seq_with(
    cache: &mut SequenceCache,
    kind: OctonionSequenceKind,
    n: usize,
) -> Octonion {
    let scalar = kind.scalar_kind();
    Octonion::new(std::array::from_fn(|s| cache.get(scalar, n + s)))
}

/// `JO_n` or `jO_n` from recurrence-generated coefficients.
pub fn oct_seq(kind: OctonionSequenceKind, n: usize) -> Octonion {
    oct_seq_with(&mut SequenceCache::new(), kind, n)
}

/// `JO_n` or `jO_n` from the closed form; every coefficient division by 7
/// is checked for exactness.
pub fn oct_seq_closed(kind: OctonionSequenceKind, n: usize) -> Result<Octonion> {
    let seven_fold = closed_numerator(kind, n);
    let mut c: [Coefficient; 8] = Default::default();
    for (slot, x) in c.iter_mut().zip(seven_fold.into_coefficients()) {
        *slot = exact_div(x, 7, kind.name())?;
    }
    Ok(Octonion::new(c))
}

/// `7 JO_n` or `7 jO_n` by the closed form.
pub fn closed_numerator(kind: OctonionSequenceKind, n: usize) -> Octonion {
    let eps = epsilon_hat(n);
    match kind {
        OctonionSequenceKind::JO => alpha().scale(&pow2(n + 1)) - eps,
        OctonionSequenceKind::jO => alpha().scale(&pow2(n + 3)) + eps.scale(&BigInt::from(3)),
    }
}

/// The conjugate and the norm form of the `n`-th sequence octonion.
pub fn oct_conjugate_norm(kind: OctonionSequenceKind, n: usize) -> (Octonion, Coefficient) {
    let o = oct_seq(kind, n);
    (o.conjugate(), o.norm_sq())
}

#[cfg(test)]
mod tests {
    use super::*;
    use OctonionSequenceKind::{jO, JO};

    #[test]
    fn first_octonions() {
        assert_eq!(oct_seq(JO, 0), Octonion::from([0, 1, 1, 2, 5, 9, 18, 37]));
        assert_eq!(
            oct_seq(jO, 0),
            Octonion::from([2, 1, 5, 10, 17, 37, 74, 145])
        );
        assert_eq!(
            oct_seq(JO, 3),
            Octonion::from([2, 5, 9, 18, 37, 73, 146, 293])
        );
    }

    #[test]
    fn closed_at_small_n() {
        assert_eq!(oct_seq_closed(JO, 0).unwrap(), oct_seq(JO, 0));
        assert_eq!(oct_seq_closed(jO, 0).unwrap(), oct_seq(jO, 0));
        assert_eq!(oct_seq_closed(JO, 1).unwrap().real(), &BigInt::from(1));
    }

    #[test]
    fn constants() {
        assert_eq!(alpha(), Octonion::from([1, 2, 4, 8, 16, 32, 64, 128]));
        assert_eq!(epsilon_hat(0), Octonion::from([2, -3, 1, 2, -3, 1, 2, -3]));
        assert_eq!(epsilon_hat(5), epsilon_hat(2));
        let c = alpha().into_coefficients();
        for s in 0..7 {
            assert_eq!(&c[s + 1], &(&c[s] * 2));
        }
    }

    #[test]
    fn epsilon_links_the_two_sequences() {
        for n in 0..40 {
            assert_eq!(
                oct_seq(jO, n) - oct_seq(JO, n).scale(&BigInt::from(4)),
                epsilon_hat(n)
            );
        }
    }

    #[test]
    fn conjugate_and_norm() {
        let (conj, norm) = oct_conjugate_norm(JO, 0);
        assert_eq!(conj, Octonion::from([0, -1, -1, -2, -5, -9, -18, -37]));
        assert_eq!(norm, BigInt::from(1805));
        assert_eq!(oct_conjugate_norm(jO, 1).1, BigInt::from(114134));
        assert_eq!(oct_conjugate_norm(JO, 1).1, BigInt::from(7134));
    }
}
