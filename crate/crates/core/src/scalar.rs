//! Jacobsthal-type integer sequences.
//!
//! The classic pair obeys `x_{n+1} = x_n + 2 x_{n-1}`; the third-order pair
//! obeys `x_{n+3} = x_{n+2} + x_{n+1} + 2 x_n`. The third-order
//! characteristic polynomial `x^3 - x^2 - x - 2` has roots `2`, `w1`, `w2`
//! (the primitive cube roots of unity), so every Binet expression reduces
//! to a power of two plus a period-3 integer correction:
//!
//! ```text
//! V_n = a w1^n + b w2^n,  a = 1 + 2i/sqrt(3),  b = conj(a)
//!     = 2, -3, 1   for n = 0, 1, 2 (mod 3)
//!
//! 7 J_n = 2^{n+1} - V_n
//! 7 j_n = 2^{n+3} + 3 V_n
//! ```
//!
//! Sequence values come from the recurrence; the closed forms exist to be
//! checked against it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::octonion::Coefficient;

/// Which integer sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    /// `J_0 = 0, J_1 = 1, J_{n+1} = J_n + 2 J_{n-1}`.
    Jacobsthal,
    /// `j_0 = 2, j_1 = 1`, same recurrence.
    JacobsthalLucas,
    /// `J_0 = 0, J_1 = J_2 = 1`, third-order recurrence.
    ThirdOrderJacobsthal,
    /// `j_0 = 2, j_1 = 1, j_2 = 5`, third-order recurrence.
    ThirdOrderJacobsthalLucas,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::Jacobsthal,
        SequenceKind::JacobsthalLucas,
        SequenceKind::ThirdOrderJacobsthal,
        SequenceKind::ThirdOrderJacobsthalLucas,
    ];

    pub const fn is_third_order(self) -> bool {
        matches!(
            self,
            SequenceKind::ThirdOrderJacobsthal | SequenceKind::ThirdOrderJacobsthalLucas
        )
    }

    pub const fn name(self) -> &'static str {
        match self {
            SequenceKind::Jacobsthal => "jacobsthal",
            SequenceKind::JacobsthalLucas => "jacobsthal-lucas",
            SequenceKind::ThirdOrderJacobsthal => "j3",
            SequenceKind::ThirdOrderJacobsthalLucas => "jl3",
        }
    }

    const fn seeds(self) -> &'static [i64] {
        match self {
            SequenceKind::Jacobsthal => &[0, 1],
            SequenceKind::JacobsthalLucas => &[2, 1],
            SequenceKind::ThirdOrderJacobsthal => &[0, 1, 1],
            SequenceKind::ThirdOrderJacobsthalLucas => &[2, 1, 5],
        }
    }

    const fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `n mod 3`; selects the case of every residue-split formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueClass(u8);

impl ResidueClass {
    pub fn of(n: usize) -> Self {
        ResidueClass((n % 3) as u8)
    }

    pub fn new(r: u8) -> Option<Self> {
        (r < 3).then_some(ResidueClass(r))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

/// `V_n = a w1^n + b w2^n`, tabulated by `n mod 3`. Sums to zero.
pub const CORRECTION_TABLE: [i64; 3] = [2, -3, 1];

/// The period-3 correction `V_n`.
pub fn correction(n: usize) -> Coefficient {
    BigInt::from(CORRECTION_TABLE[ResidueClass::of(n).get()])
}

pub(crate) fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

/// Growable table of recurrence values for all four kinds.
///
/// Grows monotonically on demand; never shared between threads by this
/// crate, so every public function that takes no cache builds its own.
#[derive(Debug, Clone, Default)]
pub struct SequenceCache {
    terms: [Vec<Coefficient>; 4],
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The `n`-th term of `kind` by its defining recurrence.
    pub fn value(&mut self, kind: SequenceKind, n: usize) -> &Coefficient {
        let terms = &mut self.terms[kind.index()];
        if terms.is_empty() {
            terms.extend(kind.seeds().iter().map(|&x| BigInt::from(x)));
        }
        while terms.len() <= n {
            let k = terms.len();
            let next = if kind.is_third_order() {
                &terms[k - 1] + &terms[k - 2] + (&terms[k - 3] << 1)
            } else {
                &terms[k - 1] + (&terms[k - 2] << 1)
            };
            terms.push(next);
        }
        &terms[n]
    }

    pub fn get(&mut self, kind: SequenceKind, n: usize) -> Coefficient {
        self.value(kind, n).clone()
    }

    /// Literal `sum_{k=0}^{n}` of the terms.
    pub fn partial_sum(&mut self, kind: SequenceKind, n: usize) -> Coefficient {
        self.value(kind, n);
        self.terms[kind.index()][..=n].iter().sum()
    }
}

/// The `n`-th term by recurrence.
pub fn seq_value(kind: SequenceKind, n: usize) -> Coefficient {
    SequenceCache::new().get(kind, n)
}

/// Terms `from..=to` by recurrence. Empty when `from > to`.
pub fn seq_range(kind: SequenceKind, from: usize, to: usize) -> Vec<Coefficient> {
    let mut cache = SequenceCache::new();
    (from..=to).map(|n| cache.get(kind, n)).collect()
}

pub(crate) fn exact_div(num: BigInt, den: i64, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inconsistency(format!(
            "{what}: {num} is not divisible by {den}"
        )))
    }
}

/// The radical-free Binet form of a third-order sequence:
/// `(2^{n+1} - V_n) / 7` or `(2^{n+3} + 3 V_n) / 7`.
pub fn seq_closed(kind: SequenceKind, n: usize) -> Result<Coefficient> {
    let v = correction(n);
    match kind {
        SequenceKind::ThirdOrderJacobsthal => exact_div(pow2(n + 1) - v, 7, "closed J"),
        SequenceKind::ThirdOrderJacobsthalLucas => exact_div(pow2(n + 3) + 3 * v, 7, "closed j"),
        other => Err(Error::UnsupportedKind(other.name())),
    }
}

/// `sum_{k=0}^{n} x_k` for a third-order kind, by direct summation.
pub fn partial_sum(kind: SequenceKind, n: usize) -> Result<Coefficient> {
    if !kind.is_third_order() {
        return Err(Error::UnsupportedKind(kind.name()));
    }
    Ok(SequenceCache::new().partial_sum(kind, n))
}

/// The residue-split closed form of the partial sum:
///
/// ```text
/// sum J_k = J_{n+1} - [n = 0 mod 3]
/// sum j_k = j_{n+1} + 1  if n = 0 mod 3,  j_{n+1} - 2 otherwise
/// ```
pub fn partial_sum_closed(kind: SequenceKind, n: usize) -> Result<Coefficient> {
    partial_sum_closed_with(&mut SequenceCache::new(), kind, n)
}

fn partial_sum_closed_with(
    cache: &mut SequenceCache,
    kind: SequenceKind,
    n: usize,
) -> Result<Coefficient> {
    let divisible = n.is_multiple_of(3);
    let next = cache.get(kind, n + 1);
    match kind {
        SequenceKind::ThirdOrderJacobsthal => Ok(if divisible { next - 1 } else { next }),
        SequenceKind::ThirdOrderJacobsthalLucas => Ok(if divisible { next + 1 } else { next - 2 }),
        other => Err(Error::UnsupportedKind(other.name())),
    }
}

/// The scalar identities between third-order Jacobsthal (`J`) and
/// Jacobsthal-Lucas (`j`) numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarIdentity {
    /// `3 J_n + j_n = 2^{n+1}`
    E4,
    /// `j_n - 3 J_n = 2 j_{n-3}`, n >= 3
    E5,
    /// `J_{n+2} - 4 J_n = -2` if n = 1 (mod 3), else `1`
    EC5,
    /// `j_n - 4 J_n = 2, -3, 1` by n mod 3
    E6,
    /// `j_{n+1} + j_n = 3 J_{n+2}`
    E7,
    /// `j_n - J_{n+2} = 1, -1, 0` by n mod 3
    E8,
    /// `j_{n-3}^2 + 3 J_n j_n = 4^n`, n >= 3
    E9,
    /// `sum_{k<=n} J_k = J_{n+1}` or `J_{n+1} - 1` when n = 0 (mod 3)
    E10,
    /// `sum_{k<=n} j_k = j_{n+1} - 2` or `j_{n+1} + 1` when n = 0 (mod 3)
    E11,
    /// `j_n^2 - 9 J_n^2 = 2^{n+2} j_{n-3}`, n >= 3
    E12,
    /// `J_{n+2} + J_{n+1} + J_n = 2^{n+1}`
    JSum,
}

impl ScalarIdentity {
    pub const ALL: [ScalarIdentity; 11] = [
        ScalarIdentity::E4,
        ScalarIdentity::E5,
        ScalarIdentity::EC5,
        ScalarIdentity::E6,
        ScalarIdentity::E7,
        ScalarIdentity::E8,
        ScalarIdentity::E9,
        ScalarIdentity::E10,
        ScalarIdentity::E11,
        ScalarIdentity::E12,
        ScalarIdentity::JSum,
    ];

    /// Smallest admissible index. Identities that reach back to `j_{n-3}`
    /// start at 3 because terms below index 0 are not defined.
    pub const fn n_min(self) -> usize {
        match self {
            ScalarIdentity::E5 | ScalarIdentity::E9 | ScalarIdentity::E12 => 3,
            _ => 0,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            ScalarIdentity::E4 => "E4",
            ScalarIdentity::E5 => "E5",
            ScalarIdentity::EC5 => "EC5",
            ScalarIdentity::E6 => "E6",
            ScalarIdentity::E7 => "E7",
            ScalarIdentity::E8 => "E8",
            ScalarIdentity::E9 => "E9",
            ScalarIdentity::E10 => "E10",
            ScalarIdentity::E11 => "E11",
            ScalarIdentity::E12 => "E12",
            ScalarIdentity::JSum => "JSUM",
        }
    }
}

/// Both sides of a scalar identity at `n`, exactly.
pub fn scalar_identity_sides(id: ScalarIdentity, n: i64) -> Result<(Coefficient, Coefficient)> {
    scalar_identity_sides_with(&mut SequenceCache::new(), id, n)
}

pub(crate) fn scalar_identity_sides_with(
    cache: &mut SequenceCache,
    id: ScalarIdentity,
    n: i64,
) -> Result<(Coefficient, Coefficient)> {
    use SequenceKind::{ThirdOrderJacobsthal as TJ, ThirdOrderJacobsthalLucas as TL};

    if n < id.n_min() as i64 {
        return Err(Error::Domain {
            id: id.name(),
            n,
            reason: if n < 0 {
                "negative index"
            } else {
                "references a term below index 0"
            },
        });
    }
    let n = n as usize;
    let r = n % 3;
    let sides = match id {
        ScalarIdentity::E4 => (3 * cache.get(TJ, n) + cache.get(TL, n), pow2(n + 1)),
        ScalarIdentity::E5 => (
            cache.get(TL, n) - 3 * cache.get(TJ, n),
            2 * cache.get(TL, n - 3),
        ),
        ScalarIdentity::EC5 => (
            cache.get(TJ, n + 2) - 4 * cache.get(TJ, n),
            BigInt::from(if r == 1 { -2 } else { 1 }),
        ),
        ScalarIdentity::E6 => (
            cache.get(TL, n) - 4 * cache.get(TJ, n),
            BigInt::from([2, -3, 1][r]),
        ),
        ScalarIdentity::E7 => (
            cache.get(TL, n + 1) + cache.get(TL, n),
            3 * cache.get(TJ, n + 2),
        ),
        ScalarIdentity::E8 => (
            cache.get(TL, n) - cache.get(TJ, n + 2),
            BigInt::from([1, -1, 0][r]),
        ),
        ScalarIdentity::E9 => {
            let back = cache.get(TL, n - 3);
            (
                &back * &back + 3 * cache.get(TJ, n) * cache.get(TL, n),
                pow2(2 * n),
            )
        }
        ScalarIdentity::E10 => (
            cache.partial_sum(TJ, n),
            partial_sum_closed_with(cache, TJ, n)?,
        ),
        ScalarIdentity::E11 => (
            cache.partial_sum(TL, n),
            partial_sum_closed_with(cache, TL, n)?,
        ),
        ScalarIdentity::E12 => {
            let lucas = cache.get(TL, n);
            let jac = cache.get(TJ, n);
            (
                &lucas * &lucas - 9 * &jac * &jac,
                pow2(n + 2) * cache.get(TL, n - 3),
            )
        }
        ScalarIdentity::JSum => (
            cache.get(TJ, n + 2) + cache.get(TJ, n + 1) + cache.get(TJ, n),
            pow2(n + 1),
        ),
    };
    Ok(sides)
}
