//! Registry and verifier for the scalar and octonion identities.
//!
//! Every identity is evaluated on two independent paths. The left side is
//! always direct arithmetic on recurrence-generated values; the right side
//! is the identity's closed form. A check passes only on exact equality.
//!
//! Two identities do not hold as stated. Their printed form stays
//! registered as [`Variant::AsPrinted`] and fails where it should; a
//! rederived form is registered separately as [`Variant::Corrected`].

mod products;
mod report;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::octonion::{Octonion, ScaledOctonion};
use crate::octonion_sequences::{
    alpha, closed_numerator, epsilon_hat, oct_seq_with, OctonionSequenceKind,
};
use crate::scalar::{pow2, scalar_identity_sides_with, ScalarIdentity, SequenceCache};

pub use products::{
    bilinear_octonion_product, bilinear_product, closed_product, ProductOrder, U_TABLE,
    W_DENOMINATOR, W_TIMES_THREE,
};

macro_rules! identity_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// A registered identity.
        #[allow(non_camel_case_types)]
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant),+
        }

        impl IdentityId {
            /// Every identity, in suite order.
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),+];

            pub const fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name),+
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($name => Ok(IdentityId::$variant),)+
                    _ => Err(format!("unknown identity {s:?}")),
                }
            }
        }
    };
}

identity_ids! {
    E4 => "E4",
    E5 => "E5",
    EC5 => "EC5",
    E6 => "E6",
    E7 => "E7",
    E8 => "E8",
    E9 => "E9",
    E10 => "E10",
    E11 => "E11",
    E12 => "E12",
    JSUM => "JSUM",
    OCT_REC => "OCT_REC",
    BINET_JO => "BINET_JO",
    BINET_JOL => "BINET_JOL",
    T1_SUM => "T1_SUM",
    T1_SHIFT4 => "T1_SHIFT4",
    T1_NORM => "T1_NORM",
    T2_SUM => "T2_SUM",
    T2_SHIFT4 => "T2_SHIFT4",
    T2_NORM => "T2_NORM",
    T3_A => "T3_A",
    T3_B => "T3_B",
    T3_C => "T3_C",
    T3_D => "T3_D",
    T4_PROD_JOJ => "T4_PROD_JOJ",
    T4_PROD_JJO => "T4_PROD_JJO",
    T5_QUAD => "T5_QUAD",
    T6_QUAD => "T6_QUAD",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl IdentityId {
    pub fn descriptor(self) -> IdentityDescriptor {
        descriptor(self)
    }

    pub fn scalar(self) -> Option<ScalarIdentity> {
        use IdentityId::*;
        Some(match self {
            E4 => ScalarIdentity::E4,
            E5 => ScalarIdentity::E5,
            EC5 => ScalarIdentity::EC5,
            E6 => ScalarIdentity::E6,
            E7 => ScalarIdentity::E7,
            E8 => ScalarIdentity::E8,
            E9 => ScalarIdentity::E9,
            E10 => ScalarIdentity::E10,
            E11 => ScalarIdentity::E11,
            E12 => ScalarIdentity::E12,
            JSUM => ScalarIdentity::JSum,
            _ => return None,
        })
    }

    pub fn has_corrected(self) -> bool {
        self.descriptor().corrected.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// The identity exactly as printed.
    AsPrinted,
    /// A rederived form, checked against direct arithmetic.
    Corrected,
}

impl Variant {
    pub const fn name(self) -> &'static str {
        match self {
            Variant::AsPrinted => "printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Corrected forms have been confirmed against direct arithmetic for every
/// `n` in `0..=CORRECTION_VALIDATED_THROUGH`; the test suite re-runs that
/// confirmation.
pub const CORRECTION_VALIDATED_THROUGH: i64 = 60;

/// Static facts about one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    /// Printed statement, in plain notation.
    pub statement: &'static str,
    /// Corrected statement, when the printed one fails.
    pub corrected: Option<&'static str>,
    /// Smallest admissible `n`.
    pub n_min: i64,
    /// The residue class mod 3 to which the identity is restricted, if any.
    pub residue: Option<i64>,
}

impl IdentityDescriptor {
    /// `Ok` when `n` lies in the domain.
    pub fn check_domain(&self, n: i64) -> Result<()> {
        let reason = if n < 0 {
            "negative index"
        } else if n < self.n_min {
            "below the smallest admissible index"
        } else if self.residue.is_some_and(|r| n % 3 != r) {
            "the identity is stated for n = 0 (mod 3) only"
        } else {
            return Ok(());
        };
        Err(Error::Domain {
            id: self.id.name(),
            n,
            reason,
        })
    }
}

fn descriptor(id: IdentityId) -> IdentityDescriptor {
    use IdentityId::*;
    let (statement, corrected, n_min, residue) = match id {
        E4 => ("3 J_n + j_n = 2^{n+1}", None, 0, None),
        E5 => ("j_n - 3 J_n = 2 j_{n-3}", None, 3, None),
        EC5 => ("J_{n+2} - 4 J_n = -2 if n = 1 (mod 3), else 1", None, 0, None),
        E6 => ("j_n - 4 J_n = 2, -3, 1 for n = 0, 1, 2 (mod 3)", None, 0, None),
        E7 => ("j_{n+1} + j_n = 3 J_{n+2}", None, 0, None),
        E8 => ("j_n - J_{n+2} = 1, -1, 0 for n = 0, 1, 2 (mod 3)", None, 0, None),
        E9 => ("j_{n-3}^2 + 3 J_n j_n = 4^n", None, 3, None),
        E10 => ("sum_{k<=n} J_k = J_{n+1} - [n = 0 (mod 3)]", None, 0, None),
        E11 => ("sum_{k<=n} j_k = j_{n+1} + 1 if n = 0 (mod 3), else j_{n+1} - 2", None, 0, None),
        E12 => ("j_n^2 - 9 J_n^2 = 2^{n+2} j_{n-3}", None, 3, None),
        JSUM => ("J_{n+2} + J_{n+1} + J_n = 2^{n+1}", None, 0, None),
        OCT_REC => ("X_{n+2} = X_{n+1} + X_n + 2 X_{n-1} for X = JO, jO", None, 1, None),
        BINET_JO => ("7 JO_n = 2^{n+1} alpha - eps_n", None, 0, None),
        BINET_JOL => ("7 jO_n = 2^{n+3} alpha + 3 eps_n", None, 0, None),
        T1_SUM => ("JO_{n+2} + JO_{n+1} + JO_n = 2^{n+1} alpha", None, 0, None),
        T1_SHIFT4 => ("JO_{n+2} - 4 JO_n = residue-split constant octonion", None, 0, None),
        T1_NORM => ("49 |JO_n|^2 = 87380 4^n + (1024 2^n + 41 | 4 2^n + 38 | -1028 2^n + 33)", None, 0, None),
        T2_SUM => ("jO_{n+2} + jO_{n+1} + jO_n = 2^{n+3} alpha", None, 0, None),
        T2_SHIFT4 => ("jO_{n+2} - 4 jO_n = residue-split constant octonion", None, 0, None),
        T2_NORM => ("49 |jO_n|^2 = 21845 2^{2n+6} + (-12288 2^n + 369 | -48 2^n + 342 | 12336 2^n + 297)", None, 0, None),
        T3_A => ("jO_{n+3} - 3 JO_{n+3} = 2 jO_n", None, 0, None),
        T3_B => ("jO_n + jO_{n+1} = 3 JO_{n+2}", None, 0, None),
        T3_C => ("jO_n - JO_{n+2} = residue-split constant octonion", None, 0, None),
        T3_D => ("jO_n - 4 JO_n = residue-split constant octonion", None, 0, None),
        T4_PROD_JOJ => ("49 (jO_n JO_n) = coefficient polynomials in 2^n", None, 0, Some(0)),
        T4_PROD_JJO => ("49 (JO_n jO_n) = coefficient polynomials in 2^n", None, 0, Some(0)),
        T5_QUAD => (
            "jO_n^2 + 3 JO_{n+3} jO_{n+3} = 4^{n+3} alpha^2 + (3 2^{n+1} / 49)(25 alpha eps_n - 31 eps_n alpha)",
            Some("jO_n^2 + 3 JO_{n+3} jO_{n+3} = 4^{n+3} alpha^2 + (3 2^{n+3} / 7)(alpha eps_n - eps_n alpha)"),
            0,
            None,
        ),
        T6_QUAD => (
            "jO_n^2 - 9 JO_n^2 = (2^{n+1} / 7)(2 alpha^2 + 3(alpha eps_n + eps_n alpha))",
            Some("jO_n^2 - 9 JO_n^2 = (2^{n+1} / 7)(2^{n+1} alpha^2 + 3(alpha eps_n + eps_n alpha))"),
            0,
            None,
        ),
    };
    IdentityDescriptor {
        id,
        statement,
        corrected,
        n_min,
        residue,
    }
}

/// An exact value on one side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Scalar(BigRational),
    Octonion(ScaledOctonion),
    /// Several values checked together, compared elementwise.
    List(Vec<Value>),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(x) => x.is_zero(),
            Value::Octonion(x) => x.is_zero(),
            Value::List(xs) => xs.iter().all(Value::is_zero),
        }
    }

    /// `self - other`. Panics on mismatched shapes, which the registry
    /// never produces.
    pub fn difference(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a - b),
            (Value::Octonion(a), Value::Octonion(b)) => Value::Octonion(a - b),
            (Value::List(a), Value::List(b)) if a.len() == b.len() => {
                Value::List(a.iter().zip(b).map(|(x, y)| x.difference(y)).collect())
            }
            _ => panic!("mismatched value shapes"),
        }
    }

    pub fn as_octonion(&self) -> Option<&ScaledOctonion> {
        match self {
            Value::Octonion(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&BigRational> {
        match self {
            Value::Scalar(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(x) => write!(f, "{x}"),
            Value::Octonion(x) => write!(f, "{x}"),
            Value::List(xs) => {
                f.write_str("[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl From<BigInt> for Value {
    fn from(x: BigInt) -> Self {
        Value::Scalar(BigRational::from_integer(x))
    }
}

impl From<Octonion> for Value {
    fn from(x: Octonion) -> Self {
        Value::Octonion(x.into())
    }
}

impl From<ScaledOctonion> for Value {
    fn from(x: ScaledOctonion) -> Self {
        Value::Octonion(x)
    }
}

/// Outcome of checking one identity at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub variant: Variant,
    pub n: i64,
    pub passed: bool,
    pub lhs: Value,
    pub rhs: Value,
    pub delta: Value,
}

/// Outcome of checking one identity over `n_from..=n_to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeReport {
    pub id: IdentityId,
    pub variant: Variant,
    pub n_from: i64,
    pub n_to: i64,
    /// Indices outside the identity's domain.
    pub skipped: Vec<i64>,
    pub failures: Vec<VerificationReport>,
    pub total_checked: usize,
}

impl RangeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Which variants [`run_suite`] covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantPolicy {
    PrintedOnly,
    /// Every printed form, plus the corrected form where one exists.
    PrintedAndCorrected,
    /// Only the corrected forms.
    CorrectedOnly,
}

impl VariantPolicy {
    pub fn variants_for(self, id: IdentityId) -> Vec<Variant> {
        let corrected = id.has_corrected();
        match self {
            VariantPolicy::PrintedOnly => vec![Variant::AsPrinted],
            VariantPolicy::PrintedAndCorrected if corrected => {
                vec![Variant::AsPrinted, Variant::Corrected]
            }
            VariantPolicy::PrintedAndCorrected => vec![Variant::AsPrinted],
            VariantPolicy::CorrectedOnly if corrected => vec![Variant::Corrected],
            VariantPolicy::CorrectedOnly => vec![],
        }
    }
}

// Printed right sides of the residue-split octonion identities, by n mod 3.
const JO_SHIFT4: [[i64; 8]; 3] = [
    [1, -2, 1, 1, -2, 1, 1, -2],
    [-2, 1, 1, -2, 1, 1, -2, 1],
    [1, 1, -2, 1, 1, -2, 1, 1],
];
const JOL_SHIFT4: [[i64; 8]; 3] = [
    [-3, 6, -3, -3, 6, -3, -3, 6],
    [6, -3, -3, 6, -3, -3, 6, -3],
    [-3, -3, 6, -3, -3, 6, -3, -3],
];
const JOL_MINUS_JO_SHIFT2: [[i64; 8]; 3] = [
    [1, -1, 0, 1, -1, 0, 1, -1],
    [-1, 0, 1, -1, 0, 1, -1, 0],
    [0, 1, -1, 0, 1, -1, 0, 1],
];
const JOL_MINUS_4JO: [[i64; 8]; 3] = [
    [2, -3, 1, 2, -3, 1, 2, -3],
    [-3, 1, 2, -3, 1, 2, -3, 1],
    [1, 2, -3, 1, 2, -3, 1, 2],
];

struct Evaluator {
    cache: SequenceCache,
}

impl Evaluator {
    fn jo(&mut self, n: usize) -> Octonion {
        oct_seq_with(&mut self.cache, OctonionSequenceKind::JO, n)
    }

    fn jlo(&mut self, n: usize) -> Octonion {
        oct_seq_with(&mut self.cache, OctonionSequenceKind::jO, n)
    }

    fn sides(&mut self, id: IdentityId, variant: Variant, n: i64) -> Result<(Value, Value)> {
        use IdentityId::*;

        if let Some(scalar) = id.scalar() {
            let (l, r) = scalar_identity_sides_with(&mut self.cache, scalar, n)?;
            return Ok((l.into(), r.into()));
        }
        let m = n as usize;
        let int = |k: i64| BigInt::from(k);
        let residue = m % 3;
        let sides = match id {
            OCT_REC => {
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for kind in OctonionSequenceKind::ALL {
                    let at = |ev: &mut Self, k| oct_seq_with(&mut ev.cache, kind, k);
                    lhs.push(Value::from(at(self, m + 2)));
                    let sum = at(self, m + 1) + at(self, m) + at(self, m - 1).scale(&int(2));
                    rhs.push(Value::from(sum));
                }
                (Value::List(lhs), Value::List(rhs))
            }
            BINET_JO | BINET_JOL => {
                let kind = if id == BINET_JO {
                    OctonionSequenceKind::JO
                } else {
                    OctonionSequenceKind::jO
                };
                let direct = oct_seq_with(&mut self.cache, kind, m);
                let closed =
                    ScaledOctonion::new(closed_numerator(kind, m), int(7)).expect("nonzero");
                (direct.into(), closed.into())
            }
            T1_SUM => (
                (self.jo(m + 2) + self.jo(m + 1) + self.jo(m)).into(),
                alpha().scale(&pow2(m + 1)).into(),
            ),
            T2_SUM => (
                (self.jlo(m + 2) + self.jlo(m + 1) + self.jlo(m)).into(),
                alpha().scale(&pow2(m + 3)).into(),
            ),
            T1_SHIFT4 => (
                (self.jo(m + 2) - self.jo(m).scale(&int(4))).into(),
                Octonion::from(JO_SHIFT4[residue]).into(),
            ),
            T2_SHIFT4 => (
                (self.jlo(m + 2) - self.jlo(m).scale(&int(4))).into(),
                Octonion::from(JOL_SHIFT4[residue]).into(),
            ),
            T1_NORM => {
                let x = pow2(m);
                let tail = match residue {
                    0 => &x * 1024 + 41,
                    1 => &x * 4 + 38,
                    _ => &x * -1028 + 33,
                };
                let num = &x * &x * 87380 + tail;
                (
                    self.jo(m).norm_sq().into(),
                    Value::Scalar(BigRational::new(num, int(49))),
                )
            }
            T2_NORM => {
                let x = pow2(m);
                let tail = match residue {
                    0 => &x * -12288 + 369,
                    1 => &x * -48 + 342,
                    _ => &x * 12336 + 297,
                };
                let num = pow2(2 * m + 6) * 21845 + tail;
                (
                    self.jlo(m).norm_sq().into(),
                    Value::Scalar(BigRational::new(num, int(49))),
                )
            }
            T3_A => (
                (self.jlo(m + 3) - self.jo(m + 3).scale(&int(3))).into(),
                self.jlo(m).scale(&int(2)).into(),
            ),
            T3_B => (
                (self.jlo(m) + self.jlo(m + 1)).into(),
                self.jo(m + 2).scale(&int(3)).into(),
            ),
            T3_C => (
                (self.jlo(m) - self.jo(m + 2)).into(),
                Octonion::from(JOL_MINUS_JO_SHIFT2[residue]).into(),
            ),
            T3_D => (
                (self.jlo(m) - self.jo(m).scale(&int(4))).into(),
                Octonion::from(JOL_MINUS_4JO[residue]).into(),
            ),
            T4_PROD_JOJ => (
                (self.jlo(m) * self.jo(m)).into(),
                closed_product(ProductOrder::LucasTimesJacobsthal, n)?.into(),
            ),
            T4_PROD_JJO => (
                (self.jo(m) * self.jlo(m)).into(),
                closed_product(ProductOrder::JacobsthalTimesLucas, n)?.into(),
            ),
            T5_QUAD => {
                let lhs = self.jlo(m).square() + (self.jo(m + 3) * self.jlo(m + 3)).scale(&int(3));
                (lhs.into(), quadratic_sum_rhs(variant, m).into())
            }
            T6_QUAD => {
                let lhs = self.jlo(m).square() - self.jo(m).square().scale(&int(9));
                (lhs.into(), quadratic_difference_rhs(variant, m).into())
            }
            scalar => unreachable!("{scalar} is handled above"),
        };
        Ok(sides)
    }
}

fn bracket(alpha_eps: i64, eps_alpha: i64, n: usize) -> Octonion {
    let a = alpha();
    let e = epsilon_hat(n);
    (&a * &e).scale(&BigInt::from(alpha_eps)) + (&e * &a).scale(&BigInt::from(eps_alpha))
}

fn quadratic_sum_rhs(variant: Variant, n: usize) -> ScaledOctonion {
    let a = alpha();
    let leading = ScaledOctonion::from(a.square().scale(&pow2(2 * n + 6)));
    let correction = match variant {
        Variant::AsPrinted => {
            ScaledOctonion::new(bracket(25, -31, n).scale(&(3 * pow2(n + 1))), 49.into())
        }
        Variant::Corrected => {
            ScaledOctonion::new(bracket(1, -1, n).scale(&(3 * pow2(n + 3))), 7.into())
        }
    }
    .expect("nonzero");
    &leading + &correction
}

fn quadratic_difference_rhs(variant: Variant, n: usize) -> ScaledOctonion {
    let square_coeff = match variant {
        Variant::AsPrinted => BigInt::from(2),
        Variant::Corrected => pow2(n + 1),
    };
    let inner = alpha().square().scale(&square_coeff) + bracket(3, 3, n);
    ScaledOctonion::new(inner.scale(&pow2(n + 1)), 7.into()).expect("nonzero")
}

/// Checks `id` at `n`. Left side by direct arithmetic, right side by the
/// chosen variant's closed form.
pub fn verify(id: IdentityId, variant: Variant, n: i64) -> Result<VerificationReport> {
    verify_with(
        &mut Evaluator {
            cache: SequenceCache::new(),
        },
        id,
        variant,
        n,
    )
}

fn verify_with(
    ev: &mut Evaluator,
    id: IdentityId,
    variant: Variant,
    n: i64,
) -> Result<VerificationReport> {
    let desc = id.descriptor();
    if variant == Variant::Corrected && desc.corrected.is_none() {
        return Err(Error::UnknownVariant(id.name()));
    }
    desc.check_domain(n)?;
    let (lhs, rhs) = ev.sides(id, variant, n)?;
    let delta = lhs.difference(&rhs);
    Ok(VerificationReport {
        id,
        variant,
        n,
        passed: delta.is_zero(),
        lhs,
        rhs,
        delta,
    })
}

/// Checks `id` at every `n` in `n_from..=n_to`, skipping indices outside
/// its domain.
pub fn verify_range(
    id: IdentityId,
    variant: Variant,
    n_from: i64,
    n_to: i64,
) -> Result<RangeReport> {
    if variant == Variant::Corrected && !id.has_corrected() {
        return Err(Error::UnknownVariant(id.name()));
    }
    if n_from < 0 || n_from > n_to {
        return Err(Error::InvalidRange {
            from: n_from,
            to: n_to,
        });
    }
    let mut ev = Evaluator {
        cache: SequenceCache::new(),
    };
    let mut report = RangeReport {
        id,
        variant,
        n_from,
        n_to,
        skipped: Vec::new(),
        failures: Vec::new(),
        total_checked: 0,
    };
    for n in n_from..=n_to {
        match verify_with(&mut ev, id, variant, n) {
            Ok(r) => {
                report.total_checked += 1;
                if !r.passed {
                    report.failures.push(r);
                }
            }
            Err(Error::Domain { .. }) => report.skipped.push(n),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Every registered identity over `0..=n_to`, in registry order, with the
/// corrected row (if requested) directly after its printed row.
pub fn run_suite(policy: VariantPolicy, n_to: i64) -> Result<Vec<RangeReport>> {
    let mut out = Vec::new();
    for &id in IdentityId::ALL {
        for variant in policy.variants_for(id) {
            out.push(verify_range(id, variant, 0, n_to)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn names_round_trip() {
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!("T7_NOPE".parse::<IdentityId>().is_err());
        assert_eq!(IdentityId::ALL.len(), 28);
    }

    #[test]
    fn only_quadratics_have_corrections() {
        let with: Vec<_> = IdentityId::ALL
            .iter()
            .filter(|id| id.has_corrected())
            .collect();
        assert_eq!(with, [&IdentityId::T5_QUAD, &IdentityId::T6_QUAD]);
    }

    #[test]
    fn norm_at_zero() {
        let r = verify(IdentityId::T1_NORM, Variant::AsPrinted, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, Value::from(BigInt::from(1805)));
    }

    #[test]
    fn product_witness() {
        let r = verify(IdentityId::T4_PROD_JOJ, Variant::AsPrinted, 0).unwrap();
        assert!(r.passed);
        let lhs = r.lhs.as_octonion().unwrap();
        let scaled = lhs.scale_int(&BigInt::from(49));
        assert_eq!(scaled.numerator().coefficients()[0], BigInt::from(-349909));
        assert_eq!(scaled.numerator().coefficients()[1], BigInt::from(-7742));
    }

    #[test]
    fn printed_quadratic_sum_fails_at_zero() {
        let r = verify(IdentityId::T5_QUAD, Variant::AsPrinted, 0).unwrap();
        assert!(!r.passed);
        let lhs = r.lhs.as_octonion().unwrap();
        let rhs = r.rhs.as_octonion().unwrap();
        assert_eq!(
            lhs.coefficient(0),
            BigRational::from_integer((-1397952).into())
        );
        assert_eq!(
            rhs.coefficient(0),
            BigRational::from_integer((-1397952).into()) - BigRational::new(9360.into(), 49.into())
        );
        assert!(
            verify(IdentityId::T5_QUAD, Variant::Corrected, 0)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            verify(IdentityId::T4_PROD_JJO, Variant::AsPrinted, 1),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            verify(IdentityId::OCT_REC, Variant::AsPrinted, 0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            verify(IdentityId::E4, Variant::AsPrinted, -2),
            Err(Error::Domain { .. })
        ));
        assert_eq!(
            verify(IdentityId::E4, Variant::Corrected, 0),
            Err(Error::UnknownVariant("E4"))
        );
        assert_eq!(
            verify_range(IdentityId::E4, Variant::Corrected, 0, 3).unwrap_err(),
            Error::UnknownVariant("E4")
        );
        assert!(verify_range(IdentityId::E4, Variant::AsPrinted, 4, 3).is_err());
    }

    #[test]
    fn range_accounting() {
        let r = verify_range(IdentityId::E4, Variant::AsPrinted, 0, 100).unwrap();
        assert_eq!(
            (r.total_checked, r.failures.len(), r.skipped.len()),
            (101, 0, 0)
        );

        let r = verify_range(IdentityId::T4_PROD_JOJ, Variant::AsPrinted, 0, 10).unwrap();
        assert_eq!(r.total_checked, 4);
        assert_eq!(r.skipped, [1, 2, 4, 5, 7, 8, 10]);
        assert!(r.passed());

        let r = verify_range(IdentityId::T6_QUAD, Variant::AsPrinted, 0, 10).unwrap();
        let failed: Vec<i64> = r.failures.iter().map(|f| f.n).collect();
        assert_eq!(failed, (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn value_difference() {
        let one = Value::from(BigInt::one());
        assert!(one.difference(&one).is_zero());
        let l = Value::List(vec![one.clone(), Value::from(Octonion::one())]);
        assert!(l.difference(&l).is_zero());
    }
}
