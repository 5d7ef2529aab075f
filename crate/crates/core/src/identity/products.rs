//! Products of the two sequence octonions at the same index.
//!
//! Two closed routes exist next to the direct product:
//!
//! - [`closed_product`] evaluates the stated coefficient polynomials in
//!   `2^n` (valid for `n = 0 mod 3` only);
//! - [`bilinear_product`] evaluates `49 j_{n+r} J_{n+s}` (or the mirror
//!   order) from powers of two and three period-3 tables, and
//!   [`bilinear_octonion_product`] assembles all 64 of them through the
//!   basis table, for any `n`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::octonion::{basis_product, BasisIndex, Octonion, ScaledOctonion};
use crate::scalar::{correction, pow2};

/// Operand order of a product of the two sequence octonions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductOrder {
    /// `jO_n * JO_n`, or `j_{n+r} J_{n+s}` for scalars.
    LucasTimesJacobsthal,
    /// `JO_n * jO_n`, or `J_{n+r} j_{n+s}` for scalars.
    JacobsthalTimesLucas,
}

impl ProductOrder {
    pub const ALL: [ProductOrder; 2] = [
        ProductOrder::LucasTimesJacobsthal,
        ProductOrder::JacobsthalTimesLucas,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            ProductOrder::LucasTimesJacobsthal => "jO*JO",
            ProductOrder::JacobsthalTimesLucas => "JO*jO",
        }
    }
}

/// `W_m = a^2 w1^m + b^2 w2^m` has denominator 3; these are `3 W_m` by
/// `m mod 3`.
pub const W_TIMES_THREE: [i64; 3] = [-2, -11, 13];
pub const W_DENOMINATOR: i64 = 3;

/// `U_d = w1^r w2^s + w1^s w2^r` depends only on `d = (r - s) mod 3`.
pub const U_TABLE: [i64; 3] = [2, -1, -1];

fn w(m: usize) -> BigRational {
    BigRational::new(
        BigInt::from(W_TIMES_THREE[m % 3]),
        BigInt::from(W_DENOMINATOR),
    )
}

fn u(r: usize, s: usize) -> BigInt {
    BigInt::from(U_TABLE[(r % 3 + 3 - s % 3) % 3])
}

/// `49 j_{n+r} J_{n+s}` (or `49 J_{n+r} j_{n+s}`) from the expansion
///
/// ```text
/// 2^{2n+4+r+s} - 2^{n+r+3} V_{n+s} + 3 2^{n+s+1} V_{n+r} - 3 W_{2n+r+s} - 7 U_{r-s}
/// ```
///
/// (mirrored for the other order). The result is checked to be integral.
pub fn bilinear_product(order: ProductOrder, n: usize, r: usize, s: usize) -> Result<BigInt> {
    let (lucas, jac) = match order {
        ProductOrder::LucasTimesJacobsthal => (r, s),
        ProductOrder::JacobsthalTimesLucas => (s, r),
    };
    let int = pow2(2 * n + 4 + r + s) - pow2(n + lucas + 3) * correction(n + jac)
        + 3 * pow2(n + jac + 1) * correction(n + lucas)
        - 7 * u(r, s);
    let total = BigRational::from_integer(int) - w(2 * n + r + s) * BigInt::from(3);
    if total.is_integer() {
        Ok(total.to_integer())
    } else {
        Err(Error::Inconsistency(format!(
            "bilinear term {} at n={n}, r={r}, s={s} is not integral: {total}",
            order.name()
        )))
    }
}

/// `49 (jO_n * JO_n)` or `49 (JO_n * jO_n)`, summing [`bilinear_product`]
/// over all 64 basis pairs.
pub fn bilinear_octonion_product(order: ProductOrder, n: usize) -> Result<Octonion> {
    let mut c: [BigInt; 8] = Default::default();
    for i in BasisIndex::all() {
        for j in BasisIndex::all() {
            let b = basis_product(i, j);
            let term = bilinear_product(order, n, i.get(), j.get())?;
            let slot = &mut c[b.index().get()];
            if b.is_negative() {
                *slot -= term;
            } else {
                *slot += term;
            }
        }
    }
    Ok(Octonion::new(c))
}

// Coefficients of 4^n, 2^n and 1 for each basis unit, times 49.
const PRODUCT_LUCAS_FIRST: [(i64, i64, i64); 8] = [
    (-349488, -520, 99),
    (1 << 6, -7842, 36),
    (1 << 7, 374, -12),
    (1 << 8, -4936, -24),
    (1 << 9, -3390, 36),
    (1 << 10, -1110, -12),
    (1 << 11, -5944, -24),
    (1 << 12, 3414, 36),
];

const PRODUCT_JACOBSTHAL_FIRST: [(i64, i64, i64); 8] = [
    (-349488, -520, 99),
    (1 << 6, 7838, 36),
    (1 << 7, -410, -12),
    (1 << 8, 4864, -24),
    (1 << 9, 3274, 36),
    (1 << 10, 850, -12),
    (1 << 11, 5424, -24),
    (1 << 12, -4426, 36),
];

/// The stated closed form of the product, for `n = 0 mod 3`.
pub fn closed_product(order: ProductOrder, n: i64) -> Result<ScaledOctonion> {
    let id = match order {
        ProductOrder::LucasTimesJacobsthal => "T4_PROD_JOJ",
        ProductOrder::JacobsthalTimesLucas => "T4_PROD_JJO",
    };
    if n < 0 {
        return Err(Error::Domain {
            id,
            n,
            reason: "negative index",
        });
    }
    if n % 3 != 0 {
        return Err(Error::Domain {
            id,
            n,
            reason: "the closed product is stated for n = 0 (mod 3) only",
        });
    }
    let table = match order {
        ProductOrder::LucasTimesJacobsthal => &PRODUCT_LUCAS_FIRST,
        ProductOrder::JacobsthalTimesLucas => &PRODUCT_JACOBSTHAL_FIRST,
    };
    let x = pow2(n as usize);
    let x2 = &x * &x;
    let num = Octonion::new(std::array::from_fn(|s| {
        let (quad, lin, constant) = table[s];
        &x2 * quad + &x * lin + constant
    }));
    Ok(ScaledOctonion::new(num, BigInt::from(49)).expect("nonzero"))
}
