//! Exact octonion arithmetic over arbitrary-precision integers.
//!
//! An [`Octonion`] is eight [`Coefficient`]s over the basis `e0..e7`, with
//! `e0` the real unit. Multiplication is the bilinear extension of the basis
//! table in [`basis`]; it is neither commutative nor associative, but it is
//! alternative and the norm form is multiplicative.
//!
//! [`ScaledOctonion`] adds a positive denominator for identities with
//! rational factors.

pub mod basis;
mod scaled;
mod serialize;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use basis::{basis_product, multiplication_table, BasisIndex, SignedBasis};
pub use scaled::ScaledOctonion;

/// Arbitrary-precision signed integer; every sequence value and octonion
/// component.
pub type Coefficient = BigInt;

/// `c[0] + c[1] e1 + ... + c[7] e7` with exact integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Octonion {
    c: [Coefficient; 8],
}

impl Octonion {
    pub fn new(c: [Coefficient; 8]) -> Self {
        Octonion { c }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The real unit `e0`.
    pub fn one() -> Self {
        Self::unit(BasisIndex::REAL)
    }

    /// The basis unit `e_s`.
    pub fn unit(s: BasisIndex) -> Self {
        let mut o = Self::zero();
        o.c[s.get()] = BigInt::one();
        o
    }

    pub fn from_signed_basis(b: SignedBasis) -> Self {
        let mut o = Self::zero();
        o.c[b.index().get()] = BigInt::from(b.sign());
        o
    }

    pub fn coefficients(&self) -> &[Coefficient; 8] {
        &self.c
    }

    pub fn into_coefficients(self) -> [Coefficient; 8] {
        self.c
    }

    pub fn coefficient(&self, s: BasisIndex) -> &Coefficient {
        &self.c[s.get()]
    }

    pub fn real(&self) -> &Coefficient {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Real part kept, imaginary part negated.
    pub fn conjugate(&self) -> Self {
        let mut c = self.c.clone();
        for x in &mut c[1..] {
            *x = -&*x;
        }
        Octonion { c }
    }

    /// Sum of squares of the eight coefficients.
    pub fn norm_sq(&self) -> Coefficient {
        self.c.iter().map(|x| x * x).sum()
    }

    pub fn scale(&self, k: &Coefficient) -> Self {
        Octonion {
            c: std::array::from_fn(|s| &self.c[s] * k),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Applies `f` to every coefficient.
    pub fn map(&self, f: impl FnMut(&Coefficient) -> Coefficient) -> Self {
        let mut f = f;
        Octonion {
            c: std::array::from_fn(|s| f(&self.c[s])),
        }
    }

    fn mul_ref(&self, rhs: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let b = basis_product(
                    BasisIndex::new(i as u8).unwrap(),
                    BasisIndex::new(j as u8).unwrap(),
                );
                let term = x * y;
                let slot = &mut out.c[b.index().get()];
                if b.is_negative() {
                    *slot -= term;
                } else {
                    *slot += term;
                }
            }
        }
        out
    }
}

impl<T: Into<Coefficient>> From<[T; 8]> for Octonion {
    fn from(values: [T; 8]) -> Self {
        let mut it = values.into_iter();
        Octonion {
            c: std::array::from_fn(|_| it.next().unwrap().into()),
        }
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (s, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let neg = x < &BigInt::zero();
            let mag = if neg { -x } else { x.clone() };
            match (wrote, neg) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            if s == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "e{s}")?;
            } else {
                write!(f, "{mag}e{s}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Octonion> for &Octonion {
            type Output = Octonion;
            fn $method(self, rhs: &Octonion) -> Octonion {
                $body(self, rhs)
            }
        }
        impl $trait<Octonion> for Octonion {
            type Output = Octonion;
            fn $method(self, rhs: Octonion) -> Octonion {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Octonion> for Octonion {
            type Output = Octonion;
            fn $method(self, rhs: &Octonion) -> Octonion {
                $body(&self, rhs)
            }
        }
        impl $trait<Octonion> for &Octonion {
            type Output = Octonion;
            fn $method(self, rhs: Octonion) -> Octonion {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Octonion, b: &Octonion| Octonion {
    c: std::array::from_fn(|s| &a.c[s] + &b.c[s]),
});
forward_binop!(Sub, sub, |a: &Octonion, b: &Octonion| Octonion {
    c: std::array::from_fn(|s| &a.c[s] - &b.c[s]),
});
forward_binop!(Mul, mul, |a: &Octonion, b: &Octonion| a.mul_ref(b));

impl AddAssign<&Octonion> for Octonion {
    fn add_assign(&mut self, rhs: &Octonion) {
        for (x, y) in self.c.iter_mut().zip(&rhs.c) {
            *x += y;
        }
    }
}

impl SubAssign<&Octonion> for Octonion {
    fn sub_assign(&mut self, rhs: &Octonion) {
        for (x, y) in self.c.iter_mut().zip(&rhs.c) {
            *x -= y;
        }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        -&self
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.map(|x| -x)
    }
}

impl Mul<&Octonion> for &Coefficient {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        rhs.scale(self)
    }
}

impl Mul<&Octonion> for i64 {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        rhs.scale(&BigInt::from(self))
    }
}

impl std::iter::Sum for Octonion {
    fn sum<I: Iterator<Item = Octonion>>(iter: I) -> Self {
        iter.fold(Octonion::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}
