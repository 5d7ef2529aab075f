use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Coefficient, Octonion};

/// An octonion with rational coefficients sharing one denominator:
/// `numerator / denominator`.
///
/// Always normalized: the denominator is positive and coprime to the gcd of
/// the numerator's coefficients, and a zero numerator carries denominator 1.
/// Equality is cross-multiplied, so it holds across representations.
#[derive(Debug, Clone, Eq)]
pub struct ScaledOctonion {
    num: Octonion,
    den: BigInt,
}

impl ScaledOctonion {
    /// Returns `None` when `den` is zero. A negative denominator moves its
    /// sign into the numerator.
    pub fn new(num: Octonion, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalized(num, den))
    }

    pub fn zero() -> Self {
        Self::from(Octonion::zero())
    }

    pub fn numerator(&self) -> &Octonion {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `true` when the value has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn into_octonion(self) -> Option<Octonion> {
        self.is_integral().then_some(self.num)
    }

    /// Multiplies by the rational `factor`.
    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::normalized(self.num.scale(factor.numer()), &self.den * factor.denom())
    }

    pub fn scale_int(&self, k: &Coefficient) -> Self {
        Self::normalized(self.num.scale(k), self.den.clone())
    }

    /// Divides by a nonzero integer. Returns `None` for `k = 0`.
    pub fn div_int(&self, k: &Coefficient) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        Some(Self::normalized(self.num.clone(), &self.den * k))
    }

    pub fn conjugate(&self) -> Self {
        ScaledOctonion {
            num: self.num.conjugate(),
            den: self.den.clone(),
        }
    }

    pub fn norm_sq(&self) -> BigRational {
        BigRational::new(self.num.norm_sq(), &self.den * &self.den)
    }

    /// Coefficient `s` as an exact rational.
    pub fn coefficient(&self, s: usize) -> BigRational {
        BigRational::new(self.num.coefficients()[s].clone(), self.den.clone())
    }

    fn normalized(num: Octonion, den: BigInt) -> Self {
        let (num, den) = if den.sign() == Sign::Minus {
            (-num, -den)
        } else {
            (num, den)
        };
        if num.is_zero() {
            return ScaledOctonion {
                num,
                den: BigInt::one(),
            };
        }
        let g = num.coefficients().iter().fold(den.clone(), |g, x| g.gcd(x));
        if g.is_one() {
            ScaledOctonion { num, den }
        } else {
            ScaledOctonion {
                num: num.map(|x| x / &g),
                den: den / &g,
            }
        }
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&Octonion, &Octonion) -> Octonion) -> Self {
        if self.den == rhs.den {
            return Self::normalized(f(&self.num, &rhs.num), self.den.clone());
        }
        let l = self.den.lcm(&rhs.den);
        let a = self.num.scale(&(&l / &self.den));
        let b = rhs.num.scale(&(&l / &rhs.den));
        Self::normalized(f(&a, &b), l)
    }
}

impl From<Octonion> for ScaledOctonion {
    fn from(num: Octonion) -> Self {
        ScaledOctonion {
            num,
            den: BigInt::one(),
        }
    }
}

impl PartialEq for ScaledOctonion {
    fn eq(&self, other: &Self) -> bool {
        self.num.scale(&other.den) == other.num.scale(&self.den)
    }
}

impl fmt::Display for ScaledOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

impl Add<&ScaledOctonion> for &ScaledOctonion {
    type Output = ScaledOctonion;
    fn add(self, rhs: &ScaledOctonion) -> ScaledOctonion {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub<&ScaledOctonion> for &ScaledOctonion {
    type Output = ScaledOctonion;
    fn sub(self, rhs: &ScaledOctonion) -> ScaledOctonion {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul<&ScaledOctonion> for &ScaledOctonion {
    type Output = ScaledOctonion;
    fn mul(self, rhs: &ScaledOctonion) -> ScaledOctonion {
        ScaledOctonion::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Add for ScaledOctonion {
    type Output = ScaledOctonion;
    fn add(self, rhs: ScaledOctonion) -> ScaledOctonion {
        &self + &rhs
    }
}

impl Sub for ScaledOctonion {
    type Output = ScaledOctonion;
    fn sub(self, rhs: ScaledOctonion) -> ScaledOctonion {
        &self - &rhs
    }
}

impl Mul for ScaledOctonion {
    type Output = ScaledOctonion;
    fn mul(self, rhs: ScaledOctonion) -> ScaledOctonion {
        &self * &rhs
    }
}

impl Neg for ScaledOctonion {
    type Output = ScaledOctonion;
    fn neg(self) -> ScaledOctonion {
        ScaledOctonion {
            num: -self.num,
            den: self.den,
        }
    }
}
