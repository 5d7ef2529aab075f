//! Test-only oracles, written independently of the library's code paths.
#![allow(dead_code)]

use std::ops::{Add, Mul, Sub};

use jacobsthal_octonion::Octonion;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Octonion product derived only from the seven quaternionic triples
/// `(a, b, c)` with `e_a e_b = e_c` read off the standard table, rather
/// than from the library's 64-entry constant.
pub fn triple_product(p: &Octonion, q: &Octonion) -> Octonion {
    const TRIPLES: [[usize; 3]; 7] = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 7, 6],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 6, 5],
    ];
    let unit = |i: usize, j: usize| -> (i64, usize) {
        if i == 0 {
            return (1, j);
        }
        if j == 0 {
            return (1, i);
        }
        if i == j {
            return (-1, 0);
        }
        for t in TRIPLES {
            for k in 0..3 {
                if t[k] == i && t[(k + 1) % 3] == j {
                    return (1, t[(k + 2) % 3]);
                }
                if t[k] == j && t[(k + 1) % 3] == i {
                    return (-1, t[(k + 2) % 3]);
                }
            }
        }
        unreachable!("every pair of imaginary units lies in a triple")
    };
    let a = p.coefficients();
    let b = q.coefficients();
    let mut out: [BigInt; 8] = Default::default();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let (sign, k) = unit(i, j);
            out[k] += x * y * sign;
        }
    }
    Octonion::new(out)
}

/// Third-order recurrence written out longhand.
pub fn brute_sequence(seeds: [i64; 3], len: usize) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = seeds.iter().map(|&x| BigInt::from(x)).collect();
    while v.len() < len {
        let k = v.len();
        let next = v[k - 1].clone() + v[k - 2].clone() + v[k - 3].clone() * 2;
        v.push(next);
    }
    v.truncate(len);
    v
}

pub fn big_j(len: usize) -> Vec<BigInt> {
    brute_sequence([0, 1, 1], len)
}

pub fn small_j(len: usize) -> Vec<BigInt> {
    brute_sequence([2, 1, 5], len)
}

/// `x + y sqrt(-3)` with rational `x`, `y`: enough of the field containing
/// the cube roots of unity to evaluate every Binet-style expression exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eisenstein {
    pub re: BigRational,
    pub im: BigRational,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Eisenstein {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Eisenstein { re, im }
    }

    pub fn rational(x: BigRational) -> Self {
        Eisenstein::new(x, BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    /// `(-1 + sqrt(-3)) / 2`
    pub fn omega1() -> Self {
        Eisenstein::new(q(-1, 2), q(1, 2))
    }

    /// `(-1 - sqrt(-3)) / 2`
    pub fn omega2() -> Self {
        Eisenstein::new(q(-1, 2), q(-1, 2))
    }

    /// `1 + 2 sqrt(-3) / 3`
    pub fn a() -> Self {
        Eisenstein::new(q(1, 1), q(2, 3))
    }

    /// `1 - 2 sqrt(-3) / 3`
    pub fn b() -> Self {
        Eisenstein::new(q(1, 1), q(-2, 3))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Eisenstein::new(&self.re * k, &self.im * k)
    }

    /// The value as a rational, when the `sqrt(-3)` part vanishes.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: &Eisenstein) -> Eisenstein {
        let three = BigRational::from_integer(3.into());
        Eisenstein::new(
            &self.re * &o.re - three * &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}
