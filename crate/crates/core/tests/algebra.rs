mod common;

use jacobsthal_octonion::octonion::{basis_product, BasisIndex};
use jacobsthal_octonion::{Octonion, ScaledOctonion};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn octonion(bound: i64) -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(-bound..=bound).prop_map(Octonion::from)
}

fn unit(i: usize) -> Octonion {
    Octonion::unit(BasisIndex::new(i as u8).unwrap())
}

#[test]
fn table_agrees_with_triple_oracle_on_units() {
    for i in 0..8 {
        for j in 0..8 {
            let b = basis_product(
                BasisIndex::new(i as u8).unwrap(),
                BasisIndex::new(j as u8).unwrap(),
            );
            let from_table = Octonion::from_signed_basis(b);
            assert_eq!(
                from_table,
                common::triple_product(&unit(i), &unit(j)),
                "e{i} e{j}"
            );
        }
    }
}

#[test]
fn every_imaginary_unit_squares_to_minus_one() {
    for i in 1..8 {
        assert_eq!(unit(i).square(), -Octonion::one());
    }
}

#[test]
fn associator_vanishes_only_inside_a_quaternionic_triple() {
    let mut nonzero = 0;
    for i in 1..8 {
        for j in 1..8 {
            for k in 1..8 {
                let (a, b, c) = (unit(i), unit(j), unit(k));
                if &(&a * &b) * &c != &a * &(&b * &c) {
                    nonzero += 1;
                }
            }
        }
    }
    // 343 ordered triples; 7 * 6 * 4 = 168 have distinct units outside any
    // quaternionic triple.
    assert_eq!(nonzero, 168);
}

proptest! {
    #[test]
    fn product_matches_oracle(p in octonion(1 << 40), q in octonion(1 << 40)) {
        prop_assert_eq!(&p * &q, common::triple_product(&p, &q));
    }

    #[test]
    fn alternative_laws(p in octonion(10_000), q in octonion(10_000)) {
        prop_assert_eq!(&(&p * &p) * &q, &p * &(&p * &q));
        prop_assert_eq!(&(&q * &p) * &p, &q * &(&p * &p));
        prop_assert_eq!(&(&p * &q) * &p, &p * &(&q * &p));
    }

    #[test]
    fn moufang_identity(x in octonion(1000), y in octonion(1000), z in octonion(1000)) {
        let zx = &z * &x;
        prop_assert_eq!(&(&zx * &y) * &x, &z * &(&x * &(&y * &x)));
    }

    #[test]
    fn norm_is_multiplicative(p in octonion(1 << 30), q in octonion(1 << 30)) {
        prop_assert_eq!((&p * &q).norm_sq(), p.norm_sq() * q.norm_sq());
    }

    #[test]
    fn conjugation_reverses_products(p in octonion(1 << 30), q in octonion(1 << 30)) {
        prop_assert_eq!((&p * &q).conjugate(), &q.conjugate() * &p.conjugate());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
    }

    #[test]
    fn times_conjugate_is_real(p in octonion(1 << 30)) {
        let n = p.norm_sq();
        prop_assert_eq!(&p * &p.conjugate(), Octonion::one().scale(&n));
        prop_assert_eq!(&p.conjugate() * &p, Octonion::one().scale(&n));
    }

    #[test]
    fn additive_structure(p in octonion(1 << 50), q in octonion(1 << 50), r in octonion(1 << 50)) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p - &q) + &q, p.clone());
        prop_assert_eq!(&p + &(-p.clone()), Octonion::zero());
    }

    #[test]
    fn scaled_arithmetic_is_field_like(p in octonion(1000), q in octonion(1000), d in 1i64..500, e in 1i64..500) {
        let a = ScaledOctonion::new(p.clone(), BigInt::from(d)).unwrap();
        let b = ScaledOctonion::new(q.clone(), BigInt::from(e)).unwrap();
        let prod = &a * &b;
        let direct = ScaledOctonion::new(&p * &q, BigInt::from(d * e)).unwrap();
        prop_assert_eq!(&prod, &direct);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.norm_sq(), BigRational::new(p.norm_sq(), BigInt::from(d * d)));
    }

    #[test]
    fn json_round_trip(p in octonion(i64::MAX / 2), d in 1i64..10_000) {
        let back: Octonion = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(&back, &p);
        let s = ScaledOctonion::new(p, BigInt::from(d)).unwrap();
        let back: ScaledOctonion = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }
}
