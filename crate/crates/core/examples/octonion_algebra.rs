//! Exact octonion arithmetic: products, conjugates, norms, and the failure
//! of associativity.

use jacobsthal_octonion::octonion::BasisIndex;
use jacobsthal_octonion::{Octonion, ScaledOctonion};
use num_bigint::BigInt;

fn e(i: u8) -> Octonion {
    Octonion::unit(BasisIndex::new(i).unwrap())
}

fn main() {
    let p = Octonion::from([3, -1, 4, 1, -5, 9, 2, -6]);
    let q = Octonion::from([2, 7, -1, 8, 2, -8, 1, 8]);
    let pq = &p * &q;
    println!("p     = {p}");
    println!("q     = {q}");
    println!("pq    = {pq}");
    println!("qp    = {}", &q * &p);
    println!(
        "N(p) N(q) = {} = N(pq) = {}",
        p.norm_sq() * q.norm_sq(),
        pq.norm_sq()
    );
    println!(
        "conj(pq) == conj(q) conj(p): {}",
        pq.conjugate() == &q.conjugate() * &p.conjugate()
    );

    let left = &(&e(1) * &e(2)) * &e(4);
    let right = &e(1) * &(&e(2) * &e(4));
    println!("(e1 e2) e4 = {left}, e1 (e2 e4) = {right}");

    let alt_left = &(&p * &p) * &q == &p * &(&p * &q);
    println!("(pp)q == p(pq): {alt_left}");

    // Scaled octonions carry a denominator, used wherever a closed form
    // divides by 7 or 49.
    let x = ScaledOctonion::new(p.clone(), BigInt::from(7)).unwrap();
    let y = ScaledOctonion::new(q, BigInt::from(14)).unwrap();
    println!("p/7 + q/14 = {}", &x + &y);
    println!("N(p/7) = {}", x.norm_sq());
    println!("as JSON: {}", serde_json::to_string(&x).unwrap());
}
