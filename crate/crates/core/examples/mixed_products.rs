//! Mixed products `jO_n JO_n` and `JO_n jO_n`, three ways: directly, from
//! the closed polynomial in `2^n`, and from the bilinear scalar expansion.

use jacobsthal_octonion::identity::{
    bilinear_octonion_product, bilinear_product, closed_product, ProductOrder,
};
use jacobsthal_octonion::{oct_seq, OctonionSequenceKind, ScaledOctonion};
use num_bigint::BigInt;

fn main() {
    let n = 6;
    let l = oct_seq(OctonionSequenceKind::jO, n);
    let j = oct_seq(OctonionSequenceKind::JO, n);
    for order in ProductOrder::ALL {
        let direct = match order {
            ProductOrder::LucasTimesJacobsthal => &l * &j,
            ProductOrder::JacobsthalTimesLucas => &j * &l,
        };
        let closed = closed_product(order, n as i64).unwrap();
        let bilinear = bilinear_octonion_product(order, n).unwrap();
        let bilinear = ScaledOctonion::new(bilinear, BigInt::from(49)).unwrap();
        println!("{} at n={n}", order.name());
        println!("  direct   = {direct}");
        println!(
            "  closed   agrees: {}",
            closed == ScaledOctonion::new(direct.clone(), BigInt::from(1)).unwrap()
        );
        println!(
            "  bilinear agrees: {}",
            bilinear == ScaledOctonion::new(direct, BigInt::from(1)).unwrap()
        );
    }

    println!("\n49 j_(n+r) J_(n+s) at n=0:");
    for r in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|s| {
                bilinear_product(ProductOrder::LucasTimesJacobsthal, 0, r, s)
                    .unwrap()
                    .to_string()
            })
            .collect();
        println!("  r={r}: {}", row.join(" "));
    }
    println!(
        "\nn=1: {}",
        closed_product(ProductOrder::LucasTimesJacobsthal, 1).unwrap_err()
    );
}
