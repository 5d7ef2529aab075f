//! The octonion sequences built from eight consecutive terms, and their
//! closed forms in `alpha` and `eps_n`.

use jacobsthal_octonion::octonion_sequences::oct_conjugate_norm;
use jacobsthal_octonion::{alpha, epsilon_hat, oct_seq, oct_seq_closed, OctonionSequenceKind};
use num_bigint::BigInt;

fn main() {
    println!("alpha = {}", alpha());
    for n in 0..3 {
        println!("eps_{n} = {}", epsilon_hat(n));
    }
    println!();
    for kind in OctonionSequenceKind::ALL {
        for n in 0..4 {
            let x = oct_seq(kind, n);
            let (_, norm) = oct_conjugate_norm(kind, n);
            println!("{}_{n} = {x}    N = {norm}", kind.name());
        }
        let n = 64;
        let same = oct_seq(kind, n) == oct_seq_closed(kind, n).unwrap();
        println!("{}_{n}: closed form agrees: {same}\n", kind.name());
    }

    let n = 10;
    let diff = oct_seq(OctonionSequenceKind::jO, n)
        - oct_seq(OctonionSequenceKind::JO, n).scale(&BigInt::from(4));
    println!("jO_{n} - 4 JO_{n} = {diff}");
    println!("equals eps_{n}: {}", diff == epsilon_hat(n));
}
