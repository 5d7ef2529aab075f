//! The two quadratic identities as printed, their exact discrepancies,
//! and the corrected forms.

use jacobsthal_octonion::{verify, verify_range, IdentityId, Variant};

fn main() {
    for id in [IdentityId::T5_QUAD, IdentityId::T6_QUAD] {
        let d = id.descriptor();
        println!("{}\n  printed:   {}", id.name(), d.statement);
        println!("  corrected: {}", d.corrected.unwrap_or("-"));
        for n in 0..3 {
            let r = verify(id, Variant::AsPrinted, n).unwrap();
            println!(
                "  n={n} printed {}",
                if r.passed { "holds" } else { "fails" }
            );
            if !r.passed {
                println!(
                    "    lhs   = {}\n    rhs   = {}\n    delta = {}",
                    r.lhs, r.rhs, r.delta
                );
            }
        }
        let fixed = verify_range(id, Variant::Corrected, 0, 100).unwrap();
        println!("  corrected form holds on [0,100]: {}\n", fixed.passed());
    }
    let r = verify(IdentityId::T5_QUAD, Variant::AsPrinted, 0).unwrap();
    println!("as JSON: {}", serde_json::to_string(&r).unwrap());
}
