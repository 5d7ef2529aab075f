//! The integer sequences: recurrence values, closed forms, partial sums.

use jacobsthal_octonion::scalar::{partial_sum, partial_sum_closed, seq_range};
use jacobsthal_octonion::{seq_closed, seq_value, SequenceKind};

fn main() {
    for kind in SequenceKind::ALL {
        let values: Vec<String> = seq_range(kind, 0, 12)
            .iter()
            .map(|v| v.to_string())
            .collect();
        println!("{:>17}: {}", kind.name(), values.join(", "));
    }

    let n = 300;
    for kind in [
        SequenceKind::ThirdOrderJacobsthal,
        SequenceKind::ThirdOrderJacobsthalLucas,
    ] {
        let rec = seq_value(kind, n);
        let closed = seq_closed(kind, n).unwrap();
        println!(
            "\n{} at n={n}:\n  {rec}\n  closed form agrees: {}",
            kind.name(),
            rec == closed
        );
        let s = partial_sum(kind, n).unwrap();
        println!(
            "  sum to n agrees with its closed form: {}",
            s == partial_sum_closed(kind, n).unwrap()
        );
    }

    // The closed forms are one-sided: the classic sequences have none here.
    println!("\n{}", seq_closed(SequenceKind::Jacobsthal, 5).unwrap_err());
}
