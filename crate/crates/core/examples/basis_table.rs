//! Print the octonion multiplication table and check a few of its
//! structural facts.

use jacobsthal_octonion::octonion::{basis_product, multiplication_table, BasisIndex, SignedBasis};

fn main() {
    let table = multiplication_table();
    print!("{:>4}", "");
    for j in BasisIndex::all() {
        print!("{:>4}", SignedBasis::new(1, j).unwrap().to_string());
    }
    println!();
    for (i, row) in BasisIndex::all().zip(table.iter()) {
        print!("{:>4}", SignedBasis::new(1, i).unwrap().to_string());
        for cell in row {
            print!("{:>4}", cell.to_string());
        }
        println!();
    }

    let mut anti = 0;
    for i in BasisIndex::all().skip(1) {
        for j in BasisIndex::all().skip(1) {
            if i != j && basis_product(i, j) == basis_product(j, i).negate() {
                anti += 1;
            }
        }
    }
    println!("\n{anti} of 42 ordered pairs of distinct imaginary units anti-commute");
}
