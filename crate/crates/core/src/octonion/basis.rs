//! The signed multiplication table of the octonion basis units `e0..e7`.
//!
//! Row `i`, column `j` holds `e_i * e_j` as a signed basis unit. The seven
//! imaginary rows are transcribed verbatim from the reference table; the
//! `e0` row and column are the identity. `e_i * e_i = -1` is stored as
//! `(-1, e0)`.
//!
//! The table is audited at compile time: see [`table_is_consistent`].

use std::fmt;

/// Index of a basis unit, `0..=7`. `e0` is the real unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex(u8);

impl BasisIndex {
    pub const REAL: BasisIndex = BasisIndex(0);

    pub const fn new(s: u8) -> Option<Self> {
        if s < 8 {
            Some(BasisIndex(s))
        } else {
            None
        }
    }

    pub const fn get(self) -> usize {
        self.0 as usize
    }

    /// All eight basis indices in order.
    pub fn all() -> impl Iterator<Item = BasisIndex> {
        (0..8).map(BasisIndex)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A basis unit with a sign: `+e_s` or `-e_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBasis {
    negative: bool,
    index: BasisIndex,
}

impl SignedBasis {
    pub const fn new(sign: i8, index: BasisIndex) -> Option<Self> {
        match sign {
            1 => Some(SignedBasis {
                negative: false,
                index,
            }),
            -1 => Some(SignedBasis {
                negative: true,
                index,
            }),
            _ => None,
        }
    }

    /// `+1` or `-1`.
    pub const fn sign(self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub const fn index(self) -> BasisIndex {
        self.index
    }

    pub const fn is_negative(self) -> bool {
        self.negative
    }

    #[must_use]
    pub const fn negate(self) -> Self {
        SignedBasis {
            negative: !self.negative,
            index: self.index,
        }
    }
}

/// Renders as `e3`, `-e2`, `1` or `-1`.
impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        if self.index.0 == 0 {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}e{}", self.index.0)
        }
    }
}

// (sign, index) pairs, row i times column j. Audited against the triples below.
const TABLE: [[(i8, u8); 8]; 8] = [
    [
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
    ],
    [
        (1, 1),
        (-1, 0),
        (1, 3),
        (-1, 2),
        (1, 5),
        (-1, 4),
        (-1, 7),
        (1, 6),
    ],
    [
        (1, 2),
        (-1, 3),
        (-1, 0),
        (1, 1),
        (1, 6),
        (1, 7),
        (-1, 4),
        (-1, 5),
    ],
    [
        (1, 3),
        (1, 2),
        (-1, 1),
        (-1, 0),
        (1, 7),
        (-1, 6),
        (1, 5),
        (-1, 4),
    ],
    [
        (1, 4),
        (-1, 5),
        (-1, 6),
        (-1, 7),
        (-1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
    ],
    [
        (1, 5),
        (1, 4),
        (-1, 7),
        (1, 6),
        (-1, 1),
        (-1, 0),
        (-1, 3),
        (1, 2),
    ],
    [
        (1, 6),
        (1, 7),
        (1, 4),
        (-1, 5),
        (-1, 2),
        (1, 3),
        (-1, 0),
        (-1, 1),
    ],
    [
        (1, 7),
        (-1, 6),
        (1, 5),
        (1, 4),
        (-1, 3),
        (-1, 2),
        (1, 1),
        (-1, 0),
    ],
];

/// The seven quaternionic triples `(i, j, k)` with `e_i e_j = e_k`, each
/// also satisfying `e_j e_k = e_i` and `e_k e_i = e_j`.
pub const QUATERNIONIC_TRIPLES: [(u8, u8, u8); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
];

const fn entry_is(i: u8, j: u8, sign: i8, k: u8) -> bool {
    let (s, idx) = TABLE[i as usize][j as usize];
    s == sign && idx == k
}

/// Structural audit of the transcribed table:
///
/// - `e0` is a two-sided unit;
/// - `e_i e_i = -1` for `i >= 1`;
/// - distinct imaginary units anti-commute;
/// - every quaternionic triple multiplies cyclically;
/// - every pair of distinct imaginary units lies in exactly one triple.
pub const fn table_is_consistent() -> bool {
    let mut i = 0u8;
    while i < 8 {
        if !entry_is(0, i, 1, i) || !entry_is(i, 0, 1, i) {
            return false;
        }
        i += 1;
    }
    let mut i = 1u8;
    while i < 8 {
        if !entry_is(i, i, -1, 0) {
            return false;
        }
        let mut j = 1u8;
        while j < 8 {
            if i != j {
                let (s1, k1) = TABLE[i as usize][j as usize];
                let (s2, k2) = TABLE[j as usize][i as usize];
                if k1 != k2 || s1 != -s2 || k1 == 0 || k1 == i || k1 == j {
                    return false;
                }
                let mut hits = 0;
                let mut t = 0;
                while t < 7 {
                    let (a, b, c) = QUATERNIONIC_TRIPLES[t];
                    let has_i = a == i || b == i || c == i;
                    let has_j = a == j || b == j || c == j;
                    if has_i && has_j {
                        hits += 1;
                    }
                    t += 1;
                }
                if hits != 1 {
                    return false;
                }
            }
            j += 1;
        }
        i += 1;
    }
    let mut t = 0;
    while t < 7 {
        let (a, b, c) = QUATERNIONIC_TRIPLES[t];
        if !entry_is(a, b, 1, c) || !entry_is(b, c, 1, a) || !entry_is(c, a, 1, b) {
            return false;
        }
        t += 1;
    }
    true
}

const _: () = assert!(
    table_is_consistent(),
    "octonion basis table failed its audit"
);

/// `e_i * e_j` as a signed basis unit.
pub const fn basis_product(i: BasisIndex, j: BasisIndex) -> SignedBasis {
    let (sign, k) = TABLE[i.0 as usize][j.0 as usize];
    SignedBasis {
        negative: sign < 0,
        index: BasisIndex(k),
    }
}

/// The full 8x8 table, row-major.
pub fn multiplication_table() -> [[SignedBasis; 8]; 8] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| basis_product(BasisIndex(i as u8), BasisIndex(j as u8)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: u8) -> BasisIndex {
        BasisIndex::new(s).unwrap()
    }

    #[test]
    fn spot_entries() {
        assert_eq!(
            basis_product(e(1), e(2)),
            SignedBasis::new(1, e(3)).unwrap()
        );
        assert_eq!(
            basis_product(e(2), e(1)),
            SignedBasis::new(-1, e(3)).unwrap()
        );
        assert_eq!(
            basis_product(e(0), e(5)),
            SignedBasis::new(1, e(5)).unwrap()
        );
        assert_eq!(
            basis_product(e(4), e(4)),
            SignedBasis::new(-1, e(0)).unwrap()
        );
    }

    #[test]
    fn row_e1_renders_like_the_table() {
        let row: Vec<String> = (1..8)
            .map(|j| basis_product(e(1), e(j)).to_string())
            .collect();
        assert_eq!(row, ["-1", "e3", "-e2", "e5", "-e4", "-e7", "e6"]);
    }

    #[test]
    fn anti_commutativity() {
        for i in 1..8 {
            assert_eq!(
                basis_product(e(i), e(i)),
                SignedBasis::new(-1, e(0)).unwrap()
            );
            for j in 1..8 {
                if i != j {
                    assert_eq!(
                        basis_product(e(i), e(j)),
                        basis_product(e(j), e(i)).negate()
                    );
                }
            }
        }
    }

    #[test]
    fn index_bounds() {
        assert!(BasisIndex::new(8).is_none());
        assert!(SignedBasis::new(0, e(1)).is_none());
        assert_eq!(BasisIndex::all().count(), 8);
    }
}
