//! Test-only oracles, written independently of the library's evaluation paths.

#![allow(dead_code)]

/// Naive recurrence in machine integers. Exact while values fit in i128,
/// which covers k <= 12, n <= 34.
pub fn naive_terms(lucas: bool, k: i128, count: usize) -> Vec<i128> {
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = if lucas { (2i128, 2i128) } else { (0, 1) };
    for _ in 0..count {
        out.push(a);
        let next = (k - 1) * b + k * a;
        a = b;
        b = next;
    }
    out
}

/// OEIS A001045, terms 0..=33.
pub const A001045: [u64; 34] = [
    0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683, 1365, 2731, 5461, 10923, 21845, 43691, 87381,
    174763, 349525, 699051, 1398101, 2796203, 5592405, 11184811, 22369621, 44739243, 89478485,
    178956971, 357913941, 715827883, 1431655765, 2863311531,
];

/// Table 1 rows (k = 2, 3, 4), n = 0..=10.
pub const TABLE_J: [(u64, [u64; 11]); 3] = [
    (2, [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341]),
    (3, [0, 1, 2, 7, 20, 61, 182, 547, 1640, 4921, 14762]),
    (4, [0, 1, 3, 13, 51, 205, 819, 3277, 13107, 52429, 209715]),
];

/// Table 2 rows (k = 2, 3, 4), n = 0..=10.
pub const TABLE_LUCAS: [(u64, [u64; 11]); 3] = [
    (2, [2, 2, 6, 10, 22, 42, 86, 170, 342, 682, 1366]),
    (3, [2, 2, 10, 26, 82, 242, 730, 2186, 6562, 19682, 59050]),
    (
        4,
        [2, 2, 14, 50, 206, 818, 3278, 13106, 52430, 209714, 838862],
    ),
];
