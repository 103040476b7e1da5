#![allow(dead_code)]

use num_bigint::BigInt;

/// d_0 ..= d_10
pub const DERANGEMENTS: [i64; 11] = [1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961];

/// Euler difference table e[k][j], k = 0..=9 (lower triangle).
pub const EULER: [[i64; 10]; 10] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 2, 0, 0, 0, 0, 0, 0, 0],
    [2, 3, 4, 6, 0, 0, 0, 0, 0, 0],
    [9, 11, 14, 18, 24, 0, 0, 0, 0, 0],
    [44, 53, 64, 78, 96, 120, 0, 0, 0, 0],
    [265, 309, 362, 426, 504, 600, 720, 0, 0, 0],
    [1854, 2119, 2428, 2790, 3216, 3720, 4320, 5040, 0, 0],
    [
        14833, 16687, 18806, 21234, 24024, 27240, 30960, 35280, 40320, 0,
    ],
    [
        133496, 148329, 165016, 183822, 205056, 229080, 256320, 287280, 322560, 362880,
    ],
];

/// Higher derangement numbers d[n][k], n = 0..=9 (lower triangle).
pub const HIGHER: [[i64; 10]; 10] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [2, 3, 2, 1, 0, 0, 0, 0, 0, 0],
    [9, 11, 7, 3, 1, 0, 0, 0, 0, 0],
    [44, 53, 32, 13, 4, 1, 0, 0, 0, 0],
    [265, 309, 181, 71, 21, 5, 1, 0, 0, 0],
    [1854, 2119, 1214, 465, 134, 31, 6, 1, 0, 0],
    [14833, 16687, 9403, 3539, 1001, 227, 43, 7, 1, 0],
    [133496, 148329, 82508, 30637, 8544, 1909, 356, 57, 8, 1],
];

/// Rows c_0^k ..= c_k^k of the decompositions of ad^k, k = 1..=10.
pub fn decomposition_rows() -> Vec<Vec<i64>> {
    vec![
        vec![0, 1],
        vec![1, 2, 1],
        vec![2, 9, 6, 1],
        vec![9, 44, 42, 12, 1],
        vec![44, 265, 320, 130, 20, 1],
        vec![265, 1854, 2715, 1420, 315, 30, 1],
        vec![1854, 14833, 25494, 16275, 4690, 651, 42, 1],
        vec![14833, 133496, 263284, 198184, 70070, 12712, 1204, 56, 1],
        vec![
            133496, 1334961, 2970288, 2573508, 1076544, 240534, 29904, 2052, 72, 1,
        ],
        vec![
            1334961, 14684570, 36377685, 35636040, 17199210, 4558428, 699930, 63240, 3285, 90, 1,
        ],
    ]
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
