//! Published reference data for E8, indexed from 1 in table order.

/// Positive roots of E8 in simple-root coordinates, entry `i` is root `i + 1`.
pub const REFERENCE_E8_ROOTS: [[i64; 8]; 120] = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [1, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [1, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 1, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 0, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 0, 1, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 0, 0, 0],
    [1, 0, 1, 1, 1, 1, 0, 0],
    [0, 1, 1, 2, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 1, 0, 0],
    [0, 1, 0, 1, 1, 1, 1, 0],
    [0, 0, 1, 1, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1, 1],
    [1, 1, 1, 2, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 0, 0],
    [1, 0, 1, 1, 1, 1, 1, 0],
    [0, 1, 1, 2, 1, 1, 0, 0],
    [0, 1, 1, 1, 1, 1, 1, 0],
    [0, 1, 0, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1, 1],
    [1, 1, 2, 2, 1, 0, 0, 0],
    [1, 1, 1, 2, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 0],
    [1, 0, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 1, 0, 0],
    [0, 1, 1, 2, 1, 1, 1, 0],
    [0, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 2, 2, 1, 1, 0, 0],
    [1, 1, 1, 2, 2, 1, 0, 0],
    [1, 1, 1, 2, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 1, 1, 0],
    [0, 1, 1, 2, 1, 1, 1, 1],
    [1, 1, 2, 2, 2, 1, 0, 0],
    [1, 1, 2, 2, 1, 1, 1, 0],
    [1, 1, 1, 2, 2, 1, 1, 0],
    [1, 1, 1, 2, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 2, 1, 0],
    [0, 1, 1, 2, 2, 1, 1, 1],
    [1, 1, 2, 3, 2, 1, 0, 0],
    [1, 1, 2, 2, 2, 1, 1, 0],
    [1, 1, 2, 2, 1, 1, 1, 1],
    [1, 1, 1, 2, 2, 2, 1, 0],
    [1, 1, 1, 2, 2, 1, 1, 1],
    [0, 1, 1, 2, 2, 2, 1, 1],
    [1, 2, 2, 3, 2, 1, 0, 0],
    [1, 1, 2, 3, 2, 1, 1, 0],
    [1, 1, 2, 2, 2, 2, 1, 0],
    [1, 1, 2, 2, 2, 1, 1, 1],
    [1, 1, 1, 2, 2, 2, 1, 1],
    [0, 1, 1, 2, 2, 2, 2, 1],
    [1, 2, 2, 3, 2, 1, 1, 0],
    [1, 1, 2, 3, 2, 2, 1, 0],
    [1, 1, 2, 3, 2, 1, 1, 1],
    [1, 1, 2, 2, 2, 2, 1, 1],
    [1, 1, 1, 2, 2, 2, 2, 1],
    [1, 2, 2, 3, 2, 2, 1, 0],
    [1, 2, 2, 3, 2, 1, 1, 1],
    [1, 1, 2, 3, 3, 2, 1, 0],
    [1, 1, 2, 3, 2, 2, 1, 1],
    [1, 1, 2, 2, 2, 2, 2, 1],
    [1, 2, 2, 3, 3, 2, 1, 0],
    [1, 2, 2, 3, 2, 2, 1, 1],
    [1, 1, 2, 3, 3, 2, 1, 1],
    [1, 1, 2, 3, 2, 2, 2, 1],
    [1, 2, 2, 4, 3, 2, 1, 0],
    [1, 2, 2, 3, 3, 2, 1, 1],
    [1, 2, 2, 3, 2, 2, 2, 1],
    [1, 1, 2, 3, 3, 2, 2, 1],
    [1, 2, 3, 4, 3, 2, 1, 0],
    [1, 2, 2, 4, 3, 2, 1, 1],
    [1, 2, 2, 3, 3, 2, 2, 1],
    [1, 1, 2, 3, 3, 3, 2, 1],
    [2, 2, 3, 4, 3, 2, 1, 0],
    [1, 2, 3, 4, 3, 2, 1, 1],
    [1, 2, 2, 4, 3, 2, 2, 1],
    [1, 2, 2, 3, 3, 3, 2, 1],
    [2, 2, 3, 4, 3, 2, 1, 1],
    [1, 2, 3, 4, 3, 2, 2, 1],
    [1, 2, 2, 4, 3, 3, 2, 1],
    [2, 2, 3, 4, 3, 2, 2, 1],
    [1, 2, 3, 4, 3, 3, 2, 1],
    [1, 2, 2, 4, 4, 3, 2, 1],
    [2, 2, 3, 4, 3, 3, 2, 1],
    [1, 2, 3, 4, 4, 3, 2, 1],
    [2, 2, 3, 4, 4, 3, 2, 1],
    [1, 2, 3, 5, 4, 3, 2, 1],
    [2, 2, 3, 5, 4, 3, 2, 1],
    [1, 3, 3, 5, 4, 3, 2, 1],
    [2, 3, 3, 5, 4, 3, 2, 1],
    [2, 2, 4, 5, 4, 3, 2, 1],
    [2, 3, 4, 5, 4, 3, 2, 1],
    [2, 3, 4, 6, 4, 3, 2, 1],
    [2, 3, 4, 6, 5, 3, 2, 1],
    [2, 3, 4, 6, 5, 4, 2, 1],
    [2, 3, 4, 6, 5, 4, 3, 1],
    [2, 3, 4, 6, 5, 4, 3, 2],
];

/// Root indices of the positive part of the image of D7.
pub const IMAGE_POSITIVE_ROOTS: [usize; 42] = [
    2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 25, 26, 27, 28, 29, 32,
    33, 34, 35, 36, 40, 41, 42, 43, 48, 49, 50, 55, 56, 61, 62, 68, 74,
];

/// Root indices spanning the 64-dimensional modules `[X_112]` (as `X`) and `[Y_1]` (as `Y`).
pub const SPINOR_ROOTS: [usize; 64] = [
    1, 9, 16, 23, 24, 30, 31, 37, 38, 39, 44, 45, 46, 47, 51, 52, 53, 54, 57, 58, 59, 60, 63, 64,
    65, 66, 67, 69, 70, 71, 72, 73, 75, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 86, 87, 88, 89, 90,
    91, 92, 93, 94, 95, 96, 98, 99, 100, 102, 103, 105, 106, 108, 110, 112,
];

/// Root indices spanning the 14-dimensional modules `[X_120]` (as `X`) and `[Y_97]` (as `Y`).
pub const VECTOR_ROOTS: [usize; 14] = [
    97, 101, 104, 107, 109, 111, 113, 114, 115, 116, 117, 118, 119, 120,
];
