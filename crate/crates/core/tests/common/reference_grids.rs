//! Amplitude-index grids of the displayed matrices, transcribed row by row.

/// `M(a,4)`.
pub const M_A4: [[usize; 4]; 4] = [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11], [12, 13, 14, 15]];

pub const D4_1: [[usize; 4]; 4] = [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11], [12, 13, 14, 15]];

pub const D4_2: [[usize; 4]; 4] = [[0, 1, 8, 9], [2, 3, 10, 11], [4, 5, 12, 13], [6, 7, 14, 15]];

pub const D4_3: [[usize; 4]; 4] = [[0, 2, 8, 10], [1, 3, 9, 11], [4, 6, 12, 14], [5, 7, 13, 15]];

pub const D6_1: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [8, 9, 10, 11, 12, 13, 14, 15],
    [16, 17, 18, 19, 20, 21, 22, 23],
    [24, 25, 26, 27, 28, 29, 30, 31],
    [32, 33, 34, 35, 36, 37, 38, 39],
    [40, 41, 42, 43, 44, 45, 46, 47],
    [48, 49, 50, 51, 52, 53, 54, 55],
    [56, 57, 58, 59, 60, 61, 62, 63],
];

pub const D6_2: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 32, 33, 34, 35],
    [4, 5, 6, 7, 36, 37, 38, 39],
    [8, 9, 10, 11, 40, 41, 42, 43],
    [12, 13, 14, 15, 44, 45, 46, 47],
    [16, 17, 18, 19, 48, 49, 50, 51],
    [20, 21, 22, 23, 52, 53, 54, 55],
    [24, 25, 26, 27, 56, 57, 58, 59],
    [28, 29, 30, 31, 60, 61, 62, 63],
];

pub const D6_3: [[usize; 8]; 8] = [
    [0, 1, 4, 5, 32, 33, 36, 37],
    [2, 3, 6, 7, 34, 35, 38, 39],
    [8, 9, 12, 13, 40, 41, 44, 45],
    [10, 11, 14, 15, 42, 43, 46, 47],
    [16, 17, 20, 21, 48, 49, 52, 53],
    [18, 19, 22, 23, 50, 51, 54, 55],
    [24, 25, 28, 29, 56, 57, 60, 61],
    [26, 27, 30, 31, 58, 59, 62, 63],
];

pub const D6_4: [[usize; 8]; 8] = [
    [0, 2, 4, 6, 32, 34, 36, 38],
    [8, 10, 12, 14, 40, 42, 44, 46],
    [1, 3, 5, 7, 33, 35, 37, 39],
    [9, 11, 13, 15, 41, 43, 45, 47],
    [16, 18, 20, 22, 48, 50, 52, 54],
    [24, 26, 28, 30, 56, 58, 60, 62],
    [17, 19, 21, 23, 49, 51, 53, 55],
    [25, 27, 29, 31, 57, 59, 61, 63],
];

pub const D6_5: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 16, 17, 18, 19],
    [4, 5, 6, 7, 20, 21, 22, 23],
    [8, 9, 10, 11, 24, 25, 26, 27],
    [12, 13, 14, 15, 28, 29, 30, 31],
    [32, 33, 34, 35, 48, 49, 50, 51],
    [36, 37, 38, 39, 52, 53, 54, 55],
    [40, 41, 42, 43, 56, 57, 58, 59],
    [44, 45, 46, 47, 60, 61, 62, 63],
];

pub const D6_6: [[usize; 8]; 8] = [
    [0, 2, 8, 10, 32, 34, 40, 42],
    [1, 3, 9, 11, 33, 35, 41, 43],
    [4, 6, 12, 14, 36, 38, 44, 46],
    [5, 7, 13, 15, 37, 39, 45, 47],
    [16, 18, 24, 26, 48, 50, 56, 58],
    [17, 19, 25, 27, 49, 51, 57, 59],
    [20, 22, 28, 30, 52, 54, 60, 62],
    [21, 23, 29, 31, 53, 55, 61, 63],
];

pub const D6_7: [[usize; 8]; 8] = [
    [0, 2, 4, 6, 16, 18, 20, 22],
    [1, 3, 5, 7, 17, 19, 21, 23],
    [8, 10, 12, 14, 24, 26, 28, 30],
    [9, 11, 13, 15, 25, 27, 29, 31],
    [32, 34, 36, 38, 48, 50, 52, 54],
    [33, 35, 37, 39, 49, 51, 53, 55],
    [40, 42, 44, 46, 56, 58, 60, 62],
    [41, 43, 45, 47, 57, 59, 61, 63],
];

pub const D6_8: [[usize; 8]; 8] = [
    [0, 2, 4, 6, 8, 10, 12, 14],
    [1, 3, 5, 7, 9, 11, 13, 15],
    [16, 18, 20, 22, 24, 26, 28, 30],
    [17, 19, 21, 23, 25, 27, 29, 31],
    [32, 34, 36, 38, 40, 42, 44, 46],
    [33, 35, 37, 39, 41, 43, 45, 47],
    [48, 50, 52, 54, 56, 58, 60, 62],
    [49, 51, 53, 55, 57, 59, 61, 63],
];

pub const D6_9: [[usize; 8]; 8] = [
    [0, 1, 4, 5, 8, 9, 12, 13],
    [2, 3, 6, 7, 10, 11, 14, 15],
    [16, 17, 20, 21, 24, 25, 28, 29],
    [18, 19, 22, 23, 26, 27, 30, 31],
    [32, 33, 36, 37, 40, 41, 44, 45],
    [34, 35, 38, 39, 42, 43, 46, 47],
    [48, 49, 52, 53, 56, 57, 60, 61],
    [50, 51, 54, 55, 58, 59, 62, 63],
];

pub const D6_10: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 8, 9, 10, 11],
    [4, 5, 6, 7, 12, 13, 14, 15],
    [16, 17, 18, 19, 24, 25, 26, 27],
    [20, 21, 22, 23, 28, 29, 30, 31],
    [32, 33, 34, 35, 40, 41, 42, 43],
    [36, 37, 38, 39, 44, 45, 46, 47],
    [48, 49, 50, 51, 56, 57, 58, 59],
    [52, 53, 54, 55, 60, 61, 62, 63],
];

pub const D4: [&[[usize; 4]; 4]; 3] = [&D4_1, &D4_2, &D4_3];
pub const D6: [&[[usize; 8]; 8]; 10] = [
    &D6_1, &D6_2, &D6_3, &D6_4, &D6_5, &D6_6, &D6_7, &D6_8, &D6_9, &D6_10,
];
