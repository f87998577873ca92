//! Constant tables referenced by the formulas.

/// Cola target distances, lower triangle, row `i` holds `d[i+1][0..=i]`.
pub const COLA_D: [&[f64]; 9] = [
    &[1.27],
    &[1.69, 1.43],
    &[2.04, 2.35, 2.43],
    &[3.09, 3.18, 3.26, 2.85],
    &[3.20, 3.22, 3.27, 2.88, 1.55],
    &[2.86, 2.56, 2.58, 2.59, 3.12, 3.06],
    &[3.17, 3.18, 3.18, 3.12, 1.31, 1.64, 3.00],
    &[3.21, 3.18, 3.18, 3.17, 1.70, 1.36, 2.95, 1.32],
    &[2.38, 2.31, 2.42, 1.94, 2.85, 2.81, 2.56, 2.91, 2.97],
];

pub const CORANA_D: [f64; 4] = [1.0, 1000.0, 10.0, 100.0];

pub const BRAD_Y: [f64; 15] = [
    0.14, 0.18, 0.22, 0.25, 0.29, 0.32, 0.35, 0.39, 0.37, 0.58, 0.73, 0.96, 1.34, 2.10, 4.39,
];

pub const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
pub const HARTMAN3_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
pub const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4837, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];

pub const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
pub const HARTMAN6_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
/// Row 1, column 6 reads 0.5586 in the source table; other references use 0.5886.
pub const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5586],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

pub const LANGERMAN_A: [[f64; 10]; 5] = [
    [
        9.681, 0.667, 4.783, 9.095, 3.517, 9.325, 6.544, 0.211, 5.122, 2.020,
    ],
    [
        9.400, 2.041, 3.788, 7.931, 2.882, 2.672, 3.568, 1.284, 7.033, 7.374,
    ],
    [
        8.025, 9.152, 5.114, 7.621, 4.564, 4.711, 2.996, 6.126, 0.734, 4.982,
    ],
    [
        2.196, 0.415, 5.649, 6.979, 9.510, 9.166, 6.304, 6.054, 9.377, 1.426,
    ],
    [
        8.074, 8.777, 3.467, 1.863, 6.708, 6.349, 4.534, 0.276, 7.633, 1.567,
    ],
];
pub const LANGERMAN_C: [f64; 5] = [0.806, 0.517, 1.5, 0.908, 0.965];

/// Shekel rows; Shekel-m uses the first m rows of both tables.
pub const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
pub const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Watson abscissae `a_i = i / 29`.
pub fn watson_a(i: usize) -> f64 {
    i as f64 / 29.0
}
