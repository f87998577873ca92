//! Formulas f110 through f175 (Salomon to Zirilli).

use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use super::tables::{watson_a, SHEKEL_A, SHEKEL_C};
use super::{sq, sum, Params};

pub fn salomon(x: &[f64]) -> f64 {
    let r = sum(x.iter().map(|v| v * v)).sqrt();
    1.0 - (2.0 * PI * r).cos() + 0.1 * r
}

/// The inner sum runs over `j != i`.
pub fn sargan(x: &[f64]) -> f64 {
    sum((0..x.len()).map(|i| {
        let cross = sum((0..x.len()).filter(|&j| j != i).map(|j| x[i] * x[j]));
        x[i] * x[i] + 0.4 * cross
    }))
}

fn schaffer_frame(numerator: f64, x: &[f64]) -> f64 {
    0.5 + (numerator - 0.5) / (1.0 + 0.001 * sq(x[0] * x[0] + x[1] * x[1]))
}

/// `sin^2(u)^2` read as `(sin^2 u)^2`.
pub fn schaffer_1(x: &[f64]) -> f64 {
    schaffer_frame(sq(sq((x[0] * x[0] + x[1] * x[1]).sin())), x)
}

pub fn schaffer_2(x: &[f64]) -> f64 {
    schaffer_frame(sq(sq((x[0] * x[0] - x[1] * x[1]).sin())), x)
}

pub fn schaffer_3(x: &[f64]) -> f64 {
    schaffer_frame(sq((x[0] * x[0] - x[1] * x[1]).abs().cos().sin()), x)
}

pub fn schaffer_4(x: &[f64]) -> f64 {
    schaffer_frame(sq((x[0] * x[0] - x[1] * x[1]).sin().cos()), x)
}

pub fn schmidt_vetters(x: &[f64]) -> f64 {
    1.0 / (1.0 + sq(x[0] - x[1]))
        + ((PI * x[1] + x[2]) / 2.0).sin()
        + sq((x[0] + x[1]) / x[1] - 2.0).exp()
}

pub fn schumer_steiglitz(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| v.powi(4)))
}

pub fn schwefel(x: &[f64], p: &Params) -> f64 {
    sum(x.iter().map(|v| v * v)).powf(p.schwefel_alpha)
}

pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut partial = 0.0;
    sum(x.iter().map(|v| {
        partial += v;
        partial * partial
    }))
}

pub fn schwefel_2_4(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| sq(v - 1.0) + sq(x[0] - v * v)))
}

pub fn schwefel_2_6(x: &[f64]) -> f64 {
    (x[0] + 2.0 * x[1] - 7.0)
        .abs()
        .max((2.0 * x[0] + x[1] - 5.0).abs())
}

pub fn schwefel_2_20(x: &[f64]) -> f64 {
    -sum(x.iter().map(|v| v.abs()))
}

pub fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn schwefel_2_22(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| v.abs())) + x.iter().fold(1.0, |acc, v| acc * v.abs())
}

pub fn schwefel_2_23(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| v.powi(10)))
}

pub fn schwefel_2_25(x: &[f64]) -> f64 {
    sum(x[1..].iter().map(|v| sq(v - 1.0) + sq(x[0] - v * v)))
}

pub fn schwefel_2_26(x: &[f64]) -> f64 {
    -sum(x.iter().map(|v| v * v.abs().sqrt().sin())) / x.len() as f64
}

pub fn schwefel_2_36(x: &[f64]) -> f64 {
    -x[0] * x[1] * (72.0 - 2.0 * x[0] - 2.0 * x[1])
}

fn shekel(x: &[f64], m: usize) -> f64 {
    -sum((0..m).map(|i| {
        let s = sum(x.iter().enumerate().map(|(j, v)| sq(v - SHEKEL_A[i][j])));
        1.0 / (s + SHEKEL_C[i])
    }))
}

pub fn shekel_5(x: &[f64]) -> f64 {
    shekel(x, 5)
}

pub fn shekel_7(x: &[f64]) -> f64 {
    shekel(x, 7)
}

pub fn shekel_10(x: &[f64]) -> f64 {
    shekel(x, 10)
}

pub fn shubert(x: &[f64]) -> f64 {
    x.iter().fold(1.0, |acc, &v| {
        acc * sum((1..=5).map(|j| {
            let k = j as f64;
            ((k + 1.0) * v + k).cos()
        }))
    })
}

pub fn shubert_3(x: &[f64]) -> f64 {
    sum(x.iter().map(|&v| {
        sum((1..=5).map(|j| {
            let k = j as f64;
            k * ((k + 1.0) * v + k).sin()
        }))
    }))
}

pub fn shubert_4(x: &[f64]) -> f64 {
    sum(x.iter().map(|&v| {
        sum((1..=5).map(|j| {
            let k = j as f64;
            k * ((k + 1.0) * v + k).cos()
        }))
    }))
}

pub fn schaffer_f6(x: &[f64]) -> f64 {
    sum(x.windows(2).map(|w| {
        let r2 = w[0] * w[0] + w[1] * w[1];
        0.5 + (sq(r2.sqrt().sin()) - 0.5) / sq(1.0 + 0.001 * r2)
    }))
}

pub fn sphere(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| v * v))
}

pub fn step(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| v.abs().floor()))
}

pub fn step_2(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| sq((v + 0.5).floor())))
}

pub fn step_3(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| (v * v).floor()))
}

pub fn stepint(x: &[f64]) -> f64 {
    25.0 + sum(x.iter().map(|v| v.floor()))
}

pub fn stretched_v_sine_wave(x: &[f64]) -> f64 {
    sum(x.windows(2).map(|w| {
        let r2 = w[1] * w[1] + w[0] * w[0];
        r2.powf(0.25) * (sq((50.0 * r2.powf(0.1)).sin()) + 0.1)
    }))
}

pub fn sum_squares(x: &[f64]) -> f64 {
    sum(x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v * v))
}

pub fn styblinski_tang(x: &[f64]) -> f64 {
    0.5 * sum(x.iter().map(|&v| v.powi(4) - 16.0 * v * v + 5.0 * v))
}

fn holder_exp(x: &[f64]) -> f64 {
    (1.0 - (x[0] * x[0] + x[1] * x[1]).sqrt() / PI).abs().exp()
}

/// Exponent uses the Euclidean norm of `x`.
pub fn holder_table_1(x: &[f64]) -> f64 {
    -(x[0].cos() * x[1].cos() * holder_exp(x)).abs()
}

/// Exponent uses the Euclidean norm of `x`.
pub fn holder_table_2(x: &[f64]) -> f64 {
    -(x[0].sin() * x[1].cos() * holder_exp(x)).abs()
}

pub fn carrom_table(x: &[f64]) -> f64 {
    -sq(x[0].cos() * x[1].cos() * holder_exp(x)) / 30.0
}

pub fn testtube_holder(x: &[f64]) -> f64 {
    -4.0 * (x[0].sin() * x[1].cos() * ((x[0] * x[0] + x[1] * x[1]) / 200.0).cos().abs().exp())
}

/// `x1^4 + 4 x1^3 + 4 x1^2 + x2^2`, zero at both listed minima.
pub fn trecanni(x: &[f64]) -> f64 {
    let a = x[0];
    a.powi(4) + 4.0 * a.powi(3) + 4.0 * a * a + x[1] * x[1]
}

/// The product sum starts at the second coordinate.
pub fn trid(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| sq(v - 1.0))) - sum(x.windows(2).map(|w| w[1] * w[0]))
}

pub fn trefethen(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (50.0 * a).sin().exp()
        + (60.0 * b.exp()).sin()
        + (70.0 * a.sin()).sin()
        + (80.0 * b).sin().sin()
        - (10.0 * (a + b)).sin()
        + 0.25 * (a * a + b * b)
}

pub fn trigonometric_1(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let cos_sum = sum(x.iter().map(|v| v.cos()));
    sum(x
        .iter()
        .enumerate()
        .map(|(i, v)| sq(n - cos_sum + (i + 1) as f64 * (1.0 - v.cos() - v.sin()))))
}

pub fn trigonometric_2(x: &[f64]) -> f64 {
    1.0 + sum(x.iter().map(|&v| {
        8.0 * sq((7.0 * sq(v - 0.9)).sin()) + 6.0 * sq((14.0 * sq(x[0] - 0.9)).sin()) + sq(v - 0.9)
    }))
}

pub fn tripod(x: &[f64]) -> f64 {
    let p = |v: f64| if v >= 0.0 { 1.0 } else { 0.0 };
    let (p1, p2) = (p(x[0]), p(x[1]));
    p2 * (1.0 + p1)
        + (x[0] + 50.0 * p2 * (1.0 - 2.0 * p1)).abs()
        + (x[1] + 50.0 * (1.0 - 2.0 * p2)).abs()
}

pub fn ursem_1(x: &[f64]) -> f64 {
    -(2.0 * x[0] - 0.5 * PI).sin() - 3.0 * x[1].cos() - 0.5 * x[0]
}

pub fn ursem_3(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -(2.2 * PI * a + 0.5 * PI).sin() * (2.0 - a.abs()) / 2.0 * (3.0 - a.abs()) / 2.0
        - (0.5 * PI * b * b + 0.5 * PI).sin() * (2.0 - b.abs()) / 2.0 * (3.0 - b.abs()) / 2.0
}

pub fn ursem_4(x: &[f64]) -> f64 {
    -3.0 * (0.5 * PI * x[0] + 0.5 * PI).sin() * (2.0 - (x[0] * x[0] + x[1] * x[1]).sqrt()) / 4.0
}

pub fn ursem_waves(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -0.9 * a * a
        + (b * b - 4.5 * b * b) * a * b
        + 4.7 * (3.0 * a - b * b * (2.0 + a)).cos() * (2.5 * PI * a).sin()
}

pub fn venter_sobiezcczanski_sobieski(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    a * a - 100.0 * sq(a.cos()) - 100.0 * (a * a / 30.0).cos() + b * b
        - 100.0 * sq(b.cos())
        - 100.0 * (b * b / 30.0).cos()
}

pub fn watson(x: &[f64]) -> f64 {
    let terms = sum((0..=29).map(|i| {
        let a = watson_a(i);
        let first = sum((0..=4).map(|j| (j as f64 - 1.0) * a.powi(j as i32) * x[j]));
        let second = sum((0..=5).map(|j| a.powi(j as i32) * x[j]));
        sq(first - second * second - 1.0)
    }));
    terms + x[0] * x[0]
}

pub fn wayburn_seader_1(x: &[f64]) -> f64 {
    sq(x[0].powi(6) + x[1].powi(4) - 17.0) + sq(2.0 * x[0] + x[1] - 4.0)
}

pub fn wayburn_seader_2(x: &[f64]) -> f64 {
    sq(1.613 - 4.0 * sq(x[0] - 0.3125) - 4.0 * sq(x[1] - 1.625)) + sq(x[1] - 1.0)
}

pub fn wayburn_seader_3(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    2.0 * a.powi(3) / 3.0 - 8.0 * a * a + 33.0 * a - a * b
        + 5.0
        + sq(sq(a - 4.0) + sq(b - 5.0) - 4.0)
}

pub fn wavy(x: &[f64], p: &Params) -> f64 {
    1.0 - sum(x
        .iter()
        .map(|v| (p.wavy_k * v).cos() * (-v * v / 2.0).exp()))
        / x.len() as f64
}

/// The `n * sum` correction is subtracted once, outside the coordinate sum.
pub fn weierstrass(x: &[f64], p: &Params) -> f64 {
    let (a, b) = (p.weierstrass_a, p.weierstrass_b);
    let ks = 0..=p.weierstrass_kmax;
    let wave = |v: f64| {
        sum(ks
            .clone()
            .map(|k| a.powi(k as i32) * (2.0 * PI * b.powi(k as i32) * (v + 0.5)).cos()))
    };
    let offset = sum(ks
        .clone()
        .map(|k| a.powi(k as i32) * (PI * b.powi(k as i32)).cos()));
    sum(x.iter().map(|&v| wave(v))) - x.len() as f64 * offset
}

pub fn whitley(x: &[f64]) -> f64 {
    sum(x.iter().map(|&xi| {
        sum(x.iter().map(|&xj| {
            let y = 100.0 * sq(xi * xi - xj) + sq(1.0 - xj);
            y * y / 4000.0 - (y + 1.0).cos()
        }))
    }))
}

pub fn wolfe(x: &[f64]) -> f64 {
    4.0 / 3.0 * (x[0] * x[0] + x[1] * x[1] - x[0] * x[1]).powf(0.75) + x[2]
}

pub fn xin_she_yang_1(x: &[f64], noise: &mut dyn FnMut() -> Option<f64>) -> f64 {
    sum(x.iter().enumerate().map(|(i, v)| {
        let eps = noise().unwrap_or(1.0);
        eps * v.abs().powi(i as i32 + 1)
    }))
}

pub fn xin_she_yang_2(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| v.abs())) * (-sum(x.iter().map(|v| (v * v).sin()))).exp()
}

pub fn xin_she_yang_3(x: &[f64], p: &Params) -> f64 {
    let first = (-sum(x.iter().map(|v| (v / p.xsy3_beta).powf(2.0 * p.xsy3_m)))).exp();
    let second = 2.0
        * (-sum(x.iter().map(|v| v * v))).exp()
        * x.iter().fold(1.0, |acc, v| acc * sq(v.cos()));
    first - second
}

pub fn xin_she_yang_4(x: &[f64]) -> f64 {
    (sum(x.iter().map(|v| sq(v.sin()))) - (-sum(x.iter().map(|v| v * v))).exp())
        * (-sum(x.iter().map(|v| sq(v.abs().sqrt().sin())))).exp()
}

pub fn zakharov(x: &[f64]) -> f64 {
    let s = 0.5 * sum(x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v));
    sum(x.iter().map(|v| v * v)) + s * s + s.powi(4)
}

pub fn zettl(x: &[f64]) -> f64 {
    sq(x[0] * x[0] + x[1] * x[1] - 2.0 * x[0]) + 0.25 * x[0]
}

pub fn zirilli(x: &[f64]) -> f64 {
    0.25 * x[0].powi(4) - 0.5 * x[0] * x[0] + 0.1 * x[0] + 0.5 * x[1] * x[1]
}
