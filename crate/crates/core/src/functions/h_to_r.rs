//! Formulas f61 through f109 (Hansen to Rump).

use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use super::tables::{
    HARTMAN3_A, HARTMAN3_C, HARTMAN3_P, HARTMAN6_A, HARTMAN6_C, HARTMAN6_P, LANGERMAN_A,
    LANGERMAN_C,
};
use super::{sq, sum};

pub fn hansen(x: &[f64]) -> f64 {
    let a = sum((0..=4).map(|i| {
        let k = i as f64;
        (k + 1.0) * (k * x[0] + k + 1.0).cos()
    }));
    let b = sum((0..=4).map(|j| {
        let k = j as f64;
        (k + 1.0) * ((k + 2.0) * x[1] + k + 1.0).cos()
    }));
    a * b
}

pub fn hartman_3(x: &[f64]) -> f64 {
    -sum((0..4).map(|i| {
        let inner = sum((0..3).map(|j| HARTMAN3_A[i][j] * sq(x[j] - HARTMAN3_P[i][j])));
        HARTMAN3_C[i] * (-inner).exp()
    }))
}

pub fn hartman_6(x: &[f64]) -> f64 {
    -sum((0..4).map(|i| {
        let inner = sum((0..6).map(|j| HARTMAN6_A[i][j] * sq(x[j] - HARTMAN6_P[i][j])));
        HARTMAN6_C[i] * (-inner).exp()
    }))
}

/// Standard form with `theta = atan2(x2, x1) / 2pi`.
pub fn helical_valley(x: &[f64]) -> f64 {
    let theta = x[1].atan2(x[0]) / (2.0 * PI);
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    100.0 * (sq(x[2] - 10.0 * theta) + sq(r - 1.0)) + x[2] * x[2]
}

pub fn himmelblau(x: &[f64]) -> f64 {
    sq(x[0] * x[0] + x[1] - 11.0) + sq(x[0] + x[1] * x[1] - 7.0)
}

pub fn hosaki(x: &[f64]) -> f64 {
    let a = x[0];
    (1.0 - 8.0 * a + 7.0 * a * a - 7.0 / 3.0 * a.powi(3) + 0.25 * a.powi(4))
        * x[1]
        * x[1]
        * (-x[1]).exp()
}

pub fn jennrich_sampson(x: &[f64]) -> f64 {
    sum((1..=10).map(|i| {
        let k = i as f64;
        sq(2.0 + 2.0 * k - ((k * x[0]).exp() + (k * x[1]).exp()))
    }))
}

pub fn langerman_5(x: &[f64]) -> f64 {
    -sum((0..5).map(|i| {
        let s = sum(x.iter().enumerate().map(|(j, v)| sq(v - LANGERMAN_A[i][j])));
        LANGERMAN_C[i] * (-s / PI).exp() * (PI * s).cos()
    }))
}

/// The 0/0 at the origin is replaced by its limit 0.
pub fn keane(x: &[f64]) -> f64 {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    if r == 0.0 {
        return 0.0;
    }
    sq((x[0] - x[1]).sin()) * sq((x[0] + x[1]).sin()) / r
}

pub fn leon(x: &[f64]) -> f64 {
    100.0 * sq(x[1] - x[0] * x[0]) + sq(1.0 - x[0])
}

pub fn matyas(x: &[f64]) -> f64 {
    0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]
}

pub fn mccormick(x: &[f64]) -> f64 {
    (x[0] + x[1]).sin() + sq(x[0] - x[1]) - 1.5 * x[0] + 2.5 * x[1] + 1.0
}

pub fn miele_cantrell(x: &[f64]) -> f64 {
    ((-x[0]).exp() - x[1]).powi(4)
        + 100.0 * (x[1] - x[2]).powi(6)
        + (x[2] - x[3]).tan().powi(4)
        + x[0].powi(8)
}

pub fn mishra_1(x: &[f64]) -> f64 {
    let n = x.len();
    let g = n as f64 - sum(x[..n - 1].iter().copied());
    (1.0 + g).powf(g)
}

pub fn mishra_2(x: &[f64]) -> f64 {
    let n = x.len();
    let g = n as f64 - sum(x.windows(2).map(|w| 0.5 * (w[0] + w[1])));
    (1.0 + g).powf(g)
}

pub fn mishra_3(x: &[f64]) -> f64 {
    (x[0] * x[0] + x[1] * x[1]).abs().sqrt().cos().abs().sqrt() + 0.01 * (x[0] + x[1])
}

pub fn mishra_4(x: &[f64]) -> f64 {
    (x[0] * x[0] + x[1] * x[1]).abs().sqrt().sin().abs().sqrt() + 0.01 * (x[0] + x[1])
}

/// Shared bracket of Mishra 5 and 6, read literally: `(sin^2(cos(x1 + cos x2)))^2`.
fn mishra_56_head(x: &[f64]) -> f64 {
    sq(sq((x[0] + x[1].cos()).cos().sin()))
}

pub fn mishra_5(x: &[f64]) -> f64 {
    let tail = sq((x[0].sin() + x[1].sin()).cos());
    sq(mishra_56_head(x) + tail + x[0]) + 0.01 * (x[0] + x[1])
}

pub fn mishra_6(x: &[f64]) -> f64 {
    let tail = sq((x[0].sin() + x[1].sin()).cos());
    -sq(mishra_56_head(x) - tail + x[0]).ln() + 0.01 * (sq(x[0] - 1.0) + sq(x[1] - 1.0))
}

pub fn mishra_7(x: &[f64]) -> f64 {
    let factorial = (1..=x.len()).fold(1.0, |acc, k| acc * k as f64);
    sq(x.iter().product::<f64>() - factorial)
}

/// The operator missing before `1334 x1^4` is read as `+`.
pub fn mishra_8(x: &[f64]) -> f64 {
    let a = x[0];
    let p1 = a.powi(10) - 20.0 * a.powi(9) + 180.0 * a.powi(8) - 960.0 * a.powi(7)
        + 3360.0 * a.powi(6)
        - 8064.0 * a.powi(5)
        + 1334.0 * a.powi(4)
        - 15360.0 * a.powi(3)
        + 11520.0 * a * a
        - 5120.0 * a
        + 2624.0;
    let b = x[1];
    let p2 = b.powi(4) + 12.0 * b.powi(3) + 54.0 * b * b + 108.0 * b + 81.0;
    0.001 * sq(p1.abs() * p2.abs())
}

pub fn mishra_9(x: &[f64]) -> f64 {
    let (x1, x2, x3) = (x[0], x[1], x[2]);
    let a = 2.0 * x1.powi(3) + 5.0 * x1 * x2 + 4.0 * x3 - 2.0 * x1 * x1 * x3 - 18.0;
    let b = x1 + x2.powi(3) + x1 * x3 * x3 - 22.0;
    let c = 8.0 * x1 * x1 + 2.0 * x2 * x3 + 2.0 * x2 * x2 + 3.0 * x2.powi(3) - 52.0;
    sq(a * b * b * c + a * b * c * c + b * b + sq(x1 + x2 - x3))
}

/// The printed operator between `x1` and `x2` is read as a product.
pub fn mishra_10(x: &[f64]) -> f64 {
    sq((x[0] * x[1]).floor() - x[0].floor() - x[1].floor())
}

pub fn mishra_11(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mean = sum(x.iter().map(|v| v.abs())) / n;
    let prod = x.iter().fold(1.0, |acc, v| acc * v.abs());
    sq(mean - prod.powf(1.0 / n))
}

pub fn parsopoulos(x: &[f64]) -> f64 {
    sq(x[0].cos()) + sq(x[1].sin())
}

pub fn pen_holder(x: &[f64]) -> f64 {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    let g = (x[0].cos() * x[1].cos() * (1.0 - r / PI).abs().exp()).abs();
    -(1.0 / g).exp()
}

pub fn pathological(x: &[f64]) -> f64 {
    sum(x.windows(2).map(|w| {
        let (a, b) = (w[0], w[1]);
        0.5 + (sq((100.0 * a * a + b * b).sqrt().sin()) - 0.5)
            / (1.0 + 0.001 * sq(a * a - 2.0 * a * b + b * b))
    }))
}

pub fn paviani(x: &[f64]) -> Result<f64, &'static str> {
    if x.iter().any(|&v| !(v > 2.0 && v < 10.0)) {
        return Err("logarithms require 2 < x_i < 10");
    }
    let s = sum(x.iter().map(|v| sq((v - 2.0).ln()) + sq((10.0 - v).ln())));
    Ok(s - x.iter().product::<f64>().powf(0.2))
}

pub fn pinter(x: &[f64]) -> f64 {
    let n = x.len();
    let at = |k: usize| -> f64 {
        // 1-based with wrap-around: x_0 = x_D and x_{D+1} = x_1
        match k {
            0 => x[n - 1],
            k if k == n + 1 => x[0],
            k => x[k - 1],
        }
    };
    let mut s1 = 0.0;
    let mut s2 = 0.0;
    let mut s3 = 0.0;
    for i in 1..=n {
        let w = i as f64;
        let a = at(i - 1) * at(i).sin() + at(i + 1).sin();
        let b = sq(at(i - 1)) - 2.0 * at(i) + 3.0 * at(i + 1) - at(i).cos() + 1.0;
        s1 += w * sq(at(i));
        s2 += 20.0 * w * sq(a.sin());
        s3 += w * (1.0 + w * b * b).log10();
    }
    s1 + s2 + s3
}

pub fn periodic(x: &[f64]) -> f64 {
    1.0 + sq(x[0].sin()) + sq(x[1].sin()) - 0.1 * (-(x[0] * x[0] + x[1] * x[1])).exp()
}

pub fn powell_singular(x: &[f64]) -> f64 {
    sum(x.chunks_exact(4).map(|c| {
        sq(c[0] + 10.0 * c[1])
            + 5.0 * sq(c[2] - c[3])
            + (c[1] - c[2]).powi(4)
            + 10.0 * (c[0] - c[3]).powi(4)
    }))
}

/// Indices read 0-based; every window of four consecutive coordinates contributes.
pub fn powell_singular_2(x: &[f64]) -> f64 {
    sum(x.windows(4).map(|w| {
        sq(w[0] + 10.0 * w[1])
            + 5.0 * sq(w[2] - w[3])
            + (w[1] - 2.0 * w[2]).powi(4)
            + 10.0 * (w[0] - w[3]).powi(4)
    }))
}

pub fn powell_sum(x: &[f64]) -> f64 {
    sum(x
        .iter()
        .enumerate()
        .map(|(i, v)| v.abs().powi(i as i32 + 2)))
}

pub fn price_1(x: &[f64]) -> f64 {
    sq(x[0].abs() - 5.0) + sq(x[1].abs() - 5.0)
}

pub fn price_2(x: &[f64]) -> f64 {
    1.0 + sq(x[0].sin()) + sq(x[1].sin()) - 0.1 * (-x[0] * x[0] - x[1] * x[1]).exp()
}

pub fn price_3(x: &[f64]) -> f64 {
    100.0 * sq(x[1] - x[0] * x[0]) + 6.0 * sq(6.4 * sq(x[1] - 0.5) - x[0] - 0.6)
}

pub fn price_4(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    sq(2.0 * a.powi(3) * b - b.powi(3)) + sq(6.0 * a - b * b + b)
}

pub fn qing(x: &[f64]) -> f64 {
    sum(x
        .iter()
        .enumerate()
        .map(|(i, v)| sq(v * v - (i + 1) as f64)))
}

pub fn quadratic(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -3803.84 - 138.08 * a - 232.92 * b + 128.08 * a * a + 203.64 * b * b + 182.25 * a * b
}

pub fn quartic(x: &[f64], noise: &mut dyn FnMut() -> Option<f64>) -> f64 {
    let s = sum(x
        .iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4)));
    s + noise().unwrap_or(0.0)
}

pub fn quintic(x: &[f64]) -> f64 {
    sum(x.iter().map(|&v| {
        (v.powi(5) - 3.0 * v.powi(4) + 4.0 * v.powi(3) + 2.0 * v * v - 10.0 * v - 4.0).abs()
    }))
}

pub fn rana(x: &[f64]) -> f64 {
    sum(x.windows(2).map(|w| {
        let (a, b) = (w[0], w[1]);
        let t1 = (b + a + 1.0).abs().sqrt();
        let t2 = (b - a + 1.0).abs().sqrt();
        (b + 1.0) * t2.cos() * t1.sin() + a * t1.cos() * t2.sin()
    }))
}

fn ripple_envelope(v: f64) -> f64 {
    -(-2.0 * 2.0.ln() * sq((v - 0.1) / 0.8)).exp()
}

pub fn ripple_1(x: &[f64]) -> f64 {
    sum(x.iter().map(|&v| {
        ripple_envelope(v) * ((5.0 * PI * v).sin().powi(6) + 0.1 * sq((500.0 * PI * v).cos()))
    }))
}

pub fn ripple_25(x: &[f64]) -> f64 {
    sum(x
        .iter()
        .map(|&v| ripple_envelope(v) * (5.0 * PI * v).sin().powi(6)))
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    sum(x
        .windows(2)
        .map(|w| 100.0 * sq(w[1] - w[0] * w[0]) + sq(w[0] - 1.0)))
}

/// The lone `x` in `(1 - x)^2` is read as `x1`.
pub fn rosenbrock_modified(x: &[f64]) -> f64 {
    74.0 + 100.0 * sq(x[1] - x[0] * x[0]) + sq(1.0 - x[0])
        - 400.0 * (-(sq(x[0] + 1.0) + sq(x[1] + 1.0)) / 0.1).exp()
}

pub fn rotated_ellipse(x: &[f64]) -> f64 {
    7.0 * x[0] * x[0] - 6.0 * 3.0.sqrt() * x[0] * x[1] + 13.0 * x[1] * x[1]
}

pub fn rotated_ellipse_2(x: &[f64]) -> f64 {
    x[0] * x[0] - x[0] * x[1] + x[1] * x[1]
}

pub fn rump(x: &[f64]) -> Result<f64, &'static str> {
    let (a, b) = (x[0], x[1]);
    if b == 0.0 {
        return Err("x1 / (2 x2) is undefined at x2 = 0");
    }
    Ok((333.75 - a * a) * b.powi(6)
        + a * a * (11.0 * a * a * b * b - 121.0 * b.powi(4) - 2.0)
        + 5.5 * b.powi(8)
        + a / (2.0 * b))
}
