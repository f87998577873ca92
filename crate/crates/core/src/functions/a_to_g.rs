//! Formulas f1 through f60 (Ackley 1 to Gulf Research).

use core::f64::consts::{E, PI};

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use super::tables::{BRAD_Y, COLA_D, CORANA_D};
use super::{sq, sum};

pub fn ackley_1(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let mean_sq = sum(x.iter().map(|v| v * v)) / d;
    let mean_cos = sum(x.iter().map(|v| (2.0 * PI * v).cos())) / d;
    // Grouped so both terms vanish exactly at the origin.
    20.0 * (1.0 - (-0.02 * mean_sq.sqrt()).exp()) + (E - mean_cos.exp())
}

pub fn ackley_2(x: &[f64]) -> f64 {
    -200.0 * (-0.02 * (x[0] * x[0] + x[1] * x[1]).sqrt()).exp()
}

pub fn ackley_3(x: &[f64]) -> f64 {
    200.0 * (-0.02 * (x[0] * x[0] + x[1] * x[1]).sqrt()).exp()
        + 5.0 * ((3.0 * x[0]).cos() + (3.0 * x[1]).sin()).exp()
}

pub fn ackley_4(x: &[f64]) -> f64 {
    let c = (-0.2).exp();
    sum(x.windows(2).map(|w| {
        c * (w[0] * w[0] + w[1] * w[1]).sqrt() + 3.0 * ((2.0 * w[0]).cos() + (2.0 * w[1]).sin())
    }))
}

pub fn adjiman(x: &[f64]) -> f64 {
    x[0].cos() * x[1].sin() - x[0] / (x[1] * x[1] + 1.0)
}

pub fn alpine_1(x: &[f64]) -> f64 {
    sum(x.iter().map(|v| (v * v.sin() + 0.1 * v).abs()))
}

pub fn alpine_2(x: &[f64]) -> f64 {
    x.iter().fold(1.0, |acc, v| acc * v.sqrt() * v.sin())
}

pub fn brad(x: &[f64]) -> f64 {
    sum((1..=15).map(|i| {
        let u = i as f64;
        let v = 16.0 - u;
        let w = u.min(v);
        sq((BRAD_Y[i - 1] - x[0] - u) / (v * x[1] + w * x[2]))
    }))
}

pub fn bartels_conn(x: &[f64]) -> f64 {
    (x[0] * x[0] + x[1] * x[1] + x[0] * x[1]).abs() + x[0].sin().abs() + x[1].cos().abs()
}

pub fn beale(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    sq(1.5 - a + a * b) + sq(2.25 - a + a * b * b) + sq(2.625 - a + a * b * b * b)
}

fn biggs_t(i: usize) -> f64 {
    0.1 * i as f64
}

/// Data term with the decaying exponent `e^{-10 t}`; the growing `e^{10 t}`
/// leaves the stated minimizers with a huge residual.
fn biggs_y(t: f64) -> f64 {
    (-t).exp() - 5.0 * (-10.0 * t).exp()
}

fn biggs_y3(t: f64) -> f64 {
    biggs_y(t) + 3.0 * (-4.0 * t).exp()
}

pub fn biggs_exp2(x: &[f64]) -> f64 {
    sum((1..=10).map(|i| {
        let t = biggs_t(i);
        sq((-t * x[0]).exp() - 5.0 * (-t * x[1]).exp() - biggs_y(t))
    }))
}

pub fn biggs_exp3(x: &[f64]) -> f64 {
    sum((1..=10).map(|i| {
        let t = biggs_t(i);
        sq((-t * x[0]).exp() - x[2] * (-t * x[1]).exp() - biggs_y(t))
    }))
}

pub fn biggs_exp4(x: &[f64]) -> f64 {
    sum((1..=10).map(|i| {
        let t = biggs_t(i);
        sq(x[2] * (-t * x[0]).exp() - x[3] * (-t * x[1]).exp() - biggs_y(t))
    }))
}

pub fn biggs_exp5(x: &[f64]) -> f64 {
    sum((1..=11).map(|i| {
        let t = biggs_t(i);
        sq(
            x[2] * (-t * x[0]).exp() - x[3] * (-t * x[1]).exp() + 3.0 * (-t * x[4]).exp()
                - biggs_y3(t),
        )
    }))
}

pub fn biggs_exp6(x: &[f64]) -> f64 {
    sum((1..=13).map(|i| {
        let t = biggs_t(i);
        sq(
            x[2] * (-t * x[0]).exp() - x[3] * (-t * x[1]).exp() + x[5] * (-t * x[4]).exp()
                - biggs_y3(t),
        )
    }))
}

pub fn bird(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    a.sin() * sq(1.0 - b.cos()).exp() + b.cos() * sq(1.0 - a.sin()).exp() + sq(a - b)
}

pub fn bohachevsky_1(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * (3.0 * PI * x[0]).cos() - 0.4 * (4.0 * PI * x[1]).cos()
        + 0.7
}

pub fn bohachevsky_2(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * (3.0 * PI * x[0]).cos() * 0.4 * (4.0 * PI * x[1]).cos()
        + 0.3
}

pub fn bohachevsky_3(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * (3.0 * PI * x[0] + 4.0 * PI * x[1]).cos() + 0.3
}

pub fn booth(x: &[f64]) -> f64 {
    sq(x[0] + 2.0 * x[1] - 7.0) + sq(2.0 * x[0] + x[1] - 5.0)
}

/// The third exponential keeps `x3` inside the exponent, as printed.
pub fn box_betts(x: &[f64]) -> f64 {
    sum((0..x.len()).map(|i| {
        let k = (i + 1) as f64;
        sq((-0.1 * k * x[0]).exp()
            - (-0.1 * k * x[1]).exp()
            - ((-0.1 * k - (-k).exp()) * x[2]).exp())
    }))
}

fn branin_core(x: &[f64]) -> f64 {
    sq(x[1] - 5.1 * x[0] * x[0] / (4.0 * PI * PI) + 5.0 * x[0] / PI - 6.0)
}

pub fn branin_rcos(x: &[f64]) -> f64 {
    branin_core(x) + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x[0].cos() + 10.0
}

pub fn branin_rcos_2(x: &[f64]) -> f64 {
    branin_core(x)
        + 10.0
            * (1.0 - 1.0 / (8.0 * PI))
            * x[0].cos()
            * x[1].cos()
            * (x[0] * x[0] + x[1] * x[1] + 1.0).ln()
        + 10.0
}

pub fn brent(x: &[f64]) -> f64 {
    sq(x[0] + 10.0) + sq(x[1] + 10.0) + (-x[0] * x[0] - x[1] * x[1]).exp()
}

pub fn brown(x: &[f64]) -> f64 {
    sum(x.windows(2).map(|w| {
        let (a, b) = (w[0] * w[0], w[1] * w[1]);
        a.powf(b + 1.0) + b.powf(a + 1.0)
    }))
}

pub fn bukin_2(x: &[f64]) -> f64 {
    100.0 * (x[1] - 0.01 * x[0] * x[0] + 1.0) + 0.01 * sq(x[0] + 10.0)
}

pub fn bukin_4(x: &[f64]) -> f64 {
    100.0 * x[1] * x[1] + 0.01 * (x[0] + 10.0).abs()
}

pub fn bukin_6(x: &[f64]) -> f64 {
    100.0 * (x[1] - 0.01 * x[0] * x[0]).abs().sqrt() + 0.01 * (x[0] + 10.0).abs()
}

pub fn three_hump_camel(x: &[f64]) -> f64 {
    let a = x[0];
    2.0 * a * a - 1.05 * a.powi(4) + a.powi(6) / 6.0 + a * x[1] + x[1] * x[1]
}

pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (4.0 - 2.1 * a * a + a.powi(4) / 3.0) * a * a + a * b + (4.0 * b * b - 4.0) * b * b
}

/// Bracket symbols read as parentheses.
pub fn chen_bird(x: &[f64]) -> f64 {
    let eps = 0.001 * 0.001;
    -0.001 / (eps + sq(x[0] - 0.4 * x[1] - 0.1)) - 0.001 / (eps + sq(2.0 * x[0] + x[1] - 1.5))
}

/// Bracket symbols read as parentheses.
pub fn chen_v(x: &[f64]) -> f64 {
    let eps = 0.001 * 0.001;
    let (a, b) = (x[0] * x[0], x[1] * x[1]);
    -0.001 / (eps + sq(a + b - 1.0)) - 0.001 / (eps + sq(a + b - 0.5)) - 0.001 / (eps + sq(a - b))
}

pub fn chichinadze(x: &[f64]) -> f64 {
    let a = x[0];
    a * a - 12.0 * a + 11.0 + 10.0 * (PI * a / 2.0).cos() + 8.0 * (5.0 * PI * a / 2.0).sin()
        - 0.2.sqrt() * (-0.5 * sq(x[1] - 0.5)).exp()
}

pub fn chung_reynolds(x: &[f64]) -> f64 {
    sq(sum(x.iter().map(|v| v * v)))
}

/// Point 0 sits at the origin, point 1 on the first axis at `(u0, 0)`,
/// point `i >= 2` at `(u[2i-3], u[2i-2])`.
pub fn cola(u: &[f64]) -> f64 {
    let point = |i: usize| -> (f64, f64) {
        match i {
            0 => (0.0, 0.0),
            1 => (u[0], 0.0),
            _ => (u[2 * (i - 2) + 1], u[2 * (i - 2) + 2]),
        }
    };
    let mut total = 0.0;
    for i in 1..10 {
        let (xi, yi) = point(i);
        for j in 0..i {
            let (xj, yj) = point(j);
            let r = (sq(xi - xj) + sq(yi - yj)).sqrt();
            total += sq(r - COLA_D[i - 1][j]);
        }
    }
    total
}

pub fn colville(x: &[f64]) -> f64 {
    100.0 * sq(x[0] - x[1] * x[1])
        + sq(1.0 - x[0])
        + 90.0 * sq(x[3] - x[2] * x[2])
        + sq(1.0 - x[2])
        + 10.1 * (sq(x[1] - 1.0) + sq(x[3] - 1.0))
        + 19.8 * (x[1] - 1.0) * (x[3] - 1.0)
}

fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Summed over coordinates with the inner term `(z - 0.05 sgn z)^2`.
pub fn corana(x: &[f64]) -> f64 {
    sum(x.iter().zip(CORANA_D.iter()).map(|(&v, &d)| {
        let z = 0.2 * ((v / 0.2).abs() + 0.49999).floor() * sgn(v);
        if (v - z).abs() < 0.05 {
            0.15 * sq(z - 0.05 * sgn(z)) * d
        } else {
            d * v * v
        }
    }))
}

pub fn cosine_mixture(x: &[f64]) -> f64 {
    -0.1 * sum(x.iter().map(|v| (5.0 * PI * v).cos())) - sum(x.iter().map(|v| v * v))
}

pub fn cross_in_tray(x: &[f64]) -> f64 {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    let g = (x[0].sin() * x[1].sin() * (100.0 - r / PI).abs().exp()).abs();
    -0.0001 * (g + 1.0).powf(0.1)
}

/// Each term is 0 at `x_i = 0`, the limit of the expression.
pub fn csendes(x: &[f64]) -> f64 {
    sum(x.iter().map(|&v| {
        if v == 0.0 {
            0.0
        } else {
            v.powi(6) * (2.0 + (1.0 / v).sin())
        }
    }))
}

pub fn cube(x: &[f64]) -> f64 {
    100.0 * sq(x[1] - x[0].powi(3)) + sq(1.0 - x[0])
}

fn sinc_pi(t: f64) -> f64 {
    if t == 0.0 {
        1.0
    } else {
        (PI * t).sin() / (PI * t)
    }
}

pub fn damavandi(x: &[f64]) -> f64 {
    let s = (sinc_pi(x[0] - 2.0) * sinc_pi(x[1] - 2.0)).abs().powi(5);
    (1.0 - s) * (2.0 + sq(x[0] - 7.0) + 2.0 * sq(x[1] - 7.0))
}

pub fn deb_1(x: &[f64]) -> f64 {
    -sum(x.iter().map(|v| (5.0 * PI * v).sin().powi(6))) / x.len() as f64
}

pub fn deb_3(x: &[f64]) -> Result<f64, &'static str> {
    if x.iter().any(|&v| v < 0.0) {
        return Err("x^(3/4) is undefined for negative coordinates");
    }
    Ok(-sum(x
        .iter()
        .map(|v| (5.0 * PI * (v.powf(0.75) - 0.05)).sin().powi(6)))
        / x.len() as f64)
}

pub fn deckkers_aarts(x: &[f64]) -> f64 {
    let r2 = x[0] * x[0] + x[1] * x[1];
    1e5 * x[0] * x[0] + x[1] * x[1] - r2 * r2 + 1e-5 * r2.powi(4)
}

pub fn devilliers_glasser_1(x: &[f64]) -> f64 {
    sum((1..=24).map(|i| {
        let t = 0.1 * (i - 1) as f64;
        let y = 60.137 * 1.371.powf(t) * (3.112 * t + 1.761).sin();
        sq(x[0] * x[1].powf(t) * (x[2] * t + x[3]).sin() - y)
    }))
}

pub fn devilliers_glasser_2(x: &[f64]) -> f64 {
    sum((1..=16).map(|i| {
        let t = 0.1 * (i - 1) as f64;
        let y =
            53.81 * 1.27.powf(t) * (3.012 * t + (2.13 * t).sin()).tanh() * (0.507.exp() * t).cos();
        sq(x[0] * x[1].powf(t) * (x[2] * t + (x[3] * t).sin()).tanh() * (t * x[4].exp()).cos() - y)
    }))
}

pub fn dixon_price(x: &[f64]) -> f64 {
    sq(x[0] - 1.0) + sum((1..x.len()).map(|k| (k + 1) as f64 * sq(2.0 * x[k] * x[k] - x[k - 1])))
}

pub fn dolan(x: &[f64]) -> f64 {
    (x[0] + 1.7 * x[1]) * x[0].sin() - 1.5 * x[2] - 0.1 * x[3] * (x[3] + x[4] - x[0]).cos()
        + 0.2 * x[4] * x[4]
        - x[1]
        - 1.0
}

pub fn easom(x: &[f64]) -> f64 {
    -x[0].cos() * x[1].cos() * (-sq(x[0] - PI) - sq(x[1] - PI)).exp()
}

pub fn el_attar_vidyasagar_dutta(x: &[f64]) -> f64 {
    sq(x[0] * x[0] + x[1] - 10.0)
        + sq(x[0] + x[1] * x[1] - 7.0)
        + sq(x[0] * x[0] + x[1].powi(3) - 1.0)
}

pub fn egg_crate(x: &[f64]) -> f64 {
    x[0] * x[0] + x[1] * x[1] + 25.0 * (sq(x[0].sin()) + sq(x[1].sin()))
}

pub fn egg_holder(x: &[f64]) -> f64 {
    sum(x.windows(2).map(|w| {
        let (a, b) = (w[0], w[1]);
        -(b + 47.0) * (b + a / 2.0 + 47.0).abs().sqrt().sin()
            - a * (a - (b + 47.0)).abs().sqrt().sin()
    }))
}

pub fn exponential(x: &[f64]) -> f64 {
    -(-0.5 * sum(x.iter().map(|v| v * v))).exp()
}

pub fn exp_2(x: &[f64]) -> f64 {
    sum((0..=9).map(|i| {
        let k = i as f64;
        sq(
            (-k * x[0] / 10.0).exp() - 5.0 * (-k * x[1] / 10.0).exp() - (-k / 10.0).exp()
                + 5.0 * (-k).exp(),
        )
    }))
}

pub fn freudenstein_roth(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    sq(a - 13.0 + ((5.0 - b) * b - 2.0) * b) + sq(a - 29.0 + ((b + 1.0) * b - 14.0) * b)
}

pub fn giunta(x: &[f64]) -> f64 {
    0.6 + sum(x.iter().map(|v| {
        let t = 16.0 / 15.0 * v - 1.0;
        t.sin() + sq(t.sin()) + (4.0 * t).sin() / 50.0
    }))
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (1.0 + sq(a + b + 1.0) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b))
        * (30.0
            + sq(2.0 * a - 3.0 * b)
                * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b))
}

pub fn griewank(x: &[f64]) -> f64 {
    let s = sum(x.iter().map(|v| v * v / 4000.0));
    let p = x
        .iter()
        .enumerate()
        .fold(1.0, |acc, (i, v)| acc * (v / ((i + 1) as f64).sqrt()).cos());
    s - p + 1.0
}

/// The divisor printed as `x_i` is read as `x1`.
pub fn gulf_research(x: &[f64]) -> f64 {
    sum((1..=99).map(|i| {
        let k = i as f64;
        let u = 25.0 + (-50.0 * (0.01 * k).ln()).powf(1.0 / 1.5);
        sq((-(u - x[1]).powf(x[2]) / x[0]).exp() - 0.01 * k)
    }))
}
