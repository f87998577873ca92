//! Catalog entries, in printed order.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use super::{
    Bounds, Continuity, Differentiability, DimensionRule, FunctionId, FunctionSpec, KnownOptimum,
    Locations, Modality, OptimumValue, Policy, PropertyFlags, Scalability, Separability,
};
use crate::functions::Formula::{Checked, Noisy, Param, Plain};
use crate::functions::{a_to_g, h_to_r, s_to_z};

const C: Continuity = Continuity::Continuous;
const DC: Continuity = Continuity::Discontinuous;
const CU: Continuity = Continuity::Unstated;
const DF: Differentiability = Differentiability::Differentiable;
const ND: Differentiability = Differentiability::NonDifferentiable;
const DU: Differentiability = Differentiability::Unstated;
const S: Separability = Separability::Separable;
const PS: Separability = Separability::PartiallySeparable;
const NS: Separability = Separability::NonSeparable;
const SU: Separability = Separability::Unstated;
const SC: Scalability = Scalability::Scalable;
const NSC: Scalability = Scalability::NonScalable;
const SCU: Scalability = Scalability::Unstated;
const UM: Modality = Modality::Unimodal;
const MM: Modality = Modality::Multimodal;
const MU: Modality = Modality::Unstated;

const THREE_PI: f64 = 3.0 * PI;

const fn flags(
    continuity: Continuity,
    differentiability: Differentiability,
    separability: Separability,
    scalability: Scalability,
    modality: Modality,
) -> PropertyFlags {
    PropertyFlags {
        continuity,
        differentiability,
        separability,
        scalability,
        modality,
    }
}

const fn opt(locations: Locations, value: OptimumValue) -> KnownOptimum {
    KnownOptimum::new(locations, value)
}

const fn pts(p: &'static [&'static [f64]]) -> Locations {
    Locations::Points(p)
}

const fn every(c: f64) -> Locations {
    Locations::Uniform(c)
}

const fn exact(v: f64) -> OptimumValue {
    OptimumValue::Exact(v)
}

const fn rounded(value: f64, decimals: u8) -> OptimumValue {
    OptimumValue::Rounded { value, decimals }
}

const fn approx(v: f64) -> OptimumValue {
    OptimumValue::Approx(v)
}

/// Every point of `values^n`, first coordinate varying slowest.
fn grid(values: &[f64], n: usize) -> Vec<Vec<f64>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn deb_1_points(n: usize) -> Vec<Vec<f64>> {
    grid(&[0.1, 0.3, 0.5, 0.7, 0.9], n)
}

fn deb_3_points(n: usize) -> Vec<Vec<f64>> {
    #[allow(unused_imports)] // shadowed by inherent methods when std is linked
    use num_traits::Float;
    let v: Vec<f64> = [0.15, 0.35, 0.55, 0.75, 0.95]
        .iter()
        .map(|t: &f64| t.powf(4.0 / 3.0))
        .collect();
    grid(&v, n)
}

fn dixon_price_point(n: usize) -> Vec<Vec<f64>> {
    #[allow(unused_imports)] // shadowed by inherent methods when std is linked
    use num_traits::Float;
    let p = (1..=n)
        .map(|i| {
            let e = 2f64.powi(i as i32);
            2f64.powf(-(e - 2.0) / e)
        })
        .collect();
    vec![p]
}

fn parsopoulos_points(_: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for k in [-3.0, -1.0, 1.0, 3.0] {
        for l in [-1.0, 0.0, 1.0] {
            out.push(vec![k * FRAC_PI_2, l * PI]);
        }
    }
    out
}

/// All sign patterns up to D = 4, the positive root beyond.
fn qing_points(n: usize) -> Vec<Vec<f64>> {
    #[allow(unused_imports)] // shadowed by inherent methods when std is linked
    use num_traits::Float;
    let root: Vec<f64> = (1..=n).map(|i| (i as f64).sqrt()).collect();
    if n > 4 {
        return vec![root];
    }
    grid(&[1.0, -1.0], n)
        .into_iter()
        .map(|s| s.iter().zip(&root).map(|(a, b)| a * b).collect())
        .collect()
}

fn quintic_points(n: usize) -> Vec<Vec<f64>> {
    grid(&[-1.0, 2.0], n)
}

fn schwefel_2_26_points(n: usize) -> Vec<Vec<f64>> {
    let c = FRAC_PI_2 * FRAC_PI_2;
    vec![vec![c; n], vec![-c; n]]
}

const DEB_1: Locations = Locations::Generated {
    text: "x_i in {0.1, 0.3, 0.5, 0.7, 0.9}",
    family: true,
    points: deb_1_points,
};
const DEB_3: Locations = Locations::Generated {
    text: "x_i = v^(4/3), v in {0.15, 0.35, 0.55, 0.75, 0.95}",
    family: true,
    points: deb_3_points,
};
const DIXON_PRICE: Locations = Locations::Generated {
    text: "x_i = 2^(-(2^i - 2) / 2^i)",
    family: false,
    points: dixon_price_point,
};
const PARSOPOULOS: Locations = Locations::Generated {
    text: "(k pi/2, l pi), k odd, l integer; 12 points in the box",
    family: true,
    points: parsopoulos_points,
};
const QING: Locations = Locations::Generated {
    text: "x_i = +-sqrt(i)",
    family: true,
    points: qing_points,
};
const QUINTIC: Locations = Locations::Generated {
    text: "x_i in {-1, 2}",
    family: true,
    points: quintic_points,
};
const SCHWEFEL_2_26: Locations = Locations::Generated {
    text: "x_i = +-[pi (0.5 + k)]^2",
    family: true,
    points: schwefel_2_26_points,
};

const COLA_BOUNDS: Bounds = Bounds::PerCoord(&[
    (0.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
    (-4.0, 4.0),
]);

macro_rules! pick {
    ($default:expr) => {
        $default
    };
    ($default:expr, $given:expr) => {
        $given
    };
}

macro_rules! spec {
    (
        $index:literal, $slug:literal, $name:literal, $citation:expr,
        $dimension:expr,
        $bounds:expr,
        $flags:expr,
        $formula:expr,
        [$($optimum:expr),* $(,)?]
        $(, canonical $($canonical:lifetime)?)?
        $(, note = $note:literal)?
    ) => {
        FunctionSpec {
            id: FunctionId { index: $index, slug: $slug },
            name: $name,
            citation: $citation,
            dimension: $dimension,
            bounds: $bounds,
            flags: $flags,
            formula: $formula,
            optima: &[$($optimum),*],
            policy: pick!(Policy::AsPrinted $(, { $($canonical)? Policy::Canonical })?),
            note: pick!("" $(, $note)?),
        }
    };
}

pub static CATALOG: [FunctionSpec; super::COUNT] = [
    spec!(
        1, "ackley-1", "Ackley 1", Some("BAECK1993"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-35.0, 35.0),
        flags(C, DF, NS, SC, MM),
        Plain(a_to_g::ackley_1),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        2, "ackley-2", "Ackley 2", Some("ACKLEY1987"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-32.0, 32.0),
        flags(C, DF, NS, NSC, UM),
        Plain(a_to_g::ackley_2),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(-200.0)),
        ]
    ),
    spec!(
        3, "ackley-3", "Ackley 3", Some("ACKLEY1987"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-32.0, 32.0),
        flags(C, DF, NS, NSC, UM),
        Plain(a_to_g::ackley_3),
        [
            opt(pts(&[&[0.0, -0.4]]), approx(-219.1418)).note("location printed as (0, ≈ −0.4)"),
        ]
    ),
    spec!(
        4, "ackley-4", "Ackley 4", None,
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-35.0, 35.0),
        flags(C, DF, NS, SC, MM),
        Plain(a_to_g::ackley_4),
        [
            opt(pts(&[&[-1.479252, -0.739807], &[1.479252, -0.739807]]), rounded(-3.917275, 6)),
        ]
    ),
    spec!(
        5, "adjiman", "Adjiman", Some("ADJIMAN1998"),
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-1.0, 2.0), (-1.0, 1.0)]),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::adjiman),
        [
            opt(pts(&[&[2.0, 0.10578]]), rounded(-2.02181, 5)),
        ]
    ),
    spec!(
        6, "alpine-1", "Alpine 1", Some("RAHNAMAYAN2007"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, ND, S, NSC, MM),
        Plain(a_to_g::alpine_1),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        7, "alpine-2", "Alpine 2", Some("CLERC1999"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, S, SC, MM),
        Plain(a_to_g::alpine_2),
        [
            opt(every(7.917), OptimumValue::PowerOfDim { base: 2.808, decimals: 3 }),
        ]
    ),
    spec!(
        8, "brad", "Brad", Some("BRAD1970"),
        DimensionRule::Fixed(3),
        Bounds::PerCoord(&[(-0.25, 0.25), (0.01, 2.5), (0.01, 2.5)]),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::brad),
        [
            opt(pts(&[&[0.0824, 1.133, 2.3437]]), rounded(0.00821487, 8)),
        ]
    ),
    spec!(
        9, "bartels-conn", "Bartels Conn", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, ND, NS, NSC, MM),
        Plain(a_to_g::bartels_conn),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(1.0)),
        ]
    ),
    spec!(
        10, "beale", "Beale", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-4.5, 4.5),
        flags(C, DF, NS, NSC, UM),
        Plain(a_to_g::beale),
        [
            opt(pts(&[&[3.0, 0.5]]), exact(0.0)),
        ]
    ),
    spec!(
        11, "biggs-exp2", "Biggs EXP2", Some("BIGGS1971"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(0.0, 20.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::biggs_exp2),
        [
            opt(pts(&[&[1.0, 10.0]]), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        12, "biggs-exp3", "Biggs EXP3", Some("BIGGS1971"),
        DimensionRule::Fixed(3),
        Bounds::Uniform(0.0, 20.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::biggs_exp3),
        [
            opt(pts(&[&[1.0, 10.0, 5.0]]), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        13, "biggs-exp4", "Biggs EXP4", Some("BIGGS1971"),
        DimensionRule::Fixed(4),
        Bounds::Uniform(0.0, 20.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::biggs_exp4),
        [
            opt(pts(&[&[1.0, 10.0, 1.0, 5.0]]), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        14, "biggs-exp5", "Biggs EXP5", Some("BIGGS1971"),
        DimensionRule::Fixed(5),
        Bounds::Uniform(0.0, 20.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::biggs_exp5),
        [
            opt(pts(&[&[1.0, 10.0, 1.0, 5.0, 4.0]]), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        15, "biggs-exp6", "Biggs EXP6", Some("BIGGS1971"),
        DimensionRule::Fixed(6),
        Bounds::Uniform(-20.0, 20.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::biggs_exp6),
        [
            opt(pts(&[&[1.0, 10.0, 1.0, 5.0, 4.0, 3.0]]), exact(0.0)),
        ],
        canonical,
        note = "printed under the title Biggs EXP5; six variables and 13 terms"
    ),
    spec!(
        16, "bird", "Bird", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-2.0 * PI, 2.0 * PI),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::bird),
        [
            opt(pts(&[&[4.70104, 3.15294], &[-1.58214, -3.13024]]), rounded(-106.764537, 6)),
        ]
    ),
    spec!(
        17, "bohachevsky-1", "Bohachevsky 1", Some("BOHACHEVSKY1986"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, S, NSC, MM),
        Plain(a_to_g::bohachevsky_1),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        18, "bohachevsky-2", "Bohachevsky 2", Some("BOHACHEVSKY1986"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::bohachevsky_2),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        19, "bohachevsky-3", "Bohachevsky 3", Some("BOHACHEVSKY1986"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::bohachevsky_3),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        20, "booth", "Booth", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, UM),
        Plain(a_to_g::booth),
        [
            opt(pts(&[&[1.0, 3.0]]), exact(0.0)),
        ]
    ),
    spec!(
        21, "box-betts", "Box-Betts Quadratic Sum", Some("ALI2005"),
        DimensionRule::Fixed(3),
        Bounds::PerCoord(&[(0.9, 1.2), (9.0, 11.2), (0.9, 1.2)]),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::box_betts),
        [
            opt(pts(&[&[1.0, 10.0, 1.0]]), exact(0.0)),
        ],
        note = "third interval printed as a second x2 range; read as x3"
    ),
    spec!(
        22, "branin-rcos", "Branin RCOS", Some("BRANIN1972"),
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-5.0, 10.0), (0.0, 15.0)]),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::branin_rcos),
        [
            opt(pts(&[&[-PI, 12.275], &[PI, 2.275], &[THREE_PI, 2.475]]), rounded(0.3978873, 7)).corrected_from("(3π, 2.425)"),
        ],
        note = "second interval printed for x1; read as x2"
    ),
    spec!(
        23, "branin-rcos-2", "Branin RCOS 2", Some("MUNTEANU1998"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 15.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::branin_rcos_2),
        [
            opt(pts(&[&[-3.2, 12.53]]), rounded(5.559037, 6)),
        ]
    ),
    spec!(
        24, "brent", "Brent", Some("BRANIN1972"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, UM),
        Plain(a_to_g::brent),
        [
            opt(pts(&[&[-10.0, -10.0]]), exact(0.0)).note("value at the point is e^{-200}").corrected_from("(0, 0)"),
        ]
    ),
    spec!(
        25, "brown", "Brown", Some("BEGAMBRE2009"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-1.0, 4.0),
        flags(C, DF, NS, SC, UM),
        Plain(a_to_g::brown),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        26, "bukin-2", "Bukin 2", None,
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-15.0, -5.0), (-3.0, 3.0)]),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::bukin_2),
        [
            opt(pts(&[&[-10.0, 0.0]]), exact(0.0)),
        ],
        note = "x2 interval printed as -3 <= x2 <= -3; read as [-3, 3]"
    ),
    spec!(
        27, "bukin-4", "Bukin 4", None,
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-15.0, -5.0), (-3.0, 3.0)]),
        flags(C, ND, S, NSC, MM),
        Plain(a_to_g::bukin_4),
        [
            opt(pts(&[&[-10.0, 0.0]]), exact(0.0)),
        ],
        note = "x2 interval printed as -3 <= x2 <= -3; read as [-3, 3]"
    ),
    spec!(
        28, "bukin-6", "Bukin 6", None,
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-15.0, -5.0), (-3.0, 3.0)]),
        flags(C, ND, NS, NSC, MM),
        Plain(a_to_g::bukin_6),
        [
            opt(pts(&[&[-10.0, 1.0]]), exact(0.0)),
        ],
        note = "x2 interval printed as -3 <= x2 <= -3; read as [-3, 3]"
    ),
    spec!(
        29, "three-hump-camel", "Three-Hump Camel", Some("BRANIN1972"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 5.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::three_hump_camel),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        30, "six-hump-camel", "Six-Hump Camel", Some("BRANIN1972"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 5.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::six_hump_camel),
        [
            opt(pts(&[&[-0.0898, 0.7126], &[0.0898, -0.7126]]), rounded(-1.0316, 4)).note("second point printed with a stray third coordinate"),
        ]
    ),
    spec!(
        31, "chen-bird", "Chen Bird", Some("CHEN2003"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::chen_bird),
        [
            opt(pts(&[&[7.0 / 18.0, 13.0 / 18.0]]), exact(-2000.0)).corrected_from("(-7/18, -13/18)"),
        ],
        canonical
    ),
    spec!(
        32, "chen-v", "Chen V", Some("CHEN2003"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::chen_v),
        [
            opt(pts(&[&[-0.3888889, 0.7222222]]), exact(-2000.0)),
        ],
        canonical
    ),
    spec!(
        33, "chichinadze", "Chichinadze", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-30.0, 30.0),
        flags(C, DF, S, NSC, MM),
        Plain(a_to_g::chichinadze),
        [
            opt(pts(&[&[5.90133, 0.5]]), rounded(-43.3159, 4)),
        ]
    ),
    spec!(
        34, "chung-reynolds", "Chung Reynolds", Some("CHUNG1998"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, PS, SC, UM),
        Plain(a_to_g::chung_reynolds),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        35, "cola", "Cola", Some("ADORIO2005"),
        DimensionRule::Fixed(17),
        COLA_BOUNDS,
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::cola),
        [
            opt(Locations::Unstated, rounded(11.7464, 4)),
        ],
        note = "point 0 fixed at the origin, point 1 on the x-axis; u[0] is its abscissa"
    ),
    spec!(
        36, "colville", "Colville", None,
        DimensionRule::Fixed(4),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::colville),
        [
            opt(every(1.0), exact(0.0)),
        ]
    ),
    spec!(
        37, "corana", "Corana", Some("CORANA1987"),
        DimensionRule::Fixed(4),
        Bounds::Uniform(-500.0, 500.0),
        flags(DC, ND, S, SC, MM),
        Plain(a_to_g::corana),
        [
            opt(every(0.0), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        38, "cosine-mixture", "Cosine Mixture", Some("ALI2005"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-1.0, 1.0),
        flags(DC, ND, S, SC, MM),
        Plain(a_to_g::cosine_mixture),
        [
            opt(every(0.0), OptimumValue::PerDim(0.1)).note("printed as 0.2 or 0.4 for D = 2 and 4"),
        ]
    ),
    spec!(
        39, "cross-in-tray", "Cross-in-Tray", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DU, NS, NSC, MM),
        Plain(a_to_g::cross_in_tray),
        [
            opt(pts(&[&[1.34940668535334, 1.349406608602084], &[1.34940668535334, -1.349406608602084], &[-1.34940668535334, 1.349406608602084], &[-1.34940668535334, -1.349406608602084]]), rounded(-2.06261218, 8)),
        ]
    ),
    spec!(
        40, "csendes", "Csendes", Some("CSENDES1997"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, S, SC, MM),
        Plain(a_to_g::csendes),
        [
            opt(every(0.0), exact(0.0)),
        ],
        note = "term taken as 0 at x_i = 0"
    ),
    spec!(
        41, "cube", "Cube", Some("LAVI1966"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, UM),
        Plain(a_to_g::cube),
        [
            opt(pts(&[&[1.0, 1.0]]), exact(0.0)).corrected_from("(-1, 1)"),
        ]
    ),
    spec!(
        42, "damavandi", "Damavandi", Some("DAMAVANDI2005"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(0.0, 14.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::damavandi),
        [
            opt(pts(&[&[2.0, 2.0]]), exact(0.0)),
        ]
    ),
    spec!(
        43, "deb-1", "Deb 1", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, S, SC, MM),
        Plain(a_to_g::deb_1),
        [
            opt(DEB_1, OptimumValue::Unstated),
        ]
    ),
    spec!(
        44, "deb-3", "Deb 3", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, S, SC, MM),
        Checked(a_to_g::deb_3),
        [
            opt(DEB_3, OptimumValue::Unstated),
        ]
    ),
    spec!(
        45, "deckkers-aarts", "Deckkers-Aarts", Some("ALI2005"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-20.0, 20.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::deckkers_aarts),
        [
            opt(pts(&[&[0.0, 15.0], &[0.0, -15.0]]), rounded(-24777.0, 0)),
        ]
    ),
    spec!(
        46, "devilliers-glasser-1", "deVilliers Glasser 1", Some("deVILLERS1981"),
        DimensionRule::Fixed(4),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::devilliers_glasser_1),
        [
            opt(Locations::Unstated, exact(0.0)),
        ]
    ),
    spec!(
        47, "devilliers-glasser-2", "deVilliers Glasser 2", Some("deVILLERS1981"),
        DimensionRule::Fixed(5),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::devilliers_glasser_2),
        [
            opt(Locations::Unstated, exact(0.0)),
        ]
    ),
    spec!(
        48, "dixon-price", "Dixon & Price", Some("DIXON1989"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, SC, UM),
        Plain(a_to_g::dixon_price),
        [
            opt(DIXON_PRICE, exact(0.0)).corrected_from("x_i = 2^((2^i - 2) / 2^i)"),
        ]
    ),
    spec!(
        49, "dolan", "Dolan", None,
        DimensionRule::Fixed(5),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::dolan),
        [
            opt(Locations::Unstated, exact(0.0)),
        ]
    ),
    spec!(
        50, "easom", "Easom", Some("CHUNG1998"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, S, NSC, MM),
        Plain(a_to_g::easom),
        [
            opt(pts(&[&[PI, PI]]), exact(-1.0)),
        ]
    ),
    spec!(
        51, "el-attar-vidyasagar-dutta", "El-Attar-Vidyasagar-Dutta", Some("EL-ATTAR1979"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, UM),
        Plain(a_to_g::el_attar_vidyasagar_dutta),
        [
            opt(pts(&[&[2.842503, 1.920175]]), rounded(0.470427, 6)),
        ]
    ),
    spec!(
        52, "egg-crate", "Egg Crate", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 5.0),
        flags(C, DU, S, NSC, MU),
        Plain(a_to_g::egg_crate),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        53, "egg-holder", "Egg Holder", None,
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-512.0, 512.0),
        flags(C, DF, NS, SC, MM),
        Plain(a_to_g::egg_holder),
        [
            opt(pts(&[&[512.0, 404.2319]]), approx(959.64)),
        ]
    ),
    spec!(
        54, "exponential", "Exponential", Some("RAHNAMAYAN2007_1"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, NS, SC, MM),
        Plain(a_to_g::exponential),
        [
            opt(every(0.0), exact(1.0)),
        ]
    ),
    spec!(
        55, "exp-2", "Exp 2", Some("ADORIO2005"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(0.0, 20.0),
        flags(CU, DU, S, SCU, MU),
        Plain(a_to_g::exp_2),
        [
            opt(pts(&[&[1.0, 10.0]]), exact(0.0)),
        ]
    ),
    spec!(
        56, "freudenstein-roth", "Freudenstein Roth", Some("RAO2009"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::freudenstein_roth),
        [
            opt(pts(&[&[5.0, 4.0]]), exact(0.0)),
        ]
    ),
    spec!(
        57, "giunta", "Giunta", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, S, SC, MM),
        Plain(a_to_g::giunta),
        [
            opt(pts(&[&[0.45834282, 0.45834282]]), rounded(0.060447, 6)),
        ]
    ),
    spec!(
        58, "goldstein-price", "Goldstein Price", Some("GOLDSTEIN1971"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-2.0, 2.0),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::goldstein_price),
        [
            opt(pts(&[&[0.0, -1.0]]), exact(3.0)),
        ]
    ),
    spec!(
        59, "griewank", "Griewank", Some("GRIEWANK1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, SC, MM),
        Plain(a_to_g::griewank),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        60, "gulf-research", "Gulf Research Problem", Some("SHANNO1970"),
        DimensionRule::Fixed(3),
        Bounds::PerCoord(&[(0.1, 100.0), (0.0, 25.6), (0.0, 5.0)]),
        flags(C, DF, NS, NSC, MM),
        Plain(a_to_g::gulf_research),
        [
            opt(pts(&[&[50.0, 25.0, 1.5]]), exact(0.0)),
        ],
        note = "divisor x_i read as x1; third interval printed for x1, read as x3"
    ),
    spec!(
        61, "hansen", "Hansen", Some("FRALEY1989"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(h_to_r::hansen),
        [
            opt(pts(&[&[-7.589893, -7.708314], &[-7.589893, -1.425128], &[-7.589893, 4.858057], &[-1.306708, -7.708314], &[-1.306708, 4.858057], &[4.976478, 4.858057], &[4.976478, -1.425128], &[4.976478, -7.708314]]), OptimumValue::Unstated),
        ]
    ),
    spec!(
        62, "hartman-3", "Hartman 3", Some("HARTMAN1972"),
        DimensionRule::Fixed(3),
        Bounds::Uniform(0.0, 1.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::hartman_3),
        [
            opt(pts(&[&[0.114, 0.556, 0.852]]), approx(-3.862782)),
        ]
    ),
    spec!(
        63, "hartman-6", "Hartman 6", Some("HARTMAN1972"),
        DimensionRule::Fixed(6),
        Bounds::Uniform(0.0, 1.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::hartman_6),
        [
            opt(pts(&[&[0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.657301]]), approx(-3.32236)),
        ]
    ),
    spec!(
        64, "helical-valley", "Helical Valley", Some("FLETCHER1963"),
        DimensionRule::Fixed(3),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, SC, MM),
        Plain(h_to_r::helical_valley),
        [
            opt(pts(&[&[1.0, 0.0, 0.0]]), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        65, "himmelblau", "Himmelblau", Some("HIMMELBLAU1972"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 5.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::himmelblau),
        [
            opt(pts(&[&[3.0, 2.0]]), exact(0.0)),
        ]
    ),
    spec!(
        66, "hosaki", "Hosaki", Some("BEKEY1974"),
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(0.0, 5.0), (0.0, 6.0)]),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::hosaki),
        [
            opt(pts(&[&[4.0, 2.0]]), approx(-2.3458)),
        ]
    ),
    spec!(
        67, "jennrich-sampson", "Jennrich-Sampson", Some("JENNRICH1968"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::jennrich_sampson),
        [
            opt(pts(&[&[0.257825, 0.257825]]), rounded(124.3612, 4)),
        ]
    ),
    spec!(
        68, "langerman-5", "Langerman-5", Some("BERSINI1996"),
        DimensionRule::Scalable { default_n: 2, min_n: 1, max_n: Some(10), step: 1 },
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, NS, SC, MM),
        Plain(h_to_r::langerman_5),
        [
            opt(Locations::Unstated, rounded(-1.4, 1)),
        ]
    ),
    spec!(
        69, "keane", "Keane", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::keane),
        [
            opt(pts(&[&[0.0, 1.39325], &[1.39325, 0.0]]), rounded(-0.673668, 6)),
        ],
        note = "value taken as 0 at the origin"
    ),
    spec!(
        70, "leon", "Leon", Some("LAVI1966"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-1.2, 1.2),
        flags(C, DF, NS, NSC, UM),
        Plain(h_to_r::leon),
        [
            opt(pts(&[&[1.0, 1.0]]), exact(0.0)),
        ]
    ),
    spec!(
        71, "matyas", "Matyas", Some("HEDAR"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, UM),
        Plain(h_to_r::matyas),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        72, "mccormick", "McCormick", Some("LOOTSMA1972"),
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-1.5, 4.0), (-3.0, 3.0)]),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mccormick),
        [
            opt(pts(&[&[-0.547, -1.547]]), approx(-1.9133)),
        ]
    ),
    spec!(
        73, "miele-cantrell", "Miele Cantrell", Some("CRAGG1969"),
        DimensionRule::Fixed(4),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::miele_cantrell),
        [
            opt(pts(&[&[0.0, 1.0, 1.0, 1.0]]), exact(0.0)),
        ]
    ),
    spec!(
        74, "mishra-1", "Mishra 1", Some("MISHRA2006_1"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(0.0, 1.0),
        flags(C, DF, NS, SC, MM),
        Plain(h_to_r::mishra_1),
        [
            opt(Locations::Unstated, exact(2.0)),
        ]
    ),
    spec!(
        75, "mishra-2", "Mishra 2", Some("MISHRA2006_1"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(0.0, 1.0),
        flags(C, DF, NS, SC, MM),
        Plain(h_to_r::mishra_2),
        [
            opt(Locations::Unstated, exact(2.0)),
        ]
    ),
    spec!(
        76, "mishra-3", "Mishra 3", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_3),
        [
            opt(pts(&[&[-8.466, -10.0]]), rounded(-0.18467, 5)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        77, "mishra-4", "Mishra 4", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_4),
        [
            opt(pts(&[&[-9.94112, -10.0]]), rounded(-0.199409, 6)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        78, "mishra-5", "Mishra 5", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_5),
        [
            opt(pts(&[&[-1.98682, -10.0]]), rounded(-1.01983, 5)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        79, "mishra-6", "Mishra 6", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_6),
        [
            opt(pts(&[&[2.88631, 1.82326]]), rounded(-2.28395, 5)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        80, "mishra-7", "Mishra 7", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_7),
        [
            opt(Locations::Unstated, exact(0.0)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        81, "mishra-8", "Mishra 8", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_8),
        [
            opt(pts(&[&[2.0, -3.0]]), exact(0.0)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        82, "mishra-9", "Mishra 9", Some("MISHRA2006_6"),
        DimensionRule::Fixed(3),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_9),
        [
            opt(pts(&[&[1.0, 2.0, 3.0]]), exact(0.0)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        83, "mishra-10", "Mishra 10", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_10),
        [
            opt(pts(&[&[0.0, 0.0], &[2.0, 2.0]]), exact(0.0)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family; the operator between x1 and x2 is read as a product"
    ),
    spec!(
        84, "mishra-11", "Mishra 11", Some("MISHRA2006_6"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::mishra_11),
        [
            opt(Locations::Unstated, exact(0.0)),
        ],
        note = "no box printed; [-10, 10] adopted from the Mishra family"
    ),
    spec!(
        85, "parsopoulos", "Parsopoulos", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 5.0),
        flags(C, DF, S, SC, MM),
        Plain(h_to_r::parsopoulos),
        [
            opt(PARSOPOULOS, exact(0.0)),
        ]
    ),
    spec!(
        86, "pen-holder", "Pen Holder", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-11.0, 11.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::pen_holder),
        [
            opt(pts(&[&[9.646168, 9.646168], &[9.646168, -9.646168], &[-9.646168, 9.646168], &[-9.646168, -9.646168]]), rounded(-0.96354, 5)),
        ]
    ),
    spec!(
        87, "pathological", "Pathological", Some("RAHNAMAYAN2007"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::pathological),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        88, "paviani", "Paviani", Some("HIMMELBLAU1972"),
        DimensionRule::Fixed(10),
        Bounds::Uniform(2.0001, 10.0),
        flags(C, DF, NS, SC, MM),
        Checked(h_to_r::paviani),
        [
            opt(every(9.351), approx(-45.778)),
        ]
    ),
    spec!(
        89, "pinter", "Pintér", Some("PINTER1996"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, SC, MM),
        Plain(h_to_r::pinter),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        90, "periodic", "Periodic", Some("ALI2005"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(CU, DU, S, SCU, MU),
        Plain(h_to_r::periodic),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.9)),
        ]
    ),
    spec!(
        91, "powell-singular", "Powell Singular", Some("POWELL1962"),
        DimensionRule::Scalable { default_n: 4, min_n: 4, max_n: None, step: 4 },
        Bounds::Uniform(-4.0, 5.0),
        flags(C, DF, NS, SC, UM),
        Plain(h_to_r::powell_singular),
        [
            opt(every(0.0), exact(0.0)).corrected_from("(3, -1, 0, 1, ..., 3, -1, 0, 1)"),
        ]
    ),
    spec!(
        92, "powell-singular-2", "Powell Singular 2", Some("FU2006"),
        DimensionRule::scalable(4, 4),
        Bounds::Uniform(-4.0, 5.0),
        flags(C, DF, NS, SC, UM),
        Plain(h_to_r::powell_singular_2),
        [
            opt(Locations::Unstated, exact(0.0)),
        ],
        note = "x_{i-1} read with 0-based indices so the sum stays in range"
    ),
    spec!(
        93, "powell-sum", "Powell Sum", Some("RAHNAMAYAN2007"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-1.0, 1.0),
        flags(C, DF, S, SC, UM),
        Plain(h_to_r::powell_sum),
        [
            opt(Locations::Unstated, exact(0.0)),
        ]
    ),
    spec!(
        94, "price-1", "Price 1", Some("PRICE1977"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, ND, S, NSC, MM),
        Plain(h_to_r::price_1),
        [
            opt(pts(&[&[-5.0, -5.0], &[-5.0, 5.0], &[5.0, -5.0], &[5.0, 5.0]]), exact(0.0)),
        ]
    ),
    spec!(
        95, "price-2", "Price 2", Some("PRICE1977"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::price_2),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.9)),
        ]
    ),
    spec!(
        96, "price-3", "Price 3", Some("PRICE1977"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::price_3),
        [
            opt(pts(&[&[-5.0, -5.0], &[-5.0, 5.0], &[5.0, -5.0], &[5.0, 5.0]]), exact(0.0)),
        ]
    ),
    spec!(
        97, "price-4", "Price 4", Some("PRICE1977"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::price_4),
        [
            opt(pts(&[&[0.0, 0.0], &[2.0, 4.0], &[1.464, -2.506]]), exact(0.0)),
        ]
    ),
    spec!(
        98, "qing", "Qing", Some("QING2006"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, S, SC, MM),
        Plain(h_to_r::qing),
        [
            opt(QING, exact(0.0)),
        ]
    ),
    spec!(
        99, "quadratic", "Quadratic", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MU),
        Plain(h_to_r::quadratic),
        [
            opt(pts(&[&[0.19388, 0.48513]]), rounded(-3873.7243, 4)),
        ]
    ),
    spec!(
        100, "quartic", "Quartic", Some("STORN1996"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-1.28, 1.28),
        flags(C, DF, S, SC, MU),
        Noisy(h_to_r::quartic),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        101, "quintic", "Quintic", Some("MISHRA2006_6"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(h_to_r::quintic),
        [
            opt(QUINTIC, exact(0.0)),
        ]
    ),
    spec!(
        102, "rana", "Rana", Some("PRICE2005"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, SC, MM),
        Plain(h_to_r::rana),
        [
            opt(Locations::Unstated, OptimumValue::Unstated),
        ]
    ),
    spec!(
        103, "ripple-1", "Ripple 1", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(0.0, 1.0),
        flags(CU, DU, NS, SCU, MU),
        Plain(h_to_r::ripple_1),
        [
            opt(Locations::Unstated, OptimumValue::Unstated).note("one global minimum; location not given"),
        ]
    ),
    spec!(
        104, "ripple-25", "Ripple 25", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(0.0, 1.0),
        flags(CU, DU, NS, SCU, MU),
        Plain(h_to_r::ripple_25),
        [
            opt(Locations::Unstated, OptimumValue::Unstated).note("one global minimum; location not given"),
        ]
    ),
    spec!(
        105, "rosenbrock", "Rosenbrock", Some("ROSENBROCK1960"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-30.0, 30.0),
        flags(C, DF, NS, SC, UM),
        Plain(h_to_r::rosenbrock),
        [
            opt(every(1.0), exact(0.0)),
        ]
    ),
    spec!(
        106, "rosenbrock-modified", "Rosenbrock Modified", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-2.0, 2.0),
        flags(C, DF, NS, NSC, MM),
        Plain(h_to_r::rosenbrock_modified),
        [
            opt(pts(&[&[-1.0, -1.0]]), exact(0.0)),
        ],
        note = "(1 - x) read as (1 - x1)"
    ),
    spec!(
        107, "rotated-ellipse", "Rotated Ellipse", None,
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, UM),
        Plain(h_to_r::rotated_ellipse),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        108, "rotated-ellipse-2", "Rotated Ellipse 2", Some("PRICE2005"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, UM),
        Plain(h_to_r::rotated_ellipse_2),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        109, "rump", "Rump", Some("MOORE1988"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, NSC, UM),
        Checked(h_to_r::rump),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        110, "salomon", "Salomon", Some("SALOMON1996"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::salomon),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        111, "sargan", "Sargan", Some("DIXON1978"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::sargan),
        [
            opt(every(0.0), exact(0.0)),
        ],
        note = "inner sum taken over j != i"
    ),
    spec!(
        112, "schaffer-1", "Schaffer 1", Some("MISHRA2006_7"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, UM),
        Plain(s_to_z::schaffer_1),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        113, "schaffer-2", "Schaffer 2", Some("MISHRA2006_7"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, UM),
        Plain(s_to_z::schaffer_2),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(0.0)),
        ]
    ),
    spec!(
        114, "schaffer-3", "Schaffer 3", Some("MISHRA2006_7"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, UM),
        Plain(s_to_z::schaffer_3),
        [
            opt(pts(&[&[0.0, 1.253115]]), rounded(0.00156685, 8)),
        ]
    ),
    spec!(
        115, "schaffer-4", "Schaffer 4", Some("MISHRA2006_7"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, UM),
        Plain(s_to_z::schaffer_4),
        [
            opt(pts(&[&[0.0, 1.253115]]), rounded(0.292579, 6)),
        ]
    ),
    spec!(
        116, "schmidt-vetters", "Schmidt Vetters", Some("LOOTSMA1972"),
        DimensionRule::Fixed(3),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(s_to_z::schmidt_vetters),
        [
            opt(every(0.78547), exact(3.0)),
        ],
        note = "no box printed; [0, 10] adopted"
    ),
    spec!(
        117, "schumer-steiglitz", "Schumer Steiglitz", Some("SCHUMER1968"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, SC, UM),
        Plain(s_to_z::schumer_steiglitz),
        [
            opt(every(0.0), exact(0.0)),
        ],
        note = "no box printed; [-10, 10] adopted"
    ),
    spec!(
        118, "schwefel", "Schwefel", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, PS, SC, UM),
        Param(s_to_z::schwefel),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        119, "schwefel-1-2", "Schwefel 1.2", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::schwefel_1_2),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        120, "schwefel-2-4", "Schwefel 2.4", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(s_to_z::schwefel_2_4),
        [
            opt(every(1.0), exact(0.0)),
        ]
    ),
    spec!(
        121, "schwefel-2-6", "Schwefel 2.6", Some("SCHWEFEL1981"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, UM),
        Plain(s_to_z::schwefel_2_6),
        [
            opt(pts(&[&[1.0, 3.0]]), exact(0.0)),
        ]
    ),
    spec!(
        122, "schwefel-2-20", "Schwefel 2.20", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, ND, S, SC, UM),
        Plain(s_to_z::schwefel_2_20),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        123, "schwefel-2-21", "Schwefel 2.21", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, ND, S, SC, UM),
        Plain(s_to_z::schwefel_2_21),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        124, "schwefel-2-22", "Schwefel 2.22", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::schwefel_2_22),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        125, "schwefel-2-23", "Schwefel 2.23", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::schwefel_2_23),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        126, "schwefel-2-23-b", "Schwefel 2.23", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::schwefel_2_23),
        [
            opt(every(0.0), exact(0.0)),
        ],
        note = "duplicate of f125"
    ),
    spec!(
        127, "schwefel-2-25", "Schwefel 2.25", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(s_to_z::schwefel_2_25),
        [
            opt(every(1.0), exact(0.0)),
        ]
    ),
    spec!(
        128, "schwefel-2-26", "Schwefel 2.26", Some("SCHWEFEL1981"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, S, SC, MM),
        Plain(s_to_z::schwefel_2_26),
        [
            opt(SCHWEFEL_2_26, rounded(-418.983, 3)).note("k = 0 branch sampled"),
        ]
    ),
    spec!(
        129, "schwefel-2-36", "Schwefel 2.36", Some("SCHWEFEL1981"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(0.0, 500.0),
        flags(C, DF, S, SC, MM),
        Plain(s_to_z::schwefel_2_36),
        [
            opt(pts(&[&[12.0, 12.0]]), exact(-3456.0)),
        ]
    ),
    spec!(
        130, "shekel-5", "Shekel 5", Some("OPACIC1973"),
        DimensionRule::Fixed(4),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::shekel_5),
        [
            opt(pts(&[&[4.0, 4.0, 4.0, 4.0]]), approx(-10.1499)),
        ],
        note = "table rows have four columns, so D = 4"
    ),
    spec!(
        131, "shekel-7", "Shekel 7", Some("OPACIC1973"),
        DimensionRule::Fixed(4),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::shekel_7),
        [
            opt(pts(&[&[4.0, 4.0, 4.0, 4.0]]), approx(-10.3999)),
        ],
        note = "table rows have four columns, so D = 4"
    ),
    spec!(
        132, "shekel-10", "Shekel 10", Some("OPACIC1973"),
        DimensionRule::Fixed(4),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::shekel_10),
        [
            opt(pts(&[&[4.0, 4.0, 4.0, 4.0]]), approx(-10.5319)),
        ],
        note = "table rows have four columns, so D = 4"
    ),
    spec!(
        133, "shubert", "Shubert", Some("HENNART1982"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, SU, NSC, MM),
        Plain(s_to_z::shubert),
        [
            opt(pts(&[&[-7.0835, 4.858], &[-7.0835, -7.7083], &[-1.4251, -7.0835], &[5.4828, 4.858], &[-1.4251, -0.8003], &[4.858, 5.4828], &[-7.7083, -7.0835], &[-7.0835, -1.4251], &[-7.7083, -0.8003], &[-7.7083, 5.4828], &[-0.8003, -7.7083], &[-0.8003, -1.4251], &[-0.8003, 4.858], &[-1.4251, 5.4828], &[5.4828, -7.7083], &[4.858, -7.0835], &[5.4828, -1.4251], &[4.858, -0.8003]]), approx(-186.7309)),
        ],
        note = "separability printed as 'Separable?'"
    ),
    spec!(
        134, "shubert-3", "Shubert 3", Some("ADORIO2005"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(s_to_z::shubert_3),
        [
            opt(Locations::Unstated, approx(-29.6733337)),
        ]
    ),
    spec!(
        135, "shubert-4", "Shubert 4", Some("ADORIO2005"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(s_to_z::shubert_4),
        [
            opt(Locations::Unstated, approx(-25.740858)),
        ]
    ),
    spec!(
        136, "schaffer-f6", "Schaffer F6", Some("SCHAFFER1989"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::schaffer_f6),
        [
            opt(every(0.0), exact(0.0)),
        ],
        note = "sum taken over consecutive pairs"
    ),
    spec!(
        137, "sphere", "Sphere", Some("SCHUMER1968"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(0.0, 10.0),
        flags(C, DF, S, SC, MM),
        Plain(s_to_z::sphere),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        138, "step", "Step", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(DC, ND, S, SC, UM),
        Plain(s_to_z::step),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        139, "step-2", "Step 2", Some("BAECK1993"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(DC, ND, S, SC, UM),
        Plain(s_to_z::step_2),
        [
            opt(every(0.5), exact(0.0)),
        ]
    ),
    spec!(
        140, "step-3", "Step 3", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-100.0, 100.0),
        flags(DC, ND, S, SC, UM),
        Plain(s_to_z::step_3),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        141, "stepint", "Stepint", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-5.12, 5.12),
        flags(DC, ND, S, SC, UM),
        Plain(s_to_z::stepint),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        142, "stretched-v-sine-wave", "Stretched V Sine Wave", Some("SCHAFFER1989"),
        DimensionRule::scalable(2, 2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::stretched_v_sine_wave),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        143, "sum-squares", "Sum Squares", Some("HEDAR"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, SC, UM),
        Plain(s_to_z::sum_squares),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        144, "styblinski-tang", "Styblinski-Tang", Some("SILAGADZE2007"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-5.0, 5.0),
        flags(C, DF, NS, NSC, MM),
        Plain(s_to_z::styblinski_tang),
        [
            opt(every(-2.903534), rounded(-78.332, 3)),
        ]
    ),
    spec!(
        145, "holder-table-1", "Holder Table 1", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(s_to_z::holder_table_1),
        [
            opt(pts(&[&[9.646168, 9.646168], &[9.646168, -9.646168], &[-9.646168, 9.646168], &[-9.646168, -9.646168]]), rounded(-26.920336, 6)),
        ],
        canonical,
        note = "exponent uses the Euclidean norm (x1^2 + x2^2)^0.5"
    ),
    spec!(
        146, "holder-table-2", "Holder Table 2", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(s_to_z::holder_table_2),
        [
            opt(pts(&[&[8.055023472141116, 9.664590028909654], &[8.055023472141116, -9.664590028909654], &[-8.055023472141116, 9.664590028909654], &[-8.055023472141116, -9.664590028909654]]), rounded(-19.2085, 5)),
        ],
        canonical,
        note = "exponent uses the Euclidean norm (x1^2 + x2^2)^0.5"
    ),
    spec!(
        147, "carrom-table", "Carrom Table", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(s_to_z::carrom_table),
        [
            opt(pts(&[&[9.646157266348881, 9.646134286497169], &[9.646157266348881, -9.646134286497169], &[-9.646157266348881, 9.646134286497169], &[-9.646157266348881, -9.646134286497169]]), rounded(-24.1568155, 7)),
        ]
    ),
    spec!(
        148, "testtube-holder", "Testtube Holder", Some("MISHRA2006_6"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, MM),
        Plain(s_to_z::testtube_holder),
        [
            opt(pts(&[&[FRAC_PI_2, 0.0], &[-FRAC_PI_2, 0.0]]), rounded(-10.8723, 6)),
        ]
    ),
    spec!(
        149, "trecanni", "Trecanni", Some("DIXON1978"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 5.0),
        flags(C, DF, S, NSC, UM),
        Plain(s_to_z::trecanni),
        [
            opt(pts(&[&[0.0, 0.0], &[-2.0, 0.0]]), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        150, "trid-6", "Trid 6", Some("HEDAR"),
        DimensionRule::Fixed(6),
        Bounds::Uniform(-36.0, 36.0),
        flags(C, DF, NS, NSC, MM),
        Plain(s_to_z::trid),
        [
            opt(Locations::Unstated, exact(-50.0)),
        ]
    ),
    spec!(
        151, "trid-10", "Trid 10", Some("HEDAR"),
        DimensionRule::Fixed(10),
        Bounds::Uniform(-100.0, 100.0),
        flags(C, DF, NS, NSC, MM),
        Plain(s_to_z::trid),
        [
            opt(Locations::Unstated, exact(-200.0)),
        ]
    ),
    spec!(
        152, "trefethen", "Trefethen", Some("ADORIO2005"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, NSC, MM),
        Plain(s_to_z::trefethen),
        [
            opt(pts(&[&[-0.024403, 0.210612]]), rounded(-3.30686865, 8)),
        ]
    ),
    spec!(
        153, "trigonometric-1", "Trigonometric 1", Some("DIXON1978"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(0.0, PI),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::trigonometric_1),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        154, "trigonometric-2", "Trigonometric 2", Some("FU2006"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::trigonometric_2),
        [
            opt(every(0.9), exact(1.0)),
        ]
    ),
    spec!(
        155, "tripod", "Tripod", Some("RAHNAMAYAN2007"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-100.0, 100.0),
        flags(DC, ND, NS, NSC, MM),
        Plain(s_to_z::tripod),
        [
            opt(pts(&[&[0.0, -50.0]]), exact(0.0)),
        ],
        note = "p(x) = 0 for x < 0"
    ),
    spec!(
        156, "ursem-1", "Ursem 1", Some("ROENKKOENEN2009"),
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-2.5, 3.0), (-2.0, 2.0)]),
        flags(CU, DU, S, SCU, MU),
        Plain(s_to_z::ursem_1),
        [
            opt(Locations::Unstated, OptimumValue::Unstated).note("single global minimum; location not given"),
        ]
    ),
    spec!(
        157, "ursem-3", "Ursem 3", Some("ROENKKOENEN2009"),
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-2.0, 2.0), (-1.5, 1.5)]),
        flags(CU, DU, NS, SCU, MU),
        Plain(s_to_z::ursem_3),
        [
            opt(Locations::Unstated, OptimumValue::Unstated).note("single global minimum; location not given"),
        ]
    ),
    spec!(
        158, "ursem-4", "Ursem 4", Some("ROENKKOENEN2009"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-2.0, 2.0),
        flags(CU, DU, NS, SCU, MU),
        Plain(s_to_z::ursem_4),
        [
            opt(Locations::Unstated, OptimumValue::Unstated).note("single global minimum; location not given"),
        ]
    ),
    spec!(
        159, "ursem-waves", "Ursem Waves", Some("ROENKKOENEN2009"),
        DimensionRule::Fixed(2),
        Bounds::PerCoord(&[(-0.9, 1.2), (-1.2, 1.2)]),
        flags(CU, DU, NS, SCU, MU),
        Plain(s_to_z::ursem_waves),
        [
            opt(Locations::Unstated, OptimumValue::Unstated).note("single global minimum; location not given"),
        ]
    ),
    spec!(
        160, "venter-sobiezcczanski-sobieski", "Venter Sobiezcczanski-Sobieski", Some("BEGAMBRE2009"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-50.0, 50.0),
        flags(C, DF, S, NSC, MU),
        Plain(s_to_z::venter_sobiezcczanski_sobieski),
        [
            opt(pts(&[&[0.0, 0.0]]), exact(-400.0)),
        ]
    ),
    spec!(
        161, "watson", "Watson", Some("SCHWEFEL1981"),
        DimensionRule::Fixed(6),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::watson),
        [
            opt(pts(&[&[-0.0158, 1.012, -0.2329, 1.26, -1.513, 0.9928]]), rounded(0.002288, 6)),
        ]
    ),
    spec!(
        162, "wayburn-seader-1", "Wayburn Seader 1", Some("WAYBURN1987"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::wayburn_seader_1),
        [
            opt(pts(&[&[1.0, 2.0], &[1.597, 0.806]]), exact(0.0)).note("second point printed to three decimals"),
        ],
        note = "no box printed; [-500, 500] adopted from Wayburn Seader 2"
    ),
    spec!(
        163, "wayburn-seader-2", "Wayburn Seader 2", Some("WAYBURN1987"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::wayburn_seader_2),
        [
            opt(pts(&[&[0.2, 1.0], &[0.425, 1.0]]), exact(0.0)),
        ]
    ),
    spec!(
        164, "wayburn-seader-3", "Wayburn Seader 3", Some("WAYBURN1987"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-500.0, 500.0),
        flags(C, DF, NS, SC, UM),
        Plain(s_to_z::wayburn_seader_3),
        [
            opt(pts(&[&[5.611, 6.187]]), rounded(21.35, 2)),
        ]
    ),
    spec!(
        165, "wavy", "W / Wavy", Some("COURRIEU1997"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-PI, PI),
        flags(C, DF, S, SC, MM),
        Param(s_to_z::wavy),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        166, "weierstrass", "Weierstrass", Some("SUGANTHAN2005"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-0.5, 0.5),
        flags(C, DF, S, SC, MM),
        Param(s_to_z::weierstrass),
        [
            opt(every(0.0), exact(0.0)),
        ],
        canonical
    ),
    spec!(
        167, "whitley", "Whitley", Some("WHITLEY1996"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.24, 10.24),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::whitley),
        [
            opt(every(1.0), OptimumValue::Unstated),
        ],
        note = "no box printed; [-10.24, 10.24] adopted"
    ),
    spec!(
        168, "wolfe", "Wolfe", Some("SCHWEFEL1981"),
        DimensionRule::Fixed(3),
        Bounds::Uniform(0.0, 2.0),
        flags(C, DF, S, SC, MM),
        Plain(s_to_z::wolfe),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        169, "xin-she-yang-1", "Xin-She Yang 1", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-5.0, 5.0),
        flags(CU, DU, S, SCU, MU),
        Noisy(s_to_z::xin_she_yang_1),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        170, "xin-she-yang-2", "Xin-She Yang 2", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-2.0 * PI, 2.0 * PI),
        flags(CU, DU, NS, SCU, MU),
        Plain(s_to_z::xin_she_yang_2),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        171, "xin-she-yang-3", "Xin-She Yang 3", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-20.0, 20.0),
        flags(CU, DU, NS, SCU, MU),
        Param(s_to_z::xin_she_yang_3),
        [
            opt(every(0.0), exact(-1.0)),
        ]
    ),
    spec!(
        172, "xin-she-yang-4", "Xin-She Yang 4", None,
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-10.0, 10.0),
        flags(CU, DU, NS, SCU, MU),
        Plain(s_to_z::xin_she_yang_4),
        [
            opt(every(0.0), exact(-1.0)),
        ]
    ),
    spec!(
        173, "zakharov", "Zakharov", Some("RAHNAMAYAN2007"),
        DimensionRule::scalable(2, 1),
        Bounds::Uniform(-5.0, 10.0),
        flags(C, DF, NS, SC, MM),
        Plain(s_to_z::zakharov),
        [
            opt(every(0.0), exact(0.0)),
        ]
    ),
    spec!(
        174, "zettl", "Zettl", Some("SCHWEFEL1995"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-5.0, 10.0),
        flags(C, DF, NS, NSC, UM),
        Plain(s_to_z::zettl),
        [
            opt(pts(&[&[-0.0299, 0.0]]), rounded(-0.003791, 6)),
        ]
    ),
    spec!(
        175, "zirilli", "Zirilli", Some("ALI2005"),
        DimensionRule::Fixed(2),
        Bounds::Uniform(-10.0, 10.0),
        flags(C, DF, S, NSC, UM),
        Plain(s_to_z::zirilli),
        [
            opt(pts(&[&[-1.0465, 0.0]]), approx(-0.3523)),
        ]
    ),
];
