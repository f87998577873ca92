use gobench::grid::{export, GridRequest};
use gobench::text::{num, parse_point, point};
use proptest::prelude::*;

proptest! {
    #[test]
    fn numbers_round_trip(v in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
        prop_assert_eq!(num(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
    }

    #[test]
    fn points_round_trip(x in prop::collection::vec(-1e6f64..1e6, 1..8)) {
        prop_assert_eq!(parse_point(&point(&x)).unwrap(), x);
    }

    #[test]
    fn grids_have_square_row_counts(r in 2usize..12, a in -10.0f64..0.0, w in 0.1f64..10.0) {
        let req = GridRequest { function: "rosenbrock".into(), x1: Some((a, a + w)), x2: None, resolution: r };
        let (mut one, mut two) = (Vec::new(), Vec::new());
        export(&req, &mut one).unwrap();
        export(&req, &mut two).unwrap();
        prop_assert_eq!(&one, &two);
        let text = String::from_utf8(one).unwrap();
        prop_assert_eq!(text.lines().count(), r * r + 1);
        let last = text.lines().last().unwrap();
        let prefix = num(a + w) + ",";
        prop_assert!(last.starts_with(&prefix), "{} does not start with {}", last, prefix);
    }
}
