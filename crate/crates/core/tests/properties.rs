use proptest::prelude::*;

use laplace_polya::bounds::{c_bound, d_bound};
use laplace_polya::cube::sigma::{sigma_exact, DirectionQ};
use laplace_polya::eulerian::eulerian_explicit;
use laplace_polya::laplace::{jn, jn_explicit, JTable};
use laplace_polya::rational::{rat, Rat};

fn coord() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn j_is_even_and_supported_inside(n in 2u32..40, r in -50i64..50) {
        let t = JTable::new();
        let v = jn(&t, n, r).unwrap();
        prop_assert_eq!(&v, &jn(&t, n, -r).unwrap());
        prop_assert_eq!(&v, &jn_explicit(n, r).unwrap());
        if r.unsigned_abs() >= n as u64 {
            prop_assert_eq!(v, rat(0, 1));
        } else {
            prop_assert!(v > rat(0, 1));
        }
    }

    #[test]
    fn two_step_ratio_is_bracketed(n in 4i64..80, s in 0i64..1000) {
        let r = -1 + s % (n - 1);
        let t = JTable::new();
        let ratio = t.get(n as u32, r + 2) / t.get(n as u32, r);
        prop_assert!(c_bound(n, r).unwrap() <= ratio);
        prop_assert!(ratio <= d_bound(n, r).unwrap());
    }

    #[test]
    fn eulerian_rows_are_symmetric(m in 1u32..30, l in 1i64..30) {
        prop_assume!(l <= m as i64);
        prop_assert_eq!(eulerian_explicit(m, l), eulerian_explicit(m, m as i64 + 1 - l));
    }

    #[test]
    fn sigma_is_symmetric_and_homogeneous(
        coords in prop::collection::vec(coord(), 2..7),
        c in (1i64..7, 1i64..5),
        shift in 0usize..7,
    ) {
        prop_assume!(coords.iter().filter(|x| **x != rat(0, 1)).count() >= 2);
        let d = DirectionQ::new(coords.clone()).unwrap();
        let s = sigma_exact(&d).unwrap();
        prop_assert!(s > rat(0, 1));

        let mut rotated: Vec<Rat> = coords.iter().map(|x| -x.clone()).collect();
        let len = rotated.len();
        rotated.rotate_left(shift % len);
        prop_assert_eq!(&sigma_exact(&DirectionQ::new(rotated).unwrap()).unwrap(), &s);

        let c = rat(c.0, c.1);
        let scaled = sigma_exact(&d.scaled(&c)).unwrap();
        prop_assert_eq!(scaled * c, s);
    }
}
