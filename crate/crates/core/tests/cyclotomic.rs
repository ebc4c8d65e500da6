mod common;

use proptest::prelude::*;
use sl2q::cyclotomic::{chebyshev_like, eval_int_poly, minimal_l, RootOrder};
use sl2q::CycNumber;

fn triple(n: usize, seed: u64) -> (RootOrder, CycNumber, CycNumber, CycNumber) {
    let o = RootOrder::new(n).unwrap();
    let mut r = common::rng(seed);
    let a = common::scalar(&o, &mut r);
    let b = common::scalar(&o, &mut r);
    let c = common::scalar(&o, &mut r);
    (o, a, b, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(n in 3usize..=16, seed in any::<u64>()) {
        let (o, a, b, c) = triple(n, seed);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, o.zero());
        prop_assert_eq!(&a * &o.one(), a.clone());
    }

    #[test]
    fn inverse_is_two_sided(n in 3usize..=16, seed in any::<u64>()) {
        let (o, a, _, _) = triple(n, seed);
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(&a * &inv, o.one());
        prop_assert_eq!(&inv * &a, o.one());
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn string_coordinates_round_trip(n in 3usize..=16, seed in any::<u64>()) {
        let (o, a, _, _) = triple(n, seed);
        prop_assert_eq!(CycNumber::from_strings(o.field(), &a.to_strings()).unwrap(), a);
    }

    #[test]
    fn q_powers_are_periodic(n in 3usize..=16, k in -40i64..40) {
        let o = RootOrder::new(n).unwrap();
        prop_assert_eq!(o.q_pow(k) * o.q_pow(-k), o.one());
        prop_assert_eq!(o.q_pow(k + n as i64), o.q_pow(k));
    }
}

#[test]
fn minimal_l_matches_brute_force() {
    for n in 3..=24 {
        let o = RootOrder::new(n).unwrap();
        let brute = (1..=n).find(|&m| o.q_pow(2 * m as i64).is_one()).unwrap();
        assert_eq!(minimal_l(n).unwrap(), brute);
    }
    assert!(minimal_l(2).is_err());
    assert!(RootOrder::new(1).is_err());
}

#[test]
fn q_numbers_vanish_exactly_at_l() {
    for n in 3..=12 {
        let o = RootOrder::new(n).unwrap();
        let l = o.l() as i64;
        assert!(o.q_number(l).is_zero());
        for p in 1..l {
            assert!(!o.q_number(p).is_zero());
        }
        for p in 1..2 * l {
            assert_eq!(
                o.q_number(p + 1),
                o.q_plus_q_inv() * o.q_number(p) - o.q_number(p - 1)
            );
        }
        assert_eq!(o.q_number(-3), -o.q_number(3));
    }
}

#[test]
fn chebyshev_property_on_random_units() {
    let mut r = common::rng(5);
    for n in 3..=12 {
        let o = RootOrder::new(n).unwrap();
        for l in 1..=8 {
            let ql = chebyshev_like(l);
            let x = common::nonzero_scalar(&o, &mut r);
            let xi = x.inverse().unwrap();
            assert_eq!(
                eval_int_poly(&ql, &(&x + &xi)),
                x.pow(l as u32) + xi.pow(l as u32)
            );
        }
    }
}
