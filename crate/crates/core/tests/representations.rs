mod common;

use sl2q::representations::random::{families, random_representation, DrawnParams};
use sl2q::representations::{
    build_f, build_generic_one_dim, build_highest_weight, build_one_dim, build_periodic,
    build_semiperiodic, central_character, check_scalar_relation, commutant_dimension,
    scalar_relation_sides, verify_relations, AlgebraTag, Case4CyclicParams, FParams, Family,
    HighestWeightParams, Matrix, OneDimParams, Params, PeriodicParams, RepresentationJson,
    SemiPeriodicParams,
};
use sl2q::{CycNumber, RootOrder};

fn diagonal(m: &Matrix) -> Vec<CycNumber> {
    (0..m.rows()).map(|i| m.get(i, i).clone()).collect()
}

fn pairwise_distinct(v: &[CycNumber]) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, a)| v[i + 1..].iter().all(|b| a != b))
}

#[test]
fn casimir_matrix_is_the_free_parameter_in_case_one() {
    let mut r = common::rng(1);
    for n in [3, 4, 5, 6] {
        let o = RootOrder::new(n).unwrap();
        for _ in 0..10 {
            let (p, rep) =
                random_representation(AlgebraTag::B, Family::Periodic, &o, &mut r).unwrap();
            let DrawnParams::B(Params::Periodic(p)) = p else {
                unreachable!()
            };
            assert_eq!(rep.casimir_matrix(), Matrix::scalar(&p.c2p, o.l()));
            let cc = central_character(&rep).unwrap();
            assert_eq!(cc.xm_l, p.x_minus.pow(o.l() as u32));
            assert_eq!(cc.z, (&p.c - &o.lambda() * &p.x0).pow(o.l() as u32));
        }
    }
}

#[test]
fn case_one_spectrum_is_distinct_iff_z_nonzero() {
    let mut r = common::rng(2);
    for n in [3, 4, 5, 6, 7, 8] {
        let o = RootOrder::new(n).unwrap();
        for _ in 0..5 {
            let (_, rep) =
                random_representation(AlgebraTag::B, Family::Periodic, &o, &mut r).unwrap();
            assert!(pairwise_distinct(&diagonal(&rep.x0)));
            let (_, cyc) =
                random_representation(AlgebraTag::B, Family::Case4Cyclic, &o, &mut r).unwrap();
            let d = diagonal(&cyc.x0);
            assert!(d.iter().all(|x| *x == d[0]));
        }
    }
}

#[test]
fn semiperiodic_matches_the_reordered_product() {
    let o = RootOrder::new(5).unwrap();
    let mut r = common::rng(3);
    for _ in 0..10 {
        let (p, rep) =
            random_representation(AlgebraTag::B, Family::SemiPeriodic, &o, &mut r).unwrap();
        let DrawnParams::B(Params::SemiPeriodic(p)) = p else {
            unreachable!()
        };
        // X- w_1 = x_+^-1 X- X+ w_0
        let prod = rep.xm.mul(&rep.xp);
        let xp_inv = p.x_plus.inverse().unwrap();
        for i in 0..o.l() {
            assert_eq!(rep.xm.get(i, 1), &(prod.get(i, 0) * &xp_inv));
        }
        for k in 0..o.l() {
            assert!(rep.xm.get(k, 0).is_zero());
            let ki = k as i64;
            let expected = o.q_pow(-2 * ki) * &p.x0 + o.q_pow(-ki) * o.q_number(ki) * &p.c;
            assert_eq!(rep.x0.get(k, k), &expected);
        }
        let cc = central_character(&rep).unwrap();
        assert_eq!(cc.c2p, o.q_pow(2) * &p.x0 * &p.x0 - o.q() * &p.c * &p.x0);
        assert_eq!(cc.z, (&p.c - &o.lambda() * &p.x0).pow(o.l() as u32));
        assert_eq!(commutant_dimension(&rep), 1);
    }
}

#[test]
fn semiperiodic_mirrors_periodic_invariants() {
    // the semi-periodic family matches the periodic one on dimension, z and
    // c2p once the x_- = 0 condition on w_0 is imposed
    let o = RootOrder::new(6).unwrap();
    let (c, x0) = (o.q(), o.int(2));
    let semi = build_semiperiodic(
        &SemiPeriodicParams {
            c: c.clone(),
            x0: x0.clone(),
            x_plus: o.one(),
        },
        &o,
    )
    .unwrap();
    let c2p = o.q_pow(2) * &x0 * &x0 - o.q() * &c * &x0;
    let per = build_periodic(
        &PeriodicParams {
            c,
            c2p,
            x0: o.q_pow(-2) * &x0 + o.q_pow(-1) * &semi.c,
            x_minus: o.one(),
        },
        &o,
    )
    .unwrap();
    let (a, b) = (
        central_character(&semi).unwrap(),
        central_character(&per).unwrap(),
    );
    assert_eq!(semi.dim(), per.dim());
    assert_eq!(a.c2p, b.c2p);
    assert_eq!(a.z, b.z);
}

#[test]
fn highest_weight_characters_vanish_on_x_powers() {
    let mut r = common::rng(4);
    for n in [3, 4, 5, 6, 8] {
        let o = RootOrder::new(n).unwrap();
        for _ in 0..10 {
            let (_, rep) =
                random_representation(AlgebraTag::B, Family::HighestWeight, &o, &mut r).unwrap();
            let cc = central_character(&rep).unwrap();
            assert!(cc.xp_l.is_zero() && cc.xm_l.is_zero());
            let (lhs, rhs) = scalar_relation_sides(&cc, &o);
            assert!(lhs.is_zero() && rhs.is_zero());
            let last = rep.dim() - 1;
            assert!((0..rep.dim()).all(|i| rep.xp.get(i, 0).is_zero()));
            assert!((0..rep.dim()).all(|i| rep.xm.get(i, last).is_zero()));
            assert_eq!(commutant_dimension(&rep), 1);
        }
    }
}

#[test]
fn full_dimension_highest_weight_spectrum() {
    let o = RootOrder::new(5).unwrap();
    let (c, nu) = (o.int(2), o.q());
    let rep = build_highest_weight(
        &HighestWeightParams {
            n_dim: 5,
            nu: Some(nu.clone()),
            c: Some(c.clone()),
        },
        &o,
    )
    .unwrap();
    assert!(verify_relations(&rep).all_passed());
    for p in 0..5 {
        let expected = o.lambda_inv() * (&c - o.q_pow(2 * p as i64) * &nu);
        assert_eq!(rep.x0.get(p, p), &expected);
    }
}

#[test]
fn one_dimensional_examples() {
    let o = RootOrder::new(5).unwrap();
    let rep = build_one_dim(
        &OneDimParams {
            x0: o.one(),
            xp: o.int(2),
            xm: o.int(3),
        },
        &o,
    )
    .unwrap();
    assert_eq!(rep.c, o.lambda());
    assert!(verify_relations(&rep).all_passed());
    let zero = build_one_dim(
        &OneDimParams {
            x0: o.int(4),
            xp: o.zero(),
            xm: o.zero(),
        },
        &o,
    )
    .unwrap();
    assert!(central_character(&zero).unwrap().d2.is_zero());
    let generic = build_generic_one_dim(
        &OneDimParams {
            x0: o.q(),
            xp: o.int(-1),
            xm: o.int(7),
        },
        &o,
    )
    .unwrap();
    assert!(verify_relations(&generic).all_passed());
    assert_eq!(commutant_dimension(&generic), 1);
}

#[test]
fn f_representations_satisfy_the_quotient_relation() {
    let mut r = common::rng(5);
    for n in [3, 4, 5, 6] {
        let o = RootOrder::new(n).unwrap();
        for &f in families(AlgebraTag::F) {
            for _ in 0..10 {
                let (p, rep) = random_representation(AlgebraTag::F, f, &o, &mut r).unwrap();
                let cc = central_character(&rep).unwrap();
                assert!(cc.d2.is_one());
                assert!(check_scalar_relation(&cc, &o));
                if let DrawnParams::F(FParams::SemiPeriodic { nu, .. }) = &p {
                    assert_eq!(cc.z, nu.pow(o.l() as u32));
                }
                if f == Family::OneDim {
                    assert!(!rep.xp.is_zero() && !rep.xm.is_zero());
                }
            }
        }
    }
}

#[test]
fn f_highest_weight_example() {
    let o = RootOrder::new(5).unwrap();
    let rep = build_f(
        &FParams::HighestWeight {
            n_dim: 2,
            epsilon: Some(1),
            nu: None,
            c: None,
        },
        &o,
    )
    .unwrap();
    let nu = o.q_pow(-1);
    let c =
        (o.q_pow(-1) * &nu + o.q() * nu.inverse().unwrap()) * o.q_plus_q_inv().inverse().unwrap();
    assert_eq!(rep.c, c);
    assert!(verify_relations(&rep).all_passed());
}

#[test]
fn constraint_violations_are_rejected() {
    let o = RootOrder::new(5).unwrap();
    let bad_f = FParams::Periodic {
        c: o.one(),
        x0: o.lambda_inv(),
        x_minus: o.one(),
    };
    assert!(build_f(&bad_f, &o).is_err());
    let bad_semi = SemiPeriodicParams {
        c: o.one(),
        x0: o.one(),
        x_plus: o.zero(),
    };
    assert!(build_semiperiodic(&bad_semi, &o).is_err());
    let bad_cyc = Case4CyclicParams {
        x0: o.one(),
        x_plus: o.one(),
        x_minus: o.zero(),
    };
    assert!(sl2q::representations::build_case4_cyclic(&bad_cyc, &o).is_err());
}

#[test]
fn corrupted_json_reports_relation_failures() {
    let o = RootOrder::new(5).unwrap();
    let mut r = common::rng(6);
    let (_, rep) = random_representation(AlgebraTag::B, Family::Periodic, &o, &mut r).unwrap();
    let mut j = RepresentationJson::from_representation(&rep);
    j.x0[0][0][0] = "12345/7".into();
    let bad = j.to_representation().unwrap();
    let report = verify_relations(&bad);
    assert!(!report.all_passed());
    assert!(report.failures().count() >= 1);
}
