//! Seeded random draws of admissible parameters for every family.

use rand::Rng;
use serde_json::Value;

use super::params::ParamMap;
use super::{
    build, build_f, AlgebraTag, Case4CyclicParams, FParams, Family, HighestWeightParams,
    OneDimParams, Params, PeriodicParams, RepError, Representation, SemiPeriodicParams,
};
use crate::cyclotomic::{CycNumber, RootOrder};

/// Coefficient bound for random field elements.
const BOUND: i64 = 3;
const ATTEMPTS: usize = 200;

/// Parameters for either `B`/`A` or `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrawnParams {
    B(Params),
    F(FParams),
}

impl DrawnParams {
    pub fn to_json(&self) -> Value {
        let map: ParamMap = match self {
            DrawnParams::B(p) => p.to_map(),
            DrawnParams::F(p) => p.to_map(),
        };
        Value::Object(map.into_iter().collect())
    }
}

/// Families that have a builder for `algebra`.
pub fn families(algebra: AlgebraTag) -> &'static [Family] {
    match algebra {
        AlgebraTag::B | AlgebraTag::A => &Family::ALL,
        AlgebraTag::F => &[
            Family::Periodic,
            Family::SemiPeriodic,
            Family::HighestWeight,
            Family::OneDim,
        ],
    }
}

fn any<R: Rng + ?Sized>(o: &RootOrder, rng: &mut R) -> CycNumber {
    CycNumber::random(o.field(), rng, BOUND)
}

fn nonzero<R: Rng + ?Sized>(o: &RootOrder, rng: &mut R) -> CycNumber {
    CycNumber::random_nonzero(o.field(), rng, BOUND)
}

fn sign<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Highest-weight dimensions that admit a member for `algebra`.
fn hw_dims(algebra: AlgebraTag, l: usize) -> Vec<usize> {
    (1..=l)
        .filter(|&d| !(d == l && l == 2))
        .filter(|&d| !(algebra == AlgebraTag::A && l.is_multiple_of(2) && l >= 4 && d == l / 2))
        .collect()
}

/// One draw; it may still violate an open condition (such as `z != 0`).
fn draw_once<R: Rng + ?Sized>(
    algebra: AlgebraTag,
    family: Family,
    o: &RootOrder,
    rng: &mut R,
) -> Result<DrawnParams, RepError> {
    let l = o.l();
    let fixed_c = (algebra == AlgebraTag::A).then(|| o.one());
    let c_or_any = |rng: &mut R| fixed_c.clone().unwrap_or_else(|| any(o, rng));
    let x0_case4 = |rng: &mut R| match &fixed_c {
        Some(c) => c * &o.lambda_inv(),
        None => any(o, rng),
    };
    let dims = hw_dims(algebra, l);
    let n_dim = dims[rng.gen_range(0..dims.len())];

    if algebra == AlgebraTag::F {
        let p = match family {
            Family::Periodic => FParams::Periodic {
                c: any(o, rng),
                x0: any(o, rng),
                x_minus: nonzero(o, rng),
            },
            Family::SemiPeriodic => {
                let two_zero = o.q_plus_q_inv().is_zero();
                FParams::SemiPeriodic {
                    nu: if two_zero {
                        o.int(sign(rng))
                    } else {
                        nonzero(o, rng)
                    },
                    x_plus: nonzero(o, rng),
                    c: two_zero.then(|| any(o, rng)),
                }
            }
            Family::HighestWeight => {
                let two_zero = o.q_plus_q_inv().is_zero();
                let (epsilon, nu) = if n_dim < l {
                    (Some(sign(rng)), None)
                } else {
                    (None, Some(nonzero(o, rng)))
                };
                FParams::HighestWeight {
                    n_dim,
                    epsilon,
                    nu,
                    c: two_zero.then(|| any(o, rng)),
                }
            }
            Family::OneDim => FParams::OneDim {
                x0: any(o, rng),
                x_plus: nonzero(o, rng),
            },
            other => {
                return Err(RepError::Format(format!(
                    "no F builder for family {:?}",
                    other.name()
                )))
            }
        };
        return Ok(DrawnParams::F(p));
    }

    let p = match family {
        Family::Periodic => Params::Periodic(PeriodicParams {
            c: c_or_any(rng),
            c2p: any(o, rng),
            x0: any(o, rng),
            x_minus: nonzero(o, rng),
        }),
        Family::SemiPeriodic => Params::SemiPeriodic(SemiPeriodicParams {
            c: c_or_any(rng),
            x0: any(o, rng),
            x_plus: nonzero(o, rng),
        }),
        Family::HighestWeight => {
            let a_zero = (o.q_pow(2) + o.one()).is_zero();
            let b_zero = (o.q_pow(2 * n_dim as i64) + o.one()).is_zero();
            let (nu, c) = if n_dim == l || a_zero {
                (Some(nonzero(o, rng)), Some(c_or_any(rng)))
            } else if b_zero {
                // n = l/2: c = 0 and nu is free
                (Some(nonzero(o, rng)), Some(o.zero()))
            } else if let Some(c) = &fixed_c {
                (None, Some(c.clone()))
            } else {
                (Some(nonzero(o, rng)), None)
            };
            Params::HighestWeight(HighestWeightParams { n_dim, nu, c })
        }
        Family::OneDim | Family::GenericOneDim => {
            let p = OneDimParams {
                x0: x0_case4(rng),
                xp: any(o, rng),
                xm: any(o, rng),
            };
            if family == Family::OneDim {
                Params::OneDim(p)
            } else {
                Params::GenericOneDim(p)
            }
        }
        Family::Case4Cyclic => Params::Case4Cyclic(Case4CyclicParams {
            x0: x0_case4(rng),
            x_plus: any(o, rng),
            x_minus: nonzero(o, rng),
        }),
    };
    Ok(DrawnParams::B(p))
}

fn build_drawn(
    algebra: AlgebraTag,
    p: &DrawnParams,
    o: &RootOrder,
) -> Result<Representation, RepError> {
    match p {
        DrawnParams::B(p) => build(algebra, p, o),
        DrawnParams::F(p) => build_f(p, o),
    }
}

/// Draws admissible parameters and builds the representation, redrawing
/// when an open condition fails.
pub fn random_representation<R: Rng + ?Sized>(
    algebra: AlgebraTag,
    family: Family,
    order: &RootOrder,
    rng: &mut R,
) -> Result<(DrawnParams, Representation), RepError> {
    let mut last = None;
    for _ in 0..ATTEMPTS {
        let p = draw_once(algebra, family, order, rng)?;
        match build_drawn(algebra, &p, order) {
            Ok(rep) => return Ok((p, rep)),
            Err(e @ RepError::Constraint(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::verify_relations;
    use rand::SeedableRng;

    #[test]
    fn every_family_draws_for_every_algebra() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in [3, 4, 5, 6, 8] {
            let o = RootOrder::new(n).unwrap();
            for a in [AlgebraTag::B, AlgebraTag::A, AlgebraTag::F] {
                for &f in families(a) {
                    let (_, rep) = random_representation(a, f, &o, &mut rng)
                        .unwrap_or_else(|e| panic!("{a} {f:?} n={n}: {e}"));
                    assert!(verify_relations(&rep).all_passed(), "{a} {f:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn drawn_params_rebuild_from_json() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let o = RootOrder::new(5).unwrap();
        for a in [AlgebraTag::B, AlgebraTag::A, AlgebraTag::F] {
            for &f in families(a) {
                let (p, rep) = random_representation(a, f, &o, &mut rng).unwrap();
                let again = super::super::build_from_json(a, f, &p.to_json(), &o).unwrap();
                assert_eq!(again.x0, rep.x0);
                assert_eq!(again.xp, rep.xp);
                assert_eq!(again.xm, rep.xm);
            }
        }
    }
}
