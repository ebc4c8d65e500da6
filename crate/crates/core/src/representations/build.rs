use super::params::ParamMap;
use super::{
    central_character, AlgebraTag, Case4CyclicParams, FParams, Family, HighestWeightParams, Matrix,
    OneDimParams, Params, PeriodicParams, RepError, Representation, SemiPeriodicParams,
};
use crate::cyclotomic::{CycNumber, RootOrder};

fn assemble(
    order: &RootOrder,
    family: Family,
    c: CycNumber,
    (x0, xp, xm): (Matrix, Matrix, Matrix),
    params: ParamMap,
) -> Representation {
    Representation {
        order: order.clone(),
        algebra: AlgebraTag::B,
        family,
        c,
        x0,
        xp,
        xm,
        params,
    }
}

/// Matrices of the cyclic module spanned by `v_p = x_-^-p X-^p v_0`:
///
/// ```text
/// X0 v_p = (q^2p x0 - q^p [p] c) v_p
/// X- v_p = x_- v_(p+1)
/// X+ v_p = x_-^-1 lambda^-2 { -d^2 + (1+q^-2) c w q^2p - q^-2 w^2 q^4p } v_(p-1)
/// ```
///
/// with `w = c - lambda x0`, `d^2 = c^2 - lambda^2 c2p` and indices mod `l`.
fn periodic_matrices(
    c: &CycNumber,
    c2p: &CycNumber,
    x0: &CycNumber,
    x_minus: &CycNumber,
    order: &RootOrder,
) -> (Matrix, Matrix, Matrix) {
    let l = order.l();
    let f = order.field();
    let lam = order.lambda();
    let lam_inv2 = order.lambda_inv().pow(2);
    let d2 = c * c - &lam * &lam * c2p;
    let w = c - &lam * x0;
    let xm_inv = x_minus.inverse().expect("x_minus checked nonzero");
    let a1 = (order.one() + order.q_pow(-2)) * c * &w;
    let a2 = order.q_pow(-2) * &w * &w;

    let mut mx0 = Matrix::zeros(f, l, l);
    let mut mxp = Matrix::zeros(f, l, l);
    let mut mxm = Matrix::zeros(f, l, l);
    for p in 0..l {
        let pi = p as i64;
        mx0.set(
            p,
            p,
            order.q_pow(2 * pi) * x0 - order.q_pow(pi) * order.q_number(pi) * c,
        );
        mxm.set((p + 1) % l, p, x_minus.clone());
        let beta =
            &xm_inv * &lam_inv2 * (-&d2 + &a1 * &order.q_pow(2 * pi) - &a2 * &order.q_pow(4 * pi));
        mxp.set((p + l - 1) % l, p, beta);
    }
    (mx0, mxp, mxm)
}

/// Case 1: `z != 0`, `x_- != 0`. Dimension `l`.
pub fn build_periodic(p: &PeriodicParams, order: &RootOrder) -> Result<Representation, RepError> {
    if p.x_minus.is_zero() {
        return Err(RepError::constraint(
            "periodic family requires x_minus != 0",
        ));
    }
    let w = &p.c - &order.lambda() * &p.x0;
    if w.pow(order.l() as u32).is_zero() {
        return Err(RepError::constraint(
            "periodic family requires z = (c - lambda*x0)^l != 0; z = 0 is the fourth case (case4_cyclic)",
        ));
    }
    let mats = periodic_matrices(&p.c, &p.c2p, &p.x0, &p.x_minus, order);
    Ok(assemble(
        order,
        Family::Periodic,
        p.c.clone(),
        mats,
        Params::Periodic(p.clone()).to_map(),
    ))
}

/// Case 2: `z != 0`, `x_- = 0`, `x_+ != 0`, on `w_p = x_+^-p X+^p w_0`:
///
/// ```text
/// X0 w_p = (q^-2p x0 + q^-p [p] c) w_p
/// X+ w_p = x_+ w_(p+1)
/// X- w_p = x_+^-1 lambda^-2 { -d^2 + (1+q^2) c w q^-2p - q^2 w^2 q^-4p } w_(p-1)
/// ```
///
/// The `X-` coefficient vanishes at `p = 0` because `c2p = q^2 x0^2 - q c x0`.
pub fn build_semiperiodic(
    p: &SemiPeriodicParams,
    order: &RootOrder,
) -> Result<Representation, RepError> {
    if p.x_plus.is_zero() {
        return Err(RepError::constraint(
            "semi-periodic family requires x_plus != 0",
        ));
    }
    let lam = order.lambda();
    let w = &p.c - &lam * &p.x0;
    if w.pow(order.l() as u32).is_zero() {
        return Err(RepError::constraint(
            "semi-periodic family requires z = (c - lambda*x0)^l != 0",
        ));
    }
    let l = order.l();
    let f = order.field();
    let c = &p.c;
    let c2p = order.q_pow(2) * &p.x0 * &p.x0 - order.q() * c * &p.x0;
    let d2 = c * c - &lam * &lam * &c2p;
    let xp_inv = p.x_plus.inverse()?;
    let lam_inv2 = order.lambda_inv().pow(2);
    let a1 = (order.one() + order.q_pow(2)) * c * &w;
    let a2 = order.q_pow(2) * &w * &w;

    let mut mx0 = Matrix::zeros(f, l, l);
    let mut mxp = Matrix::zeros(f, l, l);
    let mut mxm = Matrix::zeros(f, l, l);
    for k in 0..l {
        let ki = k as i64;
        mx0.set(
            k,
            k,
            order.q_pow(-2 * ki) * &p.x0 + order.q_pow(-ki) * order.q_number(ki) * c,
        );
        mxp.set((k + 1) % l, k, p.x_plus.clone());
        let gamma = &xp_inv
            * &lam_inv2
            * (-&d2 + &a1 * &order.q_pow(-2 * ki) - &a2 * &order.q_pow(-4 * ki));
        mxm.set((k + l - 1) % l, k, gamma);
    }
    Ok(assemble(
        order,
        Family::SemiPeriodic,
        c.clone(),
        (mx0, mxp, mxm),
        Params::SemiPeriodic(p.clone()).to_map(),
    ))
}

/// Resolves `(c, nu)` for the highest-weight family, deriving whichever is
/// missing from the dimension constraint when possible.
fn resolve_highest_weight(
    p: &HighestWeightParams,
    order: &RootOrder,
) -> Result<(CycNumber, CycNumber), RepError> {
    let l = order.l();
    let n = p.n_dim;
    if n == 0 || n > l {
        return Err(RepError::constraint(format!(
            "highest-weight dimension must satisfy 1 <= n_dim <= l = {l}, got {n}"
        )));
    }
    let a = order.q_pow(2) + order.one();
    let b = order.q_pow(2 * n as i64) + order.one();
    let (c, nu) = if n < l {
        match (&p.c, &p.nu) {
            (Some(c), Some(nu)) => (c.clone(), nu.clone()),
            (None, Some(nu)) if !a.is_zero() => (&b * nu * a.inverse()?, nu.clone()),
            (Some(c), None) if !b.is_zero() => (c.clone(), &a * c * b.inverse()?),
            (None, Some(_)) => {
                return Err(RepError::constraint(
                    "at l = 2 the one-dimensional highest-weight family has two free parameters: give both c and nu",
                ))
            }
            (Some(_), None) => {
                return Err(RepError::constraint(format!(
                    "at n_dim = l/2 = {n} the constraint does not determine nu: give nu"
                )))
            }
            (None, None) => return Err(RepError::Format("give nu (or c) for highest_weight".into())),
        }
    } else {
        match (&p.c, &p.nu) {
            (Some(c), Some(nu)) => (c.clone(), nu.clone()),
            _ => {
                return Err(RepError::Format(
                    "the l-dimensional highest-weight family needs both c and nu".into(),
                ))
            }
        }
    };
    if nu.is_zero() {
        return Err(RepError::constraint(
            "highest-weight family requires nu != 0",
        ));
    }
    if n < l {
        if &a * &c != &b * &nu {
            let mut msg = format!("(q^2+1)c = (q^(2n)+1)nu with n = {n}");
            if b.is_zero() {
                msg.push_str(&format!(
                    "; at n = l/2 = {n} (l even) the constraint forces c = 0"
                ));
            }
            return Err(RepError::Constraint(msg));
        }
    } else {
        if l == 2 {
            return Err(RepError::constraint(
                "These representations do not exist when l = 2: (q^2+1)c - (q^2+1)nu vanishes identically",
            ));
        }
        for k in 1..l as i64 {
            let v = &a * &c - (order.q_pow(2 * k) + order.one()) * &nu;
            if v.is_zero() {
                return Err(RepError::constraint(format!(
                    "(q^2+1)c - (q^(2p)+1)nu != 0 fails at p = {k}"
                )));
            }
        }
    }
    Ok((c, nu))
}

/// Case 3: highest and lowest weight, dimension `n <= l`:
///
/// ```text
/// X0 v_p = lambda^-1 (c - q^2p nu) v_p
/// X- v_p = v_(p+1),  X- v_(n-1) = 0
/// X+ v_p = lambda^-1 [p] q^(p-2) nu { (q^2+1) c - (q^2p+1) nu } v_(p-1)
/// ```
pub fn build_highest_weight(
    p: &HighestWeightParams,
    order: &RootOrder,
) -> Result<Representation, RepError> {
    let (c, nu) = resolve_highest_weight(p, order)?;
    let n = p.n_dim;
    let f = order.field();
    let lam_inv = order.lambda_inv();
    let a = order.q_pow(2) + order.one();
    let mut mx0 = Matrix::zeros(f, n, n);
    let mut mxp = Matrix::zeros(f, n, n);
    let mut mxm = Matrix::zeros(f, n, n);
    for k in 0..n {
        let ki = k as i64;
        mx0.set(k, k, &lam_inv * (&c - order.q_pow(2 * ki) * &nu));
        if k + 1 < n {
            mxm.set(k + 1, k, order.one());
        }
        if k > 0 {
            let bracket = &a * &c - (order.q_pow(2 * ki) + order.one()) * &nu;
            let beta = &lam_inv * order.q_number(ki) * order.q_pow(ki - 2) * &nu * bracket;
            mxp.set(k - 1, k, beta);
        }
    }
    let resolved = HighestWeightParams {
        n_dim: n,
        nu: Some(nu),
        c: Some(c.clone()),
    };
    Ok(assemble(
        order,
        Family::HighestWeight,
        c,
        (mx0, mxp, mxm),
        Params::HighestWeight(resolved).to_map(),
    ))
}

fn one_dim_matrices(p: &OneDimParams, order: &RootOrder) -> (Matrix, Matrix, Matrix) {
    let f = order.field();
    (
        Matrix::scalar(&p.x0, 1),
        Matrix::from_rows(f, vec![vec![p.xp.clone()]]).unwrap(),
        Matrix::from_rows(f, vec![vec![p.xm.clone()]]).unwrap(),
    )
}

/// Case 4 at `q^(2l) = 1`: one-dimensional with `c = lambda x0`.
pub fn build_one_dim(p: &OneDimParams, order: &RootOrder) -> Result<Representation, RepError> {
    let c = order.lambda() * &p.x0;
    Ok(assemble(
        order,
        Family::OneDim,
        c,
        one_dim_matrices(p, order),
        Params::OneDim(p.clone()).to_map(),
    ))
}

/// One-dimensional representations with `c = lambda x0`, which make sense for
/// any `q`; nothing about the order of `q` is used.
pub fn build_generic_one_dim(
    p: &OneDimParams,
    order: &RootOrder,
) -> Result<Representation, RepError> {
    let c = order.lambda() * &p.x0;
    Ok(assemble(
        order,
        Family::GenericOneDim,
        c,
        one_dim_matrices(p, order),
        Params::GenericOneDim(p.clone()).to_map(),
    ))
}

/// The reducible `l`-dimensional cyclic module with `z = 0`: the case-1
/// formulas with `c = lambda x0`. All `X0` eigenvalues coincide.
pub fn build_case4_cyclic(
    p: &Case4CyclicParams,
    order: &RootOrder,
) -> Result<Representation, RepError> {
    if p.x_minus.is_zero() {
        return Err(RepError::constraint(
            "the cyclic z = 0 module requires x_minus != 0",
        ));
    }
    let c = order.lambda() * &p.x0;
    let c2p = &p.x_plus * &p.x_minus + &p.x0 * &p.x0;
    let mats = periodic_matrices(&c, &c2p, &p.x0, &p.x_minus, order);
    debug_assert!(mats.1.get((order.l() - 1) % order.l(), 0) == &p.x_plus);
    Ok(assemble(
        order,
        Family::Case4Cyclic,
        c,
        mats,
        Params::Case4Cyclic(p.clone()).to_map(),
    ))
}

/// Splits the cyclic `z = 0` module into its `l` one-dimensional summands,
/// spanned by `sum_p q^(2kp) v_p`, on which `X+-` act by `q^(+-2k) x_+-`.
pub fn decompose_case4(
    c: &CycNumber,
    x0: &CycNumber,
    (x_plus, x_minus): (&CycNumber, &CycNumber),
    order: &RootOrder,
) -> Result<Vec<OneDimParams>, RepError> {
    if !(c - &order.lambda() * x0).is_zero() {
        return Err(RepError::constraint(
            "decomposition requires c - lambda*x0 = 0",
        ));
    }
    Ok((0..order.l() as i64)
        .map(|k| OneDimParams {
            x0: x0.clone(),
            xp: order.q_pow(2 * k) * x_plus,
            xm: order.q_pow(-2 * k) * x_minus,
        })
        .collect())
}

/// Reads a params object for `family` and builds the representation.
/// For `A` a missing `c` defaults to 1.
pub fn build_from_json(
    algebra: AlgebraTag,
    family: Family,
    params: &serde_json::Value,
    order: &RootOrder,
) -> Result<Representation, RepError> {
    match algebra {
        AlgebraTag::F => build_f(&FParams::from_json(family, params, order)?, order),
        AlgebraTag::A => build_a(
            &Params::from_json(family, params, order, Some(&order.one()))?,
            order,
        ),
        AlgebraTag::B => build_b(&Params::from_json(family, params, order, None)?, order),
    }
}

/// Builds a representation of `B` or `A` (for `F` use [`build_f`]).
pub fn build(
    algebra: AlgebraTag,
    params: &Params,
    order: &RootOrder,
) -> Result<Representation, RepError> {
    match algebra {
        AlgebraTag::B => build_b(params, order),
        AlgebraTag::A => build_a(params, order),
        AlgebraTag::F => Err(RepError::Format(
            "F representations are built from F parameters (build_f)".into(),
        )),
    }
}

fn build_b(params: &Params, order: &RootOrder) -> Result<Representation, RepError> {
    match params {
        Params::Periodic(p) => build_periodic(p, order),
        Params::SemiPeriodic(p) => build_semiperiodic(p, order),
        Params::HighestWeight(p) => build_highest_weight(p, order),
        Params::OneDim(p) => build_one_dim(p, order),
        Params::GenericOneDim(p) => build_generic_one_dim(p, order),
        Params::Case4Cyclic(p) => build_case4_cyclic(p, order),
    }
}

/// Representations of `A`: the `B` families with `c = 1`.
///
/// For even `l >= 4` the highest-weight family of dimension `l/2` has no
/// member: its constraint forces `c = 0`.
pub fn build_a(params: &Params, order: &RootOrder) -> Result<Representation, RepError> {
    let l = order.l();
    let one = order.one();
    let params = match params {
        Params::HighestWeight(p) => {
            if l.is_multiple_of(2) && l >= 4 && p.n_dim == l / 2 {
                return Err(RepError::Constraint(format!(
                    "no representation of A of dimension l/2 = {}: the constraint (q^2+1)c = (q^(2n)+1)nu forces c = 0, but A requires c = 1",
                    l / 2
                )));
            }
            if p.c.as_ref().is_some_and(|c| !c.is_one()) {
                return Err(RepError::constraint("A requires c = 1"));
            }
            Params::HighestWeight(HighestWeightParams {
                c: Some(one.clone()),
                ..p.clone()
            })
        }
        other => other.clone(),
    };
    let mut rep = build_b(&params, order)?;
    if !rep.c.is_one() {
        return Err(RepError::constraint(format!(
            "A requires c = 1 (got c = {})",
            rep.c
        )));
    }
    rep.algebra = AlgebraTag::A;
    Ok(rep)
}

/// `c` from `[2] c = q^-1 nu + q nu^-1`, or the given `c` when `[2] = 0`.
fn f_casimir_c(
    nu: &CycNumber,
    given: &Option<CycNumber>,
    order: &RootOrder,
) -> Result<CycNumber, RepError> {
    let two = order.q_plus_q_inv();
    let rhs = order.q_pow(-1) * nu + order.q() * nu.inverse()?;
    if two.is_zero() {
        // n = 4: the relation degenerates to 0 = q^-1 nu + q nu^-1
        if !rhs.is_zero() {
            return Err(RepError::constraint(
                "[2] = 0 at l = 2, so q^-1 nu + q nu^-1 must vanish (nu = +-1)",
            ));
        }
        return given.clone().ok_or_else(|| {
            RepError::Format("at l = 2 the F parameter c is free and must be given".into())
        });
    }
    let c = rhs * two.inverse()?;
    if let Some(g) = given {
        if *g != c {
            return Err(RepError::constraint("[2]c = q^-1 nu + q nu^-1"));
        }
    }
    Ok(c)
}

/// Representations of `F`, where `d^2 = c^2 - lambda^2 c2p = 1`.
pub fn build_f(params: &FParams, order: &RootOrder) -> Result<Representation, RepError> {
    let l = order.l();
    let lam_inv = order.lambda_inv();
    let mut rep = match params {
        FParams::Periodic { c, x0, x_minus } => {
            let c2p = (c * c - order.one()) * lam_inv.pow(2);
            build_periodic(
                &PeriodicParams {
                    c: c.clone(),
                    c2p,
                    x0: x0.clone(),
                    x_minus: x_minus.clone(),
                },
                order,
            )?
        }
        FParams::SemiPeriodic { nu, x_plus, c } => {
            if nu.is_zero() {
                return Err(RepError::constraint("nu != 0"));
            }
            let two = order.q_plus_q_inv();
            let rhs = order.q() * nu + order.q_pow(-1) * nu.inverse()?;
            let c = if two.is_zero() {
                if !(nu * nu).is_one() {
                    return Err(RepError::constraint(
                        "at l = 2 the semi-periodic F family needs nu^2 = 1",
                    ));
                }
                c.clone().ok_or_else(|| {
                    RepError::Format("at l = 2 the F parameter c is free and must be given".into())
                })?
            } else {
                let derived = rhs * two.inverse()?;
                if c.as_ref().is_some_and(|g| *g != derived) {
                    return Err(RepError::constraint("c = (q nu + q^-1 nu^-1)/[2]"));
                }
                derived
            };
            let x0 = (&c - nu) * &lam_inv;
            build_semiperiodic(
                &SemiPeriodicParams {
                    c,
                    x0,
                    x_plus: x_plus.clone(),
                },
                order,
            )?
        }
        FParams::HighestWeight {
            n_dim,
            epsilon,
            nu,
            c,
        } => {
            let n = *n_dim;
            if n == 0 || n > l {
                return Err(RepError::constraint(format!(
                    "highest-weight dimension must satisfy 1 <= n_dim <= l = {l}"
                )));
            }
            let nu = if n < l {
                let expected = |e: i64| order.q_pow(1 - n as i64) * order.int(e);
                match (epsilon, nu) {
                    (Some(e @ (1 | -1)), None) => expected(*e),
                    (Some(e @ (1 | -1)), Some(v)) if *v == expected(*e) => v.clone(),
                    (None, Some(v)) if *v == expected(1) || *v == expected(-1) => v.clone(),
                    (Some(e), _) if e.abs() != 1 => {
                        return Err(RepError::constraint("epsilon must be +1 or -1"))
                    }
                    (None, None) => return Err(RepError::Format("give epsilon (+1 or -1)".into())),
                    _ => {
                        return Err(RepError::constraint(
                            "nu = epsilon q^(1-n), i.e. nu^2 = q^(2-2n)",
                        ))
                    }
                }
            } else {
                if l == 2 {
                    return Err(RepError::constraint(
                        "These representations do not exist when l = 2",
                    ));
                }
                let Some(nu) = nu else {
                    return Err(RepError::Format(
                        "give nu for the l-dimensional family".into(),
                    ));
                };
                if nu.is_zero() {
                    return Err(RepError::constraint("nu != 0"));
                }
                for k in 1..l as i64 {
                    if nu * nu == order.q_pow(2 - 2 * k) {
                        return Err(RepError::constraint(format!(
                            "nu^2 != q^(2-2p) fails at p = {k}"
                        )));
                    }
                }
                nu.clone()
            };
            let c = f_casimir_c(&nu, c, order)?;
            build_highest_weight(
                &HighestWeightParams {
                    n_dim: n,
                    nu: Some(nu),
                    c: Some(c),
                },
                order,
            )?
        }
        FParams::OneDim { x0, x_plus } => {
            if x_plus.is_zero() {
                return Err(RepError::constraint(
                    "x_+ x_- = -lambda^-2 forces x_plus != 0",
                ));
            }
            let x_minus = -(lam_inv.pow(2) * x_plus.inverse()?);
            build_one_dim(
                &OneDimParams {
                    x0: x0.clone(),
                    xp: x_plus.clone(),
                    xm: x_minus,
                },
                order,
            )?
        }
    };
    let cc = central_character(&rep)?;
    if !cc.d2.is_one() {
        return Err(RepError::Constraint(format!(
            "d^2 = c^2 - lambda^2 c2p = 1 (got {})",
            cc.d2
        )));
    }
    rep.algebra = AlgebraTag::F;
    rep.params = params.to_map();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::{commutant_dimension, verify_relations};

    #[test]
    fn periodic_example_at_n4() {
        let o = RootOrder::new(4).unwrap();
        let rep = build_periodic(
            &PeriodicParams {
                c: o.zero(),
                c2p: o.one(),
                x0: o.one(),
                x_minus: o.one(),
            },
            &o,
        )
        .unwrap();
        assert_eq!(
            rep.x0,
            Matrix::diagonal(o.field(), vec![o.one(), o.int(-1)])
        );
        let mut shift = Matrix::zeros(o.field(), 2, 2);
        shift.set(1, 0, o.one());
        shift.set(0, 1, o.one());
        assert_eq!(rep.xm, shift);
        assert!(verify_relations(&rep).all_passed());
    }

    #[test]
    fn periodic_rejects_degenerate_parameters() {
        let o = RootOrder::new(5).unwrap();
        let mut p = PeriodicParams {
            c: o.one(),
            c2p: o.one(),
            x0: o.one(),
            x_minus: o.zero(),
        };
        assert!(matches!(
            build_periodic(&p, &o),
            Err(RepError::Constraint(_))
        ));
        p.x_minus = o.one();
        p.x0 = o.lambda_inv();
        assert!(matches!(
            build_periodic(&p, &o),
            Err(RepError::Constraint(_))
        ));
    }

    #[test]
    fn highest_weight_dimension_one_is_trivial_weight() {
        let o = RootOrder::new(5).unwrap();
        let rep = build_highest_weight(
            &HighestWeightParams {
                n_dim: 1,
                nu: Some(o.q()),
                c: None,
            },
            &o,
        )
        .unwrap();
        assert_eq!(rep.c, o.q());
        assert!(rep.x0.is_zero() && rep.xp.is_zero() && rep.xm.is_zero());
    }

    #[test]
    fn highest_weight_two_parameters_at_l2() {
        let o = RootOrder::new(4).unwrap();
        let rep = build_highest_weight(
            &HighestWeightParams {
                n_dim: 1,
                nu: Some(o.int(3)),
                c: Some(o.int(7)),
            },
            &o,
        )
        .unwrap();
        assert!(verify_relations(&rep).all_passed());
        let missing = HighestWeightParams {
            n_dim: 1,
            nu: Some(o.int(3)),
            c: None,
        };
        assert!(build_highest_weight(&missing, &o).is_err());
    }

    #[test]
    fn highest_weight_precondition_errors() {
        let o = RootOrder::new(5).unwrap();
        let too_big = HighestWeightParams {
            n_dim: 6,
            nu: Some(o.one()),
            c: Some(o.one()),
        };
        assert!(matches!(
            build_highest_weight(&too_big, &o),
            Err(RepError::Constraint(_))
        ));
        let zero_nu = HighestWeightParams {
            n_dim: 2,
            nu: Some(o.zero()),
            c: None,
        };
        assert!(build_highest_weight(&zero_nu, &o).is_err());
        let wrong = HighestWeightParams {
            n_dim: 2,
            nu: Some(o.one()),
            c: Some(o.one()),
        };
        let err = build_highest_weight(&wrong, &o).unwrap_err();
        assert!(err.to_string().contains("(q^2+1)c = (q^(2n)+1)nu"));
        let l2 = RootOrder::new(4).unwrap();
        let full = HighestWeightParams {
            n_dim: 2,
            nu: Some(l2.one()),
            c: Some(l2.int(2)),
        };
        let err = build_highest_weight(&full, &l2).unwrap_err();
        assert!(err.to_string().contains("do not exist when l = 2"));
    }

    #[test]
    fn a_excludes_half_l_when_l_is_at_least_four() {
        let o = RootOrder::new(8).unwrap();
        let p = Params::HighestWeight(HighestWeightParams {
            n_dim: 2,
            nu: Some(o.one()),
            c: None,
        });
        let err = build_a(&p, &o).unwrap_err();
        assert!(err.to_string().contains("l/2"));
        // the same dimension is fine in B with c = 0
        let b = Params::HighestWeight(HighestWeightParams {
            n_dim: 2,
            nu: Some(o.one()),
            c: Some(o.zero()),
        });
        assert!(verify_relations(&build(AlgebraTag::B, &b, &o).unwrap()).all_passed());
    }

    #[test]
    fn a_at_l2_keeps_the_half_l_representation() {
        // the l/2 constraint degenerates at l = 2, so c = 1 is allowed
        let o = RootOrder::new(4).unwrap();
        let p = Params::HighestWeight(HighestWeightParams {
            n_dim: 1,
            nu: Some(o.int(2)),
            c: None,
        });
        let rep = build_a(&p, &o).unwrap();
        assert!(rep.c.is_one());
        assert!(verify_relations(&rep).all_passed());
    }

    #[test]
    fn case4_cyclic_is_reducible_and_splits() {
        let o = RootOrder::new(5).unwrap();
        let p = Case4CyclicParams {
            x0: o.q(),
            x_plus: o.int(2),
            x_minus: o.int(3),
        };
        let rep = build_case4_cyclic(&p, &o).unwrap();
        assert!(verify_relations(&rep).all_passed());
        assert_eq!(commutant_dimension(&rep), o.l());
        let parts = decompose_case4(&rep.c, &p.x0, (&p.x_plus, &p.x_minus), &o).unwrap();
        assert_eq!(parts.len(), o.l());
        for part in &parts {
            assert!(verify_relations(&build_one_dim(part, &o).unwrap()).all_passed());
        }
        assert!(decompose_case4(&o.one(), &o.one(), (&o.one(), &o.one()), &o).is_err());
    }

    #[test]
    fn f_families_have_unit_d_squared() {
        let o = RootOrder::new(5).unwrap();
        let reps = [
            FParams::Periodic {
                c: o.q(),
                x0: o.int(2),
                x_minus: o.one(),
            },
            FParams::SemiPeriodic {
                nu: o.int(2),
                x_plus: o.q(),
                c: None,
            },
            FParams::HighestWeight {
                n_dim: 2,
                epsilon: Some(1),
                nu: None,
                c: None,
            },
            FParams::OneDim {
                x0: o.int(3),
                x_plus: o.q(),
            },
        ];
        for p in &reps {
            let rep = build_f(p, &o).unwrap();
            assert!(verify_relations(&rep).all_passed(), "{p:?}");
            assert!(central_character(&rep).unwrap().d2.is_one());
        }
    }

    #[test]
    fn f_at_l2() {
        let o = RootOrder::new(4).unwrap();
        let semi = FParams::SemiPeriodic {
            nu: o.one(),
            x_plus: o.q(),
            c: Some(o.int(3)),
        };
        let rep = build_f(&semi, &o).unwrap();
        assert!(verify_relations(&rep).all_passed());
        let bad = FParams::SemiPeriodic {
            nu: o.int(2),
            x_plus: o.q(),
            c: Some(o.int(3)),
        };
        assert!(build_f(&bad, &o).is_err());
        let full = FParams::HighestWeight {
            n_dim: 2,
            epsilon: None,
            nu: Some(o.int(2)),
            c: None,
        };
        assert!(build_f(&full, &o)
            .unwrap_err()
            .to_string()
            .contains("do not exist when l = 2"));
    }
}
