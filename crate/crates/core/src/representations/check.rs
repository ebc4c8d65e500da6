use std::fmt;

use super::{AlgebraTag, Matrix, RepError, Representation};
use crate::algebra::dressed_chebyshev;
use crate::cyclotomic::{CycNumber, RootOrder};

/// Outcome of one relation, with `left - right` when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub difference: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.statement
            )?;
            if let Some(d) = &c.difference {
                for row in d.to_rows() {
                    let cells: Vec<String> = row.iter().map(|x| x.to_q_string()).collect();
                    writeln!(f, "    [{}]", cells.join(", "))?;
                }
            }
        }
        Ok(())
    }
}

fn check(name: &'static str, statement: &'static str, diff: Matrix) -> RelationCheck {
    let passed = diff.is_zero();
    RelationCheck {
        name,
        statement,
        passed,
        difference: (!passed).then_some(diff),
    }
}

/// Checks the four defining relations of `B` with `C = c * identity`, and
/// for `F` and `A` the extra central relation.
pub fn verify_relations(rep: &Representation) -> RelationReport {
    let o = &rep.order;
    let (x0, xp, xm) = (&rep.x0, &rep.xp, &rep.xm);
    let c = &rep.c;
    let id = Matrix::identity(o.field(), rep.dim());
    let cm = id.scale(c);

    let r1 = x0
        .mul(xp)
        .scale(&o.q_pow(2))
        .sub(&xp.mul(x0))
        .sub(&xp.scale(&(o.q() * c)));
    let r2 = x0
        .mul(xm)
        .scale(&o.q_pow(-2))
        .sub(&xm.mul(x0))
        .add(&xm.scale(&(o.q_pow(-1) * c)));
    let w = cm.sub(&x0.scale(&o.lambda()));
    let r3 = xp
        .mul(xm)
        .sub(&xm.mul(xp))
        .sub(&w.mul(x0).scale(&o.q_plus_q_inv()));
    let comm = |a: &Matrix| cm.mul(a).sub(&a.mul(&cm));
    let r4 = comm(x0).add(&comm(xp)).add(&comm(xm));

    let mut checks = vec![
        check("R1", "q^2 X0 Xp - Xp X0 = q C Xp", r1),
        check("R2", "q^-2 X0 Xm - Xm X0 = -q^-1 C Xm", r2),
        check("R3", "Xp Xm - Xm Xp = (q + q^-1)(C - lambda X0) X0", r3),
        check("R4", "C commutes with X0, Xp, Xm", r4),
    ];
    match rep.algebra {
        AlgebraTag::B => {}
        AlgebraTag::F => {
            let lam = o.lambda();
            let d2 = id
                .scale(&(c * c))
                .sub(&rep.casimir_matrix().scale(&(&lam * &lam)));
            checks.push(check("F", "C^2 - lambda^2 C2p = 1", d2.sub(&id)));
        }
        AlgebraTag::A => checks.push(check("A", "C = 1", cm.sub(&id))),
    }
    RelationReport { checks }
}

/// Scalars by which the centre acts on a simple module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter {
    pub c: CycNumber,
    pub c2p: CycNumber,
    pub xp_l: CycNumber,
    pub xm_l: CycNumber,
    pub z: CycNumber,
    /// `c^2 - lambda^2 c2p`
    pub d2: CycNumber,
}

pub fn central_character(rep: &Representation) -> Result<CentralCharacter, RepError> {
    let o = &rep.order;
    let l = o.l() as u32;
    let scalar = |m: Matrix, what| m.as_scalar().ok_or(RepError::NotScalar(what));
    let c2p = scalar(rep.casimir_matrix(), "C2p")?;
    let xp_l = scalar(rep.xp.pow(l), "Xp^l")?;
    let xm_l = scalar(rep.xm.pow(l), "Xm^l")?;
    let w = Matrix::scalar(&rep.c, rep.dim()).sub(&rep.x0.scale(&o.lambda()));
    let z = scalar(w.pow(l), "(C - lambda X0)^l")?;
    let lam = o.lambda();
    let d2 = &rep.c * &rep.c - &lam * &lam * &c2p;
    Ok(CentralCharacter {
        c: rep.c.clone(),
        c2p,
        xp_l,
        xm_l,
        z,
        d2,
    })
}

/// Both sides of
/// `xm_l xp_l = q^(l(l-1)) lambda^(-2l) { -(d^2)^l + dressed(c, d^2) z - z^2 }`.
pub fn scalar_relation_sides(cc: &CentralCharacter, order: &RootOrder) -> (CycNumber, CycNumber) {
    let l = order.l();
    let dressed = dressed_chebyshev(order)
        .evaluate(&cc.c, &cc.d2)
        .expect("Q_l has the parity of l");
    let li = l as i64;
    let pref = order.q_pow(li * (li - 1)) * order.lambda_inv().pow(2 * l as u32);
    let bracket = -cc.d2.pow(l as u32) + dressed * &cc.z - &cc.z * &cc.z;
    (&cc.xm_l * &cc.xp_l, pref * bracket)
}

pub fn check_scalar_relation(cc: &CentralCharacter, order: &RootOrder) -> bool {
    let (l, r) = scalar_relation_sides(cc, order);
    l == r
}

/// Dimension of `{ M : M X = X M for X in X0, Xp, Xm }`.
pub fn commutant_dimension(rep: &Representation) -> usize {
    let d = rep.dim();
    let f = rep.order.field();
    let mats = [&rep.x0, &rep.xp, &rep.xm];
    let mut sys = Matrix::zeros(f, 3 * d * d, d * d);
    for (t, x) in mats.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                let row = t * d * d + i * d + j;
                for k in 0..d {
                    // (M X)_ij picks M_ik X_kj; (X M)_ij picks X_ik M_kj
                    let a = x.get(k, j);
                    if !a.is_zero() {
                        let u = i * d + k;
                        let v = sys.get(row, u) + a;
                        sys.set(row, u, v);
                    }
                    let b = x.get(i, k);
                    if !b.is_zero() {
                        let u = k * d + j;
                        let v = sys.get(row, u) - b;
                        sys.set(row, u, v);
                    }
                }
            }
        }
    }
    d * d - sys.rank()
}
