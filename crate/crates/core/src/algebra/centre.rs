//! Central elements of `B` at `q^(2l) = 1` and the identities tying them
//! together.
//!
//! `D^2 = C^2 - lambda^2 C2p` is always expanded eagerly; no square root `D` is
//! ever formed. The dressed Chebyshev term is first expanded as a polynomial in
//! `C` and `D` so its parity can be inspected, then folded into `D^2` powers.

use num_rational::BigRational;

use super::{AlgebraElement, AlgebraError, Generator, Word};
use crate::cyclotomic::{chebyshev_like, CycNumber, RootOrder};

/// `C2p = X- X+ + q^-1 C X0 + q^-2 X0^2`, assembled from its defining words.
pub fn casimir_c2p(order: &RootOrder) -> AlgebraElement {
    use Generator::*;
    super::normal_form(
        &[
            Word::unit(order, vec![Xm, Xp]),
            Word::new(order.q_pow(-1), vec![C, X0]),
            Word::new(order.q_pow(-2), vec![X0, X0]),
        ],
        order,
    )
}

/// `D^2 = C^2 - lambda^2 C2p`
pub fn d_squared(order: &RootOrder) -> AlgebraElement {
    let c = AlgebraElement::generator(Generator::C, order);
    let lam = order.lambda();
    c.mul(&c, order)
        .sub(&AlgebraElement::generator(Generator::C2p, order).scale(&(&lam * &lam)))
}

/// `C - lambda X0`
pub fn w_element(order: &RootOrder) -> AlgebraElement {
    AlgebraElement::generator(Generator::C, order)
        .sub(&AlgebraElement::generator(Generator::X0, order).scale(&order.lambda()))
}

/// The generators `C, C2p, X+^l, X-^l, (C - lambda X0)^l` with display names.
pub fn centre_generators(order: &RootOrder) -> Vec<(&'static str, AlgebraElement)> {
    let l = order.l() as u32;
    vec![
        ("C", AlgebraElement::generator(Generator::C, order)),
        ("C2p", AlgebraElement::generator(Generator::C2p, order)),
        (
            "Xp^l",
            AlgebraElement::generator(Generator::Xp, order).pow(l, order),
        ),
        (
            "Xm^l",
            AlgebraElement::generator(Generator::Xm, order).pow(l, order),
        ),
        ("(C - lambda*X0)^l", w_element(order).pow(l, order)),
    ]
}

/// `q^-l D^l Q_l((q + q^-1) C / D)` as a sum of `coeff * C^c * D^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DressedChebyshev {
    /// `(power of C, power of D, coefficient)`; the power of `D` is `l - c`
    /// and may be odd in principle, which is what [`Self::is_even_in_d`] checks.
    pub terms: Vec<(u32, u32, CycNumber)>,
}

impl DressedChebyshev {
    pub fn is_even_in_d(&self) -> bool {
        self.terms.iter().all(|(_, d, _)| d % 2 == 0)
    }

    /// Substitutes `D^(2j) = (C^2 - lambda^2 C2p)^j`; `None` if an odd power
    /// of `D` survived.
    pub fn to_element(&self, order: &RootOrder) -> Option<AlgebraElement> {
        if !self.is_even_in_d() {
            return None;
        }
        let c = AlgebraElement::generator(Generator::C, order);
        let d2 = d_squared(order);
        let mut out = AlgebraElement::zero();
        for (cp, dp, coeff) in &self.terms {
            let t = c.pow(*cp, order).mul(&d2.pow(dp / 2, order), order);
            out = out.add(&t.scale(coeff));
        }
        Some(out)
    }

    /// Scalar shadow: the same expansion with `C -> c`, `D^2 -> d2`.
    pub fn evaluate(&self, c: &CycNumber, d2: &CycNumber) -> Option<CycNumber> {
        if !self.is_even_in_d() {
            return None;
        }
        let mut acc = CycNumber::zero(c.field());
        for (cp, dp, coeff) in &self.terms {
            acc += &(coeff * &c.pow(*cp) * d2.pow(dp / 2));
        }
        Some(acc)
    }
}

pub fn dressed_chebyshev(order: &RootOrder) -> DressedChebyshev {
    dressed_chebyshev_of_degree(order.l(), order)
}

pub(crate) fn dressed_chebyshev_of_degree(l: usize, order: &RootOrder) -> DressedChebyshev {
    let ql = chebyshev_like(l);
    let pref = order.q_pow(-(l as i64));
    let s = order.q_plus_q_inv();
    let terms = ql
        .iter()
        .enumerate()
        .filter(|(_, a)| a.sign() != num_bigint::Sign::NoSign)
        .map(|(k, a)| {
            let coeff = (&pref * &s.pow(k as u32)).scale(&BigRational::from_integer(a.clone()));
            (k as u32, (l - k) as u32, coeff)
        })
        .collect();
    DressedChebyshev { terms }
}

/// Both sides of
/// `X-^l X+^l = q^(l(l-1)) lambda^(-2l) { -(D^2)^l + dressed * W^l - W^(2l) }`
/// with `W = C - lambda X0`, each in normal form.
pub fn centre_relation_sides(order: &RootOrder) -> (AlgebraElement, AlgebraElement) {
    let l = order.l() as u32;
    let xm = AlgebraElement::generator(Generator::Xm, order);
    let xp = AlgebraElement::generator(Generator::Xp, order);
    let left = xm.pow(l, order).mul(&xp.pow(l, order), order);

    let w_l = w_element(order).pow(l, order);
    let dressed = dressed_chebyshev(order)
        .to_element(order)
        .expect("Q_l has the parity of l");
    let bracket = d_squared(order)
        .pow(l, order)
        .neg()
        .add(&dressed.mul(&w_l, order))
        .sub(&w_l.mul(&w_l, order));
    let ll = l as i64;
    let pref = order.q_pow(ll * (ll - 1)) * order.lambda_inv().pow(2 * l);
    (left, bracket.scale(&pref))
}

/// Both sides of
/// `X-^p X+^p = lambda^(-2p) prod_{r<p} q^(-2r-1) { -q D^2 q^(2r) + (q+q^-1) C W - q^-1 W^2 q^(-2r) }`.
pub fn recursion_identity(
    p: i64,
    order: &RootOrder,
) -> Result<(AlgebraElement, AlgebraElement), AlgebraError> {
    if p < 1 {
        return Err(AlgebraError::InvalidPower(p));
    }
    let pu = p as u32;
    let xm = AlgebraElement::generator(Generator::Xm, order);
    let xp = AlgebraElement::generator(Generator::Xp, order);
    let left = xm.pow(pu, order).mul(&xp.pow(pu, order), order);

    let c = AlgebraElement::generator(Generator::C, order);
    let w = w_element(order);
    let d2 = d_squared(order);
    let cw = c.mul(&w, order).scale(&order.q_plus_q_inv());
    let w2 = w.mul(&w, order);
    let mut right = AlgebraElement::one(order).scale(&order.lambda_inv().pow(2 * pu));
    for r in 0..p {
        let factor = d2
            .scale(&-order.q_pow(1 + 2 * r))
            .add(&cw)
            .sub(&w2.scale(&order.q_pow(-1 - 2 * r)))
            .scale(&order.q_pow(-2 * r - 1));
        right = right.mul(&factor, order);
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_central, Monomial};

    #[test]
    fn casimir_is_a_single_monomial() {
        for n in 3..=8 {
            let o = RootOrder::new(n).unwrap();
            let c2 = casimir_c2p(&o);
            assert_eq!(c2, AlgebraElement::generator(Generator::C2p, &o));
            assert!(is_central(&c2, &o));
        }
    }

    #[test]
    fn dressed_chebyshev_at_n4() {
        // l = 2: q^-2 { (q+q^-1)^2 C^2 - 2 D^2 }
        let o = RootOrder::new(4).unwrap();
        let dc = dressed_chebyshev(&o);
        assert!(dc.is_even_in_d());
        let c = AlgebraElement::generator(Generator::C, &o);
        let s = o.q_plus_q_inv();
        let want = c
            .mul(&c, &o)
            .scale(&(&s * &s))
            .sub(&d_squared(&o).scale(&o.int(2)))
            .scale(&o.q_pow(-2));
        assert_eq!(dc.to_element(&o).unwrap(), want);
    }

    #[test]
    fn dressed_chebyshev_l3_has_c3_and_c_d2_only() {
        let o = RootOrder::new(3).unwrap();
        let dc = dressed_chebyshev(&o);
        let shape: Vec<(u32, u32)> = dc.terms.iter().map(|(c, d, _)| (*c, *d)).collect();
        assert_eq!(shape, vec![(1, 2), (3, 0)]);
    }

    #[test]
    fn dressed_chebyshev_degree_one() {
        let o = RootOrder::new(5).unwrap();
        let dc = dressed_chebyshev_of_degree(1, &o);
        assert_eq!(dc.terms.len(), 1);
        let (cp, dp, coeff) = &dc.terms[0];
        assert_eq!((*cp, *dp), (1, 0));
        assert_eq!(*coeff, o.q_pow(-1) * o.q_plus_q_inv());
    }

    #[test]
    fn recursion_p1_is_the_reordering_identity() {
        let o = RootOrder::new(7).unwrap();
        let (left, right) = recursion_identity(1, &o).unwrap();
        assert_eq!(left, right);
        assert_eq!(
            left,
            casimir_c2p(&o).sub(&AlgebraElement::from_terms([
                (Monomial::new(0, 0, 1, 1, 0).unwrap(), o.q_pow(-1)),
                (Monomial::new(0, 0, 2, 0, 0).unwrap(), o.q_pow(-2)),
            ]))
        );
        assert_eq!(
            recursion_identity(0, &o),
            Err(AlgebraError::InvalidPower(0))
        );
    }

    #[test]
    fn centre_relation_small_orders() {
        for n in [3, 4] {
            let o = RootOrder::new(n).unwrap();
            let (left, right) = centre_relation_sides(&o);
            assert_eq!(left, right, "n={n}");
            assert!(left.is_diagonal());
        }
    }

    #[test]
    fn recursion_at_p_l_matches_centre_relation() {
        let o = RootOrder::new(4).unwrap();
        let (_, rec) = recursion_identity(o.l() as i64, &o).unwrap();
        let (_, rel) = centre_relation_sides(&o);
        assert_eq!(rec, rel);
    }
}
