use crate::algebra::{AlgebraElement, Generator, Monomial};
use crate::cyclotomic::CycNumber;

use num_traits::{Signed, Zero};

/// Canonical text of an element.
///
/// Terms appear in ascending order of `(a_minus, a_plus, a_0, b_1, b_2)`;
/// within a term the factors are written `C^b1*C2p^b2*Xm^a*Xp^a*X0^a`, unit
/// exponents elided. Coefficients are polynomials in `q` in the power basis
/// of `Q(zeta_n)`, parenthesised when they have more than one term.
pub fn print_canonical(e: &AlgebraElement) -> String {
    let mut out = String::new();
    for (m, c) in e.terms() {
        let (negative, coeff) = coefficient_text(c);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = monomial_text(m);
        match (coeff.as_str(), mono.is_empty()) {
            (_, true) => out.push_str(&coeff),
            ("1", false) => out.push_str(&mono),
            (_, false) => {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Sign pulled out of single-term coefficients, and the remaining text.
fn coefficient_text(c: &CycNumber) -> (bool, String) {
    if c.support_len() != 1 {
        return (false, format!("({})", c.to_q_string()));
    }
    let mut coeffs = c.coeffs().to_vec();
    let k = coeffs.iter().position(|r| !r.is_zero()).unwrap();
    let negative = coeffs[k].is_negative();
    coeffs[k] = coeffs[k].abs();
    let magnitude = CycNumber::from_coeffs(c.field(), coeffs).expect("same length");
    (negative, magnitude.to_q_string())
}

fn monomial_text(m: &Monomial) -> String {
    [
        Generator::C,
        Generator::C2p,
        Generator::Xm,
        Generator::Xp,
        Generator::X0,
    ]
    .into_iter()
    .filter_map(|g| match m.exponent(g) {
        0 => None,
        1 => Some(g.symbol().to_string()),
        e => Some(format!("{}^{e}", g.symbol())),
    })
    .collect::<Vec<_>>()
    .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{normal_form, Word};
    use crate::cyclotomic::RootOrder;
    use Generator::*;

    #[test]
    fn xp_xm_prints_as_expected() {
        let o = RootOrder::new(5).unwrap();
        let e = normal_form(&[Word::unit(&o, vec![Xp, Xm])], &o);
        assert_eq!(print_canonical(&e), "C2p + q*C*X0 - q^2*X0^2");
    }

    #[test]
    fn zero_and_scalars() {
        let o = RootOrder::new(5).unwrap();
        assert_eq!(print_canonical(&AlgebraElement::zero()), "0");
        assert_eq!(print_canonical(&AlgebraElement::one(&o)), "1");
        assert_eq!(print_canonical(&AlgebraElement::scalar(-o.q())), "-q");
        let e = AlgebraElement::scalar(o.int(1) + o.q()).add(&AlgebraElement::generator(X0, &o));
        assert_eq!(print_canonical(&e), "(1 + q) + X0");
    }
}
