//! Dense univariate polynomials over the rationals.
//!
//! Only the handful of operations needed to build cyclotomic polynomials and
//! invert field elements live here. Coefficients are stored in ascending
//! degree order and the vector never carries trailing zeros.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[0] = -BigRational::one();
        coeffs[n] = BigRational::one();
        QPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (QPoly::zero(), QPoly::zero());
        };
        if sd < dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Returns `s` with `s * self == 1 (mod modulus)`, or `None` when the two
    /// polynomials are not coprime.
    pub fn inverse_mod(&self, modulus: &QPoly) -> Option<QPoly> {
        // Extended Euclid tracking only the coefficient of `self`.
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus).1);
        let (mut s0, mut s1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is the gcd; it must be a nonzero constant.
        if r0.degree() != Some(0) {
            return None;
        }
        let scale = r0.coeffs[0].recip();
        let s = QPoly::from_coeffs(s0.coeffs.into_iter().map(|c| c * &scale).collect());
        Some(s.div_rem(modulus).1)
    }
}

/// The n-th cyclotomic polynomial, by dividing `x^n - 1` by every `Phi_d`
/// with `d` a proper divisor of `n`.
pub(crate) fn cyclotomic_polynomial(n: usize) -> QPoly {
    assert!(n >= 1);
    let mut p = QPoly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = p.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// Integer coefficient view, used for tests and diagnostics.
#[allow(dead_code)]
pub(crate) fn integer_coeffs(p: &QPoly) -> Option<Vec<BigInt>> {
    p.coeffs
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &QPoly) -> Vec<i64> {
        integer_coeffs(p)
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let c = ints(&cyclotomic_polynomial(105));
        assert_eq!(c.len(), 49);
        assert!(c.contains(&-2));
    }

    #[test]
    fn inverse_mod_phi5() {
        let phi = cyclotomic_polynomial(5);
        let a = QPoly::from_coeffs(vec![
            BigRational::from_integer(2.into()),
            BigRational::from_integer((-1).into()),
            BigRational::zero(),
            BigRational::from_integer(3.into()),
        ]);
        let inv = a.inverse_mod(&phi).unwrap();
        assert_eq!(a.mul(&inv).div_rem(&phi).1, QPoly::one());
    }
}
