//! Exact arithmetic in `Q(zeta_n)` with `zeta_n` standing for the deformation
//! parameter `q`, together with the q-combinatorics built on top of it:
//! q-numbers `[p]`, `lambda = q - q^-1` and the Chebyshev-like polynomials
//! `Q_l` with `Q_l(x + 1/x) = x^l + x^-l`.

mod number;
mod poly;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

pub use number::{CycField, CycNumber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("invalid root order n = {0}: q must have multiplicative order n >= 3")]
    InvalidOrder(usize),
    #[error("division by zero in Q(zeta_n)")]
    DivisionByZero,
    #[error("expected {expected} coordinates, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("malformed rational {0:?}")]
    BadRational(String),
}

/// Smallest `l > 0` with `q^(2l) = 1` when `q` has exact order `n`.
pub fn minimal_l(n: usize) -> Result<usize, FieldError> {
    if n < 3 {
        return Err(FieldError::InvalidOrder(n));
    }
    Ok(n / n.gcd(&2))
}

/// The root of unity `q` (exact order `n`) and its derived half-period `l`.
///
/// This is the context every algebraic computation runs in; cloning it is
/// cheap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootOrder {
    n: usize,
    l: usize,
    field: Arc<CycField>,
}

impl RootOrder {
    pub fn new(n: usize) -> Result<Self, FieldError> {
        let l = minimal_l(n)?;
        Ok(RootOrder {
            n,
            l,
            field: CycField::get(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn zero(&self) -> CycNumber {
        CycNumber::zero(&self.field)
    }

    pub fn one(&self) -> CycNumber {
        CycNumber::one(&self.field)
    }

    pub fn int(&self, v: i64) -> CycNumber {
        CycNumber::from_integer(&self.field, v)
    }

    pub fn q(&self) -> CycNumber {
        self.q_pow(1)
    }

    pub fn q_pow(&self, k: i64) -> CycNumber {
        CycNumber::zeta_pow(&self.field, k)
    }

    /// `lambda = q - q^-1`, nonzero because `n >= 3`.
    pub fn lambda(&self) -> CycNumber {
        self.q_pow(1) - self.q_pow(-1)
    }

    pub fn lambda_inv(&self) -> CycNumber {
        self.lambda()
            .inverse()
            .expect("lambda is invertible for n >= 3")
    }

    /// `q + q^-1`, that is `[2]`.
    pub fn q_plus_q_inv(&self) -> CycNumber {
        self.q_pow(1) + self.q_pow(-1)
    }

    /// The q-number `[p] = (q^p - q^-p) / (q - q^-1)`.
    ///
    /// Computed as the finite sum `q^(p-1) + q^(p-3) + ... + q^(1-p)`, which
    /// avoids the division.
    pub fn q_number(&self, p: i64) -> CycNumber {
        let mut acc = self.zero();
        for j in 0..p.unsigned_abs() as i64 {
            acc += &self.q_pow(p.abs() - 1 - 2 * j);
        }
        if p < 0 {
            -acc
        } else {
            acc
        }
    }
}

/// `q^k` in the field attached to `order`.
pub fn q_pow(k: i64, order: &RootOrder) -> CycNumber {
    order.q_pow(k)
}

/// `[p]` in the field attached to `order`.
pub fn q_number(p: i64, order: &RootOrder) -> CycNumber {
    order.q_number(p)
}

/// Integer-coefficient polynomial `Q_l` with `Q_l(x + x^-1) = x^l + x^-l`,
/// coefficients listed from the constant term up.
///
/// Built from `Q_0 = 2`, `Q_1 = y`, `Q_{k+1} = y Q_k - Q_{k-1}`.
pub fn chebyshev_like(l: usize) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    if l == 0 {
        return prev;
    }
    let mut cur: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(1)];
    for _ in 1..l {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Evaluates an integer polynomial at a field element (Horner).
pub fn eval_int_poly(coeffs: &[BigInt], y: &CycNumber) -> CycNumber {
    let field = y.field();
    let mut acc = CycNumber::zero(field);
    for c in coeffs.iter().rev() {
        acc = &acc * y;
        acc += &CycNumber::from_rational(field, c.clone().into());
    }
    acc
}
