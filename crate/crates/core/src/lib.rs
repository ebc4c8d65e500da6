//! Exact computer algebra for the generalised Lie algebra `sl(2)_q` when `q`
//! is a root of unity.
//!
//! * [`cyclotomic`]: exact arithmetic in `Q(zeta_n)`, q-numbers, Chebyshev-like
//!   polynomials.
//! * [`algebra`]: normal ordering in the algebra `B`, centre identities.
//! * [`representations`]: builders and checkers for the finite-dimensional
//!   irreducible representations of `B`, `F` and `A`.
//! * [`expr`]: ASCII parser and canonical printer.

pub mod algebra;
pub mod cyclotomic;
pub mod expr;
pub mod representations;

pub use algebra::{AlgebraElement, Generator, Monomial, Word};
pub use cyclotomic::{CycField, CycNumber, RootOrder};
