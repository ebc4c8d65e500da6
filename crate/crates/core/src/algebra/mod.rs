//! The algebra `B` generated by `X0`, `X+`, `X-` and the central `C`,
//! subject to
//!
//! ```text
//! q^2  X0 X+ - X+ X0 =  q    C X+
//! q^-2 X0 X- - X- X0 = -q^-1 C X-
//! X+ X- - X- X+      = (q + q^-1)(C - lambda X0) X0
//! ```
//!
//! Elements are kept in the ordered basis `X-^a X+^b X0^c C^d C2p^e` with
//! `a * b = 0`, where `C2p = X- X+ + q^-1 C X0 + q^-2 X0^2` is the quadratic
//! Casimir. Products are normal-ordered by pushing one generator at a time
//! onto the right end of a basis monomial (see [`AlgebraElement::mul_generator`]).

mod centre;
pub mod rewrite;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::cyclotomic::{CycNumber, RootOrder};

pub use centre::{
    casimir_c2p, centre_generators, centre_relation_sides, d_squared, dressed_chebyshev,
    recursion_identity, w_element, DressedChebyshev,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("power must be at least 1, got {0}")]
    InvalidPower(i64),
}

/// A generator symbol; the declaration order is the basis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Xm,
    Xp,
    X0,
    C,
    C2p,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::Xm,
        Generator::Xp,
        Generator::X0,
        Generator::C,
        Generator::C2p,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Xm => "Xm",
            Generator::Xp => "Xp",
            Generator::X0 => "X0",
            Generator::C => "C",
            Generator::C2p => "C2p",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.symbol() == s)
    }

    pub fn is_central(self) -> bool {
        matches!(self, Generator::C | Generator::C2p)
    }
}

/// Basis monomial `X-^a_minus X+^a_plus X0^a_0 C^b_1 C2p^b_2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    a_minus: u32,
    a_plus: u32,
    a_0: u32,
    b_1: u32,
    b_2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        a_minus: 0,
        a_plus: 0,
        a_0: 0,
        b_1: 0,
        b_2: 0,
    };

    /// `None` when both `X-` and `X+` appear (not a basis element).
    pub fn new(a_minus: u32, a_plus: u32, a_0: u32, b_1: u32, b_2: u32) -> Option<Monomial> {
        (a_minus == 0 || a_plus == 0).then_some(Monomial {
            a_minus,
            a_plus,
            a_0,
            b_1,
            b_2,
        })
    }

    pub fn a_minus(&self) -> u32 {
        self.a_minus
    }
    pub fn a_plus(&self) -> u32 {
        self.a_plus
    }
    pub fn a_0(&self) -> u32 {
        self.a_0
    }
    pub fn b_1(&self) -> u32 {
        self.b_1
    }
    pub fn b_2(&self) -> u32 {
        self.b_2
    }

    /// Exponent of a generator.
    pub fn exponent(&self, g: Generator) -> u32 {
        match g {
            Generator::Xm => self.a_minus,
            Generator::Xp => self.a_plus,
            Generator::X0 => self.a_0,
            Generator::C => self.b_1,
            Generator::C2p => self.b_2,
        }
    }

    pub fn degree(&self) -> u32 {
        self.a_minus + self.a_plus + self.a_0 + self.b_1 + self.b_2
    }

    /// The monomial spelled as a word in basis order.
    pub fn letters(&self) -> Vec<Generator> {
        Generator::ALL
            .into_iter()
            .flat_map(|g| std::iter::repeat_n(g, self.exponent(g) as usize))
            .collect()
    }

    /// True when the monomial only involves `X0`, `C` and `C2p`.
    pub fn is_diagonal(&self) -> bool {
        self.a_minus == 0 && self.a_plus == 0
    }
}

/// A word in the generators with a scalar prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub coeff: CycNumber,
    pub letters: Vec<Generator>,
}

impl Word {
    pub fn new(coeff: CycNumber, letters: Vec<Generator>) -> Word {
        Word { coeff, letters }
    }

    pub fn unit(order: &RootOrder, letters: Vec<Generator>) -> Word {
        Word::new(order.one(), letters)
    }
}

/// A finite linear combination of basis monomials with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, CycNumber>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn one(order: &RootOrder) -> AlgebraElement {
        AlgebraElement::scalar(order.one())
    }

    pub fn scalar(c: CycNumber) -> AlgebraElement {
        AlgebraElement::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: CycNumber) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        e.add_term(m, &c);
        e
    }

    pub fn generator(g: Generator, order: &RootOrder) -> AlgebraElement {
        AlgebraElement::one(order).mul_generator(g, order)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, CycNumber)>>(iter: I) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        for (m, c) in iter {
            e.add_term(m, &c);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycNumber)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&CycNumber> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: &CycNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &CycNumber) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Right multiplication by a single generator, in normal form.
    pub fn mul_generator(&self, g: Generator, order: &RootOrder) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        let table = PushTable::new(order);
        for (m, c) in &self.terms {
            table.push(&mut out, m, c, g);
        }
        out
    }

    /// Product in `B`.
    pub fn mul(&self, other: &AlgebraElement, order: &RootOrder) -> AlgebraElement {
        let table = PushTable::new(order);
        let mut out = AlgebraElement::zero();
        for (m2, c2) in &other.terms {
            // central letters only shift exponents, so push the non-central
            // part letter by letter and bump C, C2p afterwards
            let mut acc = self.scale(c2);
            for g in [Generator::Xm, Generator::Xp, Generator::X0] {
                for _ in 0..m2.exponent(g) {
                    let mut next = AlgebraElement::zero();
                    for (m, c) in &acc.terms {
                        table.push(&mut next, m, c, g);
                    }
                    acc = next;
                }
            }
            for (m, c) in acc.terms {
                let shifted = Monomial {
                    b_1: m.b_1 + m2.b_1,
                    b_2: m.b_2 + m2.b_2,
                    ..m
                };
                out.add_term(shifted, &c);
            }
        }
        out
    }

    pub fn pow(&self, k: u32, order: &RootOrder) -> AlgebraElement {
        let mut acc = AlgebraElement::one(order);
        for _ in 0..k {
            acc = acc.mul(self, order);
        }
        acc
    }

    /// Largest total degree among the terms.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when no term carries `X+` or `X-`.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(Monomial::is_diagonal)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::print_canonical(self))
    }
}

/// Normal form of a sum of words.
pub fn normal_form(words: &[Word], order: &RootOrder) -> AlgebraElement {
    let table = PushTable::new(order);
    let mut out = AlgebraElement::zero();
    for w in words {
        let mut acc = AlgebraElement::scalar(w.coeff.clone());
        for &g in &w.letters {
            let mut next = AlgebraElement::zero();
            for (m, c) in &acc.terms {
                table.push(&mut next, m, c, g);
            }
            acc = next;
        }
        out = out.add(&acc);
    }
    out
}

pub fn multiply(a: &AlgebraElement, b: &AlgebraElement, order: &RootOrder) -> AlgebraElement {
    a.mul(b, order)
}

/// `[a, b] = ab - ba`
pub fn commutator(a: &AlgebraElement, b: &AlgebraElement, order: &RootOrder) -> AlgebraElement {
    a.mul(b, order).sub(&b.mul(a, order))
}

/// Commutes with `X0`, `X+` and `X-` (`C` is central by construction).
pub fn is_central(e: &AlgebraElement, order: &RootOrder) -> bool {
    [Generator::X0, Generator::Xp, Generator::Xm]
        .into_iter()
        .all(|g| commutator(e, &AlgebraElement::generator(g, order), order).is_zero())
}

/// Scalars needed to push a generator through `X0^c`, precomputed per order.
struct PushTable {
    /// `q^k` for `k` in `0..n`
    q: Vec<CycNumber>,
    n: i64,
}

impl PushTable {
    fn new(order: &RootOrder) -> PushTable {
        let n = order.n() as i64;
        PushTable {
            q: (0..n).map(|k| order.q_pow(k)).collect(),
            n,
        }
    }

    fn q(&self, k: i64) -> &CycNumber {
        &self.q[k.rem_euclid(self.n) as usize]
    }

    /// Adds `coeff * m * g` to `out`.
    fn push(&self, out: &mut AlgebraElement, m: &Monomial, coeff: &CycNumber, g: Generator) {
        match g {
            Generator::C => out.add_term(
                Monomial {
                    b_1: m.b_1 + 1,
                    ..*m
                },
                coeff,
            ),
            Generator::C2p => out.add_term(
                Monomial {
                    b_2: m.b_2 + 1,
                    ..*m
                },
                coeff,
            ),
            Generator::X0 => out.add_term(
                Monomial {
                    a_0: m.a_0 + 1,
                    ..*m
                },
                coeff,
            ),
            Generator::Xp => {
                // X0^c X+ = X+ (q^-2 X0 + q^-1 C)^c
                let c = m.a_0;
                for k in 0..=c {
                    let s = coeff.scale(&binomial(c, k)) * self.q(-(c as i64) - k as i64);
                    let (x0, cc) = (k, m.b_1 + c - k);
                    if m.a_minus == 0 {
                        out.add_term(
                            Monomial {
                                a_plus: m.a_plus + 1,
                                a_0: x0,
                                b_1: cc,
                                ..*m
                            },
                            &s,
                        );
                    } else {
                        // X- X+ = C2p - q^-1 C X0 - q^-2 X0^2
                        let a = m.a_minus - 1;
                        out.add_term(
                            Monomial {
                                a_minus: a,
                                a_0: x0,
                                b_1: cc,
                                b_2: m.b_2 + 1,
                                ..*m
                            },
                            &s,
                        );
                        out.add_term(
                            Monomial {
                                a_minus: a,
                                a_0: x0 + 1,
                                b_1: cc + 1,
                                ..*m
                            },
                            &-(&s * self.q(-1)),
                        );
                        out.add_term(
                            Monomial {
                                a_minus: a,
                                a_0: x0 + 2,
                                b_1: cc,
                                ..*m
                            },
                            &-(&s * self.q(-2)),
                        );
                    }
                }
            }
            Generator::Xm => {
                // X0^c X- = X- (q^2 X0 - q C)^c
                let c = m.a_0;
                for k in 0..=c {
                    let mut s = coeff.scale(&binomial(c, k)) * self.q(c as i64 + k as i64);
                    if (c - k) % 2 == 1 {
                        s = -s;
                    }
                    let (x0, cc) = (k, m.b_1 + c - k);
                    if m.a_plus == 0 {
                        out.add_term(
                            Monomial {
                                a_minus: m.a_minus + 1,
                                a_0: x0,
                                b_1: cc,
                                ..*m
                            },
                            &s,
                        );
                    } else {
                        // X+ X- = C2p + q C X0 - q^2 X0^2
                        let b = m.a_plus - 1;
                        out.add_term(
                            Monomial {
                                a_plus: b,
                                a_0: x0,
                                b_1: cc,
                                b_2: m.b_2 + 1,
                                ..*m
                            },
                            &s,
                        );
                        out.add_term(
                            Monomial {
                                a_plus: b,
                                a_0: x0 + 1,
                                b_1: cc + 1,
                                ..*m
                            },
                            &(&s * self.q(1)),
                        );
                        out.add_term(
                            Monomial {
                                a_plus: b,
                                a_0: x0 + 2,
                                b_1: cc,
                                ..*m
                            },
                            &-(&s * self.q(2)),
                        );
                    }
                }
            }
        }
    }
}

fn binomial(n: u32, k: u32) -> BigRational {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}
