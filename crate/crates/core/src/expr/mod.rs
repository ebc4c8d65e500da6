//! Text front-end: parsing ASCII expressions such as
//! `(q+q^-1)*(C - lambda*X0)*X0` and printing elements canonically.

mod parse;
mod print;

use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::{normal_form, AlgebraElement, Generator, Word};
use crate::cyclotomic::{CycNumber, FieldError, RootOrder};

pub use print::print_canonical;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    Unexpected(String),
    UnknownSymbol(String),
    NegativeGeneratorExponent(i64),
    ExponentTooLarge,
    ZeroDenominator,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty expression"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::Unexpected(s) => write!(f, "unexpected {s}"),
            ParseErrorKind::UnknownSymbol(s) => write!(f, "unknown symbol {s:?}"),
            ParseErrorKind::NegativeGeneratorExponent(e) => {
                write!(
                    f,
                    "negative exponent {e} on an expression containing generators"
                )
            }
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent out of range"),
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("negative exponent {0} on an expression containing generators")]
    NegativeGeneratorExponent(i64),
}

/// Expression tree. Scalar subtrees (no generators) commute with everything;
/// generator-bearing factors keep their order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Neg(Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    Rational(BigRational),
    Q,
    Lambda,
    Generator(Generator),
}

enum Value {
    Scalar(CycNumber),
    Element(AlgebraElement),
}

impl Value {
    fn into_element(self) -> AlgebraElement {
        match self {
            Value::Scalar(s) => AlgebraElement::scalar(s),
            Value::Element(e) => e,
        }
    }
}

impl ExprAst {
    pub fn has_generator(&self) -> bool {
        match self {
            ExprAst::Add(a, b) | ExprAst::Sub(a, b) | ExprAst::Mul(a, b) => {
                a.has_generator() || b.has_generator()
            }
            ExprAst::Neg(a) | ExprAst::Pow(a, _) => a.has_generator(),
            ExprAst::Generator(_) => true,
            ExprAst::Rational(_) | ExprAst::Q | ExprAst::Lambda => false,
        }
    }

    /// Evaluates to a normal-ordered element of `B`.
    pub fn evaluate(&self, order: &RootOrder) -> Result<AlgebraElement, ExprError> {
        Ok(self.eval(order)?.into_element())
    }

    fn eval(&self, order: &RootOrder) -> Result<Value, ExprError> {
        use Value::*;
        Ok(match self {
            ExprAst::Rational(r) => Scalar(CycNumber::from_rational(order.field(), r.clone())),
            ExprAst::Q => Scalar(order.q()),
            ExprAst::Lambda => Scalar(order.lambda()),
            ExprAst::Generator(g) => Element(AlgebraElement::generator(*g, order)),
            ExprAst::Neg(a) => match a.eval(order)? {
                Scalar(s) => Scalar(-s),
                Element(e) => Element(e.neg()),
            },
            ExprAst::Add(a, b) | ExprAst::Sub(a, b) => {
                let sub = matches!(self, ExprAst::Sub(..));
                match (a.eval(order)?, b.eval(order)?) {
                    (Scalar(x), Scalar(y)) => Scalar(if sub { x - y } else { x + y }),
                    (x, y) => {
                        let (x, y) = (x.into_element(), y.into_element());
                        Element(if sub { x.sub(&y) } else { x.add(&y) })
                    }
                }
            }
            ExprAst::Mul(a, b) => match (a.eval(order)?, b.eval(order)?) {
                (Scalar(x), Scalar(y)) => Scalar(x * y),
                (Scalar(s), Element(e)) | (Element(e), Scalar(s)) => Element(e.scale(&s)),
                (Element(x), Element(y)) => Element(x.mul(&y, order)),
            },
            ExprAst::Pow(a, k) => match a.eval(order)? {
                Scalar(s) => Scalar(s.powi(*k)?),
                Element(_) if *k < 0 => return Err(ExprError::NegativeGeneratorExponent(*k)),
                Element(e) => Element(e.pow(*k as u32, order)),
            },
        })
    }

    /// Expands the tree into a raw sum of words by distributivity, without
    /// any reordering of generators.
    pub fn to_words(&self, order: &RootOrder) -> Result<Vec<Word>, ExprError> {
        Ok(match self {
            ExprAst::Rational(_) | ExprAst::Q | ExprAst::Lambda => {
                let Value::Scalar(s) = self.eval(order)? else {
                    unreachable!()
                };
                vec![Word::new(s, vec![])]
            }
            ExprAst::Generator(g) => vec![Word::unit(order, vec![*g])],
            ExprAst::Neg(a) => a
                .to_words(order)?
                .into_iter()
                .map(|w| Word::new(-w.coeff, w.letters))
                .collect(),
            ExprAst::Add(a, b) => {
                let mut v = a.to_words(order)?;
                v.extend(b.to_words(order)?);
                v
            }
            ExprAst::Sub(a, b) => {
                let mut v = a.to_words(order)?;
                v.extend(
                    b.to_words(order)?
                        .into_iter()
                        .map(|w| Word::new(-w.coeff, w.letters)),
                );
                v
            }
            ExprAst::Mul(a, b) => word_product(&a.to_words(order)?, &b.to_words(order)?),
            ExprAst::Pow(a, k) => {
                if !a.has_generator() {
                    let Value::Scalar(s) = self.eval(order)? else {
                        unreachable!()
                    };
                    vec![Word::new(s, vec![])]
                } else if *k < 0 {
                    return Err(ExprError::NegativeGeneratorExponent(*k));
                } else {
                    let base = a.to_words(order)?;
                    let mut acc = vec![Word::unit(order, vec![])];
                    for _ in 0..*k {
                        acc = word_product(&acc, &base);
                    }
                    acc
                }
            }
        })
    }
}

fn word_product(a: &[Word], b: &[Word]) -> Vec<Word> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            let mut letters = x.letters.clone();
            letters.extend_from_slice(&y.letters);
            out.push(Word::new(&x.coeff * &y.coeff, letters));
        }
    }
    out
}

/// Parses text into an expression tree.
pub fn parse(text: &str) -> Result<ExprAst, ParseError> {
    parse::parse(text)
}

/// Parses and normal-orders in one step.
pub fn parse_element(text: &str, order: &RootOrder) -> Result<AlgebraElement, ExprError> {
    parse(text)?.evaluate(order)
}

/// Parses, expands to raw words, then normal-orders the words.
pub fn parse_words_normal_form(text: &str, order: &RootOrder) -> Result<AlgebraElement, ExprError> {
    Ok(normal_form(&parse(text)?.to_words(order)?, order))
}
