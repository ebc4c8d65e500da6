//! Recursive-descent parser for the ASCII expression syntax.
//!
//! ```text
//! expr     := ["-"] term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := atom ("^" sint)?
//! atom     := generator | constant | rational | "(" expr ")"
//! generator:= "X0" | "Xp" | "Xm" | "C" | "C2p"
//! constant := "q" | "lambda"
//! sint     := ["-"] digits
//! rational := digits ["/" digits]
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ExprAst, ParseError, ParseErrorKind};
use crate::algebra::Generator;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let ch = chars[i];
        let (start_line, start_col) = (line, col);
        if ch == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        let tok = if let Some(t) = single {
            i += 1;
            col += 1;
            t
        } else if ch.is_ascii_digit() {
            let s: String = chars[i..]
                .iter()
                .take_while(|c| c.is_ascii_digit())
                .collect();
            i += s.len();
            col += s.len();
            Tok::Int(s.parse().unwrap())
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let s: String = chars[i..]
                .iter()
                .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                .collect();
            i += s.len();
            col += s.len();
            Tok::Ident(s)
        } else {
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedChar(ch),
                line: start_line,
                column: start_col,
            });
        };
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, kind: ParseErrorKind) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            kind,
            line: t.line,
            column: t.column,
        }
    }

    fn unexpected(&self) -> ParseError {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Int(v) => v.to_string(),
            other => format!("{other:?}"),
        };
        self.err_here(ParseErrorKind::Unexpected(found))
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            ExprAst::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = ExprAst::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = ExprAst::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = ExprAst::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let atom = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(atom);
        }
        let caret = self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(v) = self.peek().clone() else {
            return Err(self.unexpected());
        };
        self.bump();
        let e = i64::try_from(&v).map_err(|_| ParseError {
            kind: ParseErrorKind::ExponentTooLarge,
            line: caret.line,
            column: caret.column,
        })?;
        let e = if negative { -e } else { e };
        if e < 0 && atom.has_generator() {
            return Err(ParseError {
                kind: ParseErrorKind::NegativeGeneratorExponent(e),
                line: caret.line,
                column: caret.column,
            });
        }
        Ok(ExprAst::Pow(Box::new(atom), e))
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            Tok::Int(num) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    let slash = self.bump();
                    let Tok::Int(den) = self.peek().clone() else {
                        return Err(self.unexpected());
                    };
                    self.bump();
                    if den.is_zero() {
                        return Err(ParseError {
                            kind: ParseErrorKind::ZeroDenominator,
                            line: slash.line,
                            column: slash.column,
                        });
                    }
                    Ok(ExprAst::Rational(BigRational::new(num, den)))
                } else {
                    Ok(ExprAst::Rational(BigRational::from_integer(num)))
                }
            }
            Tok::Ident(name) => {
                if let Some(g) = Generator::from_symbol(&name) {
                    self.bump();
                    Ok(ExprAst::Generator(g))
                } else if name == "q" {
                    self.bump();
                    Ok(ExprAst::Q)
                } else if name == "lambda" {
                    self.bump();
                    Ok(ExprAst::Lambda)
                } else {
                    Err(self.err_here(ParseErrorKind::UnknownSymbol(name)))
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

pub(super) fn parse(text: &str) -> Result<ExprAst, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    if *p.peek() == Tok::End {
        return Err(p.err_here(ParseErrorKind::Empty));
    }
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(ast)
}
