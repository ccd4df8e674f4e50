//! Text input for polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := power (['*'] power)*
//! power  := atom ['^' integer]
//! atom   := integer ['/' integer] | variable | '(' expr ')'
//! ```
//!
//! Variables are identifiers `[A-Za-z][A-Za-z0-9_]*` that must belong to the
//! ring. Juxtaposition multiplies, so `2x^2 y` is `2*x^2*y`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::RingRef;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            let n: BigInt = s.parse().map_err(|_| err(pos, "bad integer"))?;
            out.push((Tok::Int(n), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(pos, format!("unexpected character `{other}`"))),
        };
        out.push((tok, pos));
        i += 1;
        col += 1;
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a RingRef<F>,
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Int(n) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(pos, "exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(pos, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let pos = self.pos();
        let field = self.ring.field();
        match self.bump() {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    let Tok::Int(d) = self.bump() else {
                        return Err(err(dpos, "expected an integer denominator"));
                    };
                    if d == BigInt::from(0) {
                        return Err(err(dpos, "zero denominator"));
                    }
                    let q = BigRational::new(n, d);
                    let c = field
                        .from_rational(&q)
                        .ok_or_else(|| err(dpos, "denominator is not invertible in the field"))?;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    Ok(Polynomial::constant(self.ring, field.from_bigint(&n)))
                }
            }
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Ok(i) => Ok(Polynomial::var(self.ring, i)),
                Err(_) => Err(Error::UnknownVariable(name)),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let cpos = self.pos();
                if self.bump() != Tok::RParen {
                    return Err(err(cpos, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(err(pos, "unexpected end of input")),
            other => Err(err(pos, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses one polynomial over `ring`.
pub fn parse_polynomial<F: Field>(ring: &RingRef<F>, text: &str) -> Result<Polynomial<F>> {
    let toks = lex(text)?;
    let mut p = Parser { ring, toks, at: 0 };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(err(p.pos(), format!("unexpected token {:?}", p.peek())));
    }
    Ok(out)
}

/// Parses each string as a polynomial over `ring`.
pub fn parse_polynomials<F: Field, S: AsRef<str>>(
    ring: &RingRef<F>,
    texts: &[S],
) -> Result<Vec<Polynomial<F>>> {
    texts
        .iter()
        .map(|t| parse_polynomial(ring, t.as_ref()))
        .collect()
}
