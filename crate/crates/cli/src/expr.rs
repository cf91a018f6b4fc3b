//! Expressions over `U(W)`: lexer, LL(1) parser and evaluator.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT ('/' INT)? | 'q' | gen | '(' expr ')'
//! gen    := ('e' | 'f' | 'g' | 'h') '[' '-'? INT ',' '-'? INT ']' | 'd' | 'd1' | 'd2'
//! ```

use std::fmt;

use eala_twist::liealg::{Degree, Gen, Kind};
use eala_twist::scalars::{int, rat, Laurent, Rational};
use eala_twist::uea::UElt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

/// A lexical, syntax or evaluation error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    /// The tokens that would have been accepted; empty for evaluation errors.
    pub expected: Vec<&'static str>,
}

impl ParseError {
    fn unexpected(offset: usize, found: &Tok, expected: &[&'static str]) -> Self {
        ParseError {
            offset,
            message: format!("found {found}, expected {}", expected.join(" or ")),
            expected: expected.to_vec(),
        }
    }

    /// The input with a caret under the error position.
    pub fn annotate(&self, input: &str) -> String {
        let col = input[..self.offset.min(input.len())].chars().count();
        format!("{self}\n  {input}\n  {}^", " ".repeat(col))
    }
}

const ATOM_START: &[&str] = &["integer", "`q`", "generator", "`(`", "`-`"];

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..=i];
                let n = text.parse().map_err(|_| ParseError {
                    offset: start,
                    message: format!("integer `{text}` is too large"),
                    expected: Vec::new(),
                })?;
                Tok::Int(n)
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                Tok::Ident(input[start..=i].to_string())
            }
            _ => {
                let ch = input[start..].chars().next().expect("in bounds");
                return Err(ParseError {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                    expected: ATOM_START.to_vec(),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((input.len(), Tok::Eof));
    Ok(out)
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen(Gen),
    Scalar(Rational),
    Q,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    /// Base, exponent, and the byte offset of the exponent for error reporting.
    Pow(Box<Expr>, i64, usize),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::unexpected(self.offset(), self.peek(), &[name]))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.bump() {
            (_, Tok::Int(n)) => Ok(n),
            (at, t) => Err(ParseError::unexpected(at, &t, &["integer"])),
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            match self.bump() {
                (_, Tok::Int(n)) => Ok(-n),
                (at, t) => Err(ParseError::unexpected(at, &t, &["integer"])),
            }
        } else {
            match self.bump() {
                (_, Tok::Int(n)) => Ok(n),
                (at, t) => Err(ParseError::unexpected(at, &t, &["integer", "`-`"])),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let k = self.signed_int()?;
        Ok(Expr::Pow(Box::new(base), k, at))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.bump().1 {
            Tok::Int(p) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Scalar(int(p)));
                }
                self.bump();
                let den_at = self.offset();
                let d = self.int()?;
                if d == 0 {
                    return Err(ParseError {
                        offset: den_at,
                        message: "zero denominator".into(),
                        expected: Vec::new(),
                    });
                }
                Ok(Expr::Scalar(rat(p, d)))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(&name, at),
            t => Err(ParseError::unexpected(at, &t, ATOM_START)),
        }
    }

    fn named(&mut self, name: &str, at: usize) -> Result<Expr, ParseError> {
        let kind = match name {
            "q" => return Ok(Expr::Q),
            "d" => return Ok(Expr::Gen(Gen::D)),
            "d1" => return Ok(Expr::Gen(Gen::D1)),
            "d2" => return Ok(Expr::Gen(Gen::D2)),
            "e" => Kind::E,
            "f" => Kind::F,
            "g" => Kind::G,
            "h" => Kind::H,
            other => {
                return Err(ParseError {
                    offset: at,
                    message: format!("unknown name `{other}`, expected `q`, `d`, `d1`, `d2` or e/f/g/h[a,b]"),
                    expected: vec!["`q`", "generator"],
                })
            }
        };
        self.expect(Tok::LBracket, "`[`")?;
        let a = self.signed_int()?;
        self.expect(Tok::Comma, "`,`")?;
        let b = self.signed_int()?;
        self.expect(Tok::RBracket, "`]`")?;
        Gen::new(kind, Degree(a, b)).map(Expr::Gen).map_err(|_| ParseError {
            offset: at,
            message: format!("{name}[{a},{b}] is not a generator: g and h have no degree-zero element"),
            expected: Vec::new(),
        })
    }
}

/// Parses a whole input string.
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::Eof => Ok(e),
        t => Err(ParseError::unexpected(p.offset(), t, &["`+`", "`-`", "`*`", "end of input"])),
    }
}

/// Evaluates to a PBW normal form.
pub fn eval(e: &Expr) -> Result<UElt, ParseError> {
    Ok(match e {
        Expr::Gen(g) => UElt::gen(*g),
        Expr::Scalar(c) => UElt::rational(c.clone()),
        Expr::Q => UElt::scalar(Laurent::q_pow(1)),
        Expr::Add(a, b) => &eval(a)? + &eval(b)?,
        Expr::Sub(a, b) => &eval(a)? - &eval(b)?,
        Expr::Mul(a, b) => &eval(a)? * &eval(b)?,
        Expr::Neg(a) => -&eval(a)?,
        Expr::Pow(base, k, at) => {
            let b = eval(base)?;
            if *k >= 0 {
                b.pow(*k as usize)
            } else {
                let inv = b.as_scalar().and_then(|c| c.unit_inverse()).ok_or_else(|| ParseError {
                    offset: *at,
                    message: format!("negative power of `{b}`, which is not a unit"),
                    expected: Vec::new(),
                })?;
                UElt::scalar(inv).pow(k.unsigned_abs() as usize)
            }
        }
    })
}

/// Parses and evaluates.
pub fn parse_elt(input: &str) -> Result<UElt, ParseError> {
    eval(&parse_expr(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_scalars() {
        let e = parse_expr("e[1,2]*f[-1,-2]").unwrap();
        assert!(matches!(e, Expr::Mul(ref a, ref b)
            if **a == Expr::Gen(Gen::e(Degree(1, 2))) && **b == Expr::Gen(Gen::f(Degree(-1, -2)))));
        let s = parse_expr("(1 - q)*g[1,1]").unwrap();
        assert!(matches!(s, Expr::Mul(ref a, _) if matches!(**a, Expr::Sub(_, _))));
    }

    #[test]
    fn truncated_input_reports_offset_and_expectations() {
        let err = parse_expr("e[1,").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(err.expected, vec!["integer", "`-`"]);
        let err = parse_expr("d +").unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!(err.expected, ATOM_START.to_vec());
        assert_eq!(parse_expr("d d").unwrap_err().offset, 2);
        assert_eq!(parse_expr("e[1,1").unwrap_err().expected, vec!["`]`"]);
        assert_eq!(parse_expr("d $").unwrap_err().offset, 2);
    }

    #[test]
    fn undefined_generators_and_bad_powers() {
        assert_eq!(parse_elt("2*g[0,0]").unwrap_err().offset, 2);
        assert_eq!(parse_elt("d^-1").unwrap_err().offset, 2);
        assert_eq!(parse_elt("(2*q)^-2").unwrap(), UElt::scalar(Laurent::q_pow(-2).scale(&rat(1, 4))));
        assert!(parse_elt("1/0").is_err());
    }

    #[test]
    fn evaluation_straightens() {
        let x = parse_elt("f[0,1]*e[0,-1] - e[0,-1]*f[0,1]").unwrap();
        let y = parse_elt("-d + g[0,0]").unwrap_err();
        assert_eq!(y.offset, 5);
        assert_eq!(x.to_string(), parse_elt(&x.to_string()).unwrap().to_string());
    }
}
