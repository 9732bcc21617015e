//! Expression input: a small LL(1) grammar over integers and the variables
//! x, y, t, u, v, lowered to exact rational functions.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := base ('^' int)?
//! base   := int | ident | '(' expr ')' | '-' base
//! ```
//!
//! Unary minus binds tighter than `^`, so `-x^2` is `(-x)^2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactarith::{rational::from_int, MPoly, RatFun};

pub const IDENTIFIERS: [&str; 5] = ["x", "y", "t", "u", "v"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Sym(c) => c.to_string(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((i, Tok::Sym(c as char)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(Error::Syntax {
                offset: i,
                expected: vec!["integer".into(), "identifier".into(), "operator".into()],
                found: ch.to_string(),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
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

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().clone() {
            Tok::Int(n) => {
                let Ok(e) = u32::try_from(&n) else {
                    return self.fail(&["exponent below 2^32"]);
                };
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => self.fail(&["nonnegative integer exponent"]),
        }
    }

    fn base(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => {
                if !IDENTIFIERS.contains(&name.as_str()) {
                    return Err(Error::UnknownIdentifier { name, offset: self.offset() });
                }
                self.pos += 1;
                Ok(Expr::Var(name))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.fail(&[")"]);
                }
                Ok(Expr::Group(Box::new(inner)))
            }
            Tok::Sym('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.base()?)))
            }
            _ => self.fail(&["integer", "identifier", "(", "-"]),
        }
    }
}

/// Parses a whole expression; trailing input is a syntax error.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return p.fail(&["+", "-", "*", "/", "^", "end of input"]);
    }
    Ok(e)
}

// Binding levels: 0 sum, 1 product, 2 power, 3 atom or negation.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) | Expr::Div(..) => 1,
        Expr::Pow(..) => 2,
        Expr::Group(inner) => level(inner),
        Expr::Int(..) | Expr::Var(..) | Expr::Neg(..) => 3,
    }
}

fn write_at(e: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Expr::Group(inner) = e {
        return write_at(inner, min, f);
    }
    if level(e) < min {
        write!(f, "(")?;
        write_at(e, 0, f)?;
        return write!(f, ")");
    }
    match e {
        Expr::Int(n) => write!(f, "{n}"),
        Expr::Var(v) => write!(f, "{v}"),
        Expr::Neg(x) => {
            write!(f, "-")?;
            write_at(x, 3, f)
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            write_at(a, 0, f)?;
            write!(f, "{}", if matches!(e, Expr::Add(..)) { "+" } else { "-" })?;
            write_at(b, 1, f)
        }
        Expr::Mul(a, b) | Expr::Div(a, b) => {
            write_at(a, 1, f)?;
            write!(f, "{}", if matches!(e, Expr::Mul(..)) { "*" } else { "/" })?;
            write_at(b, 2, f)
        }
        Expr::Pow(b, n) => {
            write_at(b, 3, f)?;
            write!(f, "^{n}")
        }
        Expr::Group(_) => unreachable!(),
    }
}

/// Prints with the fewest parentheses that re-parse to the same tree
/// (up to grouping nodes).
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, 0, f)
    }
}

impl Expr {
    pub fn to_ratfun(&self) -> Result<RatFun> {
        Ok(match self {
            Expr::Int(n) => RatFun::constant(from_int(n.clone())),
            Expr::Var(v) => RatFun::var(v),
            Expr::Neg(x) => x.to_ratfun()?.neg(),
            Expr::Group(x) => x.to_ratfun()?,
            Expr::Add(a, b) => a.to_ratfun()?.add(&b.to_ratfun()?),
            Expr::Sub(a, b) => a.to_ratfun()?.sub(&b.to_ratfun()?),
            Expr::Mul(a, b) => a.to_ratfun()?.mul(&b.to_ratfun()?),
            Expr::Div(a, b) => {
                if let Expr::Int(n) = b.as_ref() {
                    if n.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                }
                a.to_ratfun()?.div(&b.to_ratfun()?)?
            }
            Expr::Pow(b, n) => b.to_ratfun()?.pow(*n),
        })
    }

    /// Fails with `NotPolynomial` when a genuine quotient survives reduction.
    pub fn to_mpoly(&self) -> Result<MPoly> {
        let r = self.to_ratfun()?;
        if !r.is_polynomial() {
            return Err(Error::NotPolynomial);
        }
        Ok(r.into_parts().0)
    }
}

pub fn parse_ratfun(text: &str) -> Result<RatFun> {
    parse_expr(text)?.to_ratfun()
}

pub fn parse_mpoly(text: &str) -> Result<MPoly> {
    parse_expr(text)?.to_mpoly()
}
