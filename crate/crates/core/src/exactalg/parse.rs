//! Text grammar for polynomials: `3*x0^2*x5 - 1/2*x1*x3`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*      divisor must be a nonzero constant
//! factor := '-' factor | base ['^' integer]
//! base   := integer | variable | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Variables are resolved against a [`Vars`] list.

use num_bigint::BigInt;

use super::field::Q;
use super::poly::{Poly, Vars};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize, String)>,
}

fn lex(s: &str) -> Result<Lexer> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            let n: BigInt = text.parse().expect("digits");
            toks.push((Tok::Num(n), pos, text));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            toks.push((Tok::Ident(text.clone()), pos, text));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Sym(c), pos, c.to_string()));
            i += 1;
        } else {
            return Err(Error::Parse {
                token: c.to_string(),
                position: pos,
                message: "unexpected character".into(),
            });
        }
    }
    Ok(Lexer { toks })
}

struct Parser<'a> {
    toks: Vec<(Tok, usize, String)>,
    pos: usize,
    vars: &'a Vars,
    input_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn err_here(&self, message: &str) -> Error {
        match self.toks.get(self.pos) {
            Some((_, p, text)) => Error::Parse {
                token: text.clone(),
                position: *p,
                message: message.into(),
            },
            None => Error::Parse {
                token: "<end of input>".into(),
                position: self.input_len,
                message: message.into(),
            },
        }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Poly<Q>> {
        let mut acc = Poly::zero(self.n(), ());
        let mut sign = match self.peek() {
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Sym('+')) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Sym('+')) => sign = 1,
                Some(Tok::Sym('-')) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly<Q>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Sym('/')) => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    let c = match (f.degree(), f.leading_term()) {
                        (Some(0), Some((_, c))) => c.clone(),
                        _ => {
                            self.pos = at;
                            return Err(self.err_here("divisor must be a nonzero constant"));
                        }
                    };
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly<Q>> {
        if let Some(Tok::Sym('-')) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            return Ok(-&f);
        }
        let base = self.base()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err_here("exponent too large"))?;
                    if e > 64 {
                        return Err(self.err_here("exponent too large"));
                    }
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err_here("expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly<Q>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(Q::from_integer(n), self.n()))
            }
            Some(Tok::Ident(name)) => match self.vars.position(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Poly::var(self.n(), i, ()))
                }
                None => Err(self.err_here(&format!(
                    "unknown variable (expected one of {})",
                    self.vars.0.join(", ")
                ))),
            },
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::Sym(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(self.err_here("expected ')'")),
                }
            }
            _ => Err(self.err_here("expected a number, variable or '('")),
        }
    }
}

/// Parse a rational polynomial over the named variables.
pub fn parse_poly(s: &str, vars: &Vars) -> Result<Poly<Q>> {
    let lexer = lex(s)?;
    let mut p = Parser {
        toks: lexer.toks,
        pos: 0,
        vars,
        input_len: s.len(),
    };
    if p.toks.is_empty() {
        return Err(p.err_here("empty polynomial"));
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err_here("unexpected token"));
    }
    Ok(out)
}

/// Parse a rational number such as `-3/4` or `5`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let p = parse_poly(s, &Vars(vec![]))?;
    match p.leading_term() {
        None => Ok(Q::from_integer(0.into())),
        Some((_, c)) => Ok(c.clone()),
    }
}

/// Parse a comma-separated list of rationals.
pub fn parse_vector(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

/// Parse `;`-separated rows of comma-separated rationals.
pub fn parse_rows(s: &str) -> Result<Vec<Vec<Q>>> {
    s.split(';')
        .filter(|r| !r.trim().is_empty())
        .map(parse_vector)
        .collect()
}
