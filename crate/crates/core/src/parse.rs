//! Recursive-descent parser for the polynomial expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'i' | ident | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                out.push((Tok::Int(text[start..pos].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                    pos += 1;
                }
                out.push((Tok::Ident(text[start..pos].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::Syntax { offset: start, message: format!("unexpected character '{ch}'") });
            }
        };
        out.push((tok, start));
        pos += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    vars: Vec<String>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let at = self.offset();
            let rhs = self.unary()?;
            let deg = acc.total_degree().unwrap_or(0) + rhs.total_degree().unwrap_or(0);
            if deg > u32::MAX as u64 {
                return Err(Error::ExponentOverflow { offset: at });
            }
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let Tok::Int(e) = self.bump() else {
            return Err(Error::Syntax { offset: at, message: "exponent must be a nonnegative integer".into() });
        };
        let e = match e.to_u32() {
            Some(e) if e <= i32::MAX as u32 => e,
            _ => return Err(Error::ExponentOverflow { offset: at }),
        };
        let deg = base.total_degree().unwrap_or(0);
        if deg * e as u64 > u32::MAX as u64 {
            return Err(Error::ExponentOverflow { offset: at });
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => {
                let mut value = Rational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let at_den = self.offset();
                    let Tok::Int(d) = self.bump() else {
                        return Err(Error::Syntax { offset: at_den, message: "expected denominator".into() });
                    };
                    if d.is_zero() {
                        return Err(Error::Syntax { offset: at_den, message: "zero denominator".into() });
                    }
                    value /= Rational::from_integer(d);
                }
                Ok(Poly::constant(&self.vars, Scalar::from_rational(value)))
            }
            Tok::Ident(name) if name == "i" => Ok(Poly::constant(&self.vars, Scalar::i())),
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(idx) => Ok(Poly::var(&self.vars, idx)),
                None => Err(Error::Syntax { offset: at, message: format!("undeclared variable '{name}'") }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax { offset: at, message: "unexpected end of input".into() }),
            t => Err(Error::Syntax { offset: at, message: format!("unexpected token {t:?}") }),
        }
    }
}

/// Parse `text` into canonical expanded form. With `variables` given, the
/// variable list is exactly that (in that order) and any other identifier is
/// an error; otherwise variables are ordered by first occurrence.
pub fn parse_poly(text: &str, variables: Option<&[String]>) -> Result<Poly> {
    let toks = lex(text)?;
    let vars = match variables {
        Some(v) => {
            if let Some(bad) = v.iter().find(|n| !valid_identifier(n)) {
                return Err(Error::VariableMismatch(format!("invalid variable name '{bad}'")));
            }
            v.to_vec()
        }
        None => {
            let mut seen: Vec<String> = Vec::new();
            for (t, _) in &toks {
                if let Tok::Ident(n) = t {
                    if n != "i" && !seen.contains(n) {
                        seen.push(n.clone());
                    }
                }
            }
            seen
        }
    };
    let mut p = Parser { toks: &toks, pos: 0, vars };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

/// Identifiers of the grammar, excluding the reserved imaginary unit.
pub fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "i"
}

/// Parse a rational literal `p`, `-p` or `p/q`.
pub fn parse_rational_literal(text: &str) -> Result<Rational> {
    let s: Scalar = text.parse()?;
    match s.as_rational() {
        Some(r) => Ok(r.clone()),
        None => Err(Error::Syntax { offset: 0, message: format!("'{text}' is not rational") }),
    }
}
