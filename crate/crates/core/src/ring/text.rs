//! Text and JSON forms of polynomials in `p` and `q`.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := integer | 'i' | ('p'|'q') ['^' signed] | '(' expr ')' ['^' unsigned]
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use super::gaussian::GaussianInt;
use super::poly::{BiLaurent, UniLaurent};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.digits()?.to_i32().ok_or_else(|| self.err("exponent out of range"))?;
        if paren && !self.eat(')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<BiLaurent> {
        let mut acc = BiLaurent::zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') {
                false
            } else if first {
                false
            } else {
                break;
            };
            let t = self.term()?;
            if neg {
                acc -= &t;
            } else {
                acc += &t;
            }
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiLaurent> {
        let mut acc = self.factor()?;
        loop {
            let star = self.eat('*');
            match self.peek() {
                Some(c) if c.is_ascii_digit() || matches!(c, 'i' | 'p' | 'q' | '(') => {
                    acc = &acc * &self.factor()?;
                }
                _ if star => return Err(self.err("expected factor after '*'")),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<BiLaurent> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(BiLaurent::constant(GaussianInt::from(self.digits()?))),
            Some('i') => {
                self.pos += 1;
                Ok(BiLaurent::constant(GaussianInt::i()))
            }
            Some(v @ ('p' | 'q')) => {
                self.pos += 1;
                let e = if self.eat('^') { self.exponent()? } else { 1 };
                let key = if v == 'p' { (e, 0) } else { (0, e) };
                Ok(BiLaurent::monomial(key, GaussianInt::from(1)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                if self.eat('^') {
                    let e = self.digits()?.to_u32().ok_or_else(|| self.err("power out of range"))?;
                    return Ok(inner.pow(e));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected term")),
        }
    }
}

/// Parse a polynomial in `p` and `q`.
pub fn parse_bilaurent(src: &str) -> Result<BiLaurent> {
    let mut p = Parser::new(src);
    if p.chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let f = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

/// Parse a polynomial in `q` alone.
pub fn parse_unilaurent(src: &str) -> Result<UniLaurent> {
    let f = parse_bilaurent(src)?;
    if f.terms().keys().any(|(a, _)| *a != 0) {
        return Err(Error::Parse(format!("unexpected variable p in {src:?}")));
    }
    Ok(super::poly::p_coefficient(&f, 0))
}

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn value_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s}"))),
        _ => Err(Error::Parse(format!("not an integer: {v}"))),
    }
}

fn value_exp(v: &Value) -> Result<i32> {
    value_int(v)?.to_i32().ok_or_else(|| Error::Parse("exponent out of range".into()))
}

/// `[[p_exp, q_exp, re, im], ...]` sorted by `(p_exp, q_exp)`.
pub fn bilaurent_to_json(f: &BiLaurent) -> Value {
    Value::Array(
        f.terms()
            .iter()
            .map(|((a, b), c)| json!([a, b, int_value(&c.re), int_value(&c.im)]))
            .collect(),
    )
}

pub fn bilaurent_from_json(v: &Value) -> Result<BiLaurent> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
    let mut out = BiLaurent::zero();
    for row in rows {
        match row.as_array().map(Vec::as_slice) {
            Some([a, b, re, im]) => {
                let c = GaussianInt { re: value_int(re)?, im: value_int(im)? };
                out.add_term((value_exp(a)?, value_exp(b)?), &c);
            }
            _ => return Err(Error::Parse(format!("expected [p_exp, q_exp, re, im], got {row}"))),
        }
    }
    Ok(out)
}

/// `[[q_exp, re, im], ...]` sorted by exponent.
pub fn unilaurent_to_json(f: &UniLaurent) -> Value {
    Value::Array(f.terms().iter().map(|(e, c)| json!([e, int_value(&c.re), int_value(&c.im)])).collect())
}

pub fn unilaurent_from_json(v: &Value) -> Result<UniLaurent> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
    let mut out = UniLaurent::zero();
    for row in rows {
        match row.as_array().map(Vec::as_slice) {
            Some([e, re, im]) => {
                let c = GaussianInt { re: value_int(re)?, im: value_int(im)? };
                if !c.is_zero() {
                    out.add_term(value_exp(e)?, &c);
                }
            }
            _ => return Err(Error::Parse(format!("expected [q_exp, re, im], got {row}"))),
        }
    }
    Ok(out)
}
