//! Small exact expression language for printed values.
//!
//! Supports integer and decimal literals, `+ - * / ^`, parentheses,
//! `sqrt(...)` and named variables bound to other expressions. Everything
//! evaluates to a [`RadicalSum`], so `sqrt` of a rational is exact and `/` is
//! only allowed by a rational divisor.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, One, ToPrimitive};
use thiserror::Error;

use crate::exact::{self, ArithError, IndexValue, RadicalSum};

const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character {0:?} at offset {1}")]
    BadChar(char, usize),
    #[error("unexpected {found} at offset {at}, expected {expected}")]
    Unexpected {
        found: String,
        at: usize,
        expected: &'static str,
    },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("unknown function {0:?}")]
    UnknownFunction(String),
    #[error("square root of an irrational value")]
    NestedRadical,
    #[error("exponent must be a non-negative integer up to {MAX_EXPONENT}")]
    BadExponent,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigRational),
    Ident(String),
    Op(char),
    End,
}

fn describe(t: &Token) -> String {
    match t {
        Token::Num(n) => format!("number {n}"),
        Token::Ident(s) => format!("name {s:?}"),
        Token::Op(c) => format!("{c:?}"),
        Token::End => "end of input".to_string(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((Token::Num(parse_decimal(&text, start)?), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Token::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Token::Op(c), i));
            i += 1;
        } else {
            return Err(ExprError::BadChar(c, i));
        }
    }
    out.push((Token::End, chars.len()));
    Ok(out)
}

fn parse_decimal(text: &str, at: usize) -> Result<BigRational, ExprError> {
    let bad = || ExprError::Unexpected {
        found: format!("literal {text:?}"),
        at,
        expected: "a number",
    };
    let (whole, frac) = match text.split_once('.') {
        Some((w, f)) if !f.is_empty() && !f.contains('.') => (w, f),
        Some(_) => return Err(bad()),
        None => (text, ""),
    };
    let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    Ok(BigRational::new(digits, pow(BigInt::from(10), frac.len())))
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    vars: &'a HashMap<String, RadicalSum>,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, expected: &'static str) -> ExprError {
        let (t, at) = &self.tokens[self.pos];
        ExprError::Unexpected {
            found: describe(t),
            at: *at,
            expected,
        }
    }

    fn expect(&mut self, op: char, expected: &'static str) -> Result<(), ExprError> {
        if *self.peek() == Token::Op(op) {
            self.next();
            Ok(())
        } else {
            Err(self.fail(expected))
        }
    }

    fn expr(&mut self) -> Result<RadicalSum, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Op('+') => {
                    self.next();
                    acc += &self.term()?;
                }
                Token::Op('-') => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RadicalSum, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Token::Op('*') => {
                    self.next();
                    acc = acc.mul(&self.unary()?)?;
                }
                Token::Op('/') => {
                    self.next();
                    acc = acc.div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RadicalSum, ExprError> {
        if *self.peek() == Token::Op('-') {
            self.next();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RadicalSum, ExprError> {
        let base = self.primary()?;
        if *self.peek() != Token::Op('^') {
            return Ok(base);
        }
        self.next();
        let exponent = self.unary()?;
        let e = exponent
            .as_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| q.to_integer().to_usize())
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(ExprError::BadExponent)?;
        let mut out = RadicalSum::from_integer(BigInt::one());
        for _ in 0..e {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    fn primary(&mut self) -> Result<RadicalSum, ExprError> {
        if matches!(self.peek(), Token::End | Token::Op(_)) && *self.peek() != Token::Op('(') {
            return Err(self.fail("a number, name or '('"));
        }
        match self.next() {
            Token::Num(q) => Ok(RadicalSum::from_rational(q)),
            Token::Op('(') => {
                let inner = self.expr()?;
                self.expect(')', "')'")?;
                Ok(inner)
            }
            Token::Ident(name) => {
                if *self.peek() == Token::Op('(') {
                    self.next();
                    let arg = self.expr()?;
                    self.expect(')', "')'")?;
                    return match name.as_str() {
                        "sqrt" => {
                            let q = arg.as_rational().ok_or(ExprError::NestedRadical)?;
                            Ok(exact::sqrt(&q)?)
                        }
                        _ => Err(ExprError::UnknownFunction(name)),
                    };
                }
                self.vars
                    .get(&name)
                    .cloned()
                    .ok_or(ExprError::UnknownVariable(name))
            }
            _ => unreachable!("operators other than '(' rejected above"),
        }
    }
}

fn eval_with(src: &str, vars: &HashMap<String, RadicalSum>) -> Result<RadicalSum, ExprError> {
    let mut p = Parser {
        tokens: tokenize(src)?,
        pos: 0,
        vars,
    };
    let value = p.expr()?;
    if *p.peek() != Token::End {
        return Err(p.fail("an operator or end of input"));
    }
    Ok(value)
}

/// Evaluates `src`, where each binding may refer to the ones before it.
pub fn evaluate(src: &str, bindings: &[(String, String)]) -> Result<IndexValue, ExprError> {
    let mut vars = HashMap::new();
    for (name, expr) in bindings {
        let v = eval_with(expr, &vars)?;
        vars.insert(name.clone(), v);
    }
    let value = eval_with(src, &vars)?;
    Ok(IndexValue::from_radical(value))
}

/// Shorthand for expressions without variables.
pub fn evaluate_plain(src: &str) -> Result<IndexValue, ExprError> {
    evaluate(src, &[])
}
