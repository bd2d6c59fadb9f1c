//! A small expression language for inputs too large to type: decimal
//! literals, `fact(n)`, `pow(a, b)` and products with `*`.
//!
//! ```
//! use powg::expr::Expr;
//! let e: Expr = "pow(2, 8) * 9".parse().unwrap();
//! assert_eq!(e.eval(64).unwrap(), powg::Natural::from(2304u32));
//! ```

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::certify::Exponent;
use crate::numtheory::{factorial, pow, Natural};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Natural),
    Fact(Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Mul(Vec<Expr>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
    #[error("value would exceed {0} bits")]
    TooLarge(u64),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(n) => write!(f, "{n}"),
            Expr::Fact(a) => write!(f, "fact({a})"),
            Expr::Pow(a, b) => write!(f, "pow({a},{b})"),
            Expr::Mul(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    at: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            at: self.at,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.at).is_some_and(u8::is_ascii_whitespace) {
            self.at += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.at) == Some(&c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut factors = vec![self.atom()?];
        while self.eat(b'*') {
            factors.push(self.atom()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Mul(factors)
        })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        let start = self.at;
        if self.src.get(self.at).is_some_and(u8::is_ascii_digit) {
            while self.src.get(self.at).is_some_and(u8::is_ascii_digit) {
                self.at += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.at]).expect("ascii");
            return Ok(Expr::Lit(digits.parse().expect("digits")));
        }
        while self.src.get(self.at).is_some_and(u8::is_ascii_alphabetic) {
            self.at += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.at]).expect("ascii");
        match name {
            "fact" => {
                self.expect(b'(')?;
                let a = self.product()?;
                self.expect(b')')?;
                Ok(Expr::Fact(Box::new(a)))
            }
            "pow" => {
                self.expect(b'(')?;
                let a = self.product()?;
                self.expect(b',')?;
                let b = self.product()?;
                self.expect(b')')?;
                Ok(Expr::Pow(Box::new(a), Box::new(b)))
            }
            "" if self.eat(b'(') => {
                let a = self.product()?;
                self.expect(b')')?;
                Ok(a)
            }
            "" => self.err("expected a number, fact(..) or pow(..)"),
            other => {
                self.at = start;
                self.err(format!("unknown function '{other}'"))
            }
        }
    }
}

impl FromStr for Expr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            at: 0,
        };
        let e = p.product()?;
        p.skip_ws();
        if p.at != s.len() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

impl Expr {
    /// Upper bound on the bit length of the value, saturating.
    pub fn bits_upper(&self) -> u64 {
        match self {
            Expr::Lit(n) => n.bits(),
            Expr::Fact(a) => match a.small_value() {
                // m! <= m^m
                Some(m) if m < 1 << 32 => (m * (64 - m.leading_zeros() as u64)).max(1),
                _ => u64::MAX,
            },
            Expr::Pow(a, b) => match b.small_value() {
                Some(e) => a.bits_upper().saturating_mul(e).max(1),
                None => u64::MAX,
            },
            Expr::Mul(xs) => xs.iter().fold(0u64, |acc, x| acc.saturating_add(x.bits_upper())),
        }
    }

    /// The value when it certainly fits in a `u64`.
    fn small_value(&self) -> Option<u64> {
        if self.bits_upper() > 64 {
            return None;
        }
        self.eval_unchecked().to_u64()
    }

    /// The value, refusing anything that might exceed `max_bits` bits.
    pub fn eval(&self, max_bits: u64) -> Result<Natural, ExprError> {
        if self.bits_upper() > max_bits {
            return Err(ExprError::TooLarge(max_bits));
        }
        Ok(self.eval_unchecked())
    }

    fn eval_unchecked(&self) -> Natural {
        match self {
            Expr::Lit(n) => n.clone(),
            Expr::Fact(a) => factorial(a.eval_unchecked().to_u64().expect("checked size")),
            Expr::Pow(a, b) => pow(
                &a.eval_unchecked(),
                b.eval_unchecked().to_u64().expect("checked size"),
            ),
            Expr::Mul(xs) => xs.iter().map(Expr::eval_unchecked).product(),
        }
    }

    /// An exponent, keeping `fact(m)` symbolic so it is never expanded.
    pub fn to_exponent(&self, max_bits: u64) -> Result<Exponent, ExprError> {
        if let Expr::Fact(a) = self {
            let m = a.eval(64)?;
            return Ok(Exponent::Factorial(m.to_u64().ok_or(ExprError::TooLarge(64))?));
        }
        self.eval(max_bits).map(Exponent::Value)
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(s: &str, max_bits: u64) -> Result<Natural, ExprError> {
    s.parse::<Expr>()?.eval(max_bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        assert_eq!(eval_str("17", 64).unwrap(), Natural::from(17u32));
        assert_eq!(eval_str(" fact(5) * 2 ", 64).unwrap(), Natural::from(240u32));
        assert_eq!(eval_str("pow(6, fact(3))", 64).unwrap(), Natural::from(46656u32));
        assert_eq!(eval_str("(3*3)*pow(2,8)", 64).unwrap(), Natural::from(2304u32));
    }

    #[test]
    fn keeps_factorials_symbolic() {
        let e: Expr = "fact(65536)".parse().unwrap();
        assert_eq!(e.to_exponent(1 << 10).unwrap(), Exponent::Factorial(65536));
        assert!(e.eval(1 << 10).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!("fact(3".parse::<Expr>().is_err());
        assert!("exp(3)".parse::<Expr>().is_err());
        assert!("3 4".parse::<Expr>().is_err());
        assert!("".parse::<Expr>().is_err());
        assert!(eval_str("pow(3, pow(10, 30))", 1 << 20).is_err());
    }

    #[test]
    fn display_round_trips() {
        let e: Expr = "pow(2,8)*fact(4)*3".parse().unwrap();
        assert_eq!(e.to_string().parse::<Expr>().unwrap(), e);
    }
}
