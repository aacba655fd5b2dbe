//! Text literals for ℚ(q) elements, e.g. `q^3`, `1/q`, `(q^2+1)/(2*q)`.
//!
//! Grammar: integers, the indeterminate `q`, binary `+ - * /`, unary minus,
//! `^` with an integer exponent, and parentheses. Juxtaposition such as
//! `2q` multiplies.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{FieldError, RatFunc, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Int(digits.parse().map_err(|e| format!("{e}"))?));
            }
            'q' => out.push(Token::Q),
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            other => return Err(format!("unexpected character {other:?}")),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<(), String> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            Some(got) => Err(format!("expected {t:?}, found {got:?}")),
            None => Err(format!("expected {t:?}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs).map_err(|e| e.to_string())?;
                }
                Some(Token::Int(_)) | Some(Token::Q) | Some(Token::LParen) => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, String> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, String> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let e = self.exponent()?;
            return base.pow(e).map_err(|e| e.to_string());
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, String> {
        let value = match self.peek() {
            Some(Token::Minus) | Some(Token::Plus) => self.unary()?,
            _ => self.atom()?,
        };
        let r = value
            .as_rational()
            .filter(Rational::is_integer)
            .ok_or_else(|| format!("exponent {value} is not an integer"))?;
        r.to_integer()
            .to_i64()
            .filter(|e| e.unsigned_abs() <= 10_000)
            .ok_or_else(|| "exponent out of range".to_string())
    }

    fn atom(&mut self) -> Result<RatFunc, String> {
        match self.next() {
            Some(Token::Int(n)) => Ok(RatFunc::from_rational(Rational::from_integer(n))),
            Some(Token::Q) => Ok(RatFunc::q()),
            Some(Token::LParen) => {
                let v = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(v)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".to_string()),
        }
    }
}

/// Parses a literal into canonical form.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc, FieldError> {
    let err = |reason: String| FieldError::Parse {
        input: input.to_string(),
        reason,
    };
    let tokens = tokenize(input).map_err(err)?;
    if tokens.is_empty() {
        return Err(err("empty expression".to_string()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let v = p.expr().map_err(err)?;
    if p.pos != p.tokens.len() {
        return Err(err(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q_int;

    #[test]
    fn simple_literals() {
        assert_eq!(parse_ratfunc("q^3").unwrap(), RatFunc::q_pow(3));
        assert_eq!(parse_ratfunc("1/q").unwrap(), RatFunc::q_pow(-1));
        assert_eq!(parse_ratfunc("q^-2").unwrap(), RatFunc::q_pow(-2));
        assert_eq!(parse_ratfunc("q^(-2)").unwrap(), RatFunc::q_pow(-2));
        assert_eq!(
            parse_ratfunc("1/2").unwrap(),
            RatFunc::from_rational(Rational::new(1.into(), 2.into()))
        );
        assert_eq!(parse_ratfunc(" 0 ").unwrap(), RatFunc::from_int(0));
    }

    #[test]
    fn precedence_and_juxtaposition() {
        assert_eq!(parse_ratfunc("-q^2").unwrap(), -RatFunc::q_pow(2));
        assert_eq!(parse_ratfunc("2q").unwrap(), RatFunc::from_int(2) * RatFunc::q());
        assert_eq!(parse_ratfunc("(q^3 - q^-3)/(q - 1/q)").unwrap(), q_int(3));
        assert_eq!(parse_ratfunc("1 + 2*3").unwrap(), RatFunc::from_int(7));
        assert_eq!(parse_ratfunc("2^-1").unwrap(), parse_ratfunc("1/2").unwrap());
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        for s in ["(q^4 + q^2 + 1)/q^2", "(1/2)*q + 1/2", "-3/7", "q/(q^2 - 2)"] {
            let v = parse_ratfunc(s).unwrap();
            assert_eq!(parse_ratfunc(&v.to_string()).unwrap(), v, "{s}");
        }
    }

    #[test]
    fn errors() {
        assert!(parse_ratfunc("").is_err());
        assert!(parse_ratfunc("q^q").is_err());
        assert!(parse_ratfunc("1/0").is_err());
        assert!(parse_ratfunc("(q").is_err());
        assert!(parse_ratfunc("x").is_err());
        assert!(parse_ratfunc("q)").is_err());
    }
}
