//! Parser for the canonical scalar text form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := power (('*'|'/') power | power)*      juxtaposition multiplies
//! power := atom ['^' uint]
//! atom  := uint | ident | '√' uint | 'sqrt(' uint ')' | '(' expr ')'
//! ```
//!
//! Juxtaposition is only accepted before `√`, `sqrt`, identifiers and
//! parentheses, so `1/2√2` reads as `(1/2)·√2`.

use num_bigint::BigInt;

use super::quad::square_free_split;
use super::{ExactError, QuadElement, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Surd,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ExactError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Token::Int(text.parse().expect("digits")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            '√' => {
                out.push(Token::Surd);
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            other => return Err(ExactError::Parse(format!("unexpected character {other:?}"))),
        }
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

    fn expect(&mut self, t: Token) -> Result<(), ExactError> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(ExactError::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Scalar, ExactError> {
        let negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg_ref();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ExactError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.power()?)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    acc = acc.try_div(&self.power()?)?;
                }
                Some(Token::Surd) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = acc.try_mul(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Scalar, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ExactError::Parse("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<u64, ExactError> {
        match self.next() {
            Some(Token::Int(n)) => {
                u64::try_from(n).map_err(|_| ExactError::Parse("integer out of range".into()))
            }
            got => Err(ExactError::Parse(format!(
                "expected integer, found {got:?}"
            ))),
        }
    }

    fn atom(&mut self) -> Result<Scalar, ExactError> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Scalar::Rat(Rational::from_integer(n))),
            Some(Token::Surd) => surd(self.uint()?),
            Some(Token::Ident(name)) if name == "sqrt" => {
                self.expect(Token::LParen)?;
                let m = self.uint()?;
                self.expect(Token::RParen)?;
                surd(m)
            }
            Some(Token::Ident(name)) => Ok(Scalar::var(&name)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            got => Err(ExactError::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

/// `√m` with square factors pulled out.
fn surd(m: u64) -> Result<Scalar, ExactError> {
    if m == 0 {
        return Ok(Scalar::zero());
    }
    let (s, r) = square_free_split(m);
    let outside = Rational::from(s as i64);
    if r == 1 {
        return Ok(Scalar::Rat(outside));
    }
    Ok(Scalar::from(QuadElement::new(
        Rational::zero(),
        outside,
        r,
    )?))
}

pub fn parse_scalar(input: &str) -> Result<Scalar, ExactError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(ExactError::Parse("empty input".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(ExactError::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_forms() {
        assert_eq!(
            parse_scalar("sqrt(8)").unwrap(),
            parse_scalar("2√2").unwrap()
        );
        assert_eq!(parse_scalar("√9").unwrap(), Scalar::int(3));
        assert_eq!(parse_scalar("1/2√2").unwrap().to_string(), "1/2√2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1 +").is_err());
        assert!(parse_scalar("(h").is_err());
        assert!(parse_scalar("2 3").is_err());
        assert!(parse_scalar("h$").is_err());
        assert!(parse_scalar("1/0").is_err());
    }

    #[test]
    fn polynomial_text() {
        let p = parse_scalar("(1+√2)*h - 3/2*c^2 + hI").unwrap();
        assert_eq!(p.to_string(), "-3/2*c^2 + (1+√2)*h + hI");
    }
}
