//! Parser for class expressions such as `x1*x2`, `y1^3*y2 - y1*y2^3` or
//! `2*(a1 + x1)*a2`, evaluated in a presentation.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | NAME | '(' expr ')'
//! ```

use crate::algebra::{Element, SpacePresentation};
use crate::error::{Error, Result};
use crate::f3::F3;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(u64),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut value: u64 = 0;
            while let Some(&(_, d)) = chars.peek() {
                let Some(digit) = d.to_digit(10) else { break };
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(digit as u64))
                    .ok_or_else(|| parse_error(offset, "integer literal too large"))?;
                chars.next();
            }
            tokens.push((offset, Token::Int(value)));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                name.push(d);
                chars.next();
            }
            tokens.push((offset, Token::Name(name)));
            continue;
        }
        let token = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => {
                return Err(parse_error(
                    offset,
                    &format!("unexpected character {other:?}"),
                ))
            }
        };
        chars.next();
        tokens.push((offset, token));
    }
    Ok(tokens)
}

fn parse_error(offset: usize, message: &str) -> Error {
    Error::Parse {
        offset,
        message: message.to_string(),
    }
}

struct Parser<'a> {
    space: &'a SpacePresentation,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc += &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.bump();
            let rhs = self.unary()?;
            acc = self.space.mul(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Element> {
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Element> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            let offset = self.offset();
            let Some(Token::Int(exponent)) = self.bump() else {
                return Err(parse_error(
                    offset,
                    "expected an integer exponent after '^'",
                ));
            };
            let mut acc = Element::one();
            for _ in 0..exponent {
                acc = self.space.mul(&acc, &base)?;
                if acc.is_zero() {
                    break;
                }
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Element> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Int(v)) => Ok(Element::one().scale(F3::new((v % 3) as i64))),
            Some(Token::Name(name)) => {
                let id = self
                    .space
                    .generator_by_name(&name)
                    .ok_or_else(|| parse_error(offset, &format!("unknown generator {name:?}")))?;
                self.space.generator_element(id)
            }
            Some(Token::Open) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(parse_error(close, "expected ')'")),
                }
            }
            Some(t) => Err(parse_error(offset, &format!("unexpected {t:?}"))),
            None => Err(parse_error(offset, "unexpected end of expression")),
        }
    }
}

/// Parses `input` into an element of `space`.
pub fn parse_element(space: &SpacePresentation, input: &str) -> Result<Element> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(parse_error(0, "empty expression"));
    }
    let mut parser = Parser {
        space,
        tokens,
        pos: 0,
        end: input.len(),
    };
    let value = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(parse_error(parser.offset(), "trailing input"));
    }
    Ok(value)
}
