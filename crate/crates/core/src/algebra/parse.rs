//! Text grammar for polynomials: integer/rational coefficients, variables
//! `x`, `y`, `z`, `w`, operators `+ - * ^`, parentheses, and implicit
//! multiplication by juxtaposition, e.g. `(x+2y)^2` or `3/2xy^2`.

use num_bigint::BigInt;

use crate::error::AlgebraError;

use super::poly::{Poly, VAR_NAMES};
use super::rat::Rat;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rat),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Token>, AlgebraError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                tokens.push(Token::Plus);
                chars.next();
            }
            // ASCII hyphen or the typographic minus sign.
            '-' | '\u{2212}' => {
                tokens.push(Token::Minus);
                chars.next();
            }
            '*' => {
                tokens.push(Token::Star);
                chars.next();
            }
            '^' => {
                tokens.push(Token::Caret);
                chars.next();
            }
            '(' => {
                tokens.push(Token::LParen);
                chars.next();
            }
            ')' => {
                tokens.push(Token::RParen);
                chars.next();
            }
            '0'..='9' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        end = j + 1;
                        chars.next();
                    } else {
                        break;
                    }
                }
                let numer: BigInt = input[i..end].parse().expect("digits");
                // A '/' directly after an integer starts a rational literal.
                if chars.peek().map(|&(_, d)| d) == Some('/') {
                    chars.next();
                    let dstart = match chars.peek() {
                        Some(&(j, d)) if d.is_ascii_digit() => j,
                        _ => {
                            return Err(AlgebraError::Parse(
                                "expected digits after `/` in rational literal".into(),
                            ))
                        }
                    };
                    let mut dend = dstart;
                    while let Some(&(j, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            dend = j + 1;
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let denom: BigInt = input[dstart..dend].parse().expect("digits");
                    if denom == BigInt::from(0) {
                        return Err(AlgebraError::Parse("zero denominator".into()));
                    }
                    tokens.push(Token::Number(Rat::new(numer, denom)));
                } else {
                    tokens.push(Token::Number(Rat::from(numer)));
                }
            }
            _ => {
                if let Some(v) = VAR_NAMES.iter().position(|&n| n == c) {
                    tokens.push(Token::Var(v));
                    chars.next();
                } else {
                    return Err(AlgebraError::Parse(format!("unexpected character `{c}`")));
                }
            }
        }
    }
    Ok(tokens)
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
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = add_padded(&acc, &t);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = add_padded(&acc, &t.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (('*' factor) | factor)*
    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = mul_padded(&acc, &f);
                }
                Some(Token::Number(_)) | Some(Token::Var(_)) | Some(Token::LParen) => {
                    let f = self.factor()?;
                    acc = mul_padded(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := primary ['^' uint]
    fn factor(&mut self) -> Result<Poly, AlgebraError> {
        let base = self.primary()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Number(r)) if r.is_integer() && !r.is_negative() => {
                    let e: u32 = r
                        .numer()
                        .try_into()
                        .map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(AlgebraError::Parse(
                    "expected a nonnegative integer exponent after `^`".into(),
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Poly, AlgebraError> {
        match self.next() {
            Some(Token::Number(r)) => Ok(Poly::constant(r, 0)),
            Some(Token::Var(v)) => Ok(Poly::var(v, v + 1)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(AlgebraError::Parse("expected `)`".into())),
                }
            }
            t => Err(AlgebraError::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

fn add_padded(a: &Poly, b: &Poly) -> Poly {
    let n = a.nvars().max(b.nvars());
    a.with_nvars(n)
        .checked_add(&b.with_nvars(n))
        .expect("padded")
}

fn mul_padded(a: &Poly, b: &Poly) -> Poly {
    let n = a.nvars().max(b.nvars());
    a.with_nvars(n)
        .checked_mul(&b.with_nvars(n))
        .expect("padded")
}

/// Parse a polynomial. The variable count of the result is the smallest that
/// covers every variable mentioned (a plain constant has none); callers embed
/// into a larger ambient ring with [`Poly::with_nvars`] as needed.
pub fn parse_poly(input: &str) -> Result<Poly, AlgebraError> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Parse("empty input".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(AlgebraError::Parse(format!(
            "trailing input at token {}",
            parser.pos
        )));
    }
    Ok(poly)
}
