use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::Expr;
use crate::scalar::Rational;

/// A syntax error at byte `offset` of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    /// Token classes that would have been accepted here.
    pub expected: Vec<&'static str>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Q,
    X,
    Y,
    LowerD,
    UpperD,
    Partial,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Q => "'q'".into(),
            Tok::X => "'x'".into(),
            Tok::Y => "'y'".into(),
            Tok::LowerD => "'d'".into(),
            Tok::UpperD => "'D'".into(),
            Tok::Partial => "'partial'".into(),
            Tok::End => "end of input".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self,
            Tok::Num(_) | Tok::Q | Tok::X | Tok::Y | Tok::LowerD | Tok::UpperD | Tok::Partial | Tok::LParen
        )
    }
}

const ATOM: &[&str] = &["number", "'q'", "'x'", "'y'", "'d'", "'partial'", "'D'", "'('", "'-'"];

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = input[i..].chars().next().expect("inside the input");
        if ch.is_whitespace() {
            i += ch.len_utf8();
            continue;
        }
        let start = i;
        let tok = match ch {
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(input[start..i].parse().expect("ascii digits"))));
                continue;
            }
            'p' if input[i..].starts_with("partial") => {
                i += "partial".len();
                out.push((start, Tok::Partial));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'q' => Tok::Q,
            'x' => Tok::X,
            'y' => Tok::Y,
            'd' => Tok::LowerD,
            'D' => Tok::UpperD,
            other => {
                return Err(ParseError {
                    offset: start,
                    expected: Vec::new(),
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        i += ch.len_utf8();
        out.push((start, tok));
    }
    out.push((input.len(), Tok::End));
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

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_vec(),
            message: format!("unexpected {}", self.peek().describe()),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.unary()?];
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
            } else if !self.peek().starts_atom() {
                break;
            }
            factors.push(self.unary()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Prod(factors) })
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let Tok::Num(n) = self.peek().clone() else {
            return Err(self.error(&["unsigned integer"]));
        };
        self.bump();
        let e = n.to_u32().ok_or_else(|| ParseError {
            offset: at,
            expected: Vec::new(),
            message: "exponent too large".into(),
        })?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn call_argument(&mut self) -> Result<Box<Expr>, ParseError> {
        self.expect(Tok::LParen, "'('")?;
        let inner = self.expr()?;
        self.expect(Tok::RParen, "')'")?;
        Ok(Box::new(inner))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Rational(Rational::from_integer(n)));
                }
                self.bump();
                let den_at = self.offset();
                let Tok::Num(d) = self.peek().clone() else {
                    return Err(self.error(&["unsigned integer"]));
                };
                self.bump();
                if d.is_zero() {
                    return Err(ParseError {
                        offset: den_at,
                        expected: Vec::new(),
                        message: format!("zero denominator in literal at offset {at}"),
                    });
                }
                Ok(Expr::Rational(Rational::new(n, d)))
            }
            Tok::Q => {
                self.bump();
                Ok(Expr::Q)
            }
            Tok::X => {
                self.bump();
                Ok(Expr::X)
            }
            Tok::Y => {
                self.bump();
                Ok(Expr::Y)
            }
            Tok::LowerD => {
                self.bump();
                Ok(Expr::D(self.call_argument()?))
            }
            Tok::Partial => {
                self.bump();
                Ok(Expr::Partial(self.call_argument()?))
            }
            Tok::UpperD => {
                self.bump();
                let k_at = self.offset();
                let Tok::Num(k) = self.peek().clone() else {
                    return Err(self.error(&["unsigned integer"]));
                };
                self.bump();
                let k = k.to_usize().ok_or_else(|| ParseError {
                    offset: k_at,
                    expected: Vec::new(),
                    message: "operator index too large".into(),
                })?;
                Ok(Expr::Dk(k, self.call_argument()?))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error(ATOM)),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(e)
}
