//! Literal syntax for exact reals.
//!
//! ```text
//! rational := int | int "/" posint
//! real     := rational
//!           | rational ("+" | "-") rational "*sqrt(" posint ")"
//!           | rational "*sqrt(" posint ")"
//! ```
//!
//! Whitespace is ignored everywhere. Decimal literals are rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::real::is_squarefree;
use super::{ExactReal, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    DecimalLiteral,
    TrailingInput,
    ZeroDenominator,
    RadicandNotSquarefree(String),
}

/// A literal that failed to parse; `position` is a char offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Expected(what) => {
                write!(f, "expected {what} at position {}", self.position)
            }
            ParseErrorKind::DecimalLiteral => write!(
                f,
                "decimal literal at position {}; write fractions as p/q",
                self.position
            ),
            ParseErrorKind::TrailingInput => {
                write!(f, "unexpected input at position {}", self.position)
            }
            ParseErrorKind::ZeroDenominator => {
                write!(f, "zero denominator at position {}", self.position)
            }
            ParseErrorKind::RadicandNotSquarefree(d) => write!(
                f,
                "radicand {d} at position {} must be a squarefree integer >= 2",
                self.position
            ),
        }
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor { chars, idx: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.idx)
            .map(|(p, _)| *p)
            .unwrap_or_else(|| self.src.chars().count())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|(_, c)| *c)
    }

    fn bump(&mut self) {
        self.idx += 1;
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos(), kind }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if self.peek() == Some('.') {
            return Err(self.err(ParseErrorKind::DecimalLiteral));
        }
        if s.is_empty() {
            return Err(self.err(ParseErrorKind::Expected("digits")));
        }
        Ok(s.parse().expect("ascii digits"))
    }

    fn rational(&mut self, allow_sign: bool) -> Result<Rational, ParseError> {
        let negative = allow_sign && self.eat('-');
        let mut num = self.digits()?;
        if negative {
            num = -num;
        }
        if self.eat('/') {
            let at = self.pos();
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::ZeroDenominator,
                });
            }
            Ok(Rational::from_bigints(num, den))
        } else {
            Ok(Rational::from_bigint(num))
        }
    }

    fn keyword(&mut self, word: &'static str) -> Result<(), ParseError> {
        let start = self.idx;
        for expected in word.chars() {
            if !self.eat(expected) {
                self.idx = start;
                return Err(self.err(ParseErrorKind::Expected(word)));
            }
        }
        Ok(())
    }

    fn sqrt_suffix(&mut self) -> Result<u64, ParseError> {
        self.keyword("*sqrt(")?;
        let at = self.pos();
        let d = self.digits()?;
        self.keyword(")")?;
        match d.to_u64() {
            Some(v) if v >= 2 && is_squarefree(v) => Ok(v),
            _ => Err(ParseError {
                position: at,
                kind: ParseErrorKind::RadicandNotSquarefree(d.to_string()),
            }),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err(ParseErrorKind::TrailingInput)),
        }
    }
}

/// Parses an exact-real literal such as `5/2`, `1/2+1/2*sqrt(5)` or `-1*sqrt(2)`.
pub fn parse_real(text: &str) -> Result<ExactReal, ParseError> {
    let mut cur = Cursor::new(text);
    let first = cur.rational(true)?;
    let (a, b, d) = match cur.peek() {
        None => return Ok(ExactReal::Rational(first)),
        Some('*') => {
            let d = cur.sqrt_suffix()?;
            (Rational::zero(), first, d)
        }
        Some(sign @ ('+' | '-')) => {
            cur.bump();
            let coeff = cur.rational(false)?;
            let d = cur.sqrt_suffix()?;
            let coeff = if sign == '-' { -coeff } else { coeff };
            (first, coeff, d)
        }
        Some('.') => return Err(cur.err(ParseErrorKind::DecimalLiteral)),
        Some(_) => return Err(cur.err(ParseErrorKind::TrailingInput)),
    };
    cur.finish()?;
    Ok(ExactReal::quadratic(a, b, d).expect("radicand validated by the parser"))
}

impl std::str::FromStr for ExactReal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_real(s)
    }
}
