//! Recursive-descent parser for univariate integer polynomials in `x`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*')? unary)*      implicit product only before 'x' or '('
//! unary   := ('+' | '-') unary | power
//! power   := atom ('^' integer)?
//! atom    := integer | 'x' | '(' expr ')'
//! ```
//!
//! `^` binds tighter than multiplication, which binds tighter than `+`/`-`.
//! Everything is expanded into coefficients while parsing.

use padic_dyn::poly::IntPoly;
use padic_dyn::BigInt;
use thiserror::Error;

pub const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected {found} at position {position}")]
    Unexpected { position: usize, found: String },
    #[error("exponent at position {position} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match *self {
            ParseError::Unexpected { position, .. } | ParseError::ExponentTooLarge { position } => position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn describe(tok: Option<&Token>) -> String {
    match tok {
        None => "end of input".into(),
        Some(Token::Int(n)) => format!("number {n}"),
        Some(Token::X) => "'x'".into(),
        Some(Token::Plus) => "'+'".into(),
        Some(Token::Minus) => "'-'".into(),
        Some(Token::Star) => "'*'".into(),
        Some(Token::Caret) => "'^'".into(),
        Some(Token::Open) => "'('".into(),
        Some(Token::Close) => "')'".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Token::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            'x' => Token::X,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => {
                return Err(ParseError::Unexpected {
                    position: i,
                    found: format!("'{other}'"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn unexpected(&self) -> ParseError {
        ParseError::Unexpected {
            position: self.position(),
            found: describe(self.peek()),
        }
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            // implicit multiplication only before `x` or `(`
            if self.eat(&Token::Star) || matches!(self.peek(), Some(Token::X | Token::Open)) {
                acc = &acc * &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<IntPoly, ParseError> {
        if self.eat(&Token::Minus) {
            Ok(-self.unary()?)
        } else if self.eat(&Token::Plus) {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Token::Caret) {
            return Ok(base);
        }
        let position = self.position();
        match self.peek() {
            Some(Token::Int(n)) => {
                let exp = u32::try_from(n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or(ParseError::ExponentTooLarge { position })?;
                self.pos += 1;
                if self.peek() == Some(&Token::Caret) {
                    return Err(self.unexpected());
                }
                Ok(base.pow(exp))
            }
            _ => Err(self.unexpected()),
        }
    }

    fn atom(&mut self) -> Result<IntPoly, ParseError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(IntPoly::constant(n))
            }
            Some(Token::X) => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Token::Close) {
                    return Err(self.unexpected());
                }
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses and expands a polynomial such as `x^2 - 7x + 2` or `(x+1)^2`.
pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected());
    }
    Ok(poly)
}

/// Parses a decimal integer with optional sign, e.g. a flag value.
pub fn parse_int(text: &str) -> Result<BigInt, String> {
    let t = text.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("'{text}' is not a decimal integer"));
    }
    t.trim_start_matches('+').parse().map_err(|_| format!("'{text}' is not a decimal integer"))
}

/// Comma-separated integers: `1,0,-3`. An empty string is the empty sequence.
pub fn parse_int_list(text: &str) -> Result<Vec<BigInt>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_int).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(text: &str) -> Vec<i64> {
        parse_poly(text)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn textbook_polynomials() {
        assert_eq!(coeffs("x^2 - 7x + 2"), [2, -7, 1]);
        assert_eq!(coeffs("x^5 - x"), [0, -1, 0, 0, 0, 1]);
        assert_eq!(coeffs("(x+1)^2"), [1, 2, 1]);
        assert_eq!(coeffs("  x^2-7*x+2 "), [2, -7, 1]);
    }

    #[test]
    fn precedence_and_signs() {
        assert_eq!(coeffs("-x^2"), [0, 0, -1]);
        assert_eq!(coeffs("2x^3"), [0, 0, 0, 2]);
        assert_eq!(coeffs("-(x - 1)"), [1, -1]);
        assert_eq!(coeffs("2(x+1)(x-1)"), [-2, 0, 2]);
        assert_eq!(coeffs("x - -3"), [3, 1]);
        assert_eq!(coeffs("3 * -x"), [0, -3]);
        assert_eq!(coeffs("x^0"), [1]);
        assert_eq!(coeffs("x - x"), Vec::<i64>::new());
        assert_eq!(coeffs("0"), Vec::<i64>::new());
    }

    #[test]
    fn big_coefficients() {
        let f = parse_poly("123456789012345678901234567890x + 1").unwrap();
        assert_eq!(f.coeffs()[1].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("x^2 + ").unwrap_err().position(), 6);
        assert_eq!(parse_poly("x +* 2").unwrap_err().position(), 3);
        assert_eq!(parse_poly("y").unwrap_err().position(), 0);
        assert_eq!(parse_poly("(x + 1").unwrap_err().position(), 6);
        assert_eq!(parse_poly("x2").unwrap_err().position(), 1);
        assert_eq!(parse_poly("x^x").unwrap_err().position(), 2);
        assert_eq!(parse_poly("x^2^3").unwrap_err().position(), 3);
        assert_eq!(parse_poly("").unwrap_err().position(), 0);
        assert_eq!(
            parse_poly("x^10001"),
            Err(ParseError::ExponentTooLarge { position: 2 })
        );
        assert!(parse_poly("x^10000").is_ok());
    }

    #[test]
    fn integer_flags() {
        assert_eq!(parse_int("-17").unwrap(), BigInt::from(-17));
        assert_eq!(parse_int("+5").unwrap(), BigInt::from(5));
        assert!(parse_int("5a").is_err());
        assert!(parse_int("-").is_err());
        assert_eq!(parse_int_list("1, 0,-3").unwrap().len(), 3);
        assert!(parse_int_list("").unwrap().is_empty());
    }
}
