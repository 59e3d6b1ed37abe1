//! A small expression language over the trace coordinates.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary ("*" unary)*
//! unary := "-" unary | power
//! power := atom ("^" integer)*
//! atom  := integer ("/" integer)? | coordinate | "tr(" word ")" | "(" expr ")"
//! ```
//!
//! Coordinates are written `t1`, `t-1`, `t(-1)`, ..., `t5`, `t-5`; `t-5`
//! lowers to `P - t5`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::polyring::{format_rational, Coordinate, NormalForm, Rational};
use crate::words::{trace_of, Word, WordError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Coordinate(Coordinate),
    /// `t-5`.
    TMinus5,
    Literal(Rational),
    Trace(Word),
    Neg(Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Pow(Box<Expression>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

fn syntax(position: usize, expected: &str) -> ExprError {
    ExprError::Syntax {
        position,
        expected: expected.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Coord(Expression),
    Trace(Word),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex_coordinate(s: &str, start: usize) -> Result<(Expression, usize), ExprError> {
    // s[start] == 't'
    let bytes = s.as_bytes();
    let mut i = start + 1;
    let paren = bytes.get(i) == Some(&b'(');
    if paren {
        i += 1;
    }
    let negative = bytes.get(i) == Some(&b'-');
    if negative {
        i += 1;
    }
    let digits_start = i;
    while bytes.get(i).is_some_and(u8::is_ascii_digit) {
        i += 1;
    }
    if i == digits_start {
        return Err(syntax(i, "coordinate index"));
    }
    let magnitude: i64 = s[digits_start..i]
        .parse()
        .map_err(|_| syntax(digits_start, "coordinate index"))?;
    if paren {
        if bytes.get(i) != Some(&b')') {
            return Err(syntax(i, "')'"));
        }
        i += 1;
    }
    let index = if negative { -magnitude } else { magnitude };
    if index == -5 {
        return Ok((Expression::TMinus5, i));
    }
    let c =
        Coordinate::new(index).map_err(|_| syntax(digits_start, "coordinate index in ±1..±5"))?;
    Ok((Expression::Coordinate(c), i))
}

fn lex(s: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while bytes.get(i).is_some_and(u8::is_ascii_digit) {
                    i += 1;
                }
                out.push((start, Token::Int(s[start..i].parse().unwrap())));
                continue;
            }
            b't' if s[i..].starts_with("tr(") => {
                let body = i + 3;
                let close = s[body..]
                    .find(')')
                    .map(|k| body + k)
                    .ok_or_else(|| syntax(s.len(), "')' closing tr("))?;
                let word = s[body..close].parse::<Word>().map_err(|e| match e {
                    WordError::BadToken { position, .. } => syntax(body + position, "word letter"),
                    other => ExprError::Word(other),
                })?;
                i = close + 1;
                out.push((start, Token::Trace(word)));
                continue;
            }
            b't' => {
                let (e, end) = lex_coordinate(s, i)?;
                i = end;
                out.push((start, Token::Coord(e)));
                continue;
            }
            _ => return Err(syntax(i, "coordinate, number, operator or parenthesis")),
        };
        out.push((start, tok));
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

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                lhs = Expression::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Token::Minus) {
                lhs = Expression::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::Star) {
            lhs = Expression::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expression, ExprError> {
        if self.eat(&Token::Minus) {
            return Ok(Expression::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expression, ExprError> {
        let mut base = self.atom()?;
        while self.eat(&Token::Caret) {
            let at = self.offset();
            match self.peek() {
                Some(Token::Int(n)) => {
                    let e = u32::try_from(n).map_err(|_| syntax(at, "small exponent"))?;
                    self.pos += 1;
                    base = Expression::Pow(Box::new(base), e);
                }
                _ => return Err(syntax(at, "non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expression, ExprError> {
        let at = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(at, "operand"));
        };
        self.pos += 1;
        match tok {
            Token::Int(n) => {
                if self.eat(&Token::Slash) {
                    let at = self.offset();
                    match self.peek().cloned() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(Expression::Literal(Rational::new(n, d)))
                        }
                        _ => Err(syntax(at, "non-zero denominator")),
                    }
                } else {
                    Ok(Expression::Literal(Rational::from_integer(n)))
                }
            }
            Token::Coord(e) => Ok(e),
            Token::Trace(w) => Ok(Expression::Trace(w)),
            Token::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(syntax(self.offset(), "')'"));
                }
                Ok(inner)
            }
            _ => Err(syntax(at, "operand")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expression, ExprError> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(syntax(p.offset(), "operator or end of input"));
    }
    Ok(e)
}

impl FromStr for Expression {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl Expression {
    fn precedence(&self) -> u8 {
        match self {
            Self::Add(..) | Self::Sub(..) => 1,
            Self::Mul(..) => 2,
            Self::Neg(_) => 3,
            Self::Pow(..) => 4,
            Self::Literal(r) if !r.is_integer() || r.is_negative() => 4,
            _ => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.precedence() < min;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            Self::Coordinate(c) => write!(f, "{c}")?,
            Self::TMinus5 => f.write_str("t-5")?,
            Self::Literal(r) if r.is_negative() => write!(f, "(-{})", format_rational(&-r))?,
            Self::Literal(r) => f.write_str(&format_rational(r))?,
            Self::Trace(w) => write!(f, "tr({w})")?,
            Self::Neg(x) => {
                f.write_str("-")?;
                x.write(f, 3)?;
            }
            Self::Add(l, r) | Self::Sub(l, r) => {
                l.write(f, 1)?;
                f.write_str(if matches!(self, Self::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                r.write(f, 2)?;
            }
            Self::Mul(l, r) => {
                l.write(f, 2)?;
                f.write_str("*")?;
                r.write(f, 3)?;
            }
            Self::Pow(b, e) => {
                b.write(f, 5)?;
                write!(f, "^{e}")?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }

    /// Evaluates in the coordinate ring.
    pub fn lower(&self) -> Result<NormalForm, ExprError> {
        Ok(match self {
            Self::Coordinate(c) => NormalForm::var(*c),
            Self::TMinus5 => NormalForm::t_minus_5(),
            Self::Literal(r) => NormalForm::constant(r.clone()),
            Self::Trace(w) => trace_of(w)?,
            Self::Neg(x) => -x.lower()?,
            Self::Add(l, r) => l.lower()? + r.lower()?,
            Self::Sub(l, r) => l.lower()? - r.lower()?,
            Self::Mul(l, r) => l.lower()? * r.lower()?,
            Self::Pow(b, e) => b.lower()?.pow(*e),
        })
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// Function form of [`Expression::lower`].
pub fn lower(e: &Expression) -> Result<NormalForm, ExprError> {
    e.lower()
}

/// Parses and lowers in one step.
pub fn parse_normal_form(text: &str) -> Result<NormalForm, ExprError> {
    parse(text)?.lower()
}

impl FromStr for NormalForm {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_normal_form(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    fn t(i: i64) -> NormalForm {
        NormalForm::var(Coordinate::new(i).unwrap())
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse("t3 - 1/3*t1*t2").unwrap();
        assert_eq!(
            e.lower().unwrap(),
            t(3) - (t(1) * t(2)).scale(&rational(1, 3))
        );
        assert_eq!(
            parse_normal_form("2 - 3 - 4").unwrap(),
            NormalForm::from_integer(-5)
        );
        assert_eq!(parse_normal_form("-t1^2").unwrap(), -(t(1) * t(1)));
        assert_eq!(
            parse_normal_form("2*3^2").unwrap(),
            NormalForm::from_integer(18)
        );
    }

    #[test]
    fn coordinate_spellings() {
        assert_eq!(parse_normal_form("t(-3)").unwrap(), t(-3));
        assert_eq!(parse_normal_form("t-3").unwrap(), t(-3));
        assert_eq!(parse_normal_form("t-5").unwrap(), NormalForm::t_minus_5());
        assert_eq!(parse_normal_form("t1 - t2").unwrap(), t(1) - t(2));
    }

    #[test]
    fn traces_lower() {
        assert_eq!(
            parse_normal_form("tr(x1 x1 x2)").unwrap(),
            t(1) * t(3) - t(-1) * t(2) + t(-4)
        );
        assert!(matches!(
            parse_normal_form("tr(x1 x2 x1 x2)"),
            Err(ExprError::Word(WordError::Irreducible(_)))
        ));
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert_eq!(
            parse("t1 + * t2"),
            Err(ExprError::Syntax {
                position: 5,
                expected: "operand".into()
            })
        );
        assert!(matches!(
            parse("t7"),
            Err(ExprError::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse("(t1"),
            Err(ExprError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse("1/0"),
            Err(ExprError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse("tr(x3)"),
            Err(ExprError::Syntax { position: 3, .. })
        ));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "t3 - 1/3*t1*t2",
            "-(t1 + t2)^2",
            "t1 - (t2 - t3)",
            "(1/3)^2*t-5",
            "tr(x1 x2^-1)*-t4",
            "2 - -t1",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{s} -> {e}");
        }
    }

    #[test]
    fn normal_form_display_parses_back() {
        let x = t(4) * t(5) - (t(1) * t(-2)).scale(&rational(2, 3)) + NormalForm::t_minus_5();
        assert_eq!(x.to_string().parse::<NormalForm>().unwrap(), x);
    }
}
