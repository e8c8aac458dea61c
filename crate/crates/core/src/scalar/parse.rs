//! Lexer and parser for scalar literals.
//!
//! Grammar (one parameter at most):
//!
//! ```text
//! scalar := ['-'] term (('+'|'-') term)*
//! term   := rat ['*'] [param] | rat | param
//! param  := IDENT ['^' uint]
//! rat    := uint ['/' uint]
//! ```
//!
//! Examples: `1/2`, `-1`, `lambda`, `2*alpha - 1`, `alpha^2`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{ParseError, ParseErrorKind};

use super::poly::Poly;
use super::rational::Rational;
use super::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eq,
    NotEq,
}

#[derive(Clone, Debug)]
pub struct SpannedTok {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

/// Identifiers of the form `e<digits>` are basis references in algebra
/// files and may not be used as parameter names.
pub fn is_basis_ident(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('e')?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

/// Tokenizes one line; `#` starts a comment.
pub fn lex_line(text: &str, line_no: usize) -> Result<Vec<SpannedTok>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
            }
            '+' => {
                toks.push(SpannedTok { tok: Tok::Plus, line: line_no, col });
                i += 1;
            }
            '-' => {
                toks.push(SpannedTok { tok: Tok::Minus, line: line_no, col });
                i += 1;
            }
            '*' => {
                toks.push(SpannedTok { tok: Tok::Star, line: line_no, col });
                i += 1;
            }
            '/' => {
                toks.push(SpannedTok { tok: Tok::Slash, line: line_no, col });
                i += 1;
            }
            '^' => {
                toks.push(SpannedTok { tok: Tok::Caret, line: line_no, col });
                i += 1;
            }
            '=' => {
                toks.push(SpannedTok { tok: Tok::Eq, line: line_no, col });
                i += 1;
            }
            '!' => {
                if chars.get(i + 1) == Some(&'=') {
                    toks.push(SpannedTok { tok: Tok::NotEq, line: line_no, col });
                    i += 2;
                } else {
                    return Err(ParseError::syntax(line_no, col, "expected `!=`"));
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits.parse::<BigInt>().map_err(|_| {
                    ParseError::syntax(line_no, col, "invalid integer literal")
                })?;
                toks.push(SpannedTok { tok: Tok::Int(n), line: line_no, col });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                toks.push(SpannedTok { tok: Tok::Ident(name), line: line_no, col });
            }
            other => {
                return Err(ParseError::syntax(
                    line_no,
                    col,
                    format!("unexpected character `{}`", other),
                ));
            }
        }
    }
    Ok(toks)
}

/// Token cursor over one lexed line.
pub struct Cursor<'a> {
    toks: &'a [SpannedTok],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [SpannedTok], line: usize, end_col: usize) -> Self {
        Cursor { toks, pos: 0, line, end_col }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|t| &t.tok)
    }

    pub fn next(&mut self) -> Option<&'a SpannedTok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn is_empty(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => (self.line, self.end_col),
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::syntax(line, col, msg)
    }

    pub fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == tok => {
                self.next();
                Ok(())
            }
            _ => Err(self.error(format!("expected {}", what))),
        }
    }
}

/// Tracks the single allowed parameter while parsing.
pub struct ParamTracker {
    pub declared: Option<String>,
    pub allow_adopt: bool,
}

impl ParamTracker {
    pub fn declared(name: Option<String>) -> Self {
        ParamTracker { declared: name, allow_adopt: false }
    }

    pub fn adopting() -> Self {
        ParamTracker { declared: None, allow_adopt: true }
    }

    fn register(&mut self, name: &str, line: usize, col: usize) -> Result<(), ParseError> {
        match &self.declared {
            Some(d) if d == name => Ok(()),
            Some(d) => Err(ParseError::new(
                line,
                col,
                ParseErrorKind::MultipleParameters { first: d.clone(), second: name.to_string() },
            )),
            None if self.allow_adopt => {
                if is_basis_ident(name).is_some() {
                    return Err(ParseError::syntax(
                        line,
                        col,
                        format!("`{}` is reserved for basis elements", name),
                    ));
                }
                self.declared = Some(name.to_string());
                Ok(())
            }
            None => Err(ParseError::new(
                line,
                col,
                ParseErrorKind::UndeclaredParameter(name.to_string()),
            )),
        }
    }
}

fn parse_uint_u32(cur: &mut Cursor) -> Result<u32, ParseError> {
    match cur.peek().cloned() {
        Some(Tok::Int(n)) => {
            cur.next();
            u32::try_from(&n).map_err(|_| cur.error("exponent too large"))
        }
        _ => Err(cur.error("expected an integer")),
    }
}

fn parse_rat(cur: &mut Cursor) -> Result<Rational, ParseError> {
    let n = match cur.peek().cloned() {
        Some(Tok::Int(n)) => {
            cur.next();
            n
        }
        _ => return Err(cur.error("expected an integer")),
    };
    if cur.peek() == Some(&Tok::Slash) {
        cur.next();
        match cur.peek().cloned() {
            Some(Tok::Int(d)) => {
                cur.next();
                if d == BigInt::from(0) {
                    return Err(cur.error("zero denominator"));
                }
                Ok(Rational::new(n, d))
            }
            _ => Err(cur.error("expected a denominator")),
        }
    } else {
        Ok(Rational::from_integer(n))
    }
}

fn is_param_ident(t: Option<&Tok>, stop_at_basis: bool) -> bool {
    match t {
        Some(Tok::Ident(name)) => !(stop_at_basis && is_basis_ident(name).is_some()),
        _ => false,
    }
}

/// One term: a rational, a parameter power, or their product. In
/// basis-stop mode a basis identifier never starts or continues a term.
fn parse_term(
    cur: &mut Cursor,
    params: &mut ParamTracker,
    stop_at_basis: bool,
) -> Result<Poly, ParseError> {
    let coeff = match cur.peek() {
        Some(Tok::Int(_)) => {
            let r = parse_rat(cur)?;
            if cur.peek() == Some(&Tok::Star) {
                cur.next();
            } else if !is_param_ident(cur.peek(), stop_at_basis) {
                return Ok(Poly::constant(r));
            }
            Some(r)
        }
        _ => None,
    };
    if is_param_ident(cur.peek(), stop_at_basis) {
        let name = match cur.peek().cloned() {
            Some(Tok::Ident(name)) => name,
            _ => unreachable!(),
        };
        let (line, col) = cur.here();
        cur.next();
        params.register(&name, line, col)?;
        let exp = if cur.peek() == Some(&Tok::Caret) {
            cur.next();
            parse_uint_u32(cur)?
        } else {
            1
        };
        let c = coeff.unwrap_or_else(Rational::one);
        return Ok(Poly::monomial(name, c, exp as usize));
    }
    match coeff {
        Some(r) => Ok(Poly::constant(r)),
        None => Err(cur.error("expected a number or parameter")),
    }
}

/// Parses a scalar expression, stopping (without consuming) at the first
/// basis identifier when `stop_at_basis` is set. This makes coefficient
/// expressions in product lines unambiguous: a summand ends exactly at its
/// basis element.
pub fn parse_scalar_tokens(
    cur: &mut Cursor,
    params: &mut ParamTracker,
    stop_at_basis: bool,
) -> Result<Scalar, ParseError> {
    let at_basis = |t: Option<&Tok>| {
        stop_at_basis
            && matches!(t, Some(Tok::Ident(name)) if is_basis_ident(name).is_some())
    };
    let mut negate = false;
    if cur.peek() == Some(&Tok::Minus) {
        cur.next();
        negate = true;
    }
    if at_basis(cur.peek()) {
        return Err(cur.error("expected a coefficient"));
    }
    let mut acc = parse_term(cur, params, stop_at_basis)?;
    if negate {
        acc = -&acc;
    }
    loop {
        if at_basis(cur.peek()) {
            break;
        }
        match cur.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => {
                let minus = cur.peek() == Some(&Tok::Minus);
                // A sign directly followed by a basis identifier belongs to
                // the next summand of the product line.
                if at_basis(cur.peek2()) {
                    break;
                }
                cur.next();
                let term = parse_term(cur, params, stop_at_basis)?;
                acc = if minus { &acc - &term } else { &acc + &term };
            }
            _ => break,
        }
    }
    Ok(Scalar::from_poly(acc))
}

/// Parses a standalone scalar literal. `declared` restricts the parameter
/// name; with `None` the first identifier seen is adopted as the parameter.
pub fn parse_scalar_str(
    text: &str,
    declared: Option<&str>,
) -> Result<(Scalar, Option<String>), ParseError> {
    let toks = lex_line(text, 1)?;
    let mut cur = Cursor::new(&toks, 1, text.chars().count() + 1);
    let mut params = match declared {
        Some(name) => ParamTracker::declared(Some(name.to_string())),
        None => ParamTracker::adopting(),
    };
    let s = parse_scalar_tokens(&mut cur, &mut params, false)?;
    if !cur.is_empty() {
        return Err(cur.error("trailing input after scalar"));
    }
    Ok((s, params.declared))
}

/// Parses a plain rational literal such as `-3/4`.
pub fn parse_rational_str(text: &str) -> Result<Rational, ParseError> {
    let (s, _) = parse_scalar_str(text, None)?;
    match s.as_rational() {
        Some(r) => Ok(r.clone()),
        None => Err(ParseError::syntax(1, 1, "expected a rational constant")),
    }
}
