//! Tokenizer and recursive-descent parser for the polynomial text syntax.
//!
//! The same token stream is reused by the script language in the CLI crate,
//! which is why the lexer knows about braces, brackets and `->`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Colon,
    Eq,
    Arrow,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TokenKind::Ident(s) => return write!(f, "identifier `{s}`"),
            TokenKind::Int(n) => return write!(f, "integer `{n}`"),
            TokenKind::Plus => "`+`",
            TokenKind::Minus => "`-`",
            TokenKind::Star => "`*`",
            TokenKind::Slash => "`/`",
            TokenKind::Caret => "`^`",
            TokenKind::LParen => "`(`",
            TokenKind::RParen => "`)`",
            TokenKind::LBracket => "`[`",
            TokenKind::RBracket => "`]`",
            TokenKind::LBrace => "`{`",
            TokenKind::RBrace => "`}`",
            TokenKind::Comma => "`,`",
            TokenKind::Semi => "`;`",
            TokenKind::Colon => "`:`",
            TokenKind::Eq => "`=`",
            TokenKind::Arrow => "`->`",
            TokenKind::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

fn parse_error(span: Span, message: impl Into<String>) -> Error {
    Error::Parse {
        line: span.line,
        column: span.column,
        message: message.into(),
    }
}

/// Splits `text` into tokens. `#` and `//` start comments running to the end of the line.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let (offset, c) = chars[i];
        let span = Span {
            line,
            column: col,
            offset,
        };
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut i, &mut col);
            continue;
        }
        if c == '#' || (c == '/' && matches!(chars.get(i + 1), Some((_, '/')))) {
            while i < chars.len() && chars[i].1 != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            col += i - start;
            tokens.push(Token {
                kind: TokenKind::Ident(word),
                span,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            col += i - start;
            tokens.push(Token {
                kind: TokenKind::Int(digits.parse().expect("digits")),
                span,
            });
            continue;
        }
        let kind = match c {
            '+' => TokenKind::Plus,
            '-' if matches!(chars.get(i + 1), Some((_, '>'))) => {
                advance(2, &mut i, &mut col);
                tokens.push(Token {
                    kind: TokenKind::Arrow,
                    span,
                });
                continue;
            }
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '[' => TokenKind::LBracket,
            ']' => TokenKind::RBracket,
            '{' => TokenKind::LBrace,
            '}' => TokenKind::RBrace,
            ',' => TokenKind::Comma,
            ';' => TokenKind::Semi,
            ':' => TokenKind::Colon,
            '=' => TokenKind::Eq,
            other => return Err(parse_error(span, format!("unexpected character `{other}`"))),
        };
        advance(1, &mut i, &mut col);
        tokens.push(Token { kind, span });
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: Span {
            line,
            column: col,
            offset: text.len(),
        },
    });
    Ok(tokens)
}

/// Polynomial expression tree, kept close to the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let tokens = tokenize(text)?;
        let mut pos = 0;
        let e = parse_expr_tokens(&tokens, &mut pos)?;
        let t = &tokens[pos];
        if t.kind != TokenKind::Eof {
            return Err(parse_error(
                t.span,
                format!(
                    "expected one of `+`, `-`, `*`, `/`, `^`, end of input; found {}",
                    t.kind
                ),
            ));
        }
        Ok(e)
    }

    pub fn from_polynomial(p: &Polynomial) -> Expr {
        Expr::parse(&p.to_string()).expect("printed polynomials reparse")
    }

    pub fn to_polynomial(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        Ok(match self {
            Expr::Int(n) => Polynomial::constant(ring, Rational::from_integer(n.clone())),
            Expr::Var(v) => Polynomial::var(ring, v)?,
            Expr::Neg(e) => -e.to_polynomial(ring)?,
            Expr::Add(a, b) => a.to_polynomial(ring)? + b.to_polynomial(ring)?,
            Expr::Sub(a, b) => a.to_polynomial(ring)? - b.to_polynomial(ring)?,
            Expr::Mul(a, b) => a.to_polynomial(ring)? * b.to_polynomial(ring)?,
            Expr::Div(a, b) => {
                let d = b.to_polynomial(ring)?;
                match d.constant_value() {
                    Some(c) if !c.is_zero() => a.to_polynomial(ring)?.scale(&c.recip()),
                    _ => {
                        return Err(Error::precondition(
                            "division is only allowed by a nonzero rational constant",
                        ))
                    }
                }
            }
            Expr::Pow(b, e) => b.to_polynomial(ring)?.pow(*e),
        })
    }

    /// Identifiers used by the expression, in first-occurrence order.
    pub fn variables(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Int(_) => {}
                Expr::Var(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Expr::Neg(a) | Expr::Pow(a, _) => walk(a, out),
                Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }
}

fn write_with_parens(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_with_parens(f, a, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_with_parens(f, a, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                write_with_parens(f, b, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                write_with_parens(f, a, 2)?;
                f.write_str(if matches!(self, Expr::Mul(..)) {
                    "*"
                } else {
                    "/"
                })?;
                write_with_parens(f, b, 3)
            }
            Expr::Pow(a, e) => {
                write_with_parens(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

fn starts_factor(kind: &TokenKind) -> bool {
    matches!(
        kind,
        TokenKind::Ident(_) | TokenKind::Int(_) | TokenKind::LParen
    )
}

/// Parses one expression starting at `tokens[*pos]`, advancing `pos` past it.
pub fn parse_expr_tokens(tokens: &[Token], pos: &mut usize) -> Result<Expr> {
    let mut lhs = parse_term(tokens, pos)?;
    loop {
        match tokens[*pos].kind {
            TokenKind::Plus => {
                *pos += 1;
                let rhs = parse_term(tokens, pos)?;
                lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
            }
            TokenKind::Minus => {
                *pos += 1;
                let rhs = parse_term(tokens, pos)?;
                lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
            }
            _ => return Ok(lhs),
        }
    }
}

fn parse_term(tokens: &[Token], pos: &mut usize) -> Result<Expr> {
    let mut lhs = parse_unary(tokens, pos)?;
    loop {
        let kind = &tokens[*pos].kind;
        if *kind == TokenKind::Star {
            *pos += 1;
            let rhs = parse_unary(tokens, pos)?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        } else if *kind == TokenKind::Slash {
            *pos += 1;
            let rhs = parse_unary(tokens, pos)?;
            lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
        } else if starts_factor(kind) {
            let rhs = parse_unary(tokens, pos)?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        } else {
            return Ok(lhs);
        }
    }
}

fn parse_unary(tokens: &[Token], pos: &mut usize) -> Result<Expr> {
    if tokens[*pos].kind == TokenKind::Minus {
        *pos += 1;
        let inner = parse_unary(tokens, pos)?;
        return Ok(Expr::Neg(Box::new(inner)));
    }
    parse_power(tokens, pos)
}

fn parse_power(tokens: &[Token], pos: &mut usize) -> Result<Expr> {
    let base = parse_atom(tokens, pos)?;
    if tokens[*pos].kind != TokenKind::Caret {
        return Ok(base);
    }
    *pos += 1;
    let t = &tokens[*pos];
    match &t.kind {
        TokenKind::Int(n) => {
            let e = n
                .to_u32()
                .ok_or_else(|| parse_error(t.span, "exponent too large"))?;
            *pos += 1;
            Ok(Expr::Pow(Box::new(base), e))
        }
        other => Err(parse_error(
            t.span,
            format!("expected one of integer exponent; found {other}"),
        )),
    }
}

fn parse_atom(tokens: &[Token], pos: &mut usize) -> Result<Expr> {
    let t = &tokens[*pos];
    match &t.kind {
        TokenKind::Int(n) => {
            *pos += 1;
            Ok(Expr::Int(n.clone()))
        }
        TokenKind::Ident(v) => {
            *pos += 1;
            Ok(Expr::Var(v.clone()))
        }
        TokenKind::LParen => {
            *pos += 1;
            let e = parse_expr_tokens(tokens, pos)?;
            let close = &tokens[*pos];
            if close.kind != TokenKind::RParen {
                return Err(parse_error(
                    close.span,
                    format!("expected one of `)`; found {}", close.kind),
                ));
            }
            *pos += 1;
            Ok(e)
        }
        other => Err(parse_error(
            t.span,
            format!("expected one of identifier, integer, `(`, `-`; found {other}"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_multiplication() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let a = Polynomial::parse(&r, "2x y^2").unwrap();
        let b = Polynomial::parse(&r, "2*x*y^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_coefficients() {
        let r = Ring::new(&["x"]).unwrap();
        let a = Polynomial::parse(&r, "x/2 + 1/3").unwrap();
        assert_eq!(a.to_string(), "1/2*x + 1/3");
        assert!(Polynomial::parse(&r, "1/x").is_err());
    }

    #[test]
    fn errors_carry_position() {
        match Expr::parse("x +\n  * y") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn print_reparse_identity() {
        for s in [
            "-x^2",
            "a - -b",
            "(x + y)^3",
            "x*(y - z)",
            "-(x + 1)*y",
            "(x^2)^3",
            "x/2 - 3",
        ] {
            let e = Expr::parse(s).unwrap();
            assert_eq!(Expr::parse(&e.to_string()).unwrap(), e, "{s}");
        }
    }
}
