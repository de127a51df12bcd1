use affinemod_core::poly::{parse_expr_tokens, tokenize, Expr, Span, Token, TokenKind};
use affinemod_core::Error as CoreError;
use num_traits::ToPrimitive;

use crate::ast::*;
use crate::error::ParseError;

pub const DECLARATIONS: [&str; 6] = ["ring", "ideal", "weights", "derivation", "modify", "family"];
pub const COMMANDS: [&str; 14] = [
    "davis",
    "ideals",
    "largest",
    "split",
    "fiber",
    "basicstep",
    "graded",
    "gr",
    "lndcheck",
    "degree",
    "exp",
    "jacobian",
    "mlcert",
    "corpus",
];

/// Syntax only; see [`crate::parse`] for the full front end with name resolution.
pub fn parse_script(text: &str) -> Result<Script, ParseError> {
    let tokens = tokenize(text).map_err(|e| from_core(e, vec![]))?;
    let mut p = Parser { tokens, pos: 0 };
    let mut statements = Vec::new();
    while p.peek() != &TokenKind::Eof {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

fn from_core(e: CoreError, expected: Vec<String>) -> ParseError {
    match e {
        CoreError::Parse {
            line,
            column,
            message,
        } => ParseError {
            line,
            column,
            message,
            expected,
        },
        other => ParseError {
            line: 0,
            column: 0,
            message: other.to_string(),
            expected,
        },
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

fn describe(kind: &TokenKind) -> String {
    kind.to_string()
}

fn quoted(s: &str) -> String {
    format!("`{s}`")
}

impl Parser {
    fn peek(&self) -> &TokenKind {
        &self.tokens[self.pos].kind
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].span
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: Vec<String>) -> Result<T, ParseError> {
        let t = &self.tokens[self.pos];
        Err(ParseError {
            line: t.span.line,
            column: t.span.column,
            message: format!(
                "expected {}; found {}",
                join_expected(&expected),
                describe(&t.kind)
            ),
            expected,
        })
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, ParseError> {
        if *self.peek() == kind {
            Ok(self.bump())
        } else {
            self.fail(vec![describe(&kind)])
        }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    fn is_ident(&self, word: &str) -> bool {
        matches!(self.peek(), TokenKind::Ident(s) if s == word)
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        if self.is_ident(word) {
            self.bump();
            Ok(())
        } else {
            self.fail(vec![quoted(word)])
        }
    }

    fn name(&mut self) -> Result<Name, ParseError> {
        match self.peek().clone() {
            TokenKind::Ident(text) => {
                let span = self.bump().span;
                Ok(Name { text, span })
            }
            _ => self.fail(vec!["identifier".into()]),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if !matches!(
            self.peek(),
            TokenKind::Ident(_) | TokenKind::Int(_) | TokenKind::LParen | TokenKind::Minus
        ) {
            return self.fail(vec!["expression".into()]);
        }
        parse_expr_tokens(&self.tokens, &mut self.pos).map_err(|e| from_core(e, vec![]))
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        match self.peek().clone() {
            TokenKind::Int(n) => match n.to_u32() {
                Some(v) => {
                    self.bump();
                    Ok(v)
                }
                None => self.fail(vec!["integer below 2^32".into()]),
            },
            _ => self.fail(vec!["integer".into()]),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(&TokenKind::Minus);
        match self.peek().clone() {
            TokenKind::Int(n) => match n.to_i64() {
                Some(v) => {
                    self.bump();
                    Ok(if neg { -v } else { v })
                }
                None => self.fail(vec!["64-bit integer".into()]),
            },
            _ => self.fail(if neg {
                vec!["integer".into()]
            } else {
                vec!["integer".into(), describe(&TokenKind::Minus)]
            }),
        }
    }

    /// `item (, item)*` up to (not including) `close`; empty lists are allowed
    /// when `allow_empty`.
    fn sequence<T>(
        &mut self,
        close: TokenKind,
        allow_empty: bool,
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        if allow_empty && *self.peek() == close {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(&TokenKind::Comma) {
                continue;
            }
            if *self.peek() == close {
                return Ok(out);
            }
            return self.fail(vec![describe(&TokenKind::Comma), describe(&close)]);
        }
    }

    fn bracketed<T>(
        &mut self,
        open: TokenKind,
        close: TokenKind,
        allow_empty: bool,
        item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        self.expect(open)?;
        let out = self.sequence(close.clone(), allow_empty, item)?;
        self.expect(close)?;
        Ok(out)
    }

    fn expr_list(&mut self, allow_empty: bool) -> Result<Vec<Expr>, ParseError> {
        self.bracketed(
            TokenKind::LParen,
            TokenKind::RParen,
            allow_empty,
            Self::expr,
        )
    }

    fn optional_names(&mut self) -> Result<Vec<Name>, ParseError> {
        if *self.peek() == TokenKind::LBracket {
            self.bracketed(TokenKind::LBracket, TokenKind::RBracket, false, Self::name)
        } else {
            Ok(Vec::new())
        }
    }

    fn expr_pair(&mut self) -> Result<(Expr, Expr), ParseError> {
        self.expect(TokenKind::LParen)?;
        let a = self.expr()?;
        self.expect(TokenKind::Comma)?;
        let b = self.expr()?;
        self.expect(TokenKind::RParen)?;
        Ok((a, b))
    }

    fn single_expr(&mut self) -> Result<Expr, ParseError> {
        self.expect(TokenKind::LParen)?;
        let a = self.expr()?;
        self.expect(TokenKind::RParen)?;
        Ok(a)
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let span = self.span();
        let word = match self.peek() {
            TokenKind::Ident(w)
                if DECLARATIONS.contains(&w.as_str()) || COMMANDS.contains(&w.as_str()) =>
            {
                w.clone()
            }
            _ => {
                let mut expected: Vec<String> = DECLARATIONS.iter().map(|k| quoted(k)).collect();
                expected.extend(COMMANDS.iter().map(|k| quoted(k)));
                return self.fail(expected);
            }
        };
        self.bump();
        let kind = match word.as_str() {
            "ring" => {
                let name = self.name()?;
                self.expect(TokenKind::Eq)?;
                self.keyword("Q")?;
                let vars =
                    self.bracketed(TokenKind::LBracket, TokenKind::RBracket, false, Self::name)?;
                let relations = if self.eat(&TokenKind::Slash) {
                    self.expr_list(false)?
                } else {
                    Vec::new()
                };
                StmtKind::Ring {
                    name,
                    vars,
                    relations,
                }
            }
            "ideal" => {
                let name = self.name()?;
                self.expect(TokenKind::Eq)?;
                let gens = self.expr_list(true)?;
                StmtKind::Ideal { name, gens }
            }
            "weights" => {
                let name = self.name()?;
                self.expect(TokenKind::Eq)?;
                let entries = self.bracketed(TokenKind::LBrace, TokenKind::RBrace, false, |p| {
                    let v = p.name()?;
                    p.expect(TokenKind::Colon)?;
                    let w = p.bracketed(TokenKind::LParen, TokenKind::RParen, false, Self::int)?;
                    Ok((v, w))
                })?;
                StmtKind::Weights { name, entries }
            }
            "derivation" => {
                let name = self.name()?;
                self.expect(TokenKind::Eq)?;
                let body = match self.peek() {
                    TokenKind::LBrace => DerivationBody::Images(self.bracketed(
                        TokenKind::LBrace,
                        TokenKind::RBrace,
                        false,
                        |p| {
                            let v = p.name()?;
                            p.expect(TokenKind::Arrow)?;
                            Ok((v, p.expr()?))
                        },
                    )?),
                    TokenKind::Ident(w) if w == "jacobian" => {
                        self.bump();
                        self.expect(TokenKind::LParen)?;
                        let graded = self.name()?;
                        self.expect(TokenKind::Comma)?;
                        let first = self.expr()?;
                        self.expect(TokenKind::Comma)?;
                        let second = self.expr()?;
                        self.expect(TokenKind::RParen)?;
                        DerivationBody::Jacobian {
                            graded,
                            first,
                            second,
                        }
                    }
                    _ => return self.fail(vec![describe(&TokenKind::LBrace), quoted("jacobian")]),
                };
                StmtKind::Derivation { name, body }
            }
            "modify" => {
                let name = self.name()?;
                self.expect(TokenKind::Eq)?;
                self.expect(TokenKind::LParen)?;
                let ideal = self.name()?;
                self.expect(TokenKind::Comma)?;
                let modulus = self.expr()?;
                self.expect(TokenKind::RParen)?;
                let generic = if self.is_ident("generic") {
                    self.bump();
                    Some(self.uint()?)
                } else {
                    None
                };
                StmtKind::Modify {
                    name,
                    ideal,
                    modulus,
                    generic,
                }
            }
            "family" => {
                let name = self.name()?;
                let params = self.family_body()?;
                StmtKind::Family { name, params }
            }
            "davis" => {
                let locus = self.name()?;
                let vars = self.optional_names()?;
                StmtKind::Davis { locus, vars }
            }
            "ideals" => StmtKind::Ideals {
                locus: self.name()?,
            },
            "largest" => StmtKind::Largest {
                locus: self.name()?,
            },
            "split" => {
                let locus = self.name()?;
                let (first, second) = self.expr_pair()?;
                StmtKind::Split {
                    locus,
                    first,
                    second,
                }
            }
            "fiber" => {
                let mut loci = vec![self.name()?];
                while self.eat(&TokenKind::Comma) {
                    loci.push(self.name()?);
                }
                StmtKind::Fiber { loci }
            }
            "basicstep" => {
                let name = self.name()?;
                self.expect(TokenKind::Eq)?;
                self.expect(TokenKind::LParen)?;
                let base = self.name()?;
                self.expect(TokenKind::Comma)?;
                let modulus = self.expr()?;
                self.expect(TokenKind::Comma)?;
                let centers =
                    self.bracketed(TokenKind::LBracket, TokenKind::RBracket, false, Self::expr)?;
                self.expect(TokenKind::Comma)?;
                let exponent = self.uint()?;
                self.expect(TokenKind::RParen)?;
                let vars = self.optional_names()?;
                StmtKind::BasicStep {
                    name,
                    base,
                    modulus,
                    centers,
                    exponent,
                    vars,
                }
            }
            "graded" => {
                let name = self.name()?;
                self.expect(TokenKind::Eq)?;
                let source = match self.peek() {
                    TokenKind::LParen => {
                        self.bump();
                        let algebra = self.name()?;
                        self.expect(TokenKind::Comma)?;
                        let weights = self.name()?;
                        self.expect(TokenKind::RParen)?;
                        GradedSource::Weighted { algebra, weights }
                    }
                    TokenKind::Ident(_) => GradedSource::Family(self.name()?),
                    _ => return self.fail(vec![describe(&TokenKind::LParen), "identifier".into()]),
                };
                StmtKind::Graded { name, source }
            }
            "gr" => {
                let graded = self.name()?;
                let element = self.single_expr()?;
                StmtKind::Gr { graded, element }
            }
            "lndcheck" => StmtKind::LndCheck {
                derivation: self.name()?,
            },
            "degree" => {
                let derivation = self.name()?;
                let element = self.single_expr()?;
                StmtKind::Degree {
                    derivation,
                    element,
                }
            }
            "exp" => {
                let derivation = self.name()?;
                let element = self.single_expr()?;
                StmtKind::Exp {
                    derivation,
                    element,
                }
            }
            "jacobian" => {
                let graded = self.name()?;
                let (first, second) = self.expr_pair()?;
                StmtKind::Jacobian {
                    graded,
                    first,
                    second,
                }
            }
            "mlcert" => StmtKind::MlCert {
                family: self.name()?,
            },
            "corpus" => StmtKind::Corpus,
            _ => unreachable!("keyword list and dispatch disagree"),
        };
        self.expect(TokenKind::Semi)?;
        Ok(Statement { kind, span })
    }

    fn uint_list(&mut self) -> Result<Vec<u32>, ParseError> {
        self.bracketed(TokenKind::LBracket, TokenKind::RBracket, true, Self::uint)
    }

    fn expr_brackets(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.bracketed(TokenKind::LBracket, TokenKind::RBracket, true, Self::expr)
    }

    fn field_name(
        &mut self,
        allowed: &[&str],
        seen: &mut Vec<String>,
    ) -> Result<String, ParseError> {
        let span = self.span();
        let word = match self.peek() {
            TokenKind::Ident(w) if allowed.contains(&w.as_str()) => w.clone(),
            _ => return self.fail(allowed.iter().map(|a| quoted(a)).collect()),
        };
        if word != "root" && seen.contains(&word) {
            return Err(ParseError {
                line: span.line,
                column: span.column,
                message: format!("field `{word}` given twice"),
                expected: vec![],
            });
        }
        seen.push(word.clone());
        self.bump();
        Ok(word)
    }

    fn family_body(&mut self) -> Result<FamilyDecl, ParseError> {
        let open = self.expect(TokenKind::LBrace)?.span;
        let mut decl = FamilyDecl::default();
        let mut seen = Vec::new();
        let fields = ["k", "l", "n", "q", "e", "root"];
        while *self.peek() != TokenKind::RBrace {
            match self.field_name(&fields, &mut seen)?.as_str() {
                "root" => {
                    let root = self.int()?;
                    self.expect(TokenKind::LBrace)?;
                    let mut inner = Vec::new();
                    let mut n = None;
                    let mut r = None;
                    while *self.peek() != TokenKind::RBrace {
                        let f = self.field_name(&["n", "r"], &mut inner)?;
                        self.expect(TokenKind::Eq)?;
                        if f == "n" {
                            n = Some(self.uint_list()?);
                        } else {
                            r = Some(self.expr_brackets()?);
                        }
                    }
                    let close = self.expect(TokenKind::RBrace)?.span;
                    let (Some(n), Some(r)) = (n, r) else {
                        return Err(missing(close, "root block needs both `n` and `r`"));
                    };
                    decl.roots.push(RootDecl { root, n, r });
                }
                f => {
                    self.expect(TokenKind::Eq)?;
                    match f {
                        "k" => decl.k = self.uint()?,
                        "l" => decl.l = self.uint()?,
                        "n" => decl.n = self.uint_list()?,
                        "q" => decl.q = self.expr_brackets()?,
                        _ => decl.e = Some(self.int()?),
                    }
                }
            }
        }
        self.expect(TokenKind::RBrace)?;
        for required in ["k", "l", "n", "q"] {
            if !seen.iter().any(|s| s == required) {
                return Err(missing(open, &format!("family needs field `{required}`")));
            }
        }
        Ok(decl)
    }
}

fn missing(span: Span, message: &str) -> ParseError {
    ParseError {
        line: span.line,
        column: span.column,
        message: message.to_string(),
        expected: vec![],
    }
}

fn join_expected(expected: &[String]) -> String {
    match expected {
        [] => "nothing".into(),
        [one] => one.clone(),
        many => format!("one of {}", many.join(", ")),
    }
}
