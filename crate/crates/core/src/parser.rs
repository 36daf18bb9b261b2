//! The `.poly` problem format.
//!
//! ```text
//! # optional declaration, must be the first significant line
//! vars: x, y, z
//! x^4 + y
//! y^2*z + 1
//! ```
//!
//! One polynomial per line, `#` comments, blank lines ignored. Operators are
//! `+ - * ^` with parentheses; multiplication must be written explicitly and
//! exponents are non-negative integer literals.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{ParseError, ParseErrorKind};
use crate::poly::{is_identifier, PolySystem, Polynomial, Variable};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Int(digits.parse().expect("ascii digits")),
                    column,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    column,
                });
                continue;
            }
            other => {
                return Err(ParseError {
                    line,
                    column,
                    kind: ParseErrorKind::Syntax(format!("unexpected character `{other}`")),
                })
            }
        };
        out.push(Token { tok, column });
        i += 1;
    }
    Ok(out)
}

struct LineParser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end_column: usize,
    declared: Option<&'a BTreeSet<Variable>>,
}

impl LineParser<'_> {
    fn error(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column,
            kind,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn column(&self) -> usize {
        self.peek().map_or(self.end_column, |t| t.column)
    }

    fn unexpected(&self) -> ParseError {
        let msg = match self.peek() {
            Some(t) => format!("unexpected {}", describe(&t.tok)),
            None => "unexpected end of line".to_string(),
        };
        self.error(self.column(), ParseErrorKind::Syntax(msg))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().is_some_and(|t| t.tok == *tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_line(&mut self) -> Result<Polynomial, ParseError> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.unexpected());
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Star) {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(-self.unary()?);
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let column = self.column();
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e: u32 = n
                    .try_into()
                    .map_err(|_| self.error(column, ParseErrorKind::ExponentOverflow))?;
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => Err(self.error(column, ParseErrorKind::NegativeExponent)),
            Some(_) => Err(self.error(column, ParseErrorKind::NonLiteralExponent)),
            None => Err(self.unexpected()),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let Some(Token { tok, column }) = self.peek().cloned() else {
            return Err(self.unexpected());
        };
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Polynomial::constant(n))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                let v = Variable::new(&name).expect("tokenizer yields identifiers");
                if let Some(declared) = self.declared {
                    if !declared.contains(&v) {
                        return Err(self.error(column, ParseErrorKind::UndeclaredVariable(name)));
                    }
                }
                Ok(Polynomial::var(v))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    let line = line.strip_suffix('\r').unwrap_or(line);
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_declaration(rest: &str, line: usize, offset: usize) -> Result<BTreeSet<Variable>, ParseError> {
    let mut declared = BTreeSet::new();
    if rest.trim().is_empty() {
        return Ok(declared);
    }
    let mut column = offset;
    for piece in rest.split(',') {
        let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
        let name = piece.trim();
        let at = column + lead + 1;
        if !is_identifier(name) {
            let msg = if name.is_empty() {
                "empty variable name in declaration".to_string()
            } else {
                format!("invalid variable name `{name}`")
            };
            return Err(ParseError {
                line,
                column: at,
                kind: ParseErrorKind::Syntax(msg),
            });
        }
        let v = Variable::new(name).expect("checked identifier");
        if !declared.insert(v) {
            return Err(ParseError {
                line,
                column: at,
                kind: ParseErrorKind::DuplicateDeclaration(name.to_string()),
            });
        }
        column += piece.chars().count() + 1;
    }
    Ok(declared)
}

/// Parses a `.poly` document into a system.
pub fn parse_system(text: &str) -> Result<PolySystem, ParseError> {
    let mut declared: Option<BTreeSet<Variable>> = None;
    let mut seen_significant = false;
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut last_line = 1;
    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        if !seen_significant {
            seen_significant = true;
            let lead = body.chars().take_while(|c| c.is_whitespace()).count();
            let trimmed = &body[body.len() - body.trim_start().len()..];
            if let Some(rest) = trimmed.strip_prefix("vars:") {
                declared = Some(parse_declaration(rest, line, lead + "vars:".len())?);
                continue;
            }
        }
        let tokens = tokenize(body, line)?;
        let first_column = tokens.first().map_or(1, |t| t.column);
        let mut parser = LineParser {
            tokens,
            pos: 0,
            line,
            end_column: body.chars().count() + 1,
            declared: declared.as_ref(),
        };
        let p = parser.parse_line()?;
        if p.is_zero() {
            return Err(ParseError {
                line,
                column: first_column,
                kind: ParseErrorKind::ZeroPolynomial,
            });
        }
        polys.push(p);
    }
    if polys.is_empty() {
        return Err(ParseError {
            line: last_line,
            column: 1,
            kind: ParseErrorKind::EmptySystem,
        });
    }
    let result = match declared {
        Some(vars) => PolySystem::new(vars.into_iter().collect(), polys),
        None => PolySystem::from_polynomials(polys),
    };
    Ok(result.expect("parser enforces system invariants"))
}

/// Parses a single polynomial expression.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let body = strip_comment(text);
    let mut parser = LineParser {
        tokens: tokenize(body, 1)?,
        pos: 0,
        line: 1,
        end_column: body.chars().count() + 1,
        declared: None,
    };
    parser.parse_line()
}

/// Canonical infix text; `parse_polynomial(&render(p)) == p`.
pub fn render(p: &Polynomial) -> String {
    p.to_string()
}
