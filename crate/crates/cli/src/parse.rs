//! Lexer and recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | '(' expr ')' | BASIS '[' parts ']' | 's' '[' shape ']' | 'X' '(' graph ')'
//! shape  := '[' parts ']' ('/' '[' parts ']')?
//! graph  := gatom ('+' gatom)*
//! gatom  := 'K' INT | 'G' '(' INT ';' (edge (',' edge)*)? ')' | '(' graph ')'
//! edge   := INT '-' INT
//! ```

use std::fmt;

use symchrom::{Basis, Partition, SkewDiagram};
use thiserror::Error;

use crate::ast::{BinOp, Expr, ExprKind, GraphExpr, GraphKind, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

/// A syntax error, or a malformed partition or shape found while parsing.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub span: Span,
    pub message: String,
    /// Tokens that would have been accepted, when the error is syntactic.
    pub expected: Vec<String>,
}

fn lex(input: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let span = Span { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_digit() {
            let mut text = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                text.push(d);
                chars.next();
                column += 1;
            }
            let n = text.parse().map_err(|_| ParseError {
                span,
                message: format!("integer {text} is too large"),
                expected: Vec::new(),
            })?;
            out.push((Tok::Int(n), span));
        } else if c.is_ascii_alphabetic() {
            let mut text = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphabetic()) {
                text.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(text), span));
        } else if "+-*/^()[],;".contains(c) {
            chars.next();
            column += 1;
            out.push((Tok::Sym(c), span));
        } else {
            return Err(ParseError {
                span,
                message: format!("unexpected character {c:?}"),
                expected: Vec::new(),
            });
        }
    }
    out.push((Tok::End, Span { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            span: self.span(),
            message: format!("expected {}, found {}", expected.join(" or "), self.peek()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<Span, ParseError> {
        let span = self.span();
        if self.eat(c) {
            Ok(span)
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn int(&mut self) -> Result<(u64, Span), ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let (_, span) = self.bump();
                Ok((n, span))
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, span) = self.bump();
            let rhs = self.term()?;
            lhs = Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            let (_, span) = self.bump();
            let rhs = self.unary()?;
            lhs = Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let span = self.span();
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        let span = self.span();
        if self.eat('^') {
            let (k, kspan) = self.int()?;
            let k = u32::try_from(k).map_err(|_| ParseError {
                span: kspan,
                message: format!("exponent {k} is too large"),
                expected: Vec::new(),
            })?;
            return Ok(Expr::new(ExprKind::Pow(Box::new(base), k), span));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::new(ExprKind::Number(n), span))
            }
            Tok::Sym('(') => {
                self.bump();
                let mut e = self.expr()?;
                self.expect(')')?;
                e.span = span;
                Ok(e)
            }
            Tok::Ident(name) if name == "X" => {
                self.bump();
                self.expect('(')?;
                let g = self.graph()?;
                self.expect(')')?;
                Ok(Expr::new(ExprKind::Chromatic(g), span))
            }
            Tok::Ident(name) => {
                let basis = match name.chars().next().and_then(Basis::from_symbol) {
                    Some(b) if name.len() == 1 => b,
                    _ => {
                        return Err(ParseError {
                            span,
                            message: format!(
                                "unknown name {name:?}; expected a basis e, h, m, p, s or X(...)"
                            ),
                            expected: ["e", "h", "m", "p", "s", "X"].map(String::from).to_vec(),
                        })
                    }
                };
                self.bump();
                self.expect('[')?;
                if basis == Basis::S && *self.peek() == Tok::Sym('[') {
                    let shape = self.shape()?;
                    self.expect(']')?;
                    return Ok(Expr::new(ExprKind::Skew(shape), span));
                }
                let lambda = self.parts(']')?;
                Ok(Expr::new(ExprKind::Basis(basis, lambda), span))
            }
            _ => Err(self.error(&["number", "'('", "basis element", "X(...)"])),
        }
    }

    /// Comma-separated parts up to and including `close`, validated.
    fn parts(&mut self, close: char) -> Result<Partition, ParseError> {
        let span = self.span();
        let mut parts = Vec::new();
        if !self.eat(close) {
            loop {
                let (n, _) = self.int()?;
                parts.push(n as usize);
                if self.eat(close) {
                    break;
                }
                if !self.eat(',') {
                    return Err(self.error(&["','", &format!("'{close}'")]));
                }
            }
        }
        Partition::new(parts).map_err(|_| ParseError {
            span,
            message: "parts must be weakly decreasing positive integers".into(),
            expected: Vec::new(),
        })
    }

    fn shape(&mut self) -> Result<SkewDiagram, ParseError> {
        let span = self.span();
        self.expect('[')?;
        let outer = self.parts(']')?;
        let inner = if self.eat('/') {
            self.expect('[')?;
            self.parts(']')?
        } else {
            Partition::empty()
        };
        SkewDiagram::new(outer, inner).map_err(|e| ParseError {
            span,
            message: e.to_string(),
            expected: Vec::new(),
        })
    }

    fn graph(&mut self) -> Result<GraphExpr, ParseError> {
        let span = self.span();
        let mut parts = vec![self.graph_atom()?];
        while self.eat('+') {
            parts.push(self.graph_atom()?);
        }
        if parts.len() == 1 {
            return Ok(parts.pop().expect("one part"));
        }
        let flat = parts
            .into_iter()
            .flat_map(|g| match g.kind {
                GraphKind::Union(inner) => inner,
                _ => vec![g],
            })
            .collect();
        Ok(GraphExpr {
            kind: GraphKind::Union(flat),
            span,
        })
    }

    fn graph_atom(&mut self) -> Result<GraphExpr, ParseError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Ident(name) if name == "K" => {
                self.bump();
                let (n, nspan) = self.int()?;
                if n == 0 {
                    return Err(ParseError {
                        span: nspan,
                        message: "complete graphs need at least one vertex".into(),
                        expected: Vec::new(),
                    });
                }
                Ok(GraphExpr {
                    kind: GraphKind::Complete(n as usize),
                    span,
                })
            }
            Tok::Ident(name) if name == "G" => {
                self.bump();
                self.expect('(')?;
                let (n, _) = self.int()?;
                self.expect(';')?;
                let mut edges = Vec::new();
                if !self.eat(')') {
                    loop {
                        let (a, _) = self.int()?;
                        self.expect('-')?;
                        let (b, _) = self.int()?;
                        edges.push((a as usize, b as usize));
                        if self.eat(')') {
                            break;
                        }
                        if !self.eat(',') {
                            return Err(self.error(&["','", "')'"]));
                        }
                    }
                }
                Ok(GraphExpr {
                    kind: GraphKind::Explicit {
                        n: n as usize,
                        edges,
                    },
                    span,
                })
            }
            Tok::Sym('(') => {
                self.bump();
                let mut g = self.graph()?;
                self.expect(')')?;
                g.span = span;
                Ok(g)
            }
            _ => Err(self.error(&["K<n>", "G(n; edges)", "'('"])),
        }
    }
}

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Parses a graph on its own: `K3+K2`, `G(4; 1-2, 2-3)`.
pub fn parse_graph(input: &str) -> Result<GraphExpr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let g = p.graph()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "end of input"]));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn e(kind: ExprKind) -> Box<Expr> {
        Box::new(Expr::new(kind, Span::default()))
    }

    #[test]
    fn grammar_example() {
        let got = parse("3*e[2,1] + s[[3,2]/[1]]").unwrap();
        let expected = Expr::new(
            ExprKind::Binary(
                BinOp::Add,
                e(ExprKind::Binary(
                    BinOp::Mul,
                    e(ExprKind::Number(3)),
                    e(ExprKind::Basis(Basis::E, part("[2,1]"))),
                )),
                e(ExprKind::Skew("[3,2]/[1]".parse().unwrap())),
            ),
            Span::default(),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn chromatic_atom() {
        let got = parse("X(K3+K2)").unwrap();
        match got.kind {
            ExprKind::Chromatic(g) => assert_eq!(g.to_string(), "K3+K2"),
            other => panic!("{other:?}"),
        }
        let g = parse_graph("G(4; 1-2, 2-3) + (K1 + K1)").unwrap();
        assert_eq!(g.to_string(), "G(4; 1-2, 2-3)+K1+K1");
    }

    #[test]
    fn precedence_and_association() {
        assert_eq!(parse("1 - 2 - 3").unwrap().to_string(), "1 - 2 - 3");
        assert_eq!(parse("1 - (2 - 3)").unwrap().to_string(), "1 - (2 - 3)");
        assert_eq!(parse("-p[1]^2").unwrap().to_string(), "-p[1]^2");
        assert_eq!(parse("(-p[1])^2").unwrap().to_string(), "(-p[1])^2");
        assert_eq!(parse("2*(p[1] + p[2])").unwrap().to_string(), "2*(p[1] + p[2])");
        assert_eq!(parse("1/3*p[3]").unwrap().to_string(), "1/3*p[3]");
        assert_eq!(parse("1/(3*p[3])").unwrap().to_string(), "1/(3*p[3])");
    }

    #[test]
    fn malformed_partitions() {
        let err = parse("e[1,2]").unwrap_err();
        assert!(err.message.contains("parts must be weakly decreasing"), "{err}");
        assert_eq!(err.span, Span { line: 1, column: 3 });
        let err = parse("s[[2,1]/[1,1,1]]").unwrap_err();
        assert!(err.message.contains("does not fit inside"), "{err}");
        assert!(parse("e[[2]/[1]]").is_err());
    }

    #[test]
    fn syntax_errors_carry_location_and_expectations() {
        let err = parse("p[1] +\n  * 2").unwrap_err();
        assert_eq!(err.span, Span { line: 2, column: 3 });
        assert!(err.expected.iter().any(|t| t == "number"));
        let err = parse("q[1]").unwrap_err();
        assert!(err.message.contains("unknown name"));
        let err = parse("p[1] p[2]").unwrap_err();
        assert_eq!(err.span, Span { line: 1, column: 6 });
        assert!(parse("X(K0)").is_err());
        assert!(parse("p[1] % 2").is_err());
    }
}
