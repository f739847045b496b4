use std::fmt;

use symchrom::{Basis, Partition, SkewDiagram};

/// 1-based source location.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }
}

/// An expression node. Equality ignores source locations.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    /// Nonnegative integer literal; rationals arise from `/`.
    Number(u64),
    Basis(Basis, Partition),
    Skew(SkewDiagram),
    Chromatic(GraphExpr),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A graph written as `K5`, `G(4; 1-2, 2-3)`, or a `+`-union of those.
#[derive(Clone, Debug)]
pub struct GraphExpr {
    pub kind: GraphKind,
    pub span: Span,
}

impl PartialEq for GraphExpr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    Complete(usize),
    Explicit { n: usize, edges: Vec<(usize, usize)> },
    Union(Vec<GraphExpr>),
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    /// Binding strength, used to decide where the printer needs parentheses.
    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, ..) => op.precedence(),
            ExprKind::Neg(_) => 3,
            ExprKind::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    /// Prints with the minimal parentheses needed to parse back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(n) => write!(f, "{n}"),
            ExprKind::Basis(b, lambda) => write!(f, "{b}{lambda}"),
            ExprKind::Skew(d) => write!(f, "s[{d}]"),
            ExprKind::Chromatic(g) => write!(f, "X({g})"),
            ExprKind::Neg(inner) => {
                f.write_str("-")?;
                write_operand(f, inner, inner.precedence() < 3)
            }
            ExprKind::Pow(base, k) => {
                write_operand(f, base, base.precedence() < 5)?;
                write!(f, "^{k}")
            }
            ExprKind::Binary(op, lhs, rhs) => {
                let p = op.precedence();
                write_operand(f, lhs, lhs.precedence() < p)?;
                f.write_str(op.symbol())?;
                write_operand(f, rhs, rhs.precedence() <= p)
            }
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GraphKind::Complete(n) => write!(f, "K{n}"),
            GraphKind::Explicit { n, edges } => {
                write!(f, "G({n};")?;
                for (i, (a, b)) in edges.iter().enumerate() {
                    let sep = if i == 0 { " " } else { ", " };
                    write!(f, "{sep}{a}-{b}")?;
                }
                f.write_str(")")
            }
            GraphKind::Union(parts) => {
                for (i, g) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}
