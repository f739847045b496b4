use num_bigint::BigInt;
use symchrom::{Caps, Graph, Rational, SymFunc};
use thiserror::Error;

use crate::ast::{BinOp, Expr, ExprKind, GraphExpr, GraphKind, Span};

/// A library error tied to the expression node that raised it.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{span}: {source}")]
pub struct EvalError {
    pub span: Span,
    pub source: symchrom::Error,
}

fn at(span: Span) -> impl Fn(symchrom::Error) -> EvalError {
    move |source| EvalError { span, source }
}

pub fn build_graph(g: &GraphExpr) -> Result<Graph, EvalError> {
    match &g.kind {
        GraphKind::Complete(n) => Graph::complete(*n).map_err(at(g.span)),
        GraphKind::Explicit { n, edges } => Graph::new(*n, edges.iter().copied()).map_err(at(g.span)),
        GraphKind::Union(parts) => {
            let mut graphs = parts.iter().map(build_graph);
            let first = graphs.next().expect("unions have parts")?;
            graphs.try_fold(first, |acc, g| Ok(acc.disjoint_union(&g?)))
        }
    }
}

/// `X_G` by the edge-subset sum, falling back to stable partitions when the
/// edge count is over the cap but the vertex count is not.
pub fn chromatic(g: &Graph, caps: &Caps) -> symchrom::Result<SymFunc> {
    if g.num_edges() <= caps.max_edges {
        g.chromatic_sym_edges(caps)
    } else {
        g.chromatic_sym_stable(caps)
    }
}

pub fn evaluate(e: &Expr, caps: &Caps) -> Result<SymFunc, EvalError> {
    Ok(match &e.kind {
        ExprKind::Number(n) => SymFunc::constant(Rational::from_integer(BigInt::from(*n))),
        ExprKind::Basis(b, lambda) => SymFunc::from_basis(*b, lambda),
        ExprKind::Skew(d) => SymFunc::skew_schur(d),
        ExprKind::Chromatic(g) => chromatic(&build_graph(g)?, caps).map_err(at(g.span))?,
        ExprKind::Neg(inner) => -evaluate(inner, caps)?,
        ExprKind::Pow(base, k) => evaluate(base, caps)?.pow(*k),
        ExprKind::Binary(op, lhs, rhs) => {
            let (a, b) = (evaluate(lhs, caps)?, evaluate(rhs, caps)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => &a * &b,
                BinOp::Div => {
                    let divisor = b
                        .as_constant()
                        .filter(|c| *c != Rational::from_integer(0.into()))
                        .ok_or_else(|| EvalError {
                            span: e.span,
                            source: symchrom::Error::Domain(
                                "division is only by nonzero constants".into(),
                            ),
                        })?;
                    a.scale(&divisor.recip())
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use symchrom::{Basis, Partition};

    fn eval(s: &str) -> Result<SymFunc, EvalError> {
        evaluate(&parse(s).unwrap(), &Caps::default())
    }

    #[test]
    fn examples() {
        assert!(eval("X(K2) - 2*s[[1,1]]").unwrap().is_zero());
        assert_eq!(
            eval("p[2,1]").unwrap(),
            SymFunc::power_sum("[2,1]".parse::<Partition>().unwrap())
        );
        assert!(eval("h[3] - (1/3)*p[3] - (1/2)*p[2,1] - (1/6)*p[1,1,1]")
            .unwrap()
            .is_zero());
        assert_eq!(eval("X(K3+K2)").unwrap().display_in(Basis::E), "12*e[3,2]");
        assert_eq!(eval("(p[1] + 1)^2").unwrap().display_in(Basis::P), "1 + 2*p[1] + p[1,1]");
    }

    #[test]
    fn errors_carry_locations() {
        let err = eval("p[1] / p[1]").unwrap_err();
        assert_eq!(err.span, Span { line: 1, column: 6 });
        let err = eval("1 + X(G(2; 1-3))").unwrap_err();
        assert_eq!(err.span, Span { line: 1, column: 7 });
        let caps = Caps {
            max_edges: 2,
            max_vertices: 2,
        };
        let err = evaluate(&parse("X(K3)").unwrap(), &caps).unwrap_err();
        assert!(err.source.is_resource());
        assert_eq!(err.span, Span { line: 1, column: 3 });
    }

    #[test]
    fn falls_back_to_stable_partitions() {
        let caps = Caps {
            max_edges: 2,
            max_vertices: 12,
        };
        let x = evaluate(&parse("X(K4)").unwrap(), &caps).unwrap();
        assert_eq!(x.display_in(Basis::E), "24*e[4]");
    }
}
