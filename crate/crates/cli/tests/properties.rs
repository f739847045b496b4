use proptest::prelude::*;
use symchrom::classify::skew_shapes;
use symchrom::{partitions_of, Basis, Caps};
use symchrom_cli::ast::{BinOp, Expr, ExprKind, GraphExpr, GraphKind, Span};
use symchrom_cli::eval::evaluate;
use symchrom_cli::parse::parse;

fn node(kind: ExprKind) -> Expr {
    Expr::new(kind, Span::default())
}

fn graph_atom() -> impl Strategy<Value = GraphExpr> {
    let complete = (1usize..=3).prop_map(GraphKind::Complete);
    let explicit = (2usize..=3, prop::collection::btree_set((1usize..=3, 1usize..=3), 0..3)).prop_map(
        |(n, pairs)| GraphKind::Explicit {
            n,
            edges: pairs
                .into_iter()
                .filter(|&(a, b)| a < b && b <= n)
                .collect(),
        },
    );
    prop_oneof![complete, explicit].prop_map(|kind| GraphExpr {
        kind,
        span: Span::default(),
    })
}

fn graph() -> impl Strategy<Value = GraphExpr> {
    prop::collection::vec(graph_atom(), 1..=2).prop_map(|mut parts| {
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            GraphExpr {
                kind: GraphKind::Union(parts),
                span: Span::default(),
            }
        }
    })
}

fn leaf() -> impl Strategy<Value = Expr> {
    let number = (0u64..5).prop_map(ExprKind::Number);
    let basis = (0usize..5, 0usize..=3, any::<prop::sample::Index>()).prop_map(|(b, n, pick)| {
        let parts = partitions_of(n.max(1));
        ExprKind::Basis(Basis::ALL[b], pick.get(&parts).clone())
    });
    let skew = any::<prop::sample::Index>().prop_map(|pick| ExprKind::Skew(pick.get(&skew_shapes(3)).clone()));
    let chromatic = graph().prop_map(ExprKind::Chromatic);
    prop_oneof![number, basis, skew, chromatic].prop_map(node)
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| node(ExprKind::Neg(Box::new(e)))),
            (inner.clone(), 0u32..3).prop_map(|(e, k)| node(ExprKind::Pow(Box::new(e), k))),
            (0usize..3, inner.clone(), inner).prop_map(|(op, a, b)| {
                let op = [BinOp::Add, BinOp::Sub, BinOp::Mul][op];
                node(ExprKind::Binary(op, Box::new(a), Box::new(b)))
            }),
        ]
    })
}

fn binary(op: BinOp, a: &Expr, b: &Expr) -> Expr {
    node(ExprKind::Binary(op, Box::new(a.clone()), Box::new(b.clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printing_then_parsing_is_the_identity(e in expr()) {
        let printed = e.to_string();
        let reparsed = parse(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(&reparsed, &e, "{}", printed);
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn multiplication_distributes(a in expr(), b in expr(), c in expr()) {
        let caps = Caps::default();
        let lhs = binary(BinOp::Mul, &a, &binary(BinOp::Add, &b, &c));
        let rhs = binary(BinOp::Add, &binary(BinOp::Mul, &a, &b), &binary(BinOp::Mul, &a, &c));
        prop_assert_eq!(evaluate(&lhs, &caps).unwrap(), evaluate(&rhs, &caps).unwrap());
    }
}
