//! Pretty-printing a parsed expression reparses to the same tree.

use proptest::prelude::*;

use cobordism::expr::{parse_class_expr, ClassExpr};
use cobordism::variety::GoodVariety;

const CORPUS: &[&str] = &[
    "CP(1)",
    "CP(2)",
    "H(2,2)",
    "H(4,5)",
    "Sigma(2)",
    "BlCP(2,3)",
    "BlLin(5,2)",
    "0",
    "42",
    "0 - CP(2)",
    "2*CP(2) - CP(1)^2",
    "CP(1)^2",
    "CP(1)^2^3",
    "(CP(1)^2)^3",
    "CP(1)*CP(1)",
    "CP(1) * (CP(1) * CP(1))",
    "(CP(1) * CP(1)) * CP(1)",
    "CP(2) + CP(2) - CP(2)",
    "CP(2) - (CP(2) - CP(2))",
    "CP(2) - (CP(2) + CP(2))",
    "3*(CP(2) + BlCP(2,1))",
    "(2 + 3)*CP(1)",
    "2^3*CP(1)",
    "(CP(1) + CP(1))^2",
    "Sigma(4)*CP(1) + BlCP(2,3) + CP(2)",
    "H(2,2) - CP(1)*CP(2)",
    "  CP( 3 )   -  BlCP( 3 , 1 )  ",
    "CP(1)\n* CP(1)\n- CP(2)",
    "((((CP(1)))))",
    "7*BlCP(5,1) + H(2,4)",
    "CP(1)*CP(1)*CP(1)*CP(1) - 4*CP(4)",
    "H(4,4)*Sigma(3) - 0",
    "(CP(2) - BlCP(2,2))*(CP(1) + 0)",
    "1*1*CP(1)",
];

#[test]
fn corpus_round_trips() {
    assert!(CORPUS.len() >= 30);
    for text in CORPUS {
        let ast = parse_class_expr(text).unwrap_or_else(|e| panic!("{text:?}: {e}"));
        let printed = ast.to_string();
        let again = parse_class_expr(&printed).unwrap_or_else(|e| panic!("{printed:?}: {e}"));
        assert_eq!(again, ast, "{text:?} printed as {printed:?}");
        // printing is idempotent
        assert_eq!(again.to_string(), printed);
    }
}

#[test]
fn evaluation_agrees_after_round_trip() {
    for text in CORPUS {
        let ast = parse_class_expr(text).unwrap();
        let again = parse_class_expr(&ast.to_string()).unwrap();
        assert_eq!(ast.evaluate().ok(), again.evaluate().ok(), "{text:?}");
    }
}

fn atom() -> impl Strategy<Value = ClassExpr> {
    prop_oneof![
        (1u32..5).prop_map(|n| ClassExpr::Atom(GoodVariety::Cp(n))),
        (2u64..6).prop_map(|g| ClassExpr::Atom(GoodVariety::Curve(g))),
        (2u32..4, 0u32..3).prop_map(|(i, d)| ClassExpr::Atom(GoodVariety::Hypersurface { i, j: i + d })),
        (0u64..20).prop_map(|k| ClassExpr::Int(k.into())),
    ]
}

fn expr() -> impl Strategy<Value = ClassExpr> {
    atom().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::Mul(Box::new(a), Box::new(b))),
            (inner, 1u32..4).prop_map(|(a, k)| ClassExpr::Pow(Box::new(a), k)),
        ]
    })
}

proptest! {
    #[test]
    fn random_trees_round_trip(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_class_expr(&printed).unwrap(), e);
    }
}
