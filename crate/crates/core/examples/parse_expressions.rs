//! Parses class expressions, prints them canonically and evaluates them.

use cobordism::chern::Basis;
use cobordism::expr::parse_class_expr;

fn main() {
    for text in ["2*CP(2) - CP(1)^2", "(CP(1) + CP(1))^2", "H(2,2)", "CP(2) + CP(1)", "CP(2) * Foo(1)", "CP(1) +"] {
        match parse_class_expr(text) {
            Err(e) => println!("{text:?}: {e}"),
            Ok(ast) => match ast.evaluate() {
                Ok(v) => print!("{text:?} = {ast}\n{}", v.to_text(Basis::Chern)),
                Err(e) => println!("{text:?} = {ast}: {e}"),
            },
        }
    }
}
