//! Realizes -[CP^2] and a few other classes by disjoint unions of good
//! varieties, then verifies them independently.

use cobordism::expr::parse_class_expr;
use cobordism::realization::{realize, verify_realization};
use cobordism::variety::Mode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (text, mode) in [
        ("0 - CP(2)", Mode::Strict),
        ("2*CP(1)^3 - 3*BlCP(3,1)", Mode::Strict),
        ("0 - CP(4)", Mode::Strict),
        ("CP(5) - CP(1)*CP(4)", Mode::Relaxed),
    ] {
        let v = parse_class_expr(text)?.evaluate()?;
        let r = realize(&v, mode)?;
        let report = verify_realization(&r, &v);
        println!("{text}\n{}", r.to_text(report.passed()));
    }
    Ok(())
}
