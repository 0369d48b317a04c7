//! The power sum p_n written in Chern classes, evaluated on CP^n.

use cobordism::chern::cp_chern;
use cobordism::symfunc::newton_polynomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        let p = newton_polynomial(n);
        println!("p_{n} in Chern classes (partition: coefficient):\n{p}");
        println!("on CP^{n}: {}\n", cp_chern(n).to_table().evaluate(&p)?);
    }
    Ok(())
}
