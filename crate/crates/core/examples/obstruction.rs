//! Torus rank used for gluing in each dimension and the homotopy group of O
//! where the extension obstruction lives.

use cobordism::numbertheory::choose_torus_rank;
use cobordism::variety::required_torus_rank;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>2} {:>9} {:>8} {:>13}", "n", "k", "group", "trivial", "min rank");
    for n in 3..=16 {
        let c = choose_torus_rank(n)?;
        let group = format!("pi_{}(O)", c.obstruction_dimension);
        println!("{n:>3} {:>2} {group:>9} {:>8} {:>13}", c.k, c.trivial, required_torus_rank(n as u32));
    }
    Ok(())
}
