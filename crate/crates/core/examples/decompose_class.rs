//! Coordinates of classes over products of generators, and a class that is
//! not in the integral span.

use cobordism::chern::{ChernNumberTable, ChernVector};
use cobordism::ring::{build_generator_system, compose, decompose};
use cobordism::variety::Mode;

fn class(c2: i64, c11: i64) -> ChernVector {
    let table =
        ChernNumberTable::from_values(2, [("2".parse().unwrap(), c2.into()), ("1,1".parse().unwrap(), c11.into())]);
    ChernVector::from_table(&table.expect("weights match"))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gs = build_generator_system(2, Mode::Relaxed)?;
    let coords = decompose(&class(11, 25), &gs)?;
    print!("(c_2, c_1^2) = (11, 25):\n{coords}");
    print!("composed back:\n{}", compose(&coords, &gs)?.to_table());
    match decompose(&class(11, 29), &gs) {
        Ok(c) => println!("unexpected: {c}"),
        Err(e) => println!("(11, 29): {e}"),
    }
    Ok(())
}
