//! Blowing up fixed points of CP^n lowers s_n by n + (-1)^n.

use cobordism::toric::{blow_up, projective_space_fan, toric_chern_vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=4 {
        let mut fan = projective_space_fan(n);
        print!("n = {n}: s =");
        for _ in 0..4 {
            print!(" {}", toric_chern_vector(&fan)?.milnor_number()?);
            fan = blow_up(&fan, 0)?;
        }
        println!();
    }
    let once = blow_up(&projective_space_fan(2), 0)?;
    println!("CP^2 blown up once: {}", once.to_json());
    print!("{}", toric_chern_vector(&once)?.to_table());
    Ok(())
}
