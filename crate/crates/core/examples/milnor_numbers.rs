//! Milnor numbers of projective spaces and Milnor hypersurfaces.

use cobordism::chern::{cp_chern, milnor_hypersurface_chern};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=8 {
        println!("s_{n}(CP^{n}) = {}", cp_chern(n).milnor_number()?);
    }
    for i in 2..=5 {
        for j in i..=5 {
            let v = milnor_hypersurface_chern(i, j)?;
            println!("s_{}(H({i},{j})) = {}", v.dim(), v.milnor_number()?);
        }
    }
    Ok(())
}
