//! Searches for polynomial generators in both modes and prints the survey.
//!
//! Usage: cargo run --example generators [max_dim]

use cobordism::ring::survey_generators;
use cobordism::variety::Mode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_dim = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(10);
    for mode in [Mode::Strict, Mode::Relaxed] {
        print!("{}", survey_generators(max_dim, mode)?);
    }
    Ok(())
}
