//! Dimensions where CP^n and H(i, n+1-i) with i >= i_min cannot produce a
//! generator, i.e. the gcd of their Milnor numbers exceeds eta(n).
//!
//! Usage: cargo run --example gcd_scan [n_max]

use cobordism::numbertheory::{scan_gcd_exceptions, Parity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(500);
    for (i_min, parity) in [(2, Parity::Even), (4, Parity::Even), (4, Parity::Odd)] {
        let failures = scan_gcd_exceptions(n_max, i_min, parity)?;
        let list: Vec<String> = failures.iter().map(|r| format!("{}(gcd {})", r.n, r.gcd)).collect();
        println!("i_min = {i_min}, {parity} n <= {n_max}: [{}]", list.join(", "));
    }
    Ok(())
}
