//! Base-p carries versus the p-adic valuation of binomial coefficients.

use cobordism::numbertheory::kummer_carries;
use cobordism::symfunc::binomial;
use num_integer::Integer;
use num_traits::Zero;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2u64, 3, 5] {
        println!("p = {p}");
        for (i, j) in [(1, 1), (3, 6), (4, 4), (9, 18), (25, 100)] {
            let mut b = binomial(i + j, i);
            let mut v = 0;
            while b.mod_floor(&p.into()).is_zero() {
                b /= p;
                v += 1;
            }
            println!("  binom({}, {i}): carries {}, valuation {v}", i + j, kummer_carries(i, j, p)?);
        }
    }
    Ok(())
}
