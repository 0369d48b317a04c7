//! Arithmetic behind generator existence and the torus-rank obstruction:
//! `η(n)`, Kummer carry counts, gcds of Milnor numbers of the standard
//! generators, and the mod-8 triviality rule for `π_j(O)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberTheoryError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("n must be at least {min}, got {n}")]
    TooSmall { n: u64, min: u64 },
    #[error("minimum hypersurface index must be 2 or 4, got {0}")]
    BadMinIndex(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, k))` when `m = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > m {
        return Some((m, 1));
    }
    let (mut rest, mut k) = (m, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// `η(n) = p` if `n + 1` is a power of the prime `p`, else 1.
pub fn eta(n: u64) -> u64 {
    prime_power(n + 1).map_or(1, |(p, _)| p)
}

/// Number of carries when adding `i` and `j` in base `p`, which by Kummer's
/// theorem is the exponent of `p` in `binom(i + j, i)`.
pub fn kummer_carries(i: u64, j: u64, p: u64) -> Result<u32, NumberTheoryError> {
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    let (mut a, mut b, mut carry, mut count) = (i, j, 0, 0);
    while a > 0 || b > 0 || carry > 0 {
        let digit_sum = a % p + b % p + carry;
        carry = u64::from(digit_sum >= p);
        count += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(count)
}

/// Outcome of comparing the gcd of the candidate generator Milnor numbers
/// with `η(n)` in one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdReport {
    pub n: u64,
    pub i_min: u64,
    pub gcd: u64,
    pub eta: u64,
    pub pass: bool,
    /// The `i` of each `binom(n+1, i)` folded into the gcd before it settled.
    pub witnesses: Vec<u64>,
    /// No `i` in `[i_min, (n+1)/2]`; the gcd is `n + 1` alone.
    pub range_empty: bool,
}

/// gcd of `{n+1} ∪ {binom(n+1, i) : i_min <= i <= (n+1)/2}` against `η(n)`.
///
/// These are `|s_n|` of `CP^n` and of `H_{i, n+1-i}`. The fold stops as soon
/// as the gcd reaches `η(n)`, which always divides it.
pub fn gcd_generator_check(n: u64, i_min: u64) -> Result<GcdReport, NumberTheoryError> {
    if n < 2 {
        return Err(NumberTheoryError::TooSmall { n, min: 2 });
    }
    if i_min != 2 && i_min != 4 {
        return Err(NumberTheoryError::BadMinIndex(i_min));
    }
    let target = eta(n);
    let top = n + 1;
    let mut g = BigInt::from(top);
    let mut witnesses = Vec::new();
    let mut binom = BigInt::one();
    let i_max = top / 2;
    for i in 1..=i_max {
        binom = binom * (top - i + 1) / i;
        if i < i_min {
            continue;
        }
        if g == BigInt::from(target) {
            break;
        }
        g = g.gcd(&binom);
        witnesses.push(i);
    }
    let gcd = g.to_u64().expect("gcd divides n + 1");
    Ok(GcdReport { n, i_min, gcd, eta: target, pass: gcd == target, witnesses, range_empty: i_min > i_max })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    All,
}

impl Parity {
    fn admits(self, n: u64) -> bool {
        match self {
            Parity::Even => n.is_multiple_of(2),
            Parity::Odd => n % 2 == 1,
            Parity::All => true,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::All => "all",
        })
    }
}

impl FromStr for Parity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            "all" => Ok(Parity::All),
            _ => Err(format!("parity must be even, odd or all, got {s:?}")),
        }
    }
}

/// Every `n` in `[2, n_max]` of the given parity where the gcd check fails,
/// sorted by `n`.
pub fn scan_gcd_exceptions(n_max: u64, i_min: u64, parity: Parity) -> Result<Vec<GcdReport>, NumberTheoryError> {
    if n_max < 2 {
        return Err(NumberTheoryError::TooSmall { n: n_max, min: 2 });
    }
    let mut failures = Vec::new();
    for n in (2..=n_max).filter(|&n| parity.admits(n)) {
        let report = gcd_generator_check(n, i_min)?;
        if !report.pass {
            failures.push(report);
        }
    }
    Ok(failures)
}

/// `π_j(O)` is trivial iff `j ≡ 2, 4, 5, 6 (mod 8)` (Bott periodicity).
pub fn pi_o_trivial(j: u64) -> bool {
    matches!(j % 8, 2 | 4 | 5 | 6)
}

/// The torus rank `k` used to glue a disjoint union of good varieties of
/// complex dimension `n` into a connected manifold, and the group where the
/// extension obstruction lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionChoice {
    pub n: u64,
    pub k: u64,
    /// `j = 2n - k`; the obstruction lies in `π_{j-1}(SO/U) = π_j(O)`.
    pub obstruction_dimension: u64,
    pub trivial: bool,
}

/// `k = 4` when `n ≡ 1 (mod 4)`, otherwise `k = 2`.
pub fn choose_torus_rank(n: u64) -> Result<ObstructionChoice, NumberTheoryError> {
    if n < 3 {
        return Err(NumberTheoryError::TooSmall { n, min: 3 });
    }
    let k = if n % 4 == 1 { 4 } else { 2 };
    let j = 2 * n - k;
    Ok(ObstructionChoice { n, k, obstruction_dimension: j, trivial: pi_o_trivial(j) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_values() {
        assert_eq!(eta(1), 2);
        assert_eq!(eta(8), 3);
        assert_eq!(eta(5), 1);
        assert_eq!(eta(2), 3);
        assert_eq!(eta(7), 2);
        assert_eq!(eta(24), 5);
        assert_eq!(eta(14), 1);
    }

    #[test]
    fn carries() {
        assert_eq!(kummer_carries(2, 2, 2).unwrap(), 1);
        assert_eq!(kummer_carries(3, 6, 3).unwrap(), 1);
        assert_eq!(kummer_carries(5, 20, 5).unwrap(), 1);
        assert_eq!(kummer_carries(0, 0, 7).unwrap(), 0);
        assert_eq!(kummer_carries(1, 1, 4), Err(NumberTheoryError::NotPrime(4)));
    }

    #[test]
    fn gcd_checks() {
        let r = gcd_generator_check(4, 2).unwrap();
        assert_eq!((r.gcd, r.eta, r.pass), (5, 5, true));
        let r = gcd_generator_check(8, 4).unwrap();
        assert_eq!((r.gcd, r.eta, r.pass), (9, 3, false));
        assert_eq!(r.witnesses, vec![4]);
        let r = gcd_generator_check(8, 2).unwrap();
        assert_eq!((r.gcd, r.eta, r.pass), (3, 3, true));
        assert_eq!(r.witnesses, vec![2, 3]);
        let r = gcd_generator_check(5, 4).unwrap();
        assert!(r.range_empty);
        assert_eq!((r.gcd, r.pass), (6, false));
        assert!(gcd_generator_check(1, 2).is_err());
        assert!(gcd_generator_check(10, 3).is_err());
    }

    #[test]
    fn scans() {
        assert!(scan_gcd_exceptions(200, 2, Parity::Even).unwrap().is_empty());
        let strict = scan_gcd_exceptions(200, 4, Parity::Even).unwrap();
        assert!(strict.iter().any(|r| r.n == 8));
        let odd = scan_gcd_exceptions(20, 4, Parity::Odd).unwrap();
        // n + 1 = 2^l + 2 gives n = 5 and 9 in this range
        assert!(odd.iter().any(|r| r.n == 5));
        assert!(odd.iter().any(|r| r.n == 9));
        assert!(odd.windows(2).all(|w| w[0].n < w[1].n));
    }

    #[test]
    fn obstruction_rule() {
        assert!(pi_o_trivial(6));
        assert!(!pi_o_trivial(8));
        assert!(pi_o_trivial(13));
        let c = choose_torus_rank(5).unwrap();
        assert_eq!((c.k, c.obstruction_dimension, c.trivial), (4, 6, true));
        let c = choose_torus_rank(4).unwrap();
        assert_eq!((c.k, c.obstruction_dimension, c.trivial), (2, 6, true));
        let c = choose_torus_rank(3).unwrap();
        assert_eq!((c.k, c.obstruction_dimension, c.trivial), (2, 4, true));
        assert!(choose_torus_rank(2).is_err());
    }
}
