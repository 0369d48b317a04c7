//! Integer partitions and their canonical ordering.
//!
//! Every matrix and file in this crate lists partitions of a fixed weight in
//! reverse lexicographic order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
//! [`Partition`]'s `Ord` is arranged so that ascending iteration (for example
//! over a `BTreeMap` key set) yields exactly that listing.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Text form of the empty partition (the index of dimension-zero data).
pub const EMPTY_PARTITION_TEXT: &str = "()";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition part must be a positive integer, got {0:?}")]
    BadPart(String),
    #[error("partition parts must be weakly decreasing: {0}")]
    NotDecreasing(String),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    /// The single-column partition `(1,…,1)` of `n`.
    pub fn column(n: u32) -> Self {
        Self { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Partition with one extra part.
    pub fn with_part(&self, part: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(part);
        Partition::new(parts)
    }

    /// The transposed partition: part `i` counts the parts exceeding `i`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.parts.first().copied().unwrap_or(0);
        Partition::new((0..largest).map(|i| self.parts.iter().filter(|&&p| p > i).count() as u32).collect())
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All ways to split the multiset of parts into two sub-multisets
    /// `(first, second)` with `first.weight() == first_weight`.
    ///
    /// Each split of the multiset is produced once.
    pub fn splits(&self, first_weight: u32) -> Vec<(Partition, Partition)> {
        let mults = self.multiplicities();
        let mut out = Vec::new();
        let mut take = vec![0usize; mults.len()];
        split_rec(&mults, 0, first_weight, &mut take, &mut out);
        out
    }
}

fn split_rec(
    mults: &[(u32, usize)],
    idx: usize,
    remaining: u32,
    take: &mut Vec<usize>,
    out: &mut Vec<(Partition, Partition)>,
) {
    if idx == mults.len() {
        if remaining == 0 {
            let mut first = Vec::new();
            let mut second = Vec::new();
            for (&(p, c), &t) in mults.iter().zip(take.iter()) {
                first.extend(std::iter::repeat_n(p, t));
                second.extend(std::iter::repeat_n(p, c - t));
            }
            out.push((Partition::new(first), Partition::new(second)));
        }
        return;
    }
    let (p, c) = mults[idx];
    for t in 0..=c {
        let used = p * t as u32;
        if used > remaining {
            break;
        }
        take[idx] = t;
        split_rec(mults, idx + 1, remaining - used, take, out);
    }
    take[idx] = 0;
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        // Larger in lexicographic order sorts first.
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str(EMPTY_PARTITION_TEXT);
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses the canonical text form `"2,1,1"`; `"()"` is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == EMPTY_PARTITION_TEXT {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            match tok.parse::<u32>() {
                Ok(p) if p > 0 => parts.push(p),
                _ => return Err(PartitionError::BadPart(tok.to_string())),
            }
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(s.to_string()));
        }
        Ok(Self { parts })
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
///
/// `partitions(0)` is the single empty partition.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    partitions_rec(n, n, &mut cur, &mut out);
    out
}

fn partitions_rec(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        cur.push(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Number of partitions of n via the recurrence p(n, k) = p(n, k-1) + p(n-k, k).
    fn count_partitions(n: usize) -> usize {
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        table[0].fill(1);
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if k <= m { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn small_lists() {
        assert_eq!(partitions(1), vec![Partition::row(1)]);
        let p4: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn counts_match_recurrence() {
        assert_eq!(partitions(10).len(), 42);
        for n in 1..=15 {
            assert_eq!(partitions(n as u32).len(), count_partitions(n));
        }
    }

    #[test]
    fn canonical_order_is_sorted_and_unique() {
        for n in 1..=9 {
            let ps = partitions(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
            assert!(ps.iter().all(|p| p.weight() == n));
        }
    }

    #[test]
    fn text_round_trip() {
        for p in partitions(6) {
            assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        }
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn splits_cover_multiset_once() {
        let p: Partition = "2,1,1".parse().unwrap();
        let s = p.splits(2);
        assert_eq!(s.len(), 2);
        assert!(s.contains(&(Partition::row(2), Partition::column(2))));
        assert!(s.contains(&(Partition::column(2), Partition::row(2))));
        assert_eq!(p.splits(0), vec![(Partition::empty(), p.clone())]);
    }

    #[test]
    fn conjugates() {
        let p: Partition = "3,1,1".parse().unwrap();
        assert_eq!(p.conjugate().to_string(), "3,1,1");
        assert_eq!(Partition::row(4).conjugate(), Partition::column(4));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 1..=8 {
            for q in partitions(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }
}
