//! Symmetric functions in degree `n`: the elementary basis `e_λ`, the
//! monomial basis `m_λ`, and power sums via Newton's identities.
//!
//! Chern classes are the elementary symmetric functions of the Chern roots,
//! so a polynomial in `c_1, …, c_n` is a [`SymPolynomial`] keyed by
//! partitions (`λ ↦ c_{λ1}···c_{λk}`).

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg;
use crate::partition::{partitions, Partition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("partition {partition} has weight {weight}, expected {degree}")]
    Weight { partition: Partition, weight: u32, degree: u32 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A homogeneous polynomial in the Chern classes `c_1, …, c_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPolynomial {
    degree: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymPolynomial {
    pub fn zero(degree: u32) -> Self {
        Self { degree, coeffs: BTreeMap::new() }
    }

    /// The monomial `c_{λ1}···c_{λk}` with coefficient one.
    pub fn monomial(lambda: Partition) -> Self {
        let mut p = Self::zero(lambda.weight());
        p.coeffs.insert(lambda, BigInt::one());
        p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, lambda: Partition, c: BigInt) {
        debug_assert_eq!(lambda.weight(), self.degree);
        match self.coeffs.entry(lambda) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    /// `self + scale · other`.
    fn add_scaled(&mut self, other: &SymPolynomial, scale: &BigInt) {
        for (lambda, c) in &other.coeffs {
            self.add_term(lambda.clone(), c * scale);
        }
    }

    /// Multiplies by `c_i`.
    pub fn times_chern_class(&self, i: u32) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.degree + i);
        for (lambda, c) in &self.coeffs {
            out.add_term(lambda.with_part(i), c.clone());
        }
        out
    }

    /// Evaluates the polynomial given the value of each Chern monomial.
    pub fn evaluate<F>(&self, mut value: F) -> BigInt
    where
        F: FnMut(&Partition) -> BigInt,
    {
        self.coeffs.iter().map(|(lambda, c)| c * value(lambda)).sum()
    }

    /// Coordinates in the monomial basis `m_μ`, in canonical partition order.
    pub fn to_m_coordinates(&self) -> Vec<BigInt> {
        let e_to_m = e_to_m_matrix(self.degree);
        let mut out = vec![BigInt::zero(); e_to_m.size()];
        for (lambda, c) in &self.coeffs {
            let row = e_to_m.index_of(lambda).expect("weight checked on insert");
            for (o, entry) in out.iter_mut().zip(&e_to_m.entries()[row]) {
                *o += c * entry;
            }
        }
        out
    }
}

impl fmt::Display for SymPolynomial {
    /// One `λ: coefficient` line per non-zero term, canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (lambda, c) in &self.coeffs {
            writeln!(f, "{lambda}: {c}")?;
        }
        Ok(())
    }
}

impl SymPolynomial {
    /// Parses `λ: coefficient` lines of the given degree. Blank lines are skipped.
    pub fn parse(degree: u32, text: &str) -> Result<Self, SymError> {
        let mut p = SymPolynomial::zero(degree);
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| SymError::Parse { line: i + 1, msg: "expected `λ: coefficient`".into() })?;
            let lambda = Partition::from_str(lhs)?;
            if lambda.weight() != degree {
                return Err(SymError::Weight { weight: lambda.weight(), partition: lambda, degree });
            }
            let c = BigInt::from_str(rhs.trim()).map_err(|e| SymError::Parse { line: i + 1, msg: e.to_string() })?;
            p.add_term(lambda, c);
        }
        Ok(p)
    }
}

/// A square integer matrix with rows and columns indexed by the partitions of
/// `degree` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    degree: u32,
    basis: Vec<Partition>,
    index: HashMap<Partition, usize>,
    entries: linalg::IntMatrix,
}

impl BasisMatrix {
    fn new(degree: u32, entries: linalg::IntMatrix) -> Self {
        let basis = partitions(degree);
        let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self { degree, basis, index, entries }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn entries(&self) -> &linalg::IntMatrix {
        &self.entries
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> BigInt {
        match (self.index_of(row), self.index_of(col)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.entries).expect("basis matrices are square")
    }

    /// `v ↦ M v` for a column vector in canonical order.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.entries.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`, i.e.
/// the coefficient of `x^cols` in `e_{rows[0]} e_{rows[1]} ···`.
fn zero_one_matrix_count(rows: &[u32], cols: &[u32]) -> BigInt {
    let mut memo = HashMap::new();
    let mut demand: Vec<u32> = cols.to_vec();
    demand.sort_unstable_by(|a, b| b.cmp(a));
    count_rec(rows, demand, &mut memo)
}

fn count_rec(rows: &[u32], demand: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), BigInt>) -> BigInt {
    let Some((&first, rest)) = rows.split_first() else {
        return if demand.iter().all(|&d| d == 0) { BigInt::one() } else { BigInt::zero() };
    };
    let key = (rows.len(), demand.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // Columns with the same outstanding demand are interchangeable: choose how
    // many columns of each demand class this row covers.
    let mut classes: Vec<(u32, usize)> = Vec::new();
    for &d in demand.iter().filter(|&&d| d > 0) {
        match classes.last_mut() {
            Some((v, c)) if *v == d => *c += 1,
            _ => classes.push((d, 1)),
        }
    }
    let mut total = BigInt::zero();
    let mut pick = vec![0usize; classes.len()];
    choose_rec(&classes, 0, first as usize, &mut pick, &mut |pick| {
        let mut ways = BigInt::one();
        let mut next = Vec::new();
        for (&(d, c), &k) in classes.iter().zip(pick.iter()) {
            ways *= binomial(c as u64, k as u64);
            next.extend(std::iter::repeat_n(d - 1, k));
            next.extend(std::iter::repeat_n(d, c - k));
        }
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += ways * count_rec(rest, next, memo);
    });
    memo.insert(key, total.clone());
    total
}

fn choose_rec(
    classes: &[(u32, usize)],
    idx: usize,
    remaining: usize,
    pick: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if idx == classes.len() {
        if remaining == 0 {
            f(pick);
        }
        return;
    }
    for k in 0..=classes[idx].1.min(remaining) {
        pick[idx] = k;
        choose_rec(classes, idx + 1, remaining - k, pick, f);
    }
    pick[idx] = 0;
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

type MatrixCache = Mutex<HashMap<u32, Arc<BasisMatrix>>>;

fn cached(cache: &'static OnceLock<MatrixCache>, n: u32, build: fn(u32) -> BasisMatrix) -> Arc<BasisMatrix> {
    let cache = cache.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return m.clone();
    }
    let m = Arc::new(build(n));
    cache.lock().unwrap().entry(n).or_insert(m).clone()
}

/// Row `λ` holds the expansion of `e_λ` in the monomial basis `m_μ`.
pub fn e_to_m_matrix(n: u32) -> Arc<BasisMatrix> {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    cached(&CACHE, n, |n| {
        let basis = partitions(n);
        let entries = basis
            .iter()
            .map(|lambda| basis.iter().map(|mu| zero_one_matrix_count(lambda.parts(), mu.parts())).collect())
            .collect();
        BasisMatrix::new(n, entries)
    })
}

/// Row `μ` holds the expansion of `m_μ` in the elementary basis; the exact
/// inverse of [`e_to_m_matrix`].
pub fn m_to_e_matrix(n: u32) -> Arc<BasisMatrix> {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    cached(&CACHE, n, |n| {
        let forward = e_to_m_matrix(n);
        // E[λ][μ'] vanishes unless μ dominates λ and is 1 at μ = λ, so with
        // conjugated columns E is unit lower triangular in canonical order
        let basis = partitions(n);
        let conj: Vec<usize> = basis.iter().map(|l| forward.index_of(&l.conjugate()).expect("same weight")).collect();
        let permuted: Vec<Vec<BigInt>> =
            forward.entries().iter().map(|row| conj.iter().map(|&c| row[c].clone()).collect()).collect();
        let inv = match linalg::inverse_unit_lower(&permuted) {
            // row μ of E^{-1} is row μ' of the permuted inverse
            Some(p_inv) => conj.iter().map(|&c| p_inv[c].clone()).collect(),
            None => linalg::inverse_integral(forward.entries()).expect("e-to-m matrix is unimodular in every degree"),
        };
        BasisMatrix::new(n, inv)
    })
}

/// The power sum `p_n` written in Chern classes: the Milnor-number polynomial.
pub fn newton_polynomial(n: u32) -> SymPolynomial {
    assert!(n >= 1, "newton_polynomial needs n >= 1");
    let mut power_sums: Vec<SymPolynomial> = Vec::with_capacity(n as usize);
    for k in 1..=n {
        // p_k = Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        let mut p = SymPolynomial::zero(k);
        for i in 1..k {
            let sign = if i % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            let term = power_sums[(k - i - 1) as usize].times_chern_class(i);
            p.add_scaled(&term, &sign);
        }
        let last = BigInt::from(k) * if k % 2 == 1 { 1 } else { -1 };
        p.add_term(Partition::row(k), last);
        power_sums.push(p);
    }
    power_sums.pop().unwrap()
}

/// `true` when every entry is zero.
pub fn is_zero_vector(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Largest absolute entry; handy for diagnostics.
pub fn max_abs(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Oracle: expand e_λ as a polynomial in n variables by brute force and
    /// read off the coefficient of the sorted exponent vector μ.
    fn brute_force_e_to_m(n: u32) -> linalg::IntMatrix {
        let vars = n as usize;
        let basis = partitions(n);
        basis
            .iter()
            .map(|lambda| {
                // polynomial as map exponent-vector -> coefficient
                let mut poly: HashMap<Vec<u32>, BigInt> = HashMap::new();
                poly.insert(vec![0; vars], BigInt::one());
                for &part in lambda.parts() {
                    let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
                    for subset in 0u32..(1 << vars) {
                        if subset.count_ones() != part {
                            continue;
                        }
                        for (exp, c) in &poly {
                            let mut e = exp.clone();
                            for (v, ev) in e.iter_mut().enumerate() {
                                if subset & (1 << v) != 0 {
                                    *ev += 1;
                                }
                            }
                            *next.entry(e).or_default() += c;
                        }
                    }
                    poly = next;
                }
                basis
                    .iter()
                    .map(|mu| {
                        let mut exp = mu.parts().to_vec();
                        exp.resize(vars, 0);
                        poly.get(&exp).cloned().unwrap_or_default()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn e_to_m_small_degrees() {
        let m1 = e_to_m_matrix(1);
        assert_eq!(m1.entries(), &linalg::identity(1));
        let m2 = e_to_m_matrix(2);
        // e_2 = m_11 ; e_1^2 = m_2 + 2 m_11
        assert_eq!(m2.entry(&p("2"), &p("2")), BigInt::zero());
        assert_eq!(m2.entry(&p("2"), &p("1,1")), BigInt::one());
        assert_eq!(m2.entry(&p("1,1"), &p("2")), BigInt::one());
        assert_eq!(m2.entry(&p("1,1"), &p("1,1")), BigInt::from(2));
        assert_eq!(m2.determinant().abs(), BigInt::one());
        assert_eq!(e_to_m_matrix(3).determinant().abs(), BigInt::one());
    }

    #[test]
    fn e_to_m_matches_brute_force_expansion() {
        for n in 1..=6 {
            assert_eq!(e_to_m_matrix(n).entries(), &brute_force_e_to_m(n), "degree {n}");
        }
    }

    #[test]
    fn m_to_e_is_integral_inverse() {
        let inv2 = m_to_e_matrix(2);
        // inverse of [[0,1],[1,2]] is [[-2,1],[1,0]]
        let expected: linalg::IntMatrix =
            vec![vec![BigInt::from(-2), BigInt::one()], vec![BigInt::one(), BigInt::zero()]];
        assert_eq!(inv2.entries(), &expected);
        for n in 1..=10 {
            let fwd = e_to_m_matrix(n);
            let inv = m_to_e_matrix(n);
            assert_eq!(linalg::multiply(fwd.entries(), inv.entries()), linalg::identity(fwd.size()));
            assert_eq!(fwd.determinant().abs(), BigInt::one());
        }
    }

    #[test]
    fn newton_low_degrees() {
        assert_eq!(newton_polynomial(1).to_string(), "1: 1\n");
        assert_eq!(newton_polynomial(2).to_string(), "2: -2\n1,1: 1\n");
        assert_eq!(newton_polynomial(3).to_string(), "3: 3\n2,1: -3\n1,1,1: 1\n");
    }

    #[test]
    fn newton_is_single_row_monomial_function() {
        for n in 1..=10 {
            let coords = newton_polynomial(n).to_m_coordinates();
            let basis = partitions(n);
            for (lambda, c) in basis.iter().zip(coords) {
                let expected = if *lambda == Partition::row(n) { BigInt::one() } else { BigInt::zero() };
                assert_eq!(c, expected, "n={n} λ={lambda}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let p6 = newton_polynomial(6);
        assert_eq!(SymPolynomial::parse(6, &p6.to_string()).unwrap(), p6);
        assert!(matches!(SymPolynomial::parse(3, "2: 1"), Err(SymError::Weight { .. })));
        assert!(matches!(SymPolynomial::parse(2, "2 1"), Err(SymError::Parse { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 4), BigInt::from(126));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
