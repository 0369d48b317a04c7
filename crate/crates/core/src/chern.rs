//! Cobordism classes as complete sets of Chern numbers.
//!
//! A [`ChernVector`] stores, for each partition `λ` of the complex dimension,
//! the integral of the monomial symmetric function `m_λ` of the Chern roots.
//! In that basis the Milnor number is a single coordinate and the Chern data
//! of a product is a convolution over splittings of `λ`. The familiar Chern
//! numbers `c_{λ1}···c_{λk}[M]` are the [`ChernNumberTable`] view of the same
//! data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{partitions, Partition, PartitionError};
use crate::symfunc::{binomial, e_to_m_matrix, m_to_e_matrix, SymPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChernError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("partition {partition} does not have weight {dim}")]
    WeightMismatch { partition: Partition, dim: u32 },
    #[error("Milnor number is undefined in dimension 0")]
    DimensionZero,
    #[error("Milnor hypersurface H({i},{j}) needs 1 <= i <= j")]
    InvalidHypersurface { i: u32, j: u32 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Which basis a Chern data file is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Basis {
    /// Chern numbers `c_{λ1}···c_{λk}[M]`.
    #[default]
    Chern,
    /// Monomial symmetric functions `m_λ` of the Chern roots.
    Monomial,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Chern => "c",
            Basis::Monomial => "m",
        })
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "c" => Ok(Basis::Chern),
            "m" => Ok(Basis::Monomial),
            other => Err(format!("unknown basis {other:?}, expected `c` or `m`")),
        }
    }
}

/// Sparse map from partitions of a fixed weight to integers; zeros are absent.
fn insert_nonzero(map: &mut BTreeMap<Partition, BigInt>, key: Partition, value: BigInt) {
    if value.is_zero() {
        map.remove(&key);
    } else {
        map.insert(key, value);
    }
}

/// A complex cobordism class of complex dimension `dim`, stored in the
/// monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChernVector {
    dim: u32,
    mcoords: BTreeMap<Partition, BigInt>,
}

/// The same class presented by its Chern numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernNumberTable {
    dim: u32,
    values: BTreeMap<Partition, BigInt>,
}

impl ChernVector {
    pub fn zero(dim: u32) -> Self {
        Self { dim, mcoords: BTreeMap::new() }
    }

    /// `k` signed points.
    pub fn point(k: impl Into<BigInt>) -> Self {
        let mut v = Self::zero(0);
        insert_nonzero(&mut v.mcoords, Partition::empty(), k.into());
        v
    }

    /// Builds a class from monomial-basis coordinates.
    pub fn from_m_coords<I>(dim: u32, coords: I) -> Result<Self, ChernError>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut v = Self::zero(dim);
        for (lambda, c) in coords {
            if lambda.weight() != dim {
                return Err(ChernError::WeightMismatch { partition: lambda, dim });
            }
            let total = v.m_coord(&lambda) + c;
            insert_nonzero(&mut v.mcoords, lambda, total);
        }
        Ok(v)
    }

    /// Builds a class from a dense monomial-basis vector in canonical order.
    pub fn from_m_vector(dim: u32, coords: Vec<BigInt>) -> Self {
        let basis = partitions(dim);
        assert_eq!(basis.len(), coords.len(), "coordinate vector has wrong length");
        let mut v = Self::zero(dim);
        for (lambda, c) in basis.into_iter().zip(coords) {
            insert_nonzero(&mut v.mcoords, lambda, c);
        }
        v
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.mcoords.is_empty()
    }

    pub fn m_coord(&self, lambda: &Partition) -> BigInt {
        self.mcoords.get(lambda).cloned().unwrap_or_default()
    }

    /// Non-zero monomial coordinates in canonical order.
    pub fn m_coords(&self) -> &BTreeMap<Partition, BigInt> {
        &self.mcoords
    }

    /// Dense monomial-basis vector in canonical partition order.
    pub fn m_vector(&self) -> Vec<BigInt> {
        partitions(self.dim).iter().map(|l| self.m_coord(l)).collect()
    }

    pub fn add(&self, other: &ChernVector) -> Result<ChernVector, ChernError> {
        if self.dim != other.dim {
            return Err(ChernError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let mut out = self.clone();
        for (lambda, c) in &other.mcoords {
            let total = out.m_coord(lambda) + c;
            insert_nonzero(&mut out.mcoords, lambda.clone(), total);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ChernVector) -> Result<ChernVector, ChernError> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, k: &BigInt) -> ChernVector {
        if k.is_zero() {
            return ChernVector::zero(self.dim);
        }
        ChernVector { dim: self.dim, mcoords: self.mcoords.iter().map(|(l, c)| (l.clone(), c * k)).collect() }
    }

    pub fn neg(&self) -> ChernVector {
        self.scale(&-BigInt::one())
    }

    /// Chern data of the product manifold.
    ///
    /// Uses `m_λ(x ⊔ y) = Σ_{μ ∪ ν = λ} m_μ(x) m_ν(y)`; only splittings with
    /// `|μ| = dim a` and `|ν| = dim b` survive integration.
    pub fn product(&self, other: &ChernVector) -> ChernVector {
        let dim = self.dim + other.dim;
        let mut out = ChernVector::zero(dim);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for lambda in partitions(dim) {
            let mut total = BigInt::zero();
            for (mu, nu) in lambda.splits(self.dim) {
                if let (Some(a), Some(b)) = (self.mcoords.get(&mu), other.mcoords.get(&nu)) {
                    total += a * b;
                }
            }
            insert_nonzero(&mut out.mcoords, lambda, total);
        }
        out
    }

    /// The Milnor number `s_n`, i.e. the coordinate at the single-row partition.
    pub fn milnor_number(&self) -> Result<BigInt, ChernError> {
        if self.dim == 0 {
            return Err(ChernError::DimensionZero);
        }
        Ok(self.m_coord(&Partition::row(self.dim)))
    }

    /// The Chern number `c_{λ1}···c_{λk}[M]`.
    pub fn chern_number(&self, lambda: &Partition) -> Result<BigInt, ChernError> {
        if lambda.weight() != self.dim {
            return Err(ChernError::WeightMismatch { partition: lambda.clone(), dim: self.dim });
        }
        let e_to_m = e_to_m_matrix(self.dim);
        Ok(self.mcoords.iter().map(|(mu, c)| c * e_to_m.entry(lambda, mu)).sum())
    }

    pub fn to_table(&self) -> ChernNumberTable {
        let e_to_m = e_to_m_matrix(self.dim);
        let values = e_to_m.apply(&self.m_vector());
        let mut table = ChernNumberTable { dim: self.dim, values: BTreeMap::new() };
        for (lambda, v) in e_to_m.basis().iter().cloned().zip(values) {
            insert_nonzero(&mut table.values, lambda, v);
        }
        table
    }

    pub fn from_table(table: &ChernNumberTable) -> ChernVector {
        // Chern numbers are t = E m, so m = E^{-1} t.
        let m_to_e = m_to_e_matrix(table.dim);
        let basis = m_to_e.basis().to_vec();
        let t = table.vector();
        let coords =
            (0..basis.len()).map(|i| (0..basis.len()).map(|j| &m_to_e.entries()[i][j] * &t[j]).sum()).collect();
        ChernVector::from_m_vector(table.dim, coords)
    }

    /// Text form: `dim:` and `basis:` headers then one `λ: value` line per
    /// partition of `dim`, in canonical order.
    pub fn to_text(&self, basis: Basis) -> String {
        let mut out = format!("dim: {}\nbasis: {}\n", self.dim, basis);
        let values = match basis {
            Basis::Chern => self.to_table().vector(),
            Basis::Monomial => self.m_vector(),
        };
        for (lambda, v) in partitions(self.dim).iter().zip(values) {
            out.push_str(&format!("{lambda}: {v}\n"));
        }
        out
    }

    /// Parses the text form. A missing `basis:` header means the Chern basis;
    /// partitions absent from the body are zero.
    pub fn parse(text: &str) -> Result<ChernVector, ChernError> {
        let (dim, basis, body) = parse_headers(text)?;
        let entries = parse_entries(dim, body)?;
        match basis {
            Basis::Monomial => ChernVector::from_m_coords(dim, entries),
            Basis::Chern => {
                let mut table = ChernNumberTable { dim, values: BTreeMap::new() };
                for (lambda, v) in entries {
                    insert_nonzero(&mut table.values, lambda, v);
                }
                Ok(ChernVector::from_table(&table))
            }
        }
    }
}

impl ChernNumberTable {
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.values.get(lambda).cloned().unwrap_or_default()
    }

    /// Dense vector of Chern numbers in canonical order.
    pub fn vector(&self) -> Vec<BigInt> {
        partitions(self.dim).iter().map(|l| self.get(l)).collect()
    }

    pub fn from_values<I>(dim: u32, values: I) -> Result<Self, ChernError>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut table = ChernNumberTable { dim, values: BTreeMap::new() };
        for (lambda, v) in values {
            if lambda.weight() != dim {
                return Err(ChernError::WeightMismatch { partition: lambda, dim });
            }
            insert_nonzero(&mut table.values, lambda, v);
        }
        Ok(table)
    }

    /// Evaluates a polynomial in Chern classes on this manifold.
    pub fn evaluate(&self, poly: &SymPolynomial) -> Result<BigInt, ChernError> {
        if poly.degree() != self.dim {
            return Err(ChernError::DimensionMismatch { left: poly.degree(), right: self.dim });
        }
        Ok(poly.evaluate(|lambda| self.get(lambda)))
    }
}

impl fmt::Display for ChernNumberTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim: {}", self.dim)?;
        writeln!(f, "basis: c")?;
        for lambda in partitions(self.dim) {
            writeln!(f, "{}: {}", lambda, self.get(&lambda))?;
        }
        Ok(())
    }
}

/// Body lines of a text file with their 1-based line numbers.
pub(crate) type Body<'a> = Vec<(usize, &'a str)>;

/// Splits off `dim:` and optional `basis:` headers; returns the remaining body
/// lines with their 1-based line numbers.
pub(crate) fn parse_headers(text: &str) -> Result<(u32, Basis, Body<'_>), ChernError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (n, first) = lines.next().ok_or(ChernError::Parse { line: 1, msg: "empty input".into() })?;
    let dim = first
        .strip_prefix("dim:")
        .and_then(|d| d.trim().parse::<u32>().ok())
        .ok_or_else(|| ChernError::Parse { line: n, msg: "expected `dim: <n>` header".into() })?;
    let mut body: Vec<(usize, &str)> = lines.collect();
    let mut basis = Basis::Chern;
    if let Some(&(n, l)) = body.first() {
        if let Some(b) = l.strip_prefix("basis:") {
            basis = b.parse().map_err(|msg| ChernError::Parse { line: n, msg })?;
            body.remove(0);
        }
    }
    Ok((dim, basis, body))
}

/// Parses `λ: value` lines, rejecting duplicates and wrong weights.
pub(crate) fn parse_entries(dim: u32, body: Body<'_>) -> Result<Vec<(Partition, BigInt)>, ChernError> {
    let mut seen = BTreeMap::new();
    for (n, line) in body {
        let (lhs, rhs) =
            line.split_once(':').ok_or_else(|| ChernError::Parse { line: n, msg: "expected `λ: value`".into() })?;
        let lambda: Partition = lhs.parse()?;
        if lambda.weight() != dim {
            return Err(ChernError::WeightMismatch { partition: lambda, dim });
        }
        let v = BigInt::from_str(rhs.trim()).map_err(|e| ChernError::Parse { line: n, msg: e.to_string() })?;
        if seen.insert(lambda.clone(), v).is_some() {
            return Err(ChernError::Parse { line: n, msg: format!("duplicate entry for {lambda}") });
        }
    }
    Ok(seen.into_iter().collect())
}

/// Chern data of `CP^n`: the Chern number at `λ` is `∏ binom(n+1, λ_i)`.
pub fn cp_chern(n: u32) -> ChernVector {
    let values = partitions(n).into_iter().map(|lambda| {
        let v = lambda.parts().iter().map(|&p| binomial(n as u64 + 1, p as u64)).product();
        (lambda, v)
    });
    let table = ChernNumberTable::from_values(n, values).expect("weights match by construction");
    ChernVector::from_table(&table)
}

/// Chern data of a genus-`g` curve: `c_1 = 2 - 2g`.
pub fn curve_chern(g: u64) -> ChernVector {
    let c1 = BigInt::from(2) - BigInt::from(2) * BigInt::from(g);
    ChernVector::from_m_coords(1, [(Partition::row(1), c1)]).expect("weight 1")
}

/// Dense truncated polynomial ring `Z[x,y]/(x^{i+1}, y^{j+1})`.
#[derive(Clone)]
struct Truncated {
    i: usize,
    j: usize,
    /// `c[a][b]` is the coefficient of `x^a y^b`.
    c: Vec<Vec<BigInt>>,
}

impl Truncated {
    fn zero(i: usize, j: usize) -> Self {
        Self { i, j, c: vec![vec![BigInt::zero(); j + 1]; i + 1] }
    }

    fn one(i: usize, j: usize) -> Self {
        let mut t = Self::zero(i, j);
        t.c[0][0] = BigInt::one();
        t
    }

    fn mul(&self, other: &Truncated) -> Truncated {
        let mut out = Truncated::zero(self.i, self.j);
        for a in 0..=self.i {
            for b in 0..=self.j {
                if self.c[a][b].is_zero() {
                    continue;
                }
                for c in 0..=self.i - a {
                    for d in 0..=self.j - b {
                        out.c[a + c][b + d] += &self.c[a][b] * &other.c[c][d];
                    }
                }
            }
        }
        out
    }

    fn homogeneous_part(&self, degree: usize) -> Truncated {
        let mut out = Truncated::zero(self.i, self.j);
        for a in 0..=self.i.min(degree) {
            let b = degree - a;
            if b <= self.j {
                out.c[a][b] = self.c[a][b].clone();
            }
        }
        out
    }

    /// `(1 + x)^k`, `(1 + y)^k` and powers of `(x + y)` via binomial expansion.
    fn linear_power(i: usize, j: usize, x: i64, y: i64, constant: i64, k: u32) -> Truncated {
        let base = {
            let mut t = Truncated::zero(i, j);
            t.c[0][0] = constant.into();
            if i >= 1 {
                t.c[1][0] += x;
            }
            if j >= 1 {
                t.c[0][1] += y;
            }
            t
        };
        (0..k).fold(Truncated::one(i, j), |acc, _| acc.mul(&base))
    }
}

/// Chern data of the Milnor hypersurface `H_{i,j} ⊂ CP^i × CP^j`, the
/// degree-(1,1) hypersurface of complex dimension `i + j - 1`.
pub fn milnor_hypersurface_chern(i: u32, j: u32) -> Result<ChernVector, ChernError> {
    if i < 1 || i > j {
        return Err(ChernError::InvalidHypersurface { i, j });
    }
    let (iu, ju) = (i as usize, j as usize);
    let dim = i + j - 1;
    // c(TH) = (1+x)^{i+1} (1+y)^{j+1} (1+x+y)^{-1}, with the inverse expanded
    // as a finite geometric series since x+y is nilpotent here.
    let mut inverse = Truncated::zero(iu, ju);
    let mut power = Truncated::one(iu, ju);
    let x_plus_y = Truncated::linear_power(iu, ju, 1, 1, 0, 1);
    for k in 0..=(iu + ju) {
        let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
        for a in 0..=iu {
            for b in 0..=ju {
                inverse.c[a][b] += &power.c[a][b] * sign;
            }
        }
        power = power.mul(&x_plus_y);
    }
    let total = Truncated::linear_power(iu, ju, 1, 0, 1, i + 1)
        .mul(&Truncated::linear_power(iu, ju, 0, 1, 1, j + 1))
        .mul(&inverse);
    let classes: Vec<Truncated> = (0..=dim as usize).map(|k| total.homogeneous_part(k)).collect();

    // ∫_H α = coefficient of x^i y^j in α · (x + y)
    let integrate = |alpha: &Truncated| -> BigInt {
        let mut acc = BigInt::zero();
        if iu >= 1 {
            acc += &alpha.c[iu - 1][ju];
        }
        if ju >= 1 {
            acc += &alpha.c[iu][ju - 1];
        }
        acc
    };
    let values = partitions(dim).into_iter().map(|lambda| {
        let monomial = lambda.parts().iter().fold(Truncated::one(iu, ju), |acc, &p| acc.mul(&classes[p as usize]));
        let v = integrate(&monomial);
        (lambda, v)
    });
    let table = ChernNumberTable::from_values(dim, values)?;
    Ok(ChernVector::from_table(&table))
}
