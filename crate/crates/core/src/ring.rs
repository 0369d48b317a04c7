//! Coordinates of cobordism classes over products of polynomial generators.
//!
//! A family `G_1, G_2, …` with `|s_d(G_d)| = η(d)` generates the complex
//! cobordism ring polynomially, so in each dimension `n` the products
//! `G_λ = G_{λ1}···G_{λk}` (`λ ⊢ n`) form a basis. [`decompose`] solves for
//! the coefficients over Q and accepts the answer only when it is integral.
//!
//! Each `G_d` is an integer combination of projective spaces, blow-ups of
//! projective spaces at fixed points, and Milnor hypersurfaces, found by an
//! extended-gcd search over their Milnor numbers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::chern::{parse_entries, parse_headers, ChernError, ChernVector};
use crate::linalg::{self, LinalgError};
use crate::numbertheory::eta;
use crate::partition::{partitions, Partition};
use crate::variety::{GoodVariety, Mode, VarietyError};

/// Default largest dimension a generator system covers.
pub const DEFAULT_MAX_DIM: u32 = 8;

/// Supports up to this size are searched exhaustively before falling back to
/// the whole pool.
const MAX_SEARCH_SUPPORT: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("no {mode}-mode generator in dimension(s) {dims:?}; relaxed mode may be used instead")]
    StrictModeGap { mode: Mode, dims: Vec<u32> },
    #[error("class has dimension {dim}, generator system only reaches {max}")]
    DimensionTooLarge { dim: u32, max: u32 },
    #[error("class is not in the integral span: coefficient of {partition} is {value}")]
    NonIntegral { partition: Partition, value: BigRational },
    #[error("generator monomial matrix in dimension {0} is singular")]
    Singular(u32),
    #[error("working bound must be at least 1")]
    EmptyBound,
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Variety(#[from] VarietyError),
}

/// The generator chosen in one dimension: `Σ coefficient · [variety]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub dim: u32,
    pub terms: Vec<(BigInt, GoodVariety)>,
    pub milnor: BigInt,
    pub chern: ChernVector,
}

impl fmt::Display for Generator {
    /// `7*BlCP(5,1) + H(2,4)`, unit coefficients left implicit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, v)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{mag}*{v}")?;
            }
        }
        Ok(())
    }
}

/// Per-dimension outcome of the generator search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSlot {
    Found(Generator),
    /// The gcd of all Milnor numbers in the pool exceeds `η(d)`.
    Gap {
        dim: u32,
        pool_gcd: BigInt,
        eta: u64,
    },
}

/// Generator search results for dimensions `1..=max_dim`, gaps included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSurvey {
    pub mode: Mode,
    pub max_dim: u32,
    pub slots: Vec<GeneratorSlot>,
}

impl GeneratorSurvey {
    pub fn gaps(&self) -> Vec<u32> {
        self.slots
            .iter()
            .filter_map(|s| match s {
                GeneratorSlot::Gap { dim, .. } => Some(*dim),
                GeneratorSlot::Found(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for GeneratorSurvey {
    /// One line per dimension: the chosen combination and its Milnor number.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode: {}", self.mode)?;
        for slot in &self.slots {
            match slot {
                GeneratorSlot::Found(g) => writeln!(f, "G{}: {}  s={} eta={}", g.dim, g, g.milnor, eta(g.dim as u64))?,
                GeneratorSlot::Gap { dim, pool_gcd, eta } => {
                    writeln!(f, "G{dim}: none  pool-gcd={pool_gcd} eta={eta}")?
                }
            }
        }
        Ok(())
    }
}

/// A complete generator family for dimensions `1..=max_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSystem {
    mode: Mode,
    generators: Vec<Generator>,
}

impl GeneratorSystem {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn max_dim(&self) -> u32 {
        self.generators.len() as u32
    }

    pub fn generator(&self, d: u32) -> Option<&Generator> {
        d.checked_sub(1).and_then(|i| self.generators.get(i as usize))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }
}

/// Candidate varieties of dimension `d`, in search order.
///
/// Both modes start with `CP^d` and its point blow-ups. Relaxed mode then
/// tries blow-ups of `CP^d` along linear subspaces, which are toric and keep
/// the full torus rank, before the low-index hypersurfaces it admits.
pub fn generator_pool(d: u32, mode: Mode) -> Vec<GoodVariety> {
    let mut pool = vec![GoodVariety::Cp(d)];
    if d >= 2 {
        pool.extend((1..=d + 1).map(|k| GoodVariety::BlownUpCp { n: d, k }));
    }
    if mode == Mode::Relaxed {
        pool.extend((1..d.saturating_sub(1)).map(|m| GoodVariety::BlownUpCpLinear { n: d, m }));
    }
    let first = mode.min_hypersurface_index();
    pool.extend((first..=d.div_ceil(2)).map(|i| GoodVariety::Hypersurface { i, j: d + 1 - i }));
    pool
}

fn subsets(len: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i + 1, len, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, size, &mut Vec::new(), &mut out);
    out
}

fn gcd_all(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
}

/// Integer coefficients `c` with `Σ c_i values_i = ±gcd(values)`.
///
/// Two-term supports get the solution of least total size, ties going to the
/// one with more non-negative coefficients; larger supports fold the extended
/// Euclidean algorithm.
fn bezout(values: &[BigInt]) -> Vec<BigInt> {
    match values {
        [_] => vec![BigInt::one()],
        [a, b] => {
            let e = a.extended_gcd(b);
            let (sa, sb) = (b / &e.gcd, a / &e.gcd);
            let mut best: Option<(BigInt, usize, BigInt, BigInt)> = None;
            for sign in [BigInt::one(), -BigInt::one()] {
                let (x0, y0) = (&e.x * &sign, &e.y * &sign);
                // x = x0 + t sa, y = y0 - t sb; try t near the zeros of x and y
                let centres = [-x0.div_floor(&sa), y0.div_floor(&sb)];
                for c in centres {
                    for dt in -2..=2 {
                        let t: BigInt = &c + BigInt::from(dt);
                        let x = &x0 + &t * &sa;
                        let y = &y0 - &t * &sb;
                        let cost = x.abs() + y.abs();
                        let negatives = usize::from(x.is_negative()) + usize::from(y.is_negative());
                        let better = match &best {
                            None => true,
                            Some((bc, bn, _, _)) => cost < *bc || (cost == *bc && negatives < *bn),
                        };
                        if better {
                            best = Some((cost, negatives, x, y));
                        }
                    }
                }
            }
            let (_, _, x, y) = best.expect("candidates exist");
            vec![x, y]
        }
        _ => {
            let mut coeffs = vec![BigInt::one()];
            let mut g = values[0].clone();
            for v in &values[1..] {
                let e = g.extended_gcd(v);
                for c in coeffs.iter_mut() {
                    *c *= &e.x;
                }
                coeffs.push(e.y);
                g = e.gcd;
            }
            coeffs
        }
    }
}

fn find_generator(d: u32, mode: Mode) -> Result<GeneratorSlot, RingError> {
    let target = BigInt::from(eta(d as u64));
    let mut pool = Vec::new();
    for v in generator_pool(d, mode) {
        let chern = v.chern()?;
        let s = chern.milnor_number()?;
        if !s.is_zero() {
            pool.push((v, chern, s));
        }
    }
    let all: Vec<BigInt> = pool.iter().map(|(_, _, s)| s.clone()).collect();
    let pool_gcd = gcd_all(&all);
    if pool_gcd != target {
        return Ok(GeneratorSlot::Gap { dim: d, pool_gcd, eta: eta(d as u64) });
    }
    let mut support = None;
    'search: for size in 1..=pool.len().min(MAX_SEARCH_SUPPORT) {
        for subset in subsets(pool.len(), size) {
            let vals: Vec<BigInt> = subset.iter().map(|&i| pool[i].2.clone()).collect();
            if gcd_all(&vals) == target {
                support = Some(subset);
                break 'search;
            }
        }
    }
    let support = support.unwrap_or_else(|| (0..pool.len()).collect());
    let vals: Vec<BigInt> = support.iter().map(|&i| pool[i].2.clone()).collect();
    let coeffs = bezout(&vals);

    let mut terms = Vec::new();
    let mut chern = ChernVector::zero(d);
    for (&i, c) in support.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        chern = chern.add(&pool[i].1.scale(&c))?;
        terms.push((c, pool[i].0.clone()));
    }
    let milnor = chern.milnor_number()?;
    assert_eq!(milnor.abs(), target, "generator search produced a wrong Milnor number");
    Ok(GeneratorSlot::Found(Generator { dim: d, terms, milnor, chern }))
}

/// Searches every dimension up to `max_dim`, recording gaps instead of failing.
pub fn survey_generators(max_dim: u32, mode: Mode) -> Result<GeneratorSurvey, RingError> {
    if max_dim == 0 {
        return Err(RingError::EmptyBound);
    }
    let slots = (1..=max_dim).map(|d| find_generator(d, mode)).collect::<Result<_, _>>()?;
    Ok(GeneratorSurvey { mode, max_dim, slots })
}

/// Generators for all dimensions `1..=max_dim`, or the list of dimensions
/// where the pool is inadequate.
pub fn build_generator_system(max_dim: u32, mode: Mode) -> Result<GeneratorSystem, RingError> {
    let survey = survey_generators(max_dim, mode)?;
    let gaps = survey.gaps();
    if !gaps.is_empty() {
        return Err(RingError::StrictModeGap { mode, dims: gaps });
    }
    let generators = survey
        .slots
        .into_iter()
        .map(|s| match s {
            GeneratorSlot::Found(g) => g,
            GeneratorSlot::Gap { .. } => unreachable!(),
        })
        .collect();
    Ok(GeneratorSystem { mode, generators })
}

/// Integer coefficients of a class over the generator monomials `G_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCoordinates {
    dim: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl ClassCoordinates {
    pub fn new<I>(dim: u32, coeffs: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = ClassCoordinates { dim, coeffs: BTreeMap::new() };
        for (lambda, c) in coeffs {
            if lambda.weight() != dim {
                return Err(ChernError::WeightMismatch { partition: lambda, dim }.into());
            }
            if !c.is_zero() {
                out.coeffs.insert(lambda, c);
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Non-zero coefficients in canonical order.
    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn parse(text: &str) -> Result<Self, RingError> {
        let (dim, _, body) = parse_headers(text)?;
        let entries = parse_entries(dim, body)?;
        ClassCoordinates::new(dim, entries)
    }
}

impl fmt::Display for ClassCoordinates {
    /// `dim: n` then one `λ: coefficient` line per partition of `n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim: {}", self.dim)?;
        for lambda in partitions(self.dim) {
            writeln!(f, "{}: {}", lambda, self.get(&lambda))?;
        }
        Ok(())
    }
}

/// Chern data of the generator monomial `G_{λ1}···G_{λk}`.
pub fn monomial_chern(gs: &GeneratorSystem, lambda: &Partition) -> Result<ChernVector, RingError> {
    let mut acc = ChernVector::point(1);
    for &part in lambda.parts() {
        let g = gs.generator(part).ok_or(RingError::DimensionTooLarge { dim: part, max: gs.max_dim() })?;
        acc = acc.product(&g.chern);
    }
    Ok(acc)
}

/// Solves `Σ_λ x_λ [G_λ] = v` exactly; the solution must be integral.
pub fn decompose(v: &ChernVector, gs: &GeneratorSystem) -> Result<ClassCoordinates, RingError> {
    let n = v.dim();
    if n > gs.max_dim() {
        return Err(RingError::DimensionTooLarge { dim: n, max: gs.max_dim() });
    }
    let basis = partitions(n);
    // column λ of the system is the m-vector of G_λ
    let rows: Vec<Vec<BigInt>> =
        basis.iter().map(|l| monomial_chern(gs, l).map(|c| c.m_vector())).collect::<Result<_, _>>()?;
    let system = linalg::transpose(&rows);
    let x = linalg::solve(&system, &v.m_vector()).map_err(|e| match e {
        LinalgError::Singular => RingError::Singular(n),
        other => panic!("unexpected linear algebra failure: {other}"),
    })?;
    let mut coeffs = Vec::with_capacity(basis.len());
    for (lambda, q) in basis.into_iter().zip(x) {
        if !q.is_integer() {
            return Err(RingError::NonIntegral { partition: lambda, value: q });
        }
        coeffs.push((lambda, q.to_integer()));
    }
    ClassCoordinates::new(n, coeffs)
}

/// `Σ_λ c_λ [G_λ]`.
pub fn compose(c: &ClassCoordinates, gs: &GeneratorSystem) -> Result<ChernVector, RingError> {
    let mut acc = ChernVector::zero(c.dim());
    for (lambda, coeff) in c.coeffs() {
        acc = acc.add(&monomial_chern(gs, lambda)?.scale(coeff))?;
    }
    Ok(acc)
}

/// A class is decomposable exactly when its Milnor number vanishes.
pub fn is_decomposable(v: &ChernVector) -> bool {
    match v.milnor_number() {
        Ok(s) => s.is_zero(),
        Err(_) => v.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::{cp_chern, ChernNumberTable};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn table2(c2: i64, c11: i64) -> ChernVector {
        ChernVector::from_table(
            &ChernNumberTable::from_values(2, [(p("2"), c2.into()), (p("1,1"), c11.into())]).unwrap(),
        )
    }

    #[test]
    fn low_dimensional_generators() {
        let gs = build_generator_system(4, Mode::Strict).unwrap();
        assert_eq!(gs.generator(1).unwrap().terms, vec![(BigInt::one(), GoodVariety::Cp(1))]);
        assert_eq!(gs.generator(1).unwrap().milnor, BigInt::from(2));
        assert_eq!(gs.generator(2).unwrap().terms, vec![(BigInt::one(), GoodVariety::Cp(2))]);
        assert_eq!(gs.generator(2).unwrap().milnor, BigInt::from(3));
        assert_eq!(gs.generator(3).unwrap().terms, vec![(BigInt::one(), GoodVariety::BlownUpCp { n: 3, k: 1 })]);
        for g in gs.generators() {
            assert_eq!(g.milnor.abs(), BigInt::from(eta(g.dim as u64)));
        }
    }

    #[test]
    fn strict_gaps() {
        let survey = survey_generators(8, Mode::Strict).unwrap();
        assert_eq!(survey.gaps(), vec![5, 8]);
        match &survey.slots[7] {
            GeneratorSlot::Gap { pool_gcd, eta, .. } => assert_eq!((pool_gcd.clone(), *eta), (BigInt::from(9), 3)),
            other => panic!("expected a gap, got {other:?}"),
        }
        assert_eq!(
            build_generator_system(8, Mode::Strict),
            Err(RingError::StrictModeGap { mode: Mode::Strict, dims: vec![5, 8] })
        );
        let relaxed = build_generator_system(8, Mode::Relaxed).unwrap();
        for g in relaxed.generators() {
            assert_eq!(g.milnor.abs(), BigInt::from(eta(g.dim as u64)));
            // the toric candidates suffice, so no hypersurface is needed
            assert!(g.terms.iter().all(|(_, v)| v.torus_rank() == g.dim));
        }
    }

    #[test]
    fn bezout_pairs_are_small() {
        let c = bezout(&[BigInt::from(2), BigInt::from(-15)]);
        assert_eq!(c, vec![BigInt::from(7), BigInt::from(1)]);
        let c = bezout(&[BigInt::from(9), BigInt::from(-84)]);
        let s: BigInt = &c[0] * 9 + &c[1] * -84;
        assert_eq!(s.abs(), BigInt::from(3));
        let c = bezout(&[BigInt::from(6), BigInt::from(10), BigInt::from(15)]);
        let s: BigInt = &c[0] * 6 + &c[1] * 10 + &c[2] * 15;
        assert_eq!(s.abs(), BigInt::one());
    }

    #[test]
    fn monomials() {
        let gs = build_generator_system(3, Mode::Strict).unwrap();
        let pp = monomial_chern(&gs, &p("1,1")).unwrap();
        assert_eq!(pp, table2(4, 8));
        assert_eq!(monomial_chern(&gs, &p("2")).unwrap(), cp_chern(2));
        assert_eq!(monomial_chern(&gs, &p("2,1")).unwrap(), cp_chern(2).product(&cp_chern(1)));
    }

    #[test]
    fn decompose_examples() {
        let gs = build_generator_system(2, Mode::Strict).unwrap();
        let c = decompose(&table2(11, 25), &gs).unwrap();
        assert_eq!((c.get(&p("2")), c.get(&p("1,1"))), (BigInt::from(1), BigInt::from(2)));
        match decompose(&table2(11, 29), &gs) {
            Err(RingError::NonIntegral { value, .. }) => assert!(!value.is_integer()),
            other => panic!("expected NonIntegral, got {other:?}"),
        }
        assert!(decompose(&ChernVector::zero(2), &gs).unwrap().is_zero());
        assert!(matches!(decompose(&cp_chern(3), &gs), Err(RingError::DimensionTooLarge { .. })));
    }

    #[test]
    fn compose_examples() {
        let gs = build_generator_system(2, Mode::Strict).unwrap();
        assert!(compose(&ClassCoordinates::new(2, []).unwrap(), &gs).unwrap().is_zero());
        let c = ClassCoordinates::new(2, [(p("2"), 5.into()), (p("1,1"), (-2).into())]).unwrap();
        assert_eq!(compose(&c, &gs).unwrap(), table2(7, 29));
    }

    #[test]
    fn decomposability() {
        assert!(is_decomposable(&cp_chern(1).product(&cp_chern(1))));
        assert!(!is_decomposable(&cp_chern(2)));
        assert!(is_decomposable(&ChernVector::zero(3)));
    }

    #[test]
    fn coordinates_text() {
        let c = ClassCoordinates::new(2, [(p("2"), 5.into()), (p("1,1"), (-2).into())]).unwrap();
        let text = c.to_string();
        assert_eq!(text, "dim: 2\n2: 5\n1,1: -2\n");
        assert_eq!(ClassCoordinates::parse(&text).unwrap(), c);
    }
}
