//! Realizing cobordism classes by disjoint unions of good-variety products.
//!
//! The recursion follows the classical induction on dimension:
//!
//! * a class with `s_n ≠ 0` is a multiple of the generator `G_n` plus a class
//!   with `s_n = 0`;
//! * a class with `s_n = 0` is a polynomial in lower generators, so each
//!   monomial is an honest product of lower-dimensional varieties;
//! * a negative multiple of a product moves its sign into a factor of least
//!   dimension, and a negative multiple of a single variety `M` uses a partner
//!   `N` with Milnor number of the opposite sign and the identity
//!   `-[M] = (-a[M] - b[N]) + b[N] + (a-1)[M]`, whose first summand has
//!   `s_n = 0`;
//! * in dimension one, `k[CP^1]` is `k` projective lines for `k > 0` and the
//!   curve of genus `1 - k` for `k < 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::chern::{ChernError, ChernVector};
use crate::numbertheory::{choose_torus_rank, ObstructionChoice};
use crate::partition::{partitions, Partition};
use crate::ring::{build_generator_system, decompose, GeneratorSystem, RingError};
use crate::variety::{required_torus_rank, GoodProduct, GoodVariety, Mode, VarietyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizationError {
    #[error("class is not integral: {0}")]
    NonIntegral(String),
    #[error("no strict-mode generator in dimension(s) {0:?}; rerun with relaxed mode")]
    StrictModeGap(Vec<u32>),
    #[error("realization needs dimension >= 1")]
    DimensionZero,
    #[error("multiplicity {0} does not fit in 64 bits")]
    Overflow(BigInt),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Ring(RingError),
    #[error(transparent)]
    Variety(#[from] VarietyError),
    #[error(transparent)]
    Chern(#[from] ChernError),
}

impl From<RingError> for RealizationError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::StrictModeGap { dims, .. } => RealizationError::StrictModeGap(dims),
            RingError::NonIntegral { partition, value } => {
                RealizationError::NonIntegral(format!("generator coordinate at {partition} is {value}"))
            }
            other => RealizationError::Ring(other),
        }
    }
}

/// A disjoint union of good-variety products with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    dim: u32,
    mode: Mode,
    components: BTreeMap<GoodProduct, u64>,
}

impl Realization {
    pub fn empty(dim: u32, mode: Mode) -> Self {
        Realization { dim, mode, components: BTreeMap::new() }
    }

    /// Builds a realization from explicit components, merging repeats. No
    /// validation happens here; see [`verify_realization`].
    pub fn from_components<I>(dim: u32, mode: Mode, components: I) -> Self
    where
        I: IntoIterator<Item = (GoodProduct, u64)>,
    {
        let mut r = Realization::empty(dim, mode);
        for (p, m) in components {
            *r.components.entry(p).or_default() += m;
        }
        r
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Components in canonical order with their multiplicities.
    pub fn components(&self) -> &BTreeMap<GoodProduct, u64> {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of connected pieces, counted with multiplicity.
    pub fn piece_count(&self) -> u64 {
        self.components.values().sum()
    }

    fn add(&mut self, p: GoodProduct, m: u64) {
        if m > 0 {
            *self.components.entry(p).or_default() += m;
        }
    }

    fn merge(&mut self, other: Realization) {
        for (p, m) in other.components {
            self.add(p, m);
        }
    }

    /// Recomputes the class `Σ multiplicity · [product]`.
    pub fn total_chern(&self) -> Result<ChernVector, VarietyError> {
        let mut acc = ChernVector::zero(self.dim);
        for (p, m) in &self.components {
            acc = acc.add(&p.chern()?.scale(&BigInt::from(*m)))?;
        }
        Ok(acc)
    }

    /// Text form with the `verified:` trailer.
    pub fn to_text(&self, verified: bool) -> String {
        format!("{self}verified: {}\n", if verified { "yes" } else { "no" })
    }

    /// Parses the text form; the `verified:` trailer, if present, is ignored.
    pub fn parse(text: &str) -> Result<Self, RealizationError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_err = |line, msg: &str| RealizationError::Parse { line, msg: msg.to_string() };
        let (n, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let dim = first
            .strip_prefix("dim:")
            .and_then(|d| d.trim().parse::<u32>().ok())
            .ok_or_else(|| parse_err(n, "expected `dim: <n>` header"))?;
        let mut r = Realization::empty(dim, Mode::Strict);
        for (n, line) in lines {
            if let Some(m) = line.strip_prefix("mode:") {
                r.mode = m.parse().map_err(|e: String| parse_err(n, &e))?;
            } else if line.starts_with("verified:") {
                continue;
            } else {
                let (mult, product) =
                    line.split_once(" x ").ok_or_else(|| parse_err(n, "expected `<multiplicity> x <product>`"))?;
                let mult: u64 =
                    mult.trim().parse().map_err(|_| parse_err(n, "multiplicity must be a positive integer"))?;
                let product: GoodProduct = product.parse().map_err(|e: VarietyError| parse_err(n, &e.to_string()))?;
                if mult == 0 {
                    return Err(parse_err(n, "multiplicity must be a positive integer"));
                }
                r.add(product, mult);
            }
        }
        Ok(r)
    }
}

impl fmt::Display for Realization {
    /// `dim:` and `mode:` headers, then `multiplicity x product` lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim: {}", self.dim)?;
        writeln!(f, "mode: {}", self.mode)?;
        for (p, m) in &self.components {
            writeln!(f, "{m} x {p}")?;
        }
        Ok(())
    }
}

fn to_multiplicity(c: &BigInt) -> Result<u64, RealizationError> {
    c.to_u64().ok_or_else(|| RealizationError::Overflow(c.clone()))
}

/// Recursive realization against a fixed generator system.
pub struct Realizer<'a> {
    gs: &'a GeneratorSystem,
    depth: usize,
    max_depth: usize,
}

impl<'a> Realizer<'a> {
    pub fn new(gs: &'a GeneratorSystem) -> Self {
        Realizer { gs, depth: 0, max_depth: 0 }
    }

    /// Deepest recursion reached so far.
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    fn enter(&mut self) {
        self.depth += 1;
        self.max_depth = self.max_depth.max(self.depth);
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    pub fn realize(&mut self, v: &ChernVector) -> Result<Realization, RealizationError> {
        self.enter();
        let out = self.realize_class(v);
        self.leave();
        out
    }

    fn realize_class(&mut self, v: &ChernVector) -> Result<Realization, RealizationError> {
        let n = v.dim();
        let mode = self.gs.mode();
        if n == 0 {
            return Err(RealizationError::DimensionZero);
        }
        if n == 1 {
            let c1 = v.m_coord(&Partition::row(1));
            let (k, r) = c1.div_rem(&BigInt::from(2));
            if !r.is_zero() {
                return Err(RealizationError::NonIntegral(format!("c_1 = {c1} is odd")));
            }
            let mut out = Realization::empty(1, mode);
            if k.is_positive() {
                out.add(GoodProduct::new(vec![GoodVariety::Cp(1)]), to_multiplicity(&k)?);
            } else if k.is_negative() {
                let genus = (BigInt::one() - &k).to_u64().ok_or_else(|| RealizationError::Overflow(k.clone()))?;
                out.add(GoodProduct::new(vec![GoodVariety::Curve(genus)]), 1);
            }
            return Ok(out);
        }

        let s = v.milnor_number()?;
        if s.is_zero() {
            return self.realize_decomposable(v);
        }
        let g = self.gs.generator(n).ok_or(RingError::DimensionTooLarge { dim: n, max: self.gs.max_dim() })?;
        let (c, r) = s.div_rem(&g.milnor);
        if !r.is_zero() {
            return Err(RealizationError::NonIntegral(format!(
                "s_{n} = {s} is not a multiple of the generator's {}",
                g.milnor
            )));
        }
        let (terms, g_chern) = (g.terms.clone(), g.chern.clone());
        let w = v.sub(&g_chern.scale(&c))?;
        assert!(w.milnor_number()?.is_zero(), "remainder after removing the generator must have s_n = 0");
        let mut out = Realization::empty(n, mode);
        for (coef, variety) in terms {
            out.merge(self.realize_term(&(&c * coef), &GoodProduct::new(vec![variety]))?);
        }
        out.merge(self.realize(&w)?);
        Ok(out)
    }

    /// `s_n = 0`: expand the generator polynomial into signed products.
    fn realize_decomposable(&mut self, v: &ChernVector) -> Result<Realization, RealizationError> {
        let n = v.dim();
        let coords = decompose(v, self.gs)?;
        assert!(coords.get(&Partition::row(n)).is_zero(), "decomposable class has a generator coordinate");
        let mut out = Realization::empty(n, self.gs.mode());
        for (lambda, coef) in coords.coeffs() {
            for (sign, product) in self.expand_monomial(lambda) {
                out.merge(self.realize_term(&(coef * sign), &product)?);
            }
        }
        Ok(out)
    }

    /// `G_{λ1}···G_{λk}` multiplied out into signed products of varieties.
    fn expand_monomial(&self, lambda: &Partition) -> Vec<(BigInt, GoodProduct)> {
        let mut acc = vec![(BigInt::one(), GoodProduct::new(Vec::new()))];
        for &part in lambda.parts() {
            let g = self.gs.generator(part).expect("decompose checked the dimension");
            acc = acc
                .iter()
                .flat_map(|(c, p)| {
                    g.terms.iter().map(move |(gc, gv)| (c * gc, p.times(&GoodProduct::new(vec![gv.clone()]))))
                })
                .collect();
        }
        acc
    }

    /// `coef · [product]` for any integer `coef`.
    fn realize_term(&mut self, coef: &BigInt, product: &GoodProduct) -> Result<Realization, RealizationError> {
        let n = product.dim();
        let mode = self.gs.mode();
        if coef.is_zero() {
            return Ok(Realization::empty(n, mode));
        }
        if coef.is_positive() {
            return Ok(self.with_curves_repaired(coef, product.clone()));
        }
        self.enter();
        let out = match product.factors() {
            [single] => self.negate_variety(&-coef, single),
            factors => {
                // the first factor of least dimension; curves sort first so
                // they win ties
                let pick = (0..factors.len()).min_by_key(|&i| factors[i].dim()).expect("non-empty product");
                let rest = GoodProduct::new(
                    factors.iter().enumerate().filter(|&(i, _)| i != pick).map(|(_, f)| f.clone()).collect(),
                );
                let inner = self.realize_term(coef, &GoodProduct::new(vec![factors[pick].clone()]))?;
                let mut out = Realization::empty(n, mode);
                for (p, m) in inner.components {
                    out.merge(self.realize_term(&BigInt::from(m), &p.times(&rest))?);
                }
                Ok(out)
            }
        };
        self.leave();
        out
    }

    /// `m` copies of `product`, unless it has two curve factors: then one
    /// curve is traded for its class `(1 - g)[CP^1]` and the signed term is
    /// realized again.
    fn with_curves_repaired(&mut self, m: &BigInt, product: GoodProduct) -> Realization {
        let mode = self.gs.mode();
        let mut out = Realization::empty(product.dim(), mode);
        if product.curve_count() <= 1 {
            out.add(product, m.to_u64().expect("multiplicity fits"));
            return out;
        }
        let factors = product.factors();
        let GoodVariety::Curve(g) = factors[0] else { unreachable!("curves sort first") };
        let mut swapped = factors.to_vec();
        swapped[0] = GoodVariety::Cp(1);
        let coef = m * (BigInt::one() - BigInt::from(g));
        self.realize_term(&coef, &GoodProduct::new(swapped)).expect("lower-dimensional repair terms are realizable")
    }

    /// `-m [M]` for a single variety `M`.
    fn negate_variety(&mut self, m: &BigInt, variety: &GoodVariety) -> Result<Realization, RealizationError> {
        let n = variety.dim();
        let chern = variety.chern()?;
        let target = chern.scale(&-m);
        let s_m = chern.milnor_number()?;
        if n == 1 || s_m.is_zero() {
            return self.realize(&target);
        }
        let partner = if s_m.is_positive() { GoodVariety::BlownUpCp { n, k: 3 } } else { GoodVariety::Cp(n) };
        let partner_chern = partner.chern()?;
        let s_n = partner_chern.milnor_number()?;
        debug_assert!(s_m.is_positive() != s_n.is_positive());
        let g = s_m.gcd(&s_n);
        let a = s_n.abs() / &g;
        let b = s_m.abs() / &g;
        // m(-a[M] - b[N]) has s_n = 0
        let zero_part = chern.scale(&(-m * &a)).sub(&partner_chern.scale(&(m * &b)))?;
        let mut out = self.realize(&zero_part)?;
        out.add(GoodProduct::new(vec![partner]), to_multiplicity(&(m * &b))?);
        out.add(GoodProduct::new(vec![variety.clone()]), to_multiplicity(&(m * (a - 1u32)))?);
        Ok(out)
    }
}

/// Realizes `v` with a generator system built for `mode`.
pub fn realize(v: &ChernVector, mode: Mode) -> Result<Realization, RealizationError> {
    if v.dim() == 0 {
        return Err(RealizationError::DimensionZero);
    }
    let gs = build_generator_system(v.dim(), mode)?;
    realize_with(v, &gs)
}

pub fn realize_with(v: &ChernVector, gs: &GeneratorSystem) -> Result<Realization, RealizationError> {
    Realizer::new(gs).realize(v)
}

/// One Chern number that differs between a realization and its target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernMismatch {
    pub partition: Partition,
    pub expected: BigInt,
    pub actual: BigInt,
}

/// Independent check of a realization against a target class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub dim: u32,
    pub mode: Mode,
    pub mismatches: Vec<ChernMismatch>,
    /// Broken good-variety, curve-count, dimension and torus-rank constraints.
    pub violations: Vec<String>,
    /// Components admissible only because the mode is relaxed.
    pub relaxed_components: Vec<GoodProduct>,
    pub min_torus_rank: Option<u32>,
    pub required_torus_rank: u32,
    /// Gluing data for `n >= 3`.
    pub obstruction: Option<ObstructionChoice>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim: {}", self.dim)?;
        writeln!(f, "mode: {}", self.mode)?;
        writeln!(f, "chern numbers: {}", if self.mismatches.is_empty() { "match" } else { "mismatch" })?;
        for m in &self.mismatches {
            writeln!(f, "  {}: expected {}, got {}", m.partition, m.expected, m.actual)?;
        }
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        for p in &self.relaxed_components {
            writeln!(f, "relaxed: {p}")?;
        }
        match self.min_torus_rank {
            Some(k) => writeln!(f, "torus rank: min {k}, required {}", self.required_torus_rank)?,
            None => writeln!(f, "torus rank: no components, required {}", self.required_torus_rank)?,
        }
        if let Some(o) = &self.obstruction {
            writeln!(
                f,
                "gluing torus: k={} obstruction in pi_{}(O), {}",
                o.k,
                o.obstruction_dimension,
                if o.trivial { "trivial" } else { "nontrivial" }
            )?;
        }
        writeln!(f, "verified: {}", if self.passed() { "yes" } else { "no" })
    }
}

/// Recomputes the class of `r` from scratch and checks every constraint.
pub fn verify_realization(r: &Realization, v: &ChernVector) -> VerificationReport {
    let n = r.dim();
    let required = required_torus_rank(n);
    let mut report = VerificationReport {
        dim: n,
        mode: r.mode(),
        mismatches: Vec::new(),
        violations: Vec::new(),
        relaxed_components: Vec::new(),
        min_torus_rank: r.components().keys().map(GoodProduct::torus_rank).min(),
        required_torus_rank: required,
        obstruction: choose_torus_rank(n as u64).ok(),
    };
    if v.dim() != n {
        report.violations.push(format!("realization has dimension {n}, target has {}", v.dim()));
        return report;
    }
    for (p, &m) in r.components() {
        if m == 0 {
            report.violations.push(format!("{p}: zero multiplicity"));
        }
        if p.dim() != n {
            report.violations.push(format!("{p}: dimension {} instead of {n}", p.dim()));
        }
        if p.curve_count() > 1 {
            report.violations.push(format!("{p}: {} curve factors", p.curve_count()));
        }
        for factor in p.factors() {
            if let Err(e) = factor.validate(r.mode()) {
                report.violations.push(format!("{p}: {e}"));
            }
        }
        if p.torus_rank() < required {
            report.violations.push(format!("{p}: torus rank {} below {required}", p.torus_rank()));
        }
        if p.factors().iter().any(GoodVariety::needs_relaxed_mode) {
            report.relaxed_components.push(p.clone());
        }
    }
    match r.total_chern() {
        Ok(total) => {
            let (want, got) = (v.to_table(), total.to_table());
            for lambda in partitions(n) {
                let (expected, actual) = (want.get(&lambda), got.get(&lambda));
                if expected != actual {
                    report.mismatches.push(ChernMismatch { partition: lambda, expected, actual });
                }
            }
        }
        Err(e) => report.violations.push(format!("cannot recompute Chern numbers: {e}")),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::{cp_chern, ChernNumberTable};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn product(s: &str) -> GoodProduct {
        s.parse().unwrap()
    }

    #[test]
    fn generator_is_its_own_realization() {
        let r = realize(&cp_chern(2), Mode::Strict).unwrap();
        assert_eq!(r.components().len(), 1);
        assert_eq!(r.components()[&product("CP(2)")], 1);
    }

    #[test]
    fn negative_cp2() {
        let v = cp_chern(2).neg();
        let gs = build_generator_system(2, Mode::Strict).unwrap();
        let mut realizer = Realizer::new(&gs);
        let r = realizer.realize(&v).unwrap();
        let expected = Realization::from_components(
            2,
            Mode::Strict,
            [(product("Sigma(4) * CP(1)"), 1), (product("BlCP(2,3)"), 1), (product("CP(2)"), 1)],
        );
        assert_eq!(r, expected);
        let t = r.total_chern().unwrap().to_table();
        assert_eq!((t.get(&p("2")), t.get(&p("1,1"))), (BigInt::from(-3), BigInt::from(-9)));
        assert!(verify_realization(&r, &v).passed());
        assert!(realizer.max_depth() <= 8);
    }

    #[test]
    fn zero_and_dimension_one() {
        assert!(realize(&ChernVector::zero(2), Mode::Strict).unwrap().is_empty());
        let three_lines = cp_chern(1).scale(&BigInt::from(3));
        assert_eq!(realize(&three_lines, Mode::Strict).unwrap().components()[&product("CP(1)")], 3);
        let r = realize(&three_lines.neg(), Mode::Strict).unwrap();
        assert_eq!(r.components()[&product("Sigma(4)")], 1);
        let odd = ChernVector::from_m_coords(1, [(p("1"), BigInt::from(3))]).unwrap();
        assert!(matches!(realize(&odd, Mode::Strict), Err(RealizationError::NonIntegral(_))));
        assert_eq!(realize(&ChernVector::point(1), Mode::Strict), Err(RealizationError::DimensionZero));
    }

    #[test]
    fn non_integral_and_gaps() {
        let v = ChernVector::from_table(
            &ChernNumberTable::from_values(2, [(p("2"), 11.into()), (p("1,1"), 29.into())]).unwrap(),
        );
        assert!(matches!(realize(&v, Mode::Strict), Err(RealizationError::NonIntegral(_))));
        assert_eq!(realize(&cp_chern(5), Mode::Strict), Err(RealizationError::StrictModeGap(vec![5])));
        let r = realize(&cp_chern(5).neg(), Mode::Relaxed).unwrap();
        let report = verify_realization(&r, &cp_chern(5).neg());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn verification_catches_problems() {
        let v = cp_chern(2).neg();
        let r = realize(&v, Mode::Strict).unwrap();
        let mut tampered = r.clone();
        *tampered.components.get_mut(&product("CP(2)")).unwrap() += 1;
        let report = verify_realization(&tampered, &v);
        assert!(!report.passed());
        assert_eq!(report.mismatches.iter().map(|m| m.partition.to_string()).collect::<Vec<_>>(), ["2", "1,1"]);

        let two_curves = Realization::from_components(2, Mode::Strict, [(product("Sigma(2) * Sigma(3)"), 1)]);
        let target = two_curves.total_chern().unwrap();
        let report = verify_realization(&two_curves, &target);
        assert!(report.mismatches.is_empty());
        assert!(report.violations.iter().any(|v| v.contains("2 curve factors")));
    }

    #[test]
    fn text_round_trip() {
        let r = realize(&cp_chern(2).neg(), Mode::Strict).unwrap();
        let text = r.to_text(true);
        assert_eq!(text, "dim: 2\nmode: strict\n1 x Sigma(4) * CP(1)\n1 x CP(2)\n1 x BlCP(2,3)\nverified: yes\n");
        assert_eq!(Realization::parse(&text).unwrap(), r);
        assert!(Realization::parse("dim: 2\n0 x CP(2)\n").is_err());
        assert!(Realization::parse("2 x CP(2)\n").is_err());
    }

    #[test]
    fn curve_repair_trades_a_curve() {
        let gs = build_generator_system(2, Mode::Strict).unwrap();
        let mut realizer = Realizer::new(&gs);
        let r = realizer.with_curves_repaired(&BigInt::one(), product("Sigma(2) * Sigma(3)"));
        let expected = product("Sigma(2) * Sigma(3)").chern().unwrap();
        assert!(r.components().keys().all(|p| p.curve_count() <= 1));
        assert!(verify_realization(&r, &expected).passed());
    }
}
