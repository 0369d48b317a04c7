//! Named building blocks: the varieties a realization may use, products of
//! them, and their Chern data and torus ranks.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::chern::{cp_chern, curve_chern, milnor_hypersurface_chern, ChernError, ChernVector};
use crate::toric::{blown_up_projective_space_fan, linear_blow_up_fan, toric_chern_vector, Fan, ToricError};

/// Which Milnor hypersurfaces count as admissible building blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Mode {
    /// `H(i,j)` only for `4 <= i <= j`.
    #[default]
    Strict,
    /// `H(i,j)` for `2 <= i <= j`.
    Relaxed,
}

impl Mode {
    pub fn min_hypersurface_index(self) -> u32 {
        match self {
            Mode::Strict => 4,
            Mode::Relaxed => 2,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Relaxed => "relaxed",
        })
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "strict" => Ok(Mode::Strict),
            "relaxed" => Ok(Mode::Relaxed),
            other => Err(format!("mode must be strict or relaxed, got {other:?}")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VarietyError {
    #[error("{0}: CP(n) needs n >= 1")]
    ProjectiveSpace(GoodVariety),
    #[error("{0}: curve genus must exceed 1")]
    Genus(GoodVariety),
    #[error("{variety}: hypersurface needs {min} <= i <= j")]
    Hypersurface { variety: GoodVariety, min: u32 },
    #[error("{0}: BlCP(n,k) needs n >= 1 and 1 <= k <= n+1")]
    BlowUp(GoodVariety),
    #[error("{0}: BlLin(n,m) needs 1 <= m <= n-2")]
    LinearBlowUp(GoodVariety),
    #[error("{variety}: {source}")]
    Toric { variety: GoodVariety, source: ToricError },
    #[error("{0}")]
    Atom(String),
    #[error(transparent)]
    Chern(#[from] ChernError),
}

/// A factor of a good product.
///
/// Variant order fixes the canonical factor order inside a product: a curve
/// (if any) first, then projective spaces, blow-ups, hypersurfaces, and
/// other toric varieties.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GoodVariety {
    /// Compact curve of genus `g`.
    Curve(u64),
    /// `CP^n`.
    Cp(u32),
    /// `CP^n` blown up at `k` distinct torus-fixed points.
    BlownUpCp { n: u32, k: u32 },
    /// `CP^n` blown up along a torus-invariant linear `CP^m`, `1 <= m <= n-2`.
    BlownUpCpLinear { n: u32, m: u32 },
    /// Milnor hypersurface `H_{i,j} ⊂ CP^i × CP^j`.
    Hypersurface { i: u32, j: u32 },
    /// The toric variety of a smooth complete fan.
    Toric { name: String, fan: Arc<Fan> },
}

impl GoodVariety {
    pub fn dim(&self) -> u32 {
        match self {
            GoodVariety::Curve(_) => 1,
            GoodVariety::Cp(n) | GoodVariety::BlownUpCp { n, .. } | GoodVariety::BlownUpCpLinear { n, .. } => *n,
            GoodVariety::Hypersurface { i, j } => i + j - 1,
            GoodVariety::Toric { fan, .. } => fan.rank as u32,
        }
    }

    /// Rank of the effective torus action used for gluing: the full torus on
    /// toric varieties, `T^i` on `H_{i,j}`, nothing on a curve.
    pub fn torus_rank(&self) -> u32 {
        match self {
            GoodVariety::Curve(_) => 0,
            GoodVariety::Cp(n) | GoodVariety::BlownUpCp { n, .. } | GoodVariety::BlownUpCpLinear { n, .. } => *n,
            GoodVariety::Hypersurface { i, .. } => *i,
            GoodVariety::Toric { fan, .. } => fan.rank as u32,
        }
    }

    pub fn is_curve(&self) -> bool {
        matches!(self, GoodVariety::Curve(_))
    }

    /// Checks the parameter ranges; hypersurface bounds depend on `mode`.
    pub fn validate(&self, mode: Mode) -> Result<(), VarietyError> {
        match self {
            GoodVariety::Curve(g) if *g <= 1 => Err(VarietyError::Genus(self.clone())),
            GoodVariety::Cp(0) => Err(VarietyError::ProjectiveSpace(self.clone())),
            GoodVariety::BlownUpCp { n, k } if *n == 0 || *k == 0 || *k > n + 1 => {
                Err(VarietyError::BlowUp(self.clone()))
            }
            GoodVariety::BlownUpCpLinear { n, m } if *m == 0 || m + 2 > *n => {
                Err(VarietyError::LinearBlowUp(self.clone()))
            }
            GoodVariety::Hypersurface { i, j } if *i < mode.min_hypersurface_index() || i > j => {
                Err(VarietyError::Hypersurface { variety: self.clone(), min: mode.min_hypersurface_index() })
            }
            GoodVariety::Toric { fan, .. } => {
                let violations = crate::toric::validate_fan(fan);
                if violations.is_empty() {
                    Ok(())
                } else {
                    Err(VarietyError::Toric { variety: self.clone(), source: ToricError::InvalidFan(violations) })
                }
            }
            _ => Ok(()),
        }
    }

    /// `true` for a hypersurface admissible only in relaxed mode.
    pub fn needs_relaxed_mode(&self) -> bool {
        matches!(self, GoodVariety::Hypersurface { i, j } if *i >= 2 && *i < 4 && i <= j)
    }

    /// Chern data of the variety. Curves of any genus are accepted here, since
    /// `Sigma(0)` and `Sigma(1)` are meaningful as classes.
    pub fn chern(&self) -> Result<ChernVector, VarietyError> {
        match self {
            GoodVariety::Curve(g) => Ok(curve_chern(*g)),
            GoodVariety::Cp(n) => Ok(cp_chern(*n)),
            GoodVariety::Hypersurface { i, j } => Ok(milnor_hypersurface_chern(*i, *j)?),
            GoodVariety::BlownUpCp { n, k } => {
                if *n == 0 || *k == 0 || *k > n + 1 {
                    return Err(VarietyError::BlowUp(self.clone()));
                }
                blown_up_cp_chern(*n, *k).map_err(|source| VarietyError::Toric { variety: self.clone(), source })
            }
            GoodVariety::BlownUpCpLinear { n, m } => {
                if *m == 0 || m + 2 > *n {
                    return Err(VarietyError::LinearBlowUp(self.clone()));
                }
                linear_blow_up_chern(*n, *m).map_err(|source| VarietyError::Toric { variety: self.clone(), source })
            }
            GoodVariety::Toric { fan, .. } => {
                toric_chern_vector(fan).map_err(|source| VarietyError::Toric { variety: self.clone(), source })
            }
        }
    }
}

type ChernCache = OnceLock<Mutex<HashMap<(u32, u32), ChernVector>>>;

fn cached(
    cache: &ChernCache,
    key: (u32, u32),
    fan: impl FnOnce() -> Result<Fan, ToricError>,
) -> Result<ChernVector, ToricError> {
    let cache = cache.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = toric_chern_vector(&fan()?)?;
    cache.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn blown_up_cp_chern(n: u32, k: u32) -> Result<ChernVector, ToricError> {
    static CACHE: ChernCache = OnceLock::new();
    cached(&CACHE, (n, k), || blown_up_projective_space_fan(n as usize, k as usize))
}

fn linear_blow_up_chern(n: u32, m: u32) -> Result<ChernVector, ToricError> {
    static CACHE: ChernCache = OnceLock::new();
    cached(&CACHE, (n, m), || linear_blow_up_fan(n as usize, m as usize))
}

impl fmt::Display for GoodVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodVariety::Curve(g) => write!(f, "Sigma({g})"),
            GoodVariety::Cp(n) => write!(f, "CP({n})"),
            GoodVariety::BlownUpCp { n, k } => write!(f, "BlCP({n},{k})"),
            GoodVariety::BlownUpCpLinear { n, m } => write!(f, "BlLin({n},{m})"),
            GoodVariety::Hypersurface { i, j } => write!(f, "H({i},{j})"),
            GoodVariety::Toric { name, .. } => write!(f, "Toric({name})"),
        }
    }
}

impl GoodVariety {
    /// Builds a variety from an atom name and its integer arguments, as in
    /// `CP(3)` or `H(4,5)`. Ranges are not checked here; see [`Self::validate`].
    pub fn from_atom(name: &str, args: &[u64]) -> Result<Self, VarietyError> {
        let small =
            |x: u64| u32::try_from(x).map_err(|_| VarietyError::Atom(format!("{name}: argument {x} too large")));
        match (name, args) {
            ("CP", [n]) => Ok(GoodVariety::Cp(small(*n)?)),
            ("Sigma", [g]) => Ok(GoodVariety::Curve(*g)),
            ("H", [i, j]) => Ok(GoodVariety::Hypersurface { i: small(*i)?, j: small(*j)? }),
            ("BlCP", [n, k]) => Ok(GoodVariety::BlownUpCp { n: small(*n)?, k: small(*k)? }),
            ("BlLin", [n, m]) => Ok(GoodVariety::BlownUpCpLinear { n: small(*n)?, m: small(*m)? }),
            ("CP" | "Sigma" | "H" | "BlCP" | "BlLin", _) => {
                Err(VarietyError::Atom(format!("{name} takes {} argument(s), got {}", atom_arity(name), args.len())))
            }
            _ => Err(VarietyError::Atom(format!("unknown variety {name:?}"))),
        }
    }
}

fn atom_arity(name: &str) -> usize {
    match name {
        "CP" | "Sigma" => 1,
        _ => 2,
    }
}

impl FromStr for GoodVariety {
    type Err = VarietyError;

    /// Parses `CP(n)`, `Sigma(g)`, `H(i,j)`, `BlCP(n,k)` or `BlLin(n,m)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || VarietyError::Atom(format!("malformed variety {s:?}"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let args =
            inner.split(',').map(|a| a.trim().parse::<u64>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
        GoodVariety::from_atom(name.trim(), &args)
    }
}

impl FromStr for GoodProduct {
    type Err = VarietyError;

    /// Parses `factor * factor * ...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let factors = s.split('*').map(str::parse).collect::<Result<Vec<GoodVariety>, _>>()?;
        Ok(GoodProduct::new(factors))
    }
}

/// A product of good varieties, factors in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoodProduct {
    factors: Vec<GoodVariety>,
}

impl GoodProduct {
    pub fn new(mut factors: Vec<GoodVariety>) -> Self {
        factors.sort();
        Self { factors }
    }

    pub fn factors(&self) -> &[GoodVariety] {
        &self.factors
    }

    pub fn dim(&self) -> u32 {
        self.factors.iter().map(GoodVariety::dim).sum()
    }

    /// Sum of the factors' torus ranks.
    pub fn torus_rank(&self) -> u32 {
        self.factors.iter().map(GoodVariety::torus_rank).sum()
    }

    pub fn curve_count(&self) -> usize {
        self.factors.iter().filter(|f| f.is_curve()).count()
    }

    pub fn times(&self, other: &GoodProduct) -> GoodProduct {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        GoodProduct::new(factors)
    }

    pub fn chern(&self) -> Result<ChernVector, VarietyError> {
        self.factors.iter().try_fold(ChernVector::point(1), |acc, f| Ok(acc.product(&f.chern()?)))
    }
}

impl fmt::Display for GoodProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, v) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Torus rank of a product of good varieties.
pub fn torus_rank(p: &GoodProduct) -> u32 {
    p.torus_rank()
}

/// The torus rank every good variety of complex dimension `n` must carry.
pub fn required_torus_rank(n: u32) -> u32 {
    4.min(n.saturating_sub(1))
}
