//! Smooth complete fans, blow-ups at torus-fixed points, and Chern numbers by
//! fixed-point localization.
//!
//! The torus fixed points of a smooth complete toric variety correspond to
//! the maximal cones of its fan. At the fixed point of a cone with rays
//! `v_1, …, v_n`, the tangent characters are the dual basis `w_1, …, w_n`
//! (`⟨w_k, v_l⟩ = δ_kl`). For any symmetric `f` of degree `n`,
//!
//! ```text
//!     ∫ f(Chern roots) = Σ_{fixed points} f(w_1, …, w_n) / (w_1 ··· w_n)
//! ```
//!
//! evaluated at a generic point of the Lie algebra. The sum is a rational
//! number which must come out integral.
//!
//! Completeness is checked combinatorially (every facet lies in exactly two
//! maximal cones), which is enough for fans built from projective space by
//! blow-ups. Projectivity is not checked.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chern::ChernVector;
use crate::linalg;
use crate::partition::{partitions, Partition};

/// Seed of the generic-point sampler; fixed so output is reproducible.
pub const DEFAULT_POINT_SEED: u64 = 0x5eed_70c1;
const MAX_POINT_ATTEMPTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("invalid fan: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidFan(Vec<FanViolation>),
    #[error("cone index {index} out of range (fan has {count} maximal cones)")]
    ConeIndex { index: usize, count: usize },
    #[error("no maximal cone spanned by rays {0:?}")]
    ConeNotFound(Vec<usize>),
    #[error("cone {cone} is not unimodular")]
    NotUnimodular { cone: usize },
    #[error("evaluation point {point:?} is not generic")]
    DegeneratePoint { point: Vec<i64> },
    #[error("no generic evaluation point found after {0} attempts")]
    NoGenericPoint(usize),
    #[error("localization sum for {partition} is not an integer ({value}); fan data is inconsistent")]
    NonIntegral { partition: Partition, value: BigRational },
    #[error("fan JSON: {0}")]
    Json(String),
}

/// A single failed fan invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanViolation {
    NoCones,
    RayLength { ray: usize, len: usize },
    ZeroRay { ray: usize },
    NonPrimitiveRay { ray: usize },
    DuplicateRay { first: usize, second: usize },
    ConeSize { cone: usize, len: usize },
    RayIndexOutOfRange { cone: usize, index: usize },
    RepeatedRayInCone { cone: usize },
    DuplicateCone { first: usize, second: usize },
    NotUnimodular { cone: usize, det: BigInt },
    FacetIncidence { facet: Vec<usize>, cones: Vec<usize> },
}

impl fmt::Display for FanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanViolation::NoCones => write!(f, "fan has no maximal cones"),
            FanViolation::RayLength { ray, len } => write!(f, "ray {ray} has {len} coordinates"),
            FanViolation::ZeroRay { ray } => write!(f, "ray {ray} is zero"),
            FanViolation::NonPrimitiveRay { ray } => write!(f, "ray {ray} is not primitive"),
            FanViolation::DuplicateRay { first, second } => {
                write!(f, "duplicate ray: rays {first} and {second} coincide")
            }
            FanViolation::ConeSize { cone, len } => write!(f, "cone {cone} has {len} rays"),
            FanViolation::RayIndexOutOfRange { cone, index } => {
                write!(f, "cone {cone} references missing ray {index}")
            }
            FanViolation::RepeatedRayInCone { cone } => write!(f, "cone {cone} repeats a ray"),
            FanViolation::DuplicateCone { first, second } => {
                write!(f, "cones {first} and {second} are identical")
            }
            FanViolation::NotUnimodular { cone, det } => {
                write!(f, "cone {cone} is not smooth (determinant {det})")
            }
            FanViolation::FacetIncidence { facet, cones } if cones.len() == 1 => {
                write!(f, "facet with one incident cone: rays {facet:?} only in cone {}", cones[0])
            }
            FanViolation::FacetIncidence { facet, cones } => {
                write!(f, "facet rays {facet:?} lies in {} cones {cones:?}", cones.len())
            }
        }
    }
}

/// Rays and maximal cones of a fan in `Z^rank`. Cone entries are 0-based ray
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fan {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn from_json(text: &str) -> Result<Fan, ToricError> {
        serde_json::from_str(text).map_err(|e| ToricError::Json(e.to_string()))
    }

    /// Compact JSON with keys in `rank`, `rays`, `max_cones` order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fan serializes")
    }

    fn cone_matrix(&self, cone: usize) -> linalg::IntMatrix {
        // columns are the rays of the cone
        let idx = &self.max_cones[cone];
        (0..self.rank).map(|row| idx.iter().map(|&r| BigInt::from(self.rays[r][row])).collect()).collect()
    }

    /// Finds the maximal cone spanned by exactly the given rays.
    pub fn find_cone(&self, rays: &[usize]) -> Option<usize> {
        let want: HashSet<usize> = rays.iter().copied().collect();
        self.max_cones.iter().position(|c| c.len() == want.len() && c.iter().all(|r| want.contains(r)))
    }
}

/// Checks every fan invariant and lists each violation.
pub fn validate_fan(f: &Fan) -> Vec<FanViolation> {
    let mut out = Vec::new();
    let n = f.rank;
    if f.max_cones.is_empty() {
        out.push(FanViolation::NoCones);
    }
    let mut seen: HashMap<&[i64], usize> = HashMap::new();
    for (i, ray) in f.rays.iter().enumerate() {
        if ray.len() != n {
            out.push(FanViolation::RayLength { ray: i, len: ray.len() });
            continue;
        }
        let g = ray.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 0 {
            out.push(FanViolation::ZeroRay { ray: i });
        } else if g != 1 {
            out.push(FanViolation::NonPrimitiveRay { ray: i });
        }
        if let Some(&first) = seen.get(ray.as_slice()) {
            out.push(FanViolation::DuplicateRay { first, second: i });
        } else {
            seen.insert(ray, i);
        }
    }
    if out.iter().any(|v| matches!(v, FanViolation::RayLength { .. })) {
        return out;
    }

    let mut well_formed = Vec::new();
    let mut cone_sets: HashMap<Vec<usize>, usize> = HashMap::new();
    for (c, cone) in f.max_cones.iter().enumerate() {
        if cone.len() != n {
            out.push(FanViolation::ConeSize { cone: c, len: cone.len() });
            continue;
        }
        if let Some(&index) = cone.iter().find(|&&r| r >= f.rays.len()) {
            out.push(FanViolation::RayIndexOutOfRange { cone: c, index });
            continue;
        }
        let mut sorted = cone.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            out.push(FanViolation::RepeatedRayInCone { cone: c });
            continue;
        }
        if let Some(&first) = cone_sets.get(&sorted) {
            out.push(FanViolation::DuplicateCone { first, second: c });
            continue;
        }
        cone_sets.insert(sorted, c);
        let det = linalg::determinant(&f.cone_matrix(c)).expect("square");
        if det.abs() != BigInt::one() {
            out.push(FanViolation::NotUnimodular { cone: c, det });
        }
        well_formed.push(c);
    }

    // Every facet of a maximal cone must be shared by exactly two maximal cones.
    let mut facets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for &c in &well_formed {
        let mut sorted = f.max_cones[c].clone();
        sorted.sort_unstable();
        for skip in 0..n {
            let facet: Vec<usize> = sorted.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &r)| r).collect();
            facets.entry(facet).or_default().push(c);
        }
    }
    for (facet, cones) in facets {
        if cones.len() != 2 {
            out.push(FanViolation::FacetIncidence { facet, cones });
        }
    }
    out
}

fn ensure_valid(f: &Fan) -> Result<(), ToricError> {
    let violations = validate_fan(f);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ToricError::InvalidFan(violations))
    }
}

/// The fan of `CP^n`: rays `e_1, …, e_n, -(e_1 + … + e_n)`; the maximal
/// cones omit one ray each, in order of the omitted ray.
pub fn projective_space_fan(n: usize) -> Fan {
    assert!(n >= 1, "projective space needs n >= 1");
    let mut rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect()).collect();
    rays.push(vec![-1; n]);
    let max_cones = (0..=n).map(|omit| (0..=n).filter(|&r| r != omit).collect()).collect();
    Fan { rank: n, rays, max_cones }
}

/// Stellar subdivision of a maximal cone: the blow-up at its fixed point.
///
/// The new ray is the sum of the cone's rays (appended last). The cone is
/// replaced, in place, by the `n` cones obtained by swapping one original ray
/// for the new ray, in order of the swapped position. In rank 1 blowing up a
/// point is an isomorphism and the fan is returned unchanged.
pub fn blow_up(f: &Fan, cone_index: usize) -> Result<Fan, ToricError> {
    ensure_valid(f)?;
    if cone_index >= f.max_cones.len() {
        return Err(ToricError::ConeIndex { index: cone_index, count: f.max_cones.len() });
    }
    if f.rank == 1 {
        return Ok(f.clone());
    }
    let cone = f.max_cones[cone_index].clone();
    let new_ray: Vec<i64> = (0..f.rank).map(|k| cone.iter().map(|&r| f.rays[r][k]).sum()).collect();
    let mut out = f.clone();
    let new_index = out.rays.len();
    out.rays.push(new_ray);
    let replacements: Vec<Vec<usize>> = (0..cone.len())
        .map(|swap| {
            let mut c = cone.clone();
            c[swap] = new_index;
            c
        })
        .collect();
    out.max_cones.splice(cone_index..=cone_index, replacements);
    debug_assert!(validate_fan(&out).is_empty());
    Ok(out)
}

/// Stellar subdivision along an arbitrary cone given by its rays: the blow-up
/// of the torus-invariant subvariety of that cone.
///
/// Every maximal cone containing the face is replaced, in place, by the cones
/// obtained by swapping one face ray for the new ray. For a maximal face this
/// agrees with [`blow_up`].
pub fn star_subdivide(f: &Fan, face: &[usize]) -> Result<Fan, ToricError> {
    ensure_valid(f)?;
    if face.is_empty() || face.iter().any(|&r| r >= f.rays.len()) {
        return Err(ToricError::ConeNotFound(face.to_vec()));
    }
    let containing: Vec<usize> =
        (0..f.max_cones.len()).filter(|&c| face.iter().all(|r| f.max_cones[c].contains(r))).collect();
    if containing.is_empty() {
        return Err(ToricError::ConeNotFound(face.to_vec()));
    }
    if face.len() == 1 {
        return Ok(f.clone());
    }
    let new_ray: Vec<i64> = (0..f.rank).map(|k| face.iter().map(|&r| f.rays[r][k]).sum()).collect();
    let mut out = f.clone();
    let new_index = out.rays.len();
    out.rays.push(new_ray);
    for &c in containing.iter().rev() {
        let cone = &f.max_cones[c];
        let replacements: Vec<Vec<usize>> = cone
            .iter()
            .enumerate()
            .filter(|(_, r)| face.contains(r))
            .map(|(pos, _)| {
                let mut v = cone.clone();
                v[pos] = new_index;
                v
            })
            .collect();
        out.max_cones.splice(c..=c, replacements);
    }
    debug_assert!(validate_fan(&out).is_empty());
    Ok(out)
}

/// Blows up the fixed point of the maximal cone spanned by `rays`.
pub fn blow_up_at_rays(f: &Fan, rays: &[usize]) -> Result<Fan, ToricError> {
    let index = f.find_cone(rays).ok_or_else(|| ToricError::ConeNotFound(rays.to_vec()))?;
    blow_up(f, index)
}

/// `CP^n` blown up at the fixed points of its first `k` maximal cones.
pub fn blown_up_projective_space_fan(n: usize, k: usize) -> Result<Fan, ToricError> {
    let base = projective_space_fan(n);
    if k > base.max_cones.len() {
        return Err(ToricError::ConeIndex { index: k - 1, count: base.max_cones.len() });
    }
    let targets: Vec<Vec<usize>> = base.max_cones[..k].to_vec();
    targets.iter().try_fold(base, |fan, rays| blow_up_at_rays(&fan, rays))
}

/// `CP^n` blown up along the linear `CP^m` cut out by the first `n - m`
/// homogeneous coordinates, i.e. the stellar subdivision of the cone on the
/// first `n - m` rays.
pub fn linear_blow_up_fan(n: usize, m: usize) -> Result<Fan, ToricError> {
    let base = projective_space_fan(n);
    if m >= n {
        return Err(ToricError::ConeNotFound((0..n.saturating_sub(m)).collect()));
    }
    let face: Vec<usize> = (0..n - m).collect();
    star_subdivide(&base, &face)
}

/// Tangent characters at every torus-fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointWeights {
    /// `weights[c][k]` is the character dual to the k-th ray of cone `c`.
    pub weights: Vec<Vec<Vec<i64>>>,
}

pub fn fixed_point_weights(f: &Fan) -> Result<FixedPointWeights, ToricError> {
    ensure_valid(f)?;
    let weights = (0..f.max_cones.len())
        .map(|c| {
            let inv = linalg::inverse_integral(&f.cone_matrix(c)).map_err(|_| ToricError::NotUnimodular { cone: c })?;
            Ok(inv
                .into_iter()
                .map(|row| row.into_iter().map(|x| i64::try_from(x).expect("small fan entries")).collect())
                .collect())
        })
        .collect::<Result<_, ToricError>>()?;
    Ok(FixedPointWeights { weights })
}

/// Evaluates `m_λ(u_1, …, u_n)`: the sum over distinct arrangements of the
/// exponent multiset `λ ∪ 0^{n - len λ}`.
fn monomial_symmetric_at(lambda: &Partition, u: &[BigInt]) -> BigInt {
    if lambda.len() > u.len() {
        return BigInt::zero();
    }
    let mut exps: Vec<(u32, usize)> = lambda.multiplicities();
    let zeros = u.len() - lambda.len();
    if zeros > 0 {
        exps.push((0, zeros));
    }
    let mut memo = HashMap::new();
    arrangements(&mut exps, u, 0, &mut memo)
}

/// Sum over distinct assignments of the remaining exponents to `u[pos..]`.
/// The position is implied by the remaining counts, so they alone key the memo.
fn arrangements(exps: &mut [(u32, usize)], u: &[BigInt], pos: usize, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
    if pos == u.len() {
        return BigInt::one();
    }
    let key: Vec<usize> = exps.iter().map(|e| e.1).collect();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for k in 0..exps.len() {
        if exps[k].1 == 0 {
            continue;
        }
        exps[k].1 -= 1;
        let e = exps[k].0;
        let rest = arrangements(exps, u, pos + 1, memo);
        exps[k].1 += 1;
        if !rest.is_zero() {
            total += num_traits::pow(u[pos].clone(), e as usize) * rest;
        }
    }
    memo.insert(key, total.clone());
    total
}

fn evaluated_weights(w: &FixedPointWeights, point: &[i64]) -> Vec<Vec<BigInt>> {
    w.weights
        .iter()
        .map(|cone| cone.iter().map(|wk| BigInt::from(wk.iter().zip(point).map(|(a, b)| a * b).sum::<i64>())).collect())
        .collect()
}

fn is_generic(w: &FixedPointWeights, point: &[i64]) -> bool {
    evaluated_weights(w, point).iter().flatten().all(|x| !x.is_zero())
}

/// Draws a generic evaluation point from a seeded generator, widening the
/// sampling range after each rejection.
pub fn generic_point(w: &FixedPointWeights, rank: usize, seed: u64) -> Result<Vec<i64>, ToricError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut range: i64 = 4;
    for _ in 0..MAX_POINT_ATTEMPTS {
        let point: Vec<i64> = (0..rank).map(|_| rng.gen_range(-range..=range)).collect();
        if is_generic(w, &point) {
            return Ok(point);
        }
        range = (range * 2).min(1 << 20);
    }
    Err(ToricError::NoGenericPoint(MAX_POINT_ATTEMPTS))
}

/// Chern data of the toric variety of `f` by localization at an explicit
/// evaluation point.
pub fn toric_chern_vector_at(f: &Fan, point: &[i64]) -> Result<ChernVector, ToricError> {
    let w = fixed_point_weights(f)?;
    if point.len() != f.rank || !is_generic(&w, point) {
        return Err(ToricError::DegeneratePoint { point: point.to_vec() });
    }
    let values = evaluated_weights(&w, point);
    let denominators: Vec<BigInt> = values.iter().map(|u| u.iter().product()).collect();
    // sum numerators over a common denominator and reduce once per partition
    let common = denominators.iter().fold(BigInt::one(), |l, d| l.lcm(d));
    let scales: Vec<BigInt> = denominators.iter().map(|d| &common / d).collect();
    let mut coords = Vec::new();
    for lambda in partitions(f.rank as u32) {
        let numerator: BigInt = values.iter().zip(&scales).map(|(u, k)| monomial_symmetric_at(&lambda, u) * k).sum();
        let sum = BigRational::new(numerator, common.clone());
        if !sum.is_integer() {
            return Err(ToricError::NonIntegral { partition: lambda, value: sum });
        }
        coords.push((lambda, sum.to_integer()));
    }
    Ok(ChernVector::from_m_coords(f.rank as u32, coords).expect("weights match rank"))
}

/// Chern data of the toric variety of `f`, using the seeded generic point.
pub fn toric_chern_vector(f: &Fan) -> Result<ChernVector, ToricError> {
    toric_chern_vector_seeded(f, DEFAULT_POINT_SEED)
}

pub fn toric_chern_vector_seeded(f: &Fan, seed: u64) -> Result<ChernVector, ToricError> {
    let w = fixed_point_weights(f)?;
    let point = generic_point(&w, f.rank, seed)?;
    toric_chern_vector_at(f, &point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::cp_chern;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn projective_fans_are_valid() {
        let f1 = projective_space_fan(1);
        assert_eq!(f1.rays, vec![vec![1], vec![-1]]);
        assert_eq!(f1.max_cones.len(), 2);
        let f2 = projective_space_fan(2);
        assert_eq!((f2.rays.len(), f2.max_cones.len()), (3, 3));
        let f3 = projective_space_fan(3);
        assert_eq!((f3.rays.len(), f3.max_cones.len()), (4, 4));
        for n in 1..=5 {
            assert!(validate_fan(&projective_space_fan(n)).is_empty());
        }
    }

    #[test]
    fn violations_are_reported() {
        let mut f = projective_space_fan(2);
        f.rays.push(vec![1, 0]);
        let v = validate_fan(&f);
        assert!(v.iter().any(|x| x.to_string().starts_with("duplicate ray")), "{v:?}");

        let mut f = projective_space_fan(2);
        f.max_cones.remove(0);
        let v = validate_fan(&f);
        assert!(v.iter().any(|x| x.to_string().starts_with("facet with one incident cone")), "{v:?}");

        let f = Fan { rank: 2, rays: vec![vec![1, 0], vec![1, 2], vec![-1, -1]], max_cones: vec![vec![0, 1]] };
        let v = validate_fan(&f);
        assert!(v.iter().any(|x| matches!(x, FanViolation::NotUnimodular { cone: 0, .. })));

        let f = Fan { rank: 1, rays: vec![vec![2], vec![-1]], max_cones: vec![vec![0], vec![1]] };
        assert!(validate_fan(&f).contains(&FanViolation::NonPrimitiveRay { ray: 0 }));
    }

    #[test]
    fn blow_up_counts() {
        let f = projective_space_fan(2);
        for c in 0..3 {
            let b = blow_up(&f, c).unwrap();
            assert_eq!((b.rays.len(), b.max_cones.len()), (4, 4));
        }
        let b3 = blown_up_projective_space_fan(2, 3).unwrap();
        assert_eq!((b3.rays.len(), b3.max_cones.len()), (6, 6));
        assert!(validate_fan(&b3).is_empty());
        assert!(matches!(blow_up(&f, 3), Err(ToricError::ConeIndex { .. })));
        // the original cone no longer exists after its blow-up
        let once = blow_up_at_rays(&f, &[1, 2]).unwrap();
        assert_eq!(blow_up_at_rays(&once, &[1, 2]), Err(ToricError::ConeNotFound(vec![1, 2])));
    }

    #[test]
    fn weights() {
        let w1 = fixed_point_weights(&projective_space_fan(1)).unwrap();
        assert_eq!(w1.weights, vec![vec![vec![-1]], vec![vec![1]]]);
        let f2 = projective_space_fan(2);
        let w2 = fixed_point_weights(&f2).unwrap();
        // cone 2 omits ray 2: rays e1, e2
        assert_eq!(f2.max_cones[2], vec![0, 1]);
        assert_eq!(w2.weights[2], vec![vec![1, 0], vec![0, 1]]);
        // cone 0: rays e2, -e1-e2 -> inverse of [[0,-1],[1,-1]]
        assert_eq!(f2.max_cones[0], vec![1, 2]);
        assert_eq!(w2.weights[0], vec![vec![-1, 1], vec![-1, 0]]);
        for (c, cone) in w2.weights.iter().enumerate() {
            for (k, wk) in cone.iter().enumerate() {
                for (l, &r) in f2.max_cones[c].iter().enumerate() {
                    let pairing: i64 = wk.iter().zip(&f2.rays[r]).map(|(a, b)| a * b).sum();
                    assert_eq!(pairing, i64::from(k == l));
                }
            }
        }
    }

    #[test]
    fn localization_small_cases() {
        let v1 = toric_chern_vector(&projective_space_fan(1)).unwrap();
        assert_eq!(v1.m_coord(&p("1")), BigInt::from(2));
        assert_eq!(toric_chern_vector(&projective_space_fan(2)).unwrap(), cp_chern(2));
        let b3 = toric_chern_vector(&blown_up_projective_space_fan(2, 3).unwrap()).unwrap();
        assert_eq!(b3.milnor_number().unwrap(), BigInt::from(-6));
        assert_eq!(b3.chern_number(&p("2")).unwrap(), BigInt::from(6));
    }

    #[test]
    fn degenerate_point_rejected() {
        let f = projective_space_fan(2);
        assert!(matches!(toric_chern_vector_at(&f, &[1, 1]), Err(ToricError::DegeneratePoint { .. })));
        assert!(matches!(toric_chern_vector_at(&f, &[0, 3]), Err(ToricError::DegeneratePoint { .. })));
        assert_eq!(toric_chern_vector_at(&f, &[2, 5]).unwrap(), cp_chern(2));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let f = blown_up_projective_space_fan(2, 1).unwrap();
        let text = f.to_json();
        assert_eq!(text, r#"{"rank":2,"rays":[[1,0],[0,1],[-1,-1],[-1,0]],"max_cones":[[3,2],[1,3],[0,2],[0,1]]}"#);
        assert_eq!(Fan::from_json(&text).unwrap().to_json(), text);
        assert!(Fan::from_json("{").is_err());
    }

    #[test]
    fn star_subdivision() {
        let f = projective_space_fan(3);
        assert_eq!(star_subdivide(&f, &[0, 1, 2]).unwrap(), blow_up(&f, 3).unwrap());
        assert_eq!(star_subdivide(&f, &[2]).unwrap(), f);
        assert!(star_subdivide(&f, &[]).is_err());
        assert!(star_subdivide(&f, &[0, 9]).is_err());
        for n in 3..=6 {
            for m in 1..n - 1 {
                let g = linear_blow_up_fan(n, m).unwrap();
                assert!(validate_fan(&g).is_empty());
                // Euler number gains (codim - 1) * (m + 1)
                let euler = g.max_cones.len();
                assert_eq!(euler, n + 1 + (n - m - 1) * (m + 1));
                let v = toric_chern_vector(&g).unwrap();
                assert_eq!(v.chern_number(&Partition::row(n as u32)).unwrap(), BigInt::from(euler));
            }
        }
        let v = toric_chern_vector(&linear_blow_up_fan(5, 2).unwrap()).unwrap();
        assert_eq!(v.milnor_number().unwrap(), BigInt::from(9));
    }
}
