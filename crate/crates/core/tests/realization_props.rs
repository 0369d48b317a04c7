//! Random classes realize to verified disjoint unions.

use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use cobordism::chern::cp_chern;
use cobordism::partition::partitions;
use cobordism::realization::{verify_realization, Realization, Realizer};
use cobordism::ring::{build_generator_system, compose, ClassCoordinates, GeneratorSystem};
use cobordism::variety::{required_torus_rank, Mode};

/// Strict system up to dimension 4, relaxed for dimension 5.
fn system(dim: u32) -> &'static GeneratorSystem {
    static STRICT: OnceLock<GeneratorSystem> = OnceLock::new();
    static RELAXED: OnceLock<GeneratorSystem> = OnceLock::new();
    if dim <= 4 {
        STRICT.get_or_init(|| build_generator_system(4, Mode::Strict).unwrap())
    } else {
        RELAXED.get_or_init(|| build_generator_system(5, Mode::Relaxed).unwrap())
    }
}

fn coordinates() -> impl Strategy<Value = ClassCoordinates> {
    (1u32..=5).prop_flat_map(|dim| {
        let basis = partitions(dim);
        proptest::collection::vec(-5i64..=5, basis.len()).prop_map(move |cs| {
            ClassCoordinates::new(dim, basis.iter().cloned().zip(cs.into_iter().map(BigInt::from))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn realizations_verify(c in coordinates()) {
        let gs = system(c.dim());
        let v = compose(&c, gs).unwrap();
        let mut realizer = Realizer::new(gs);
        let r = realizer.realize(&v).unwrap();
        let report = verify_realization(&r, &v);
        prop_assert!(report.passed(), "{}", report);
        // recursion descends in dimension, so depth stays small
        prop_assert!(realizer.max_depth() <= 4 * c.dim() as usize + 4, "depth {}", realizer.max_depth());
        for (p, &m) in r.components() {
            prop_assert!(m >= 1);
            prop_assert!(p.curve_count() <= 1);
            prop_assert!(p.torus_rank() >= required_torus_rank(c.dim()));
        }
    }

    #[test]
    fn text_form_round_trips(c in coordinates()) {
        let gs = system(c.dim());
        let r = Realizer::new(gs).realize(&compose(&c, gs).unwrap()).unwrap();
        prop_assert_eq!(Realization::parse(&r.to_text(true)).unwrap(), r);
    }
}

#[test]
fn negatives_of_projective_spaces() {
    for n in 1..=4 {
        let v = cp_chern(n).neg();
        let r = Realizer::new(system(n)).realize(&v).unwrap();
        assert!(verify_realization(&r, &v).passed(), "-CP({n})");
    }
}
