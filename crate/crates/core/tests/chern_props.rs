//! Algebraic properties of Chern data and toric localization.

use num_bigint::BigInt;
use proptest::prelude::*;

use cobordism::chern::{cp_chern, curve_chern, milnor_hypersurface_chern, Basis, ChernVector};
use cobordism::partition::Partition;
use cobordism::toric::{blow_up, projective_space_fan, toric_chern_vector, validate_fan};

fn variety() -> impl Strategy<Value = ChernVector> {
    prop_oneof![
        (1u32..4).prop_map(cp_chern),
        (0u64..5).prop_map(curve_chern),
        (1u32..3, 0u32..2).prop_map(|(i, d)| milnor_hypersurface_chern(i, i + d).unwrap()),
    ]
}

proptest! {
    #[test]
    fn products_commute_and_kill_milnor_numbers(a in variety(), b in variety()) {
        let ab = a.product(&b);
        prop_assert_eq!(&ab, &b.product(&a));
        prop_assert_eq!(ab.milnor_number().unwrap(), BigInt::from(0));
    }

    #[test]
    fn euler_number_is_multiplicative(a in variety(), b in variety()) {
        let top = |v: &ChernVector| v.chern_number(&Partition::row(v.dim())).unwrap();
        prop_assert_eq!(top(&a.product(&b)), top(&a) * top(&b));
    }

    #[test]
    fn table_and_text_round_trip(a in variety(), b in variety(), k in -5i64..5) {
        let v = a.product(&b).scale(&BigInt::from(k));
        prop_assert_eq!(ChernVector::from_table(&v.to_table()), v.clone());
        for basis in [Basis::Chern, Basis::Monomial] {
            prop_assert_eq!(ChernVector::parse(&v.to_text(basis)).unwrap(), v.clone());
        }
    }

    #[test]
    fn repeated_blow_ups_stay_smooth(n in 2usize..5, picks in proptest::collection::vec(0usize..64, 1..4)) {
        let mut fan = projective_space_fan(n);
        let mut s = toric_chern_vector(&fan).unwrap().milnor_number().unwrap();
        let shift = BigInt::from(n as i64 + if n % 2 == 0 { 1 } else { -1 });
        for pick in picks {
            fan = blow_up(&fan, pick % fan.max_cones.len()).unwrap();
            prop_assert!(validate_fan(&fan).is_empty());
            let v = toric_chern_vector(&fan).unwrap();
            prop_assert_eq!(v.chern_number(&Partition::row(n as u32)).unwrap(), BigInt::from(fan.max_cones.len()));
            let next = v.milnor_number().unwrap();
            prop_assert_eq!(&s - &next, shift.clone());
            s = next;
        }
    }
}
