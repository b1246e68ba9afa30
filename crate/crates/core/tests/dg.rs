use std::collections::BTreeMap;

use heckebench::dg::corpus::{square_zero_with_acyclic_pair, tensor};
use heckebench::dg::{cohomology, formality_zigzag, purity_check, verify_zigzag, DgAlgebraDoc};
use heckebench::Rational;
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn square_zero_algebras_are_formal(
        dims in prop::collection::btree_map(0i32..=4, 1usize..=2, 1..=3),
        r in prop::sample::select(vec![2i64, 3, -2, 5]),
    ) {
        let mut dims: BTreeMap<i32, usize> = dims;
        dims.entry(0).or_insert(1);
        let a = square_zero_with_acyclic_pair(&dims, &q(r));
        let h = cohomology(&a);
        prop_assert_eq!(h.graded_dims(), dims.clone());
        prop_assert!(purity_check(&a, &q(r)).is_ok());
        let z = formality_zigzag(&a, &q(r)).unwrap();
        let cert = verify_zigzag(&z);
        prop_assert!(cert.all_passed);
        prop_assert_eq!(z.h.dim(), dims.values().sum::<usize>());
    }

    #[test]
    fn tensor_algebras_are_formal_for_every_pair_weight(w in -1i64..=4, r in prop::sample::select(vec![2i64, 3])) {
        let a = tensor(&q(r), w);
        let z = formality_zigzag(&a, &q(r)).unwrap();
        prop_assert!(verify_zigzag(&z).all_passed);
        prop_assert_eq!(z.h.dim(), 2);
    }

    #[test]
    fn documents_round_trip(dims in prop::collection::btree_map(0i32..=3, 1usize..=2, 1..=3)) {
        let mut dims: BTreeMap<i32, usize> = dims;
        dims.entry(0).or_insert(1);
        let a = square_zero_with_acyclic_pair(&dims, &q(2));
        let text = serde_json::to_string(&a.to_doc(Some(&q(2)))).unwrap();
        let (b, r) = serde_json::from_str::<DgAlgebraDoc>(&text).unwrap().build().unwrap();
        prop_assert_eq!(b, a);
        prop_assert_eq!(r, Some(q(2)));
    }
}

#[test]
fn wrong_r_is_not_pure() {
    let a = tensor(&q(3), 2);
    assert!(purity_check(&a, &q(2)).is_err());
    assert!(formality_zigzag(&a, &q(2)).is_err());
}
