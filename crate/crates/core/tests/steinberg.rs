use heckebench::combinat::{positive_roots, symmetric_group, SemisimplePoint};
use heckebench::steinberg::{
    cell_inventory, dlc_report, ext_from_inventory, fiber_dim, fixed_point_datum, frobenius_weights, nilpotent_datum,
    validate_b_stable, FrobeniusScale, SpringerDatum,
};
use heckebench::Rational;
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Points `s_k = 4^{a_k} b_k`, so the `q0 = 4` eigenspace is often nonzero.
fn point(max_n: usize) -> impl Strategy<Value = SemisimplePoint> {
    prop::collection::vec((0u32..=2, prop::sample::select(vec![1i64, 3, -1])), 1..=max_n).prop_map(|v| {
        let s: Vec<Rational> = v.iter().map(|&(a, b)| q(4i64.pow(a) * b)).collect();
        SemisimplePoint::new(s, q(4), Some(q(2))).unwrap()
    })
}

fn check_fiber_symmetry(d: &SpringerDatum) {
    for i in 0..d.pieces.len() {
        for j in 0..d.pieces.len() {
            for w in &d.group {
                assert_eq!(fiber_dim(d, i, j, w).unwrap(), fiber_dim(d, j, i, &w.inverse()).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fixed_point_data_are_consistent(p in point(3)) {
        let d = fixed_point_datum(&p).unwrap();
        prop_assert!(validate_b_stable(&d).is_empty());
        let order = symmetric_group(p.rank()).unwrap().order();
        prop_assert_eq!(d.pieces.len() * d.group.len(), order);
        check_fiber_symmetry(&d);

        let inv = cell_inventory(&d).unwrap();
        let ext = ext_from_inventory(&d, &inv);
        prop_assert!(ext.violations().is_empty());
        prop_assert_eq!(ext.total(), order * order);
        for ((i, j, k), dim) in &ext.entries {
            prop_assert_eq!(ext.get(*j, *i, *k), *dim);
        }
        if p.is_regular() {
            prop_assert!(ext.min_degree().is_none_or(|k| k >= 0));
        }
        let w = frobenius_weights(&d, &inv, &FrobeniusScale::of_point(&p)).unwrap();
        prop_assert!(w.all_consistent);
        prop_assert_eq!(w.checked_cells, inv.len());
    }
}

#[test]
fn nilpotent_fibers_and_degrees() {
    for n in 1..=4 {
        let d = nilpotent_datum(n).unwrap();
        assert!(validate_b_stable(&d).is_empty());
        let big_n = positive_roots(n).len();
        for w in &d.group {
            assert_eq!(fiber_dim(&d, 0, 0, w).unwrap(), big_n - w.length());
        }
        check_fiber_symmetry(&d);
        let inv = cell_inventory(&d).unwrap();
        let ext = ext_from_inventory(&d, &inv);
        assert!(ext.violations().is_empty());
        assert!(ext.min_degree().unwrap() >= 0);
        let scale = FrobeniusScale::new(q(4), Some(q(2))).unwrap();
        assert!(frobenius_weights(&d, &inv, &scale).unwrap().all_consistent);
    }
}

#[test]
fn fiber_rejects_bad_arguments() {
    let d = fixed_point_datum(&SemisimplePoint::from_ints(&[1, 4], 4).unwrap()).unwrap();
    let w = d.group[0].clone();
    assert!(fiber_dim(&d, 5, 0, &w).is_err());
    let d3 = nilpotent_datum(3).unwrap();
    assert!(fiber_dim(&d3, 0, 0, &d.group[0]).is_err());
}

#[test]
fn dimension_identity_on_mixed_points() {
    for (s, q0) in [(vec![1, 4, 16], 4), (vec![1, 1, 4], 4), (vec![2, 2, 2], 3), (vec![1, 3], 3)] {
        let r = dlc_report(&SemisimplePoint::from_ints(&s, q0).unwrap()).unwrap();
        assert!(r.ok(), "{s:?}: {r:?}");
        assert_eq!(r.geometric_total, r.algebraic_total);
    }
}
