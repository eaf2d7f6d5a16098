use mtzeta::rational::ExactRational;
use mtzeta::series::{
    cyclic_sum_check, cyclic_sum_sweep, divided_difference_check, Poly, TriSeries,
};
use num_traits::One;
use proptest::prelude::*;

fn sparse_series(bound: u32) -> impl Strategy<Value = TriSeries> {
    prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -20i64..20, 1i64..9), 0..6).prop_map(
        move |terms| {
            let mut p = Poly::<3>::zero();
            for ((i, j, k), n, d) in terms {
                p.add_term([i, j, k], ExactRational::new(n.into(), d.into()));
            }
            TriSeries::from_poly(bound, p)
        },
    )
}

proptest! {
    #[test]
    fn multiplication_is_commutative(a in sparse_series(6), b in sparse_series(6)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_is_associative(a in sparse_series(5), b in sparse_series(5), c in sparse_series(5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in sparse_series(5), b in sparse_series(5), c in sparse_series(5)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn products_stay_within_bound(a in sparse_series(4), b in sparse_series(4)) {
        prop_assert!((&a * &b).terms().all(|(e, _)| e.iter().sum::<u32>() <= 4));
    }
}

#[test]
fn cyclic_sum_is_one_at_every_order() {
    assert!(cyclic_sum_sweep(10).iter().all(|&(_, ok)| ok));
    let s = cyclic_sum_check(12);
    assert!(s.is_constant(&ExactRational::one()));
    assert_eq!(s.rotate(1), s);
    assert_eq!(s.rotate(2), s);
}

#[test]
fn divided_difference_every_order() {
    for n in 0..=10 {
        assert!(divided_difference_check(n), "n = {n}");
    }
}
