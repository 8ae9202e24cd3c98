use dicube::cover::{
    point_to_order, separating_witness, u_contains, union_cycle, verify_cover, witness_point,
    LabeledPoint,
};
use dicube::orders::{DoubleOrder, OrderClass, OrderUniverse};
use dicube::{Caps, Execution, Permutation};
use num_rational::BigRational;
use proptest::prelude::*;

fn semi_regular(n: usize) -> Vec<DoubleOrder> {
    OrderUniverse::new(n, OrderClass::SemiRegular, &Caps::default(), Execution::Sequential)
        .unwrap()
        .orders
}

// Membership straight from the coordinates.
fn inside(o: &DoubleOrder, f: &LabeledPoint) -> bool {
    let n = o.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (!o.x.contains(a, b) || f.coords[a].0 < f.coords[b].0)
                && (!o.y.contains(a, b) || f.coords[a].1 < f.coords[b].1)
        })
    })
}

fn configuration(n: usize) -> impl Strategy<Value = LabeledPoint> {
    prop::collection::vec((0i64..3, -3i64..=3), n)
        .prop_map(|c| LabeledPoint::from_integers(&c))
        .prop_filter("injective", |f| f.is_injective())
}

fn case() -> impl Strategy<Value = (LabeledPoint, usize, usize, Vec<usize>)> {
    (1usize..=3).prop_flat_map(|n| {
        let m = semi_regular(n).len();
        (
            configuration(n),
            0..m,
            0..m,
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
    })
}

#[test]
fn cover_holds_for_small_sets() {
    for n in 1..=2 {
        let r = verify_cover(n, 200, 7, &Caps::default(), Execution::Parallel).unwrap();
        assert!(r.holds(), "n = {n}");
    }
}

#[test]
fn witness_points_lie_in_their_sets() {
    for n in 1..=3 {
        for o in semi_regular(n) {
            let f = witness_point(&o).unwrap();
            assert!(inside(&o, &f) && f.is_injective());
        }
    }
}

#[test]
fn json_round_trip() {
    let f = LabeledPoint {
        coords: vec![
            (BigRational::new(1.into(), 3.into()), BigRational::new((-2).into(), 1.into())),
            (BigRational::new(0.into(), 1.into()), BigRational::new(5.into(), 7.into())),
        ],
    };
    let json = f.to_json();
    assert_eq!(LabeledPoint::from_json(&json).unwrap(), f);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn point_order_is_regular_and_contains_point((f, _, _, _) in case()) {
        let o = point_to_order(&f).unwrap();
        prop_assert!(o.is_regular());
        prop_assert!(inside(&o, &f));
        prop_assert!(u_contains(&o, &f));
    }

    #[test]
    fn membership_matches_oracle((f, i, j, images) in case()) {
        let orders = semi_regular(f.len());
        let (o1, o2) = (&orders[i], &orders[j]);
        prop_assert_eq!(u_contains(o1, &f), inside(o1, &f));
        // inclusion of orders reverses inclusion of sets
        if o1.is_subset(o2) && inside(o2, &f) {
            prop_assert!(inside(o1, &f));
        }
        let sigma = Permutation::from_images(images).unwrap();
        prop_assert_eq!(u_contains(&o1.act(&sigma), &f.act(&sigma)), inside(o1, &f));
    }

    #[test]
    fn intersections_are_certified((f, i, j, _) in case()) {
        let orders = semi_regular(f.len());
        let (o1, o2) = (&orders[i], &orders[j]);
        match union_cycle(o1, o2) {
            Some((_, cycle)) => {
                prop_assert!(!cycle.is_empty());
                prop_assert!(o1.union_bar(o2).is_none());
            }
            None => {
                let u = o1.union_bar(o2).unwrap();
                let f = witness_point(&u).unwrap();
                prop_assert!(inside(o1, &f) && inside(o2, &f));
            }
        }
    }

    #[test]
    fn separating_witnesses_separate((f, i, j, _) in case()) {
        let orders = semi_regular(f.len());
        let (o1, o2) = (&orders[i], &orders[j]);
        match separating_witness(o1, o2).unwrap() {
            Some(f) => {
                prop_assert!(!o2.is_subset(o1));
                prop_assert!(inside(o1, &f) && !inside(o2, &f));
            }
            None => prop_assert!(o2.is_subset(o1)),
        }
    }
}
