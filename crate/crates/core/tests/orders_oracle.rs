use std::collections::BTreeSet;

use dicube::orders::{
    f_map, g_map, poset_leq, DoubleOrder, OrderClass, OrderUniverse, PosetVariant, Relation,
};
use dicube::{Caps, Execution, Permutation};
use proptest::prelude::*;

type Mat = Vec<Vec<bool>>;

fn strict_orders(n: usize) -> Vec<Mat> {
    let slots: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << slots.len() {
        let mut m = vec![vec![false; n]; n];
        for (k, &(a, b)) in slots.iter().enumerate() {
            m[a][b] = mask >> k & 1 == 1;
        }
        if is_strict(&m) {
            out.push(m);
        }
    }
    out
}

fn is_strict(m: &Mat) -> bool {
    let n = m.len();
    (0..n).all(|a| !m[a][a])
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(m[a][b] && m[b][c]) || m[a][c])))
}

fn comparable(m: &Mat, a: usize, b: usize) -> bool {
    m[a][b] || m[b][a]
}

fn is_double(x: &Mat, y: &Mat) -> bool {
    let n = x.len();
    (0..n).all(|a| (a + 1..n).all(|b| comparable(x, a, b) || comparable(y, a, b)))
}

// A strict order is semi-linear exactly when incomparability is transitive.
fn is_weak(x: &Mat) -> bool {
    let n = x.len();
    let inc = |a: usize, b: usize| a == b || !comparable(x, a, b);
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(inc(a, b) && inc(b, c)) || inc(a, c))))
}

fn is_regular(x: &Mat, y: &Mat) -> bool {
    let n = x.len();
    is_double(x, y)
        && is_weak(x)
        && (0..n).all(|a| (0..n).all(|b| !comparable(x, a, b) || !comparable(y, a, b)))
}

fn closure(m: &Mat) -> Mat {
    let n = m.len();
    let mut c = m.clone();
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if c[a][k] && c[k][b] {
                    c[a][b] = true;
                }
            }
        }
    }
    c
}

fn union(p: &Mat, q: &Mat) -> Mat {
    p.iter().zip(q).map(|(r, s)| r.iter().zip(s).map(|(u, v)| *u || *v).collect()).collect()
}

fn union_bar(o1: &(Mat, Mat), o2: &(Mat, Mat)) -> Option<(Mat, Mat)> {
    let x = closure(&union(&o1.0, &o2.0));
    let y = closure(&union(&o1.1, &o2.1));
    let n = x.len();
    (0..n).all(|a| !x[a][a] && !y[a][a]).then_some((x, y))
}

struct Oracle {
    double: BTreeSet<(Mat, Mat)>,
    regular: BTreeSet<(Mat, Mat)>,
    semi_regular: BTreeSet<(Mat, Mat)>,
}

fn oracle(n: usize) -> Oracle {
    let orders = strict_orders(n);
    let mut double = BTreeSet::new();
    for x in &orders {
        for y in &orders {
            if is_double(x, y) {
                double.insert((x.clone(), y.clone()));
            }
        }
    }
    let regular: BTreeSet<_> = double.iter().filter(|(x, y)| is_regular(x, y)).cloned().collect();
    let mut semi_regular = regular.clone();
    let mut frontier: Vec<_> = regular.iter().cloned().collect();
    while let Some(o) = frontier.pop() {
        for r in &regular {
            if let Some(u) = union_bar(&o, r) {
                if semi_regular.insert(u.clone()) {
                    frontier.push(u);
                }
            }
        }
    }
    Oracle {
        double,
        regular,
        semi_regular,
    }
}

fn library(n: usize, class: OrderClass) -> BTreeSet<(Mat, Mat)> {
    OrderUniverse::new(n, class, &Caps::default(), Execution::Sequential)
        .unwrap()
        .orders
        .iter()
        .map(|o| (o.x.to_matrix(), o.y.to_matrix()))
        .collect()
}

fn order(n: usize, x: &[(usize, usize)], y: &[(usize, usize)]) -> DoubleOrder {
    DoubleOrder::from_pairs(n, x, y)
}

#[test]
fn universes_match_brute_force() {
    for n in 1..=3 {
        let o = oracle(n);
        assert_eq!(library(n, OrderClass::Double), o.double, "D, n = {n}");
        assert_eq!(library(n, OrderClass::Regular), o.regular, "R, n = {n}");
        assert_eq!(library(n, OrderClass::SemiRegular), o.semi_regular, "R+, n = {n}");
    }
}

#[test]
fn universes_match_brute_force_at_four() {
    let o = oracle(4);
    assert_eq!(o.regular.len(), 192);
    assert_eq!(library(4, OrderClass::Double), o.double);
    assert_eq!(library(4, OrderClass::SemiRegular), o.semi_regular);
    assert_eq!(o.semi_regular.len(), 3720);
}

#[test]
fn small_counts() {
    let count = |n, class| OrderUniverse::new(n, class, &Caps::default(), Execution::Parallel).unwrap().len();
    assert_eq!(count(1, OrderClass::Double), 1);
    assert_eq!(count(1, OrderClass::Regular), 1);
    assert_eq!(count(1, OrderClass::SemiRegular), 1);
    assert_eq!(count(2, OrderClass::Double), 8);
    assert_eq!(count(2, OrderClass::Regular), 4);
    assert_eq!(count(2, OrderClass::SemiRegular), 8);
    let mut factorial = 1;
    for n in 1..=6 {
        factorial *= n;
        assert_eq!(count(n, OrderClass::Regular), factorial << (n - 1));
    }
}

#[test]
fn classification_examples() {
    let o = order(2, &[(0, 1)], &[]);
    assert!(o.is_double() && o.is_regular());
    assert_eq!(o.x.level_function(), Some(vec![1, 2]));
    let o = order(2, &[(0, 1)], &[(0, 1)]);
    assert!(o.is_double() && !o.is_regular() && o.is_semi_regular());
    assert!(!order(2, &[], &[]).is_double());
}

#[test]
fn union_bar_examples() {
    let a = order(2, &[(0, 1)], &[]);
    let b = order(2, &[(1, 0)], &[]);
    assert!(a.union_bar(&b).is_none());
    let y = order(2, &[], &[(0, 1)]);
    assert_eq!(a.union_bar(&y), Some(order(2, &[(0, 1)], &[(0, 1)])));
    assert_eq!(a.union_bar(&a), Some(a));
}

#[test]
fn sqsubset_examples() {
    let y = order(2, &[], &[(0, 1)]);
    let x = order(2, &[(0, 1)], &[]);
    assert!(poset_leq(&y, &x, PosetVariant::SqSubset));
    assert!(!poset_leq(&x, &y, PosetVariant::SqSubset));
    assert!(poset_leq(&x, &x, PosetVariant::SqSubset));
}

#[test]
fn functor_examples() {
    let both = order(2, &[(0, 1)], &[(0, 1)]);
    assert_eq!(f_map(&both).unwrap(), order(2, &[(0, 1)], &[]));
    let chain = [order(2, &[], &[(0, 1)]), order(2, &[(0, 1)], &[])];
    assert_eq!(g_map(&chain).unwrap(), both);
    assert!(g_map(&[chain[1], chain[0]]).is_err());
}

#[test]
fn malformed_matrix_is_rejected() {
    let reflexive = vec![vec![true, false], vec![false, false]];
    assert!(Relation::from_matrix(&reflexive).map_or(true, |r| !r.is_strict_order()));
}

fn regular_order(n: usize) -> impl Strategy<Value = DoubleOrder> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n - 1))
        .prop_map(move |(seq, cuts)| {
            let mut blocks = vec![vec![seq[0]]];
            for (k, &cut) in cuts.iter().enumerate() {
                if cut {
                    blocks.push(Vec::new());
                }
                blocks.last_mut().unwrap().push(seq[k + 1]);
            }
            DoubleOrder::from_blocks(n, &blocks)
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn regular_with_perm() -> impl Strategy<Value = (DoubleOrder, Permutation)> {
    (1usize..=6).prop_flat_map(|n| (regular_order(n), permutation(n)))
}

proptest! {
    #[test]
    fn generated_orders_are_regular((o, _) in regular_with_perm()) {
        prop_assert!(o.is_regular());
        let m = (o.x.to_matrix(), o.y.to_matrix());
        prop_assert!(is_regular(&m.0, &m.1));
        prop_assert_eq!(DoubleOrder::from_blocks(o.len(), &o.blocks().unwrap()), o);
    }

    #[test]
    fn action_is_free_and_union_detects_it((o, s) in regular_with_perm()) {
        let moved = o.act(&s);
        prop_assert!(moved.is_regular());
        prop_assert_eq!(moved == o, s.is_identity());
        prop_assert_eq!(o.union_bar(&moved).is_some(), s.is_identity());
    }

    #[test]
    fn action_composes((o, s) in regular_with_perm(), seed in any::<u64>()) {
        let n = o.len();
        let images: Vec<usize> = (0..n).map(|i| (i + seed as usize) % n).collect();
        let t = Permutation::from_images(images).unwrap();
        // (o s) t = o (s ∘ t)
        prop_assert_eq!(o.act(&s).act(&t), o.act(&s.compose(&t)));
    }

    #[test]
    fn f_is_equivariant_and_regular((o, s) in regular_with_perm(), (p, _) in regular_with_perm()) {
        prop_assert_eq!(f_map(&o).unwrap(), o);
        if p.len() == o.len() {
            if let Some(u) = o.union_bar(&p) {
                prop_assert!(u.is_semi_regular());
                let fu = f_map(&u).unwrap();
                prop_assert!(fu.is_regular());
                prop_assert_eq!(f_map(&u.act(&s)).unwrap(), fu.act(&s));
                prop_assert!(poset_leq(&f_map(&o).unwrap(), &fu, PosetVariant::SqSubset));
            }
        }
    }
}
