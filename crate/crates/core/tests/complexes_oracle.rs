use dicube::complexes::{standard_cube, wedge_cube, z_complex, z_tilde, YCell, YComplex};
use dicube::cubical::{
    compute_altitude, find_isomorphism, is_non_self_linked, length_covering, CellId,
    PrecubicalComplex,
};
use dicube::{Caps, Execution, Permutation};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn falling(n: usize, k: usize) -> usize {
    (0..k).map(|i| n - i).product()
}

fn cube_counts(n: usize) -> Vec<usize> {
    (0..=n).map(|k| binomial(n, k) << (n - k)).collect()
}

fn wedge_counts(dims: &[usize]) -> Vec<usize> {
    let top = dims.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0; top + 1];
    for &d in dims {
        for (k, c) in cube_counts(d).into_iter().enumerate() {
            counts[k] += c;
        }
    }
    counts[0] -= dims.len().saturating_sub(1);
    counts
}

// Every relation d^ε_i d^η_j = d^η_{j-1} d^ε_i for i < j, checked directly.
fn relations_hold(k: &PrecubicalComplex) -> bool {
    k.cells().all(|c| {
        (1..=c.dim).all(|j| {
            (1..j).all(|i| {
                (0..2).all(|eps| {
                    (0..2).all(|eta| {
                        let lhs = k.face(k.face(c, j, eta), i, eps);
                        let rhs = k.face(k.face(c, i, eps), j - 1, eta);
                        lhs == rhs
                    })
                })
            })
        })
    })
}

#[test]
fn cube_counts_and_altitude() {
    for n in 0..=5 {
        let k = standard_cube(n);
        assert_eq!(k.dims(), cube_counts(n).as_slice());
        assert!(k.validate().is_empty());
        assert!(relations_hold(&k));
        let alt = compute_altitude(&k).unwrap();
        for c in k.cells() {
            let ones = k.label(c).chars().filter(|&ch| ch == '1').count();
            assert_eq!(alt.get(c), ones as i64, "{}", k.label(c));
        }
    }
}

#[test]
fn wedge_counts_match() {
    assert_eq!(wedge_cube(&[2, 1]).dims(), &[5, 5, 1]);
    for dims in [vec![1, 2], vec![1, 1, 1], vec![3, 0, 2], vec![2, 2]] {
        let k = wedge_cube(&dims);
        assert_eq!(k.dims(), wedge_counts(&dims).as_slice(), "{dims:?}");
        assert!(relations_hold(&k));
        assert!(compute_altitude(&k).is_some());
    }
}

#[test]
fn y_counts() {
    for n in 1..=5 {
        let y = YComplex::new(n, &Caps::default()).unwrap();
        let expected: Vec<usize> = (0..=n).map(|k| falling(n, k) << (n - k)).collect();
        assert_eq!(y.complex.dims(), expected.as_slice(), "n = {n}");
        assert!(relations_hold(&y.complex));
    }
    assert_eq!(YComplex::new(2, &Caps::default()).unwrap().complex.dims(), &[4, 4, 2]);
}

#[test]
fn y_is_non_self_linked_and_fixes_base() {
    for n in 1..=4 {
        let y = YComplex::new(n, &Caps::default()).unwrap();
        assert!(is_non_self_linked(&y.complex, &Caps::default(), Execution::Parallel).unwrap().holds());
        let init = y.complex.initial().unwrap();
        let fin = y.complex.terminal().unwrap();
        for g in y.sigma_action() {
            assert_eq!(g.apply(init), init);
            assert_eq!(g.apply(fin), fin);
            g.validate(&y.complex, &y.complex).unwrap();
        }
    }
}

#[test]
fn y_quotient_is_z_tilde() {
    for n in 1..=4 {
        let y = YComplex::new(n, &Caps::default()).unwrap();
        let (q, _) = y.orbit_map().unwrap();
        let expected: Vec<usize> = (0..=n).map(|k| n - k + 1).collect();
        assert_eq!(q.complex.dims(), expected.as_slice());
        assert!(find_isomorphism(&q.complex, &z_tilde(n).complex).is_some());
    }
}

#[test]
fn z_tilde_matches_length_covering() {
    for n in 0..=4 {
        let zt = z_tilde(n);
        assert!(zt.complex.validate().is_empty());
        for k in 0..=n {
            for j in 0..=n - k {
                assert_eq!(zt.altitude.get(zt.cell(k, j)), j as i64);
                if k > 0 {
                    for i in 1..=k {
                        assert_eq!(zt.complex.face(zt.cell(k, j), i, 1), zt.cell(k - 1, j + 1));
                    }
                }
            }
        }
        let cover = length_covering(&z_complex(n), n).unwrap();
        assert!(find_isomorphism(&cover.complex, &zt.complex).is_some(), "n = {n}");
    }
    assert!(compute_altitude(&z_complex(2)).is_none());
}

#[test]
fn length_covering_of_an_edge() {
    let edge = standard_cube(1);
    assert!(find_isomorphism(&length_covering(&edge, 1).unwrap().complex, &edge).is_some());
    assert!(length_covering(&edge, 2).unwrap().complex.is_empty());
}

fn y_and_perm() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), Just((0..n).collect::<Vec<usize>>()).prop_shuffle()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wedges_are_valid(dims in prop::collection::vec(0usize..4, 1..4)) {
        let k = wedge_cube(&dims);
        prop_assert_eq!(k.dims().to_vec(), wedge_counts(&dims));
        prop_assert!(k.validate().is_empty());
        prop_assert!(is_non_self_linked(&k, &Caps::default(), Execution::Sequential).unwrap().holds());
        let alt = compute_altitude(&k).unwrap();
        prop_assert!(alt.validate(&k).is_ok());
        prop_assert_eq!(alt.get(k.terminal().unwrap()), dims.iter().sum::<usize>() as i64);
    }

    #[test]
    fn sigma_acts_by_automorphisms((n, images) in y_and_perm()) {
        let y = YComplex::new(n, &Caps::default()).unwrap();
        let sigma = Permutation::from_images(images).unwrap();
        let g = y.act(&sigma);
        g.validate(&y.complex, &y.complex).unwrap();
        prop_assert!(g.is_bijective(&y.complex));
        for c in y.complex.cells() {
            let cell: &YCell = y.cell(c);
            let image: CellId = g.apply(c);
            prop_assert_eq!(y.cell(image), &cell.act(&sigma));
            prop_assert_eq!(y.cell(image).altitude(), cell.altitude());
        }
    }
}
