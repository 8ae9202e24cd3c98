use dicube::chains::{
    chain_order_isomorphism, chain_poset, enumerate_chains, face_swap, face_swap_search,
    verify_face_identity,
};
use dicube::complexes::{standard_cube, wedge_cube, z_tilde, YComplex};
use dicube::{Caps, Execution};
use proptest::prelude::*;

// Ordered set partitions of an n-set.
fn fubini(n: usize) -> usize {
    let mut a = vec![1usize];
    for m in 1..=n {
        let binom = |k: usize| (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1));
        a.push((1..=m).map(|k| binom(k) * a[m - k]).sum());
    }
    a[n]
}

fn caps() -> Caps {
    Caps::default()
}

#[test]
fn cube_chain_counts() {
    for n in 0..=5 {
        let chains = enumerate_chains(&standard_cube(n), &caps(), Execution::Parallel).unwrap();
        assert_eq!(chains.len(), fubini(n), "n = {n}");
        for c in &chains {
            assert_eq!(c.dims().iter().sum::<usize>(), n);
        }
    }
}

#[test]
fn z_tilde_chains_are_compositions() {
    for n in 1..=6 {
        let chains = enumerate_chains(&z_tilde(n).complex, &caps(), Execution::Sequential).unwrap();
        assert_eq!(chains.len(), 1 << (n - 1));
    }
}

#[test]
fn y_chain_counts() {
    let mut factorial = 1;
    for n in 1..=4 {
        factorial *= n;
        let y = YComplex::new(n, &caps()).unwrap();
        let chains = enumerate_chains(&y.complex, &caps(), Execution::Parallel).unwrap();
        assert_eq!(chains.len(), factorial << (n - 1));
        for c in &chains {
            c.validate(&y.complex).unwrap();
        }
    }
}

#[test]
fn wedge_chains_multiply() {
    let k = wedge_cube(&[2, 1, 2]);
    let chains = enumerate_chains(&k, &caps(), Execution::Parallel).unwrap();
    assert_eq!(chains.len(), fubini(2) * fubini(1) * fubini(2));
}

#[test]
fn sequential_and_parallel_agree() {
    let y = YComplex::new(4, &caps()).unwrap();
    let a = enumerate_chains(&y.complex, &caps(), Execution::Sequential).unwrap();
    let b = enumerate_chains(&y.complex, &caps(), Execution::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn chain_poset_axioms() {
    for n in 1..=3 {
        let y = YComplex::new(n, &caps()).unwrap();
        let cp = chain_poset(&y.complex, &caps(), Execution::Parallel).unwrap();
        let p = &cp.poset;
        for a in 0..p.len() {
            assert!(p.leq(a, a));
            for b in 0..p.len() {
                if a != b {
                    assert!(!(p.leq(a, b) && p.leq(b, a)));
                }
                for c in 0..p.len() {
                    assert!(!(p.leq(a, b) && p.leq(b, c)) || p.leq(a, c));
                }
            }
        }
        // minimal chains are the all-edge ones, maximal the single top cubes
        let mut factorial = 1;
        for m in 1..=n {
            factorial *= m;
        }
        assert_eq!(p.minimal().len(), factorial);
        assert_eq!(p.maximal().len(), factorial);
        for &m in &p.minimal() {
            assert!(cp.chains[m].dims().iter().all(|&d| d == 1));
        }
    }
}

#[test]
fn chain_order_correspondence() {
    for n in 1..=3 {
        let report = chain_order_isomorphism(n, &caps(), Execution::Parallel).unwrap();
        assert!(report.holds(), "n = {n}");
    }
}

#[test]
fn face_swap_examples() {
    let (v, w) = face_swap(1, 1, &[1], &[1]).unwrap();
    assert_eq!((v.len(), w.len()), (1, 1));
    assert!(verify_face_identity(1, 1, &[1], &[1], &v, &w));
    let (v, w) = face_swap(2, 1, &[1, 2], &[1]).unwrap();
    assert_eq!((v.len(), w.len()), (2, 1));
    assert!(verify_face_identity(2, 1, &[1, 2], &[1], &v, &w));
    assert!(face_swap(2, 1, &[], &[]).is_err());
    assert!(face_swap(1, 1, &[2], &[1]).is_err());
}

fn swap_data() -> impl Strategy<Value = (usize, usize, Vec<usize>, Vec<usize>)> {
    (0usize..=4, 0usize..=4, 0usize..=4).prop_flat_map(|(r, vlen, wlen)| {
        let p = r + vlen;
        let q = r + wlen;
        (
            Just(p),
            Just(q),
            Just((1..=p).collect::<Vec<usize>>()).prop_shuffle(),
            Just((1..=q).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(p, q, vs, ws)| {
                let mut v = vs[..vlen].to_vec();
                let mut w = ws[..wlen].to_vec();
                v.sort_unstable();
                w.sort_unstable();
                (p, q, v, w)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn face_swap_satisfies_identity((p, q, v, w) in swap_data()) {
        let (v2, w2) = face_swap(p, q, &v, &w).unwrap();
        prop_assert_eq!(v2.len(), v.len());
        prop_assert_eq!(w2.len(), w.len());
        prop_assert!(verify_face_identity(p, q, &v, &w, &v2, &w2));
        let all = face_swap_search(p, q, &v, &w).unwrap();
        prop_assert!(all.contains(&(v2, w2)));
    }
}
