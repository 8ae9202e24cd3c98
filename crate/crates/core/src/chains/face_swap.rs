use crate::cubical::{pattern_face, Tri};
use crate::error::{Error, Result};

fn check_subset(set: &[usize], bound: usize, name: &str) -> Result<Vec<usize>> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != set.len() || sorted.first() == Some(&0) || sorted.last().is_some_and(|&m| m > bound) {
        return Err(Error::argument(format!("{name} = {set:?} is not a subset of 1..={bound}")));
    }
    Ok(sorted)
}

/// `s` for the data `(p, q, V, W)`, after checking `p − |V| = q − |W|`.
fn swap_size(p: usize, q: usize, v: &[usize], w: &[usize]) -> Result<usize> {
    if p < v.len() || q < w.len() || p - v.len() != q - w.len() {
        return Err(Error::argument(format!(
            "p - |V| = {p} - {} and q - |W| = {q} - {} differ",
            v.len(),
            w.len()
        )));
    }
    Ok(p + w.len())
}

fn iterated(word: Vec<Tri>, set: &[usize], eps: u8) -> Option<Vec<Tri>> {
    set.iter().rev().try_fold(word, |w, &i| pattern_face(&w, i, eps))
}

/// Checks `d¹_V d⁰_{W'} = d⁰_W d¹_{V'}` on the top cube of `□ˢ`.
pub fn verify_face_identity(
    p: usize,
    q: usize,
    v: &[usize],
    w: &[usize],
    v2: &[usize],
    w2: &[usize],
) -> bool {
    let Ok(s) = swap_size(p, q, v, w) else {
        return false;
    };
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for (set, bound) in [(v, p), (w, q), (v2, s), (w2, s)] {
        match check_subset(set, bound, "set") {
            Ok(sorted) => sets.push(sorted),
            Err(_) => return false,
        }
    }
    if sets[2].len() != v.len() || sets[3].len() != w.len() {
        return false;
    }
    let top = vec![Tri::Star; s];
    let left = iterated(top.clone(), &sets[3], 0).and_then(|c| iterated(c, &sets[0], 1));
    let right = iterated(top, &sets[2], 1).and_then(|c| iterated(c, &sets[1], 0));
    left.is_some() && left == right
}

/// `(V', W')` with `d¹_V d⁰_{W'} = d⁰_W d¹_{V'}`, by recursion on the last
/// coordinate. The identity is verified before returning.
pub fn face_swap(p: usize, q: usize, v: &[usize], w: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let v = check_subset(v, p, "V")?;
    let w = check_subset(w, q, "W")?;
    swap_size(p, q, &v, &w)?;
    let (v2, w2) = recurse(p, q, &v, &w);
    if !verify_face_identity(p, q, &v, &w, &v2, &w2) {
        return Err(Error::consistency(format!(
            "face swap for p={p}, q={q}, V={v:?}, W={w:?} produced a failing pair"
        )));
    }
    Ok((v2, w2))
}

fn recurse(p: usize, q: usize, v: &[usize], w: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let s = p + w.len();
    if p == 0 {
        return (Vec::new(), (1..=s).collect());
    }
    if q == 0 {
        return ((1..=s).collect(), Vec::new());
    }
    if w.last() == Some(&q) {
        let (v2, mut w2) = recurse(p, q - 1, v, &w[..w.len() - 1]);
        w2.push(s);
        (v2, w2)
    } else if v.last() == Some(&p) {
        let (mut v2, w2) = recurse(p - 1, q, &v[..v.len() - 1], w);
        v2.push(s);
        (v2, w2)
    } else {
        recurse(p - 1, q - 1, v, w)
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// Every `(V', W')` satisfying the identity, by exhaustive search.
pub fn face_swap_search(p: usize, q: usize, v: &[usize], w: &[usize]) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let v = check_subset(v, p, "V")?;
    let w = check_subset(w, q, "W")?;
    let s = swap_size(p, q, &v, &w)?;
    let mut out = Vec::new();
    for v2 in subsets_of_size(s, v.len()) {
        for w2 in subsets_of_size(s, w.len()) {
            if verify_face_identity(p, q, &v, &w, &v2, &w2) {
                out.push((v2.clone(), w2));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_case() {
        assert_eq!(face_swap(0, 0, &[], &[]).unwrap(), (vec![], vec![]));
    }

    #[test]
    fn recursion_output_is_among_search_results() {
        for (p, q, v, w) in [(1, 1, vec![1], vec![1]), (2, 1, vec![1, 2], vec![1])] {
            let got = face_swap(p, q, &v, &w).unwrap();
            assert_eq!(got.0.len(), v.len());
            assert_eq!(got.1.len(), w.len());
            assert!(face_swap_search(p, q, &v, &w).unwrap().contains(&got));
        }
    }

    #[test]
    fn exhaustive_up_to_seven() {
        for p in 0..=7usize {
            for q in 0..=7 - p {
                for v in (0..=p).flat_map(|k| subsets_of_size(p, k)) {
                    for w in (0..=q).flat_map(|k| subsets_of_size(q, k)) {
                        if p - v.len() == q - w.len() {
                            face_swap(p, q, &v, &w).unwrap();
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bad_arithmetic_is_an_argument_error() {
        assert!(matches!(face_swap(2, 1, &[], &[]), Err(Error::Argument(_))));
        assert!(matches!(face_swap(1, 1, &[2], &[1]), Err(Error::Argument(_))));
    }
}
