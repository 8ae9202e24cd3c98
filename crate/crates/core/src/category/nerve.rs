use std::collections::HashMap;

use num_bigint::BigInt;

use super::FiniteCategory;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::{ChainComplex, SparseMatrix};
use crate::par::Execution;

/// Non-degenerate simplices of the nerve. A 0-simplex is stored as the
/// one-element list `[object]`; a `k`-simplex, `k ≥ 1`, as the list of its
/// `k` composable non-identity morphisms `f₁, …, f_k` (`f₁` first).
#[derive(Debug, Clone)]
pub struct Nerve {
    pub simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl Nerve {
    /// Enumerates the nerve of a loop-free category by depth-first search
    /// over composable sequences.
    pub fn new(c: &FiniteCategory, caps: &Caps, exec: Execution) -> Result<Self> {
        if !c.is_loop_free() {
            return Err(Error::contract("nerve of a category with loops is infinite"));
        }
        let starts: Vec<usize> = (0..c.morphisms().len()).filter(|&f| !c.is_identity(f)).collect();
        let budget = caps.max_cells;
        let found: Vec<Result<Vec<Vec<usize>>>> = exec.map(&starts, |&f| {
            let mut out = Vec::new();
            let mut cur = vec![f];
            extend(c, &mut cur, &mut out, budget)?;
            Ok(out)
        });
        let mut simplices: Vec<Vec<Vec<usize>>> =
            vec![(0..c.objects().len()).map(|o| vec![o]).collect()];
        let mut total = c.objects().len();
        for batch in found {
            for s in batch? {
                total += 1;
                caps.check_cells("nerve simplices", total)?;
                while simplices.len() <= s.len() {
                    simplices.push(Vec::new());
                }
                simplices[s.len()].push(s);
            }
        }
        for dim in simplices.iter_mut().skip(1) {
            dim.sort();
        }
        let index = simplices
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(Nerve { simplices, index })
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, dim: usize, s: &[usize]) -> Option<usize> {
        self.index.get(dim)?.get(s).copied()
    }

    /// Chain complex `∂ = Σ (−1)^i d_i`.
    pub fn chain_complex(&self, c: &FiniteCategory) -> ChainComplex {
        let ranks = self.counts();
        let boundaries = (1..self.simplices.len())
            .map(|k| {
                let mut t = Vec::new();
                for (j, s) in self.simplices[k].iter().enumerate() {
                    for i in 0..=k {
                        let face = simplex_face(c, s, i);
                        let row = self.index[k - 1][&face];
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        t.push((row, j, BigInt::from(sign)));
                    }
                }
                SparseMatrix::from_triplets(ranks[k - 1], ranks[k], t)
            })
            .collect();
        ChainComplex::new(ranks, boundaries).expect("shapes follow the nerve")
    }
}

fn extend(
    c: &FiniteCategory,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: usize,
) -> Result<()> {
    out.push(cur.clone());
    if out.len() > budget {
        return Err(Error::resource("nerve simplices", out.len(), budget));
    }
    let t = c.morphism(*cur.last().unwrap()).target;
    for &g in c.outgoing(t) {
        if !c.is_identity(g) {
            cur.push(g);
            extend(c, cur, out, budget)?;
            cur.pop();
        }
    }
    Ok(())
}

/// `d_i` of a `k`-simplex (`k = s.len() ≥ 1`): drop the first or last
/// morphism, or compose two neighbours.
pub(crate) fn simplex_face(c: &FiniteCategory, s: &[usize], i: usize) -> Vec<usize> {
    let k = s.len();
    if k == 1 {
        let m = c.morphism(s[0]);
        return vec![if i == 0 { m.target } else { m.source }];
    }
    if i == 0 {
        s[1..].to_vec()
    } else if i == k {
        s[..k - 1].to_vec()
    } else {
        let mut out = s[..i - 1].to_vec();
        out.push(c.compose(s[i], s[i - 1]));
        out.extend_from_slice(&s[i + 1..]);
        out
    }
}

/// Chain complex of the nerve of a loop-free category.
pub fn nerve_complex(c: &FiniteCategory, caps: &Caps, exec: Execution) -> Result<ChainComplex> {
    Ok(Nerve::new(c, caps, exec)?.chain_complex(c))
}

/// Number of non-degenerate `k`-simplices of the nerve for every `k`,
/// from powers of the matrix counting non-identity morphisms `a → b`.
pub fn nerve_simplex_counts(c: &FiniteCategory) -> Result<Vec<BigInt>> {
    if !c.is_loop_free() {
        return Err(Error::contract("nerve of a category with loops is infinite"));
    }
    let n = c.objects().len();
    let mut step = vec![vec![0u64; n]; n];
    for (f, m) in c.morphisms().iter().enumerate() {
        if !c.is_identity(f) {
            step[m.source][m.target] += 1;
        }
    }
    // paths[a] = number of composable sequences of the current length ending at a
    let mut paths: Vec<BigInt> = vec![BigInt::from(1); n];
    let mut counts = vec![BigInt::from(n)];
    loop {
        let mut next = vec![BigInt::from(0); n];
        for a in 0..n {
            if paths[a] == BigInt::from(0) {
                continue;
            }
            for b in 0..n {
                if step[a][b] > 0 {
                    next[b] += &paths[a] * step[a][b];
                }
            }
        }
        let total: BigInt = next.iter().sum();
        if total == BigInt::from(0) {
            break;
        }
        counts.push(total);
        paths = next;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Poset;
    use crate::homology::{homology, HomologyGroup};

    #[test]
    fn point_nerve() {
        let p = Poset::from_fn(vec!["*".into()], |_, _| true).unwrap();
        let cx = nerve_complex(&p.to_category(), &Caps::default(), Execution::Sequential).unwrap();
        assert_eq!(cx.ranks(), &[1]);
        assert_eq!(
            homology(&cx, Execution::Sequential).unwrap(),
            vec![HomologyGroup::free(1)]
        );
    }

    #[test]
    fn triangle_nerve_counts() {
        let p = Poset::from_fn(vec!["a".into(), "b".into(), "c".into()], |a, b| a <= b).unwrap();
        let c = p.to_category();
        let nerve = Nerve::new(&c, &Caps::default(), Execution::Parallel).unwrap();
        assert_eq!(nerve.counts(), vec![3, 3, 1]);
        let counts = nerve_simplex_counts(&c).unwrap();
        assert_eq!(counts, vec![BigInt::from(3), BigInt::from(3), BigInt::from(1)]);
        let cx = nerve.chain_complex(&c);
        assert_eq!(cx.boundary_defect(), None);
    }
}
