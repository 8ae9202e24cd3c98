use super::FiniteCategory;
use crate::error::{Error, Result};

/// A finite poset given by its full `≤` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

/// `sd(P)` together with the chains it consists of and `max : sd(P) → P`.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub poset: Poset,
    pub chains: Vec<Vec<usize>>,
    pub max: Vec<usize>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn from_leq_matrix(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::structural("order table does not match the element list"));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::consistency(format!("{} ≰ itself", labels[a])));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::consistency(format!(
                        "antisymmetry fails for {} and {}",
                        labels[a], labels[b]
                    )));
                }
                if leq[a][b] {
                    for c in 0..n {
                        if leq[b][c] && !leq[a][c] {
                            return Err(Error::consistency(format!(
                                "transitivity fails at {} ≤ {} ≤ {}",
                                labels[a], labels[b], labels[c]
                            )));
                        }
                    }
                }
            }
        }
        Ok(Poset { labels, leq })
    }

    pub fn from_fn(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let table = (0..n).map(|a| (0..n).map(|b| leq(a, b)).collect()).collect();
        Self::from_leq_matrix(labels, table)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn table(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| (0..self.len()).all(|a| !self.lt(a, b)))
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| !self.lt(a, b)))
            .collect()
    }

    /// Covering pairs `a ⋖ b` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn dual(&self) -> Poset {
        let n = self.len();
        Poset {
            labels: self.labels.clone(),
            leq: (0..n).map(|a| (0..n).map(|b| self.leq[b][a]).collect()).collect(),
        }
    }

    /// All nonempty strict chains `p₀ < ⋯ < p_k`, in lexicographic order of
    /// their element lists after sorting by depth.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        fn extend(p: &Poset, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(cur.clone());
            let last = *cur.last().unwrap();
            for b in 0..p.len() {
                if p.lt(last, b) {
                    cur.push(b);
                    extend(p, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        for a in 0..self.len() {
            extend(self, &mut vec![a], &mut out);
        }
        out.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
        out
    }

    /// `sd(P)`: nonempty chains ordered by inclusion.
    pub fn subdivision(&self) -> Result<Subdivision> {
        let chains = self.chains();
        let masks: Vec<Vec<bool>> = chains
            .iter()
            .map(|c| {
                let mut m = vec![false; self.len()];
                for &a in c {
                    m[a] = true;
                }
                m
            })
            .collect();
        let labels = chains
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&a| self.labels[a].as_str()).collect();
                format!("[{}]", names.join(" < "))
            })
            .collect();
        let poset = Poset::from_fn(labels, |i, j| chains[i].iter().all(|&a| masks[j][a]))?;
        let max = chains.iter().map(|c| *c.last().unwrap()).collect();
        Ok(Subdivision {
            poset,
            chains,
            max,
        })
    }

    /// Checks that `f : self → other` is monotone.
    pub fn is_monotone(&self, other: &Poset, f: &[usize]) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| !self.leq(a, b) || other.leq(f[a], f[b]))
        })
    }

    /// The poset as a category: one morphism `a → b` for every `a ≤ b`.
    pub fn to_category(&self) -> FiniteCategory {
        FiniteCategory::from_poset(self)
    }
}
