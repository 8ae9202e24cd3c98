//! Exact integral homology of finite chain complexes.

mod matrix;
mod snf;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::cubical::PrecubicalComplex;
use crate::error::{Error, Result};
use crate::par::Execution;

pub use matrix::{IntMatrix, SparseMatrix};
pub use snf::{elementary_divisors, smith_normal_form, SmithForm};

/// `C_0 ← C_1 ← ⋯ ← C_top`; `boundaries[k - 1]` is `∂_k : C_k → C_{k−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if boundaries.len() + 1 != ranks.len().max(1) {
            return Err(Error::structural(format!(
                "{} ranks need {} boundary matrices, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] {
                return Err(Error::structural(format!(
                    "boundary in degree {} is {}×{}, expected {}×{}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    /// `∂_k`, `k ≥ 1`.
    pub fn boundary(&self, k: usize) -> Option<&SparseMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// First degree `k` with `∂_{k} ∘ ∂_{k+1} ≠ 0`, if any.
    pub fn boundary_defect(&self) -> Option<usize> {
        self.boundaries
            .windows(2)
            .position(|w| !w[0].mul(&w[1]).is_zero())
            .map(|i| i + 1)
    }

    /// `Σ (−1)^k rank C_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// `ℤ^betti ⊕ ⨁ ℤ/t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyJson {
    pub dim: usize,
    pub betti: usize,
    pub torsion: Vec<serde_json::Value>,
}

/// The JSON rows `{"dim", "betti", "torsion"}`; torsion coefficients that
/// do not fit in 64 bits are written as decimal strings.
pub fn homology_json(groups: &[HomologyGroup]) -> Vec<HomologyJson> {
    groups
        .iter()
        .enumerate()
        .map(|(dim, g)| HomologyJson {
            dim,
            betti: g.betti,
            torsion: g
                .torsion
                .iter()
                .map(|t| match t.to_u64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(t.to_string()),
                })
                .collect(),
        })
        .collect()
}

/// `H_k = ker ∂_k / im ∂_{k+1}` for every degree of `c`.
pub fn homology(c: &ChainComplex, exec: Execution) -> Result<Vec<HomologyGroup>> {
    if let Some(k) = c.boundary_defect() {
        return Err(Error::contract(format!(
            "∂∘∂ ≠ 0 between degrees {} and {}",
            k + 1,
            k - 1
        )));
    }
    let divisors: Vec<Vec<BigInt>> = exec.map(&c.boundaries, elementary_divisors);
    let rank = |k: usize| -> usize {
        k.checked_sub(1)
            .and_then(|i| divisors.get(i))
            .map_or(0, Vec::len)
    };
    Ok((0..c.ranks.len())
        .map(|k| {
            let betti = c.ranks[k] - rank(k) - rank(k + 1);
            let torsion = divisors
                .get(k)
                .map(|d| d.iter().filter(|x| !x.is_one()).cloned().collect())
                .unwrap_or_default();
            HomologyGroup { betti, torsion }
        })
        .collect())
}

/// `Σ (−1)^k betti_k`.
pub fn euler_from_homology(groups: &[HomologyGroup]) -> i64 {
    groups
        .iter()
        .enumerate()
        .map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
        .sum()
}

/// Compares two homology sequences, ignoring trailing zero groups.
pub fn same_homology(a: &[HomologyGroup], b: &[HomologyGroup]) -> bool {
    let trim = |h: &[HomologyGroup]| {
        let mut v = h.to_vec();
        while v.last().is_some_and(HomologyGroup::is_zero) {
            v.pop();
        }
        v
    };
    trim(a) == trim(b)
}

/// Simplicial chain complex of the complex generated by `facets` (vertex
/// lists); `∂[v₀…v_k] = Σ (−1)^i [v₀…v̂_i…v_k]`.
pub fn simplicial_chain_complex(facets: &[Vec<usize>]) -> Result<ChainComplex> {
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut seen: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    for facet in facets {
        let mut f = facet.clone();
        f.sort_unstable();
        f.dedup();
        let k = f.len();
        for mask in 1u64..(1 << k) {
            let s: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
            let d = s.len() - 1;
            while by_dim.len() <= d {
                by_dim.push(Vec::new());
                seen.push(HashMap::new());
            }
            if !seen[d].contains_key(&s) {
                seen[d].insert(s.clone(), by_dim[d].len());
                by_dim[d].push(s);
            }
        }
    }
    let ranks = by_dim.iter().map(Vec::len).collect();
    let mut boundaries = Vec::new();
    for d in 1..by_dim.len() {
        let mut t = Vec::new();
        for (j, s) in by_dim[d].iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                t.push((seen[d - 1][&face], j, BigInt::from(sign)));
            }
        }
        boundaries.push(SparseMatrix::from_triplets(by_dim[d - 1].len(), by_dim[d].len(), t));
    }
    ChainComplex::new(ranks, boundaries)
}

/// The boundary of the octahedron, a 2-sphere.
pub fn octahedron() -> ChainComplex {
    // vertices 0/1, 2/3, 4/5 are antipodal
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    simplicial_chain_complex(&facets).expect("octahedron is well formed")
}

/// Cellular chains of a precubical set: `∂c = Σ_i (−1)^i (d¹_i c − d⁰_i c)`.
pub fn cubical_chain_complex(k: &PrecubicalComplex) -> ChainComplex {
    let ranks: Vec<usize> = k.dims().to_vec();
    let boundaries = (1..ranks.len())
        .map(|d| {
            let mut t = Vec::new();
            for c in k.cells_of_dim(d) {
                for i in 1..=d {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    t.push((k.face(c, i, 1).index, c.index, BigInt::from(sign)));
                    t.push((k.face(c, i, 0).index, c.index, BigInt::from(-sign)));
                }
            }
            SparseMatrix::from_triplets(ranks[d - 1], ranks[d], t)
        })
        .collect();
    ChainComplex::new(ranks, boundaries).expect("shapes follow the complex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{standard_cube, z_complex};

    fn groups(c: &ChainComplex) -> Vec<HomologyGroup> {
        homology(c, Execution::Sequential).unwrap()
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&m, true);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
        let (u, v) = (s.u.unwrap(), s.v.unwrap());
        let d = u.mul(&m).mul(&v);
        assert_eq!(d, IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]));
        assert!(smith_normal_form(&IntMatrix::zeros(3, 2), false).diagonal.is_empty());
        assert_eq!(
            smith_normal_form(&IntMatrix::identity(3), false).diagonal,
            vec![BigInt::one(); 3]
        );
    }

    #[test]
    fn sparse_divisors_match_dense() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let dense = smith_normal_form(&m, false).diagonal;
        assert_eq!(elementary_divisors(&SparseMatrix::from_dense(&m)), dense);
        assert_eq!(dense, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn point_and_sphere() {
        let point = ChainComplex::new(vec![1], vec![]).unwrap();
        assert_eq!(groups(&point), vec![HomologyGroup::free(1)]);
        assert_eq!(point.euler_characteristic(), 1);
        let s2 = octahedron();
        assert_eq!(
            groups(&s2),
            vec![HomologyGroup::free(1), HomologyGroup::free(0), HomologyGroup::free(1)]
        );
        assert_eq!(s2.euler_characteristic(), 2);
    }

    #[test]
    fn cube_is_contractible_and_z_is_not() {
        let h = groups(&cubical_chain_complex(&standard_cube(3)));
        assert!(same_homology(&h, &[HomologyGroup::free(1)]));
        let h = groups(&cubical_chain_complex(&z_complex(3)));
        assert_eq!(h, vec![HomologyGroup::free(1); 4]);
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // six-vertex triangulation of RP²
        let facets = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 5, 1],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![3, 4, 1],
            vec![4, 5, 2],
            vec![5, 1, 3],
        ];
        let h = groups(&simplicial_chain_complex(&facets).unwrap());
        assert_eq!(h[0], HomologyGroup::free(1));
        assert_eq!(h[1].betti, 0);
        assert_eq!(h[1].torsion, vec![BigInt::from(2)]);
        assert!(h[2].is_zero());
        assert_eq!(h[1].to_string(), "Z/2");
    }

    #[test]
    fn bad_boundary_is_rejected() {
        let d1 = SparseMatrix::from_triplets(1, 1, vec![(0, 0, BigInt::one())]);
        let d2 = SparseMatrix::from_triplets(1, 1, vec![(0, 0, BigInt::one())]);
        let c = ChainComplex::new(vec![1, 1, 1], vec![d1, d2]).unwrap();
        assert!(homology(&c, Execution::Sequential).is_err());
    }

    #[test]
    fn determinant() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(m.determinant(), BigInt::from(-8));
    }
}
