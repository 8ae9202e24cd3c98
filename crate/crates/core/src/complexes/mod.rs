//! Constructors for the named complexes.

mod y;

use std::collections::HashMap;

use crate::cubical::{
    pattern_face, AltitudeLabeling, Base, CellId, PrecubicalComplex, PrecubicalMap, Tri,
};
use crate::cubical::all_patterns;
use crate::error::{Error, Result};

pub use y::{y_face_test, YCell, YComplex};

/// The standard cube `□ⁿ` together with the `{0,1,*}` word of every cell.
/// Cells are grouped by dimension and keep base-3 order inside a dimension;
/// labels are the words themselves (e.g. `"0*1"`).
pub fn standard_cube_cells(n: usize) -> (PrecubicalComplex, Vec<Vec<Vec<Tri>>>) {
    let mut by_dim: Vec<Vec<Vec<Tri>>> = vec![Vec::new(); n + 1];
    for p in all_patterns(n) {
        let d = p.iter().filter(|t| **t == Tri::Star).count();
        by_dim[d].push(p);
    }
    let index: Vec<HashMap<Vec<Tri>, usize>> = by_dim
        .iter()
        .map(|row| row.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect())
        .collect();
    let base = Base {
        init: index[0][&vec![Tri::Zero; n]],
        fin: index[0][&vec![Tri::One; n]],
    };
    let counts = by_dim.iter().map(Vec::len).collect();
    let complex = PrecubicalComplex::from_face_fn(counts, Some(base), |c, i, eps| {
        let face = pattern_face(&by_dim[c.dim][c.index], i, eps).expect("index in range");
        index[c.dim - 1][&face]
    })
    .expect("standard cube is well formed");
    let labels = by_dim
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| p.iter().map(|t| t.symbol()).collect())
                .collect()
        })
        .collect();
    (complex.with_labels(labels), by_dim)
}

/// The standard cube `□ⁿ`, bi-pointed by the constant words `0…0`, `1…1`.
pub fn standard_cube(n: usize) -> PrecubicalComplex {
    standard_cube_cells(n).0
}

fn labels_or_ids(k: &PrecubicalComplex) -> Vec<Vec<String>> {
    k.dims()
        .iter()
        .enumerate()
        .map(|(d, &n)| (0..n).map(|i| k.label(CellId::new(d, i))).collect())
        .collect()
}

/// `K ⊔ L` without base points; the cells of `L` follow those of `K`.
pub fn disjoint_union(k: &PrecubicalComplex, l: &PrecubicalComplex) -> PrecubicalComplex {
    let top = k.dims().len().max(l.dims().len());
    let counts: Vec<usize> = (0..top).map(|d| k.count(d) + l.count(d)).collect();
    let complex = PrecubicalComplex::from_face_fn(counts, None, |c, i, eps| {
        let nk = k.count(c.dim);
        if c.index < nk {
            k.face(c, i, eps).index
        } else {
            let f = l.face(CellId::new(c.dim, c.index - nk), i, eps);
            k.count(c.dim - 1) + f.index
        }
    })
    .expect("union of complexes is well formed");
    let (lk, ll) = (labels_or_ids(k), labels_or_ids(l));
    let labels = (0..top)
        .map(|d| {
            let a = lk.get(d).cloned().unwrap_or_default();
            let b = ll.get(d).cloned().unwrap_or_default();
            a.into_iter().chain(b).collect()
        })
        .collect();
    complex.with_labels(labels)
}

/// Serial wedge `K ∨ L`: the final vertex of `K` is glued to the initial
/// vertex of `L`; the result is based at `(0_K, 1_L)`.
pub fn serial_wedge(k: &PrecubicalComplex, l: &PrecubicalComplex) -> Result<PrecubicalComplex> {
    let (bk, bl) = match (k.base(), l.base()) {
        (Some(bk), Some(bl)) => (bk, bl),
        _ => return Err(Error::contract("serial wedge needs bi-pointed complexes")),
    };
    let nk0 = k.count(0);
    // vertices of L other than 0_L follow those of K
    let l_vertex = |v: usize| -> usize {
        if v == bl.init {
            bk.fin
        } else if v < bl.init {
            nk0 + v
        } else {
            nk0 + v - 1
        }
    };
    let top = k.dims().len().max(l.dims().len());
    let counts: Vec<usize> = (0..top)
        .map(|d| if d == 0 { nk0 + l.count(0) - 1 } else { k.count(d) + l.count(d) })
        .collect();
    let base = Base {
        init: bk.init,
        fin: l_vertex(bl.fin),
    };
    let complex = PrecubicalComplex::from_face_fn(counts, Some(base), |c, i, eps| {
        let nk = k.count(c.dim);
        if c.index < nk {
            k.face(c, i, eps).index
        } else {
            let f = l.face(CellId::new(c.dim, c.index - nk), i, eps);
            if f.dim == 0 {
                l_vertex(f.index)
            } else {
                k.count(f.dim) + f.index
            }
        }
    })?;
    let (lk, ll) = (labels_or_ids(k), labels_or_ids(l));
    let labels = (0..top)
        .map(|d| {
            let mut row: Vec<String> =
                lk.get(d).cloned().unwrap_or_default().into_iter().map(|s| format!("L{s}")).collect();
            let right = ll.get(d).cloned().unwrap_or_default();
            for (idx, s) in right.into_iter().enumerate() {
                if d == 0 && idx == bl.init {
                    continue;
                }
                row.push(format!("R{s}"));
            }
            row
        })
        .collect();
    Ok(complex.with_labels(labels))
}

/// `□^{n₁} ∨ ⋯ ∨ □^{n_k}`.
pub fn wedge_cube(dims: &[usize]) -> PrecubicalComplex {
    let mut iter = dims.iter();
    let first = match iter.next() {
        Some(&n) => standard_cube(n),
        None => return standard_cube(0),
    };
    iter.fold(first, |acc, &n| {
        serial_wedge(&acc, &standard_cube(n)).expect("cubes are bi-pointed")
    })
}

/// The final object `Z` truncated at `max_dim`: one cell `z^m` per
/// dimension, every face of `z^m` is `z^{m−1}`, based at `(z⁰, z⁰)`.
pub fn z_complex(max_dim: usize) -> PrecubicalComplex {
    let labels = (0..=max_dim).map(|m| vec![format!("z{m}")]).collect();
    PrecubicalComplex::from_face_fn(vec![1; max_dim + 1], Some(Base { init: 0, fin: 0 }), |_, _, _| 0)
        .expect("Z is well formed")
        .with_labels(labels)
}

/// The unique map `K → Z` (truncated at `max_dim`); bi-pointed when `K` is.
pub fn unique_map_to_z(k: &PrecubicalComplex, max_dim: usize) -> Result<PrecubicalMap> {
    if k.dims().len() > max_dim + 1 {
        return Err(Error::argument(format!(
            "complex has cells of dimension {} above the truncation {max_dim}",
            k.dims().len() - 1
        )));
    }
    Ok(PrecubicalMap::new(
        k.dims().iter().map(|&n| vec![0; n]).collect(),
        k.base().is_some(),
    ))
}

/// `Z̃ₙ`: cells `z^k_j` with `j + k ≤ n`, `d^ε_i(z^k_j) = z^{k−1}_{j+ε}`.
#[derive(Debug, Clone)]
pub struct ZTilde {
    pub n: usize,
    pub complex: PrecubicalComplex,
    pub altitude: AltitudeLabeling,
}

impl ZTilde {
    /// The cell `z^k_j`.
    pub fn cell(&self, k: usize, j: usize) -> CellId {
        assert!(j + k <= self.n, "z^{k}_{j} is not a cell of Z̃_{}", self.n);
        CellId::new(k, j)
    }
}

pub fn z_tilde(n: usize) -> ZTilde {
    let counts = (0..=n).map(|k| n - k + 1).collect();
    let complex = PrecubicalComplex::from_face_fn(counts, Some(Base { init: 0, fin: n }), |c, _, eps| {
        c.index + eps as usize
    })
    .expect("Z̃ is well formed");
    let labels = (0..=n)
        .map(|k| (0..=n - k).map(|j| format!("z{k}_{j}")).collect())
        .collect();
    let altitude = AltitudeLabeling {
        values: (0..=n).map(|k| (0..=n - k).map(|j| j as i64).collect()).collect(),
    };
    ZTilde {
        n,
        complex: complex.with_labels(labels),
        altitude,
    }
}
