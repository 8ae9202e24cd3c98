//! Finite precubical sets and the operations on them.
//!
//! A complex stores, for every dimension `d`, the number of `d`-cells and a
//! dense face table; cells are addressed by [`CellId`] `(dim, index)` and
//! face indices `i` are 1-based, `ε ∈ {0, 1}`.

mod access;
mod altitude;
mod json;
mod map;
mod nsl;
mod pullback;
mod quotient;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use access::{accessible_part, length_covering, LengthCovering, SubComplex};
pub use altitude::{compute_altitude, AltitudeLabeling};
pub use json::{ComplexJson, FaceEntry};
pub use map::{find_isomorphism, PrecubicalMap};
pub use nsl::{all_patterns, canonical_map_images, is_non_self_linked, SelfLinkage};
pub use pullback::{pullback, Pullback};
pub use quotient::{quotient_by_automorphisms, Quotient};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

impl CellId {
    pub const fn new(dim: usize, index: usize) -> Self {
        CellId { dim, index }
    }

    pub const fn vertex(index: usize) -> Self {
        CellId { dim: 0, index }
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}_{}", self.dim, self.index)
    }
}

/// Initial and final vertex of a bi-pointed complex (indices into dimension 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Base {
    pub init: usize,
    pub fin: usize,
}

/// A coordinate value of a cube in the standard cube: `0`, `1` or `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tri {
    Zero,
    One,
    Star,
}

impl Tri {
    pub fn from_eps(eps: u8) -> Tri {
        if eps == 0 {
            Tri::Zero
        } else {
            Tri::One
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Tri::Zero => '0',
            Tri::One => '1',
            Tri::Star => '*',
        }
    }
}

/// Applies `d^ε_i` to a cube of the standard cube given as a `{0,1,*}` word:
/// the `i`-th star (1-based) becomes `ε`.
pub fn pattern_face(pattern: &[Tri], i: usize, eps: u8) -> Option<Vec<Tri>> {
    let pos = pattern
        .iter()
        .enumerate()
        .filter(|(_, t)| **t == Tri::Star)
        .nth(i.checked_sub(1)?)?
        .0;
    let mut out = pattern.to_vec();
    out[pos] = Tri::from_eps(eps);
    Some(out)
}

/// One violated precubical relation
/// `d^ε_i d^η_j (c) = d^η_{j−1} d^ε_i (c)`, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub cell: CellId,
    pub i: usize,
    pub j: usize,
    pub eps: u8,
    pub eta: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecubicalComplex {
    counts: Vec<usize>,
    /// `faces[d][k * 2d + (i − 1) * 2 + ε]`
    faces: Vec<Vec<usize>>,
    base: Option<Base>,
    labels: Option<Vec<Vec<String>>>,
}

impl PrecubicalComplex {
    pub fn empty() -> Self {
        PrecubicalComplex {
            counts: Vec::new(),
            faces: Vec::new(),
            base: None,
            labels: None,
        }
    }

    /// Builds a complex from per-dimension cell counts and a face function
    /// `(cell, i, ε) ↦ index of the face in dimension dim − 1`.
    pub fn from_face_fn<F>(counts: Vec<usize>, base: Option<Base>, mut face: F) -> Result<Self>
    where
        F: FnMut(CellId, usize, u8) -> usize,
    {
        let mut counts = counts;
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let mut faces = Vec::with_capacity(counts.len());
        for (d, &count) in counts.iter().enumerate() {
            let mut table = Vec::with_capacity(count * 2 * d);
            for k in 0..count {
                for i in 1..=d {
                    for eps in 0..2u8 {
                        let to = face(CellId::new(d, k), i, eps);
                        if to >= counts[d - 1] {
                            return Err(Error::structural(format!(
                                "face d^{eps}_{i} of cell {} points to missing cell {to} of dimension {}",
                                CellId::new(d, k),
                                d - 1
                            )));
                        }
                        table.push(to);
                    }
                }
            }
            faces.push(table);
        }
        let complex = PrecubicalComplex {
            counts,
            faces,
            base: None,
            labels: None,
        };
        complex.with_base(base)
    }

    /// Builds a complex from an explicit face list; every face of every cell
    /// must be listed exactly once (repeated identical entries are tolerated).
    pub fn from_face_entries(
        counts: Vec<usize>,
        entries: &[FaceEntry],
        base: Option<Base>,
    ) -> Result<Self> {
        let mut tables: Vec<Vec<Option<usize>>> = counts
            .iter()
            .enumerate()
            .map(|(d, &c)| vec![None; c * 2 * d])
            .collect();
        for e in entries {
            if e.dim == 0 || e.dim >= counts.len() || e.cell >= counts[e.dim] {
                return Err(Error::structural(format!(
                    "face entry refers to missing cell ({}, {})",
                    e.dim, e.cell
                )));
            }
            if e.i == 0 || e.i > e.dim || e.eps > 1 {
                return Err(Error::structural(format!(
                    "face entry of cell ({}, {}) has invalid index i={} eps={}",
                    e.dim, e.cell, e.i, e.eps
                )));
            }
            let slot = &mut tables[e.dim][e.cell * 2 * e.dim + (e.i - 1) * 2 + e.eps as usize];
            match *slot {
                Some(prev) if prev != e.to => {
                    return Err(Error::structural(format!(
                        "conflicting face entries d^{}_{} of cell ({}, {})",
                        e.eps, e.i, e.dim, e.cell
                    )))
                }
                _ => *slot = Some(e.to),
            }
        }
        for (d, table) in tables.iter().enumerate() {
            for (slot, v) in table.iter().enumerate() {
                if v.is_none() {
                    let k = slot / (2 * d);
                    let i = (slot % (2 * d)) / 2 + 1;
                    let eps = slot % 2;
                    return Err(Error::structural(format!(
                        "missing face entry d^{eps}_{i} for cell ({d}, {k})"
                    )));
                }
            }
        }
        Self::from_face_fn(counts, base, |c, i, eps| {
            tables[c.dim][c.index * 2 * c.dim + (i - 1) * 2 + eps as usize].unwrap()
        })
    }

    pub fn with_base(mut self, base: Option<Base>) -> Result<Self> {
        if let Some(b) = base {
            let vertices = self.count(0);
            if b.init >= vertices || b.fin >= vertices {
                return Err(Error::structural(format!(
                    "base vertices ({}, {}) out of range for {vertices} vertices",
                    b.init, b.fin
                )));
            }
        }
        self.base = base;
        Ok(self)
    }

    pub fn with_labels(mut self, mut labels: Vec<Vec<String>>) -> Self {
        labels.truncate(self.counts.len());
        debug_assert!(labels.iter().map(Vec::len).eq(self.counts.iter().copied()));
        self.labels = Some(labels);
        self
    }

    /// Cell counts per dimension; trailing empty dimensions are trimmed.
    pub fn dims(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, dim: usize) -> usize {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    pub fn total_cells(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    pub fn base(&self) -> Option<Base> {
        self.base
    }

    pub fn initial(&self) -> Option<CellId> {
        self.base.map(|b| CellId::vertex(b.init))
    }

    pub fn terminal(&self) -> Option<CellId> {
        self.base.map(|b| CellId::vertex(b.fin))
    }

    pub fn contains(&self, c: CellId) -> bool {
        c.index < self.count(c.dim)
    }

    /// All cells, ordered by dimension then index.
    pub fn cells(&self) -> impl Iterator<Item = CellId> + '_ {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(d, &n)| (0..n).map(move |k| CellId::new(d, k)))
    }

    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = CellId> {
        (0..self.count(dim)).map(move |k| CellId::new(dim, k))
    }

    /// `d^ε_i(c)`; panics on an out-of-range index (use [`Self::try_face`]).
    pub fn face(&self, c: CellId, i: usize, eps: u8) -> CellId {
        debug_assert!(i >= 1 && i <= c.dim && eps <= 1);
        CellId::new(
            c.dim - 1,
            self.faces[c.dim][c.index * 2 * c.dim + (i - 1) * 2 + eps as usize],
        )
    }

    pub fn try_face(&self, c: CellId, i: usize, eps: u8) -> Result<CellId> {
        if !self.contains(c) {
            return Err(Error::argument(format!("no cell {c}")));
        }
        if i == 0 || i > c.dim || eps > 1 {
            return Err(Error::argument(format!(
                "face index d^{eps}_{i} out of range for a {}-cell",
                c.dim
            )));
        }
        Ok(self.face(c, i, eps))
    }

    /// `d^ε_A(c) = d^ε_{a₁} ⋯ d^ε_{a_k}(c)` for `A = {a₁ < ⋯ < a_k}`; the
    /// largest index is applied first so the remaining indices stay valid.
    pub fn iterated_face(&self, c: CellId, set: &[usize], eps: u8) -> Result<CellId> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != set.len() {
            return Err(Error::argument("repeated index in face set"));
        }
        if let Some(&last) = sorted.last() {
            if last > c.dim || sorted[0] == 0 {
                return Err(Error::argument(format!(
                    "face set {set:?} not contained in 1..={}",
                    c.dim
                )));
            }
        }
        if !self.contains(c) {
            return Err(Error::argument(format!("no cell {c}")));
        }
        Ok(sorted
            .iter()
            .rev()
            .fold(c, |cell, &i| self.face(cell, i, eps)))
    }

    /// Image of the cube `pattern` of `□ⁿ` under the canonical map of `c`
    /// (`pattern.len() == dim(c)`); the non-star coordinates are removed from
    /// the highest one down.
    pub fn pattern_image(&self, c: CellId, pattern: &[Tri]) -> CellId {
        debug_assert_eq!(pattern.len(), c.dim);
        let mut cell = c;
        for (pos, t) in pattern.iter().enumerate().rev() {
            match t {
                Tri::Zero => cell = self.face(cell, pos + 1, 0),
                Tri::One => cell = self.face(cell, pos + 1, 1),
                Tri::Star => {}
            }
        }
        cell
    }

    pub fn initial_vertex(&self, c: CellId) -> CellId {
        (1..=c.dim).rev().fold(c, |cell, i| self.face(cell, i, 0))
    }

    pub fn final_vertex(&self, c: CellId) -> CellId {
        (1..=c.dim).rev().fold(c, |cell, i| self.face(cell, i, 1))
    }

    pub fn label(&self, c: CellId) -> String {
        match &self.labels {
            Some(l) => l[c.dim][c.index].clone(),
            None => c.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&Vec<Vec<String>>> {
        self.labels.as_ref()
    }

    /// Lists every violated precubical relation; empty iff `self` is a
    /// precubical set.
    pub fn validate(&self) -> Vec<RelationViolation> {
        let mut out = Vec::new();
        for c in self.cells().filter(|c| c.dim >= 2) {
            let n = c.dim;
            for j in 2..=n {
                for i in 1..j {
                    for eps in 0..2u8 {
                        for eta in 0..2u8 {
                            let lhs = self.face(self.face(c, j, eta), i, eps);
                            let rhs = self.face(self.face(c, i, eps), j - 1, eta);
                            if lhs != rhs {
                                out.push(RelationViolation {
                                    cell: c,
                                    i,
                                    j,
                                    eps,
                                    eta,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Builds the sub-complex on the cells marked in `keep`; fails unless the
    /// marked set is closed under faces.
    pub fn restrict(&self, keep: &[Vec<bool>]) -> Result<SubComplex> {
        let mut new_index: Vec<Vec<Option<usize>>> = Vec::with_capacity(self.counts.len());
        let mut embedding: Vec<Vec<usize>> = Vec::with_capacity(self.counts.len());
        for (d, &n) in self.counts.iter().enumerate() {
            let mut idx = vec![None; n];
            let mut emb = Vec::new();
            for (k, slot) in idx.iter_mut().enumerate() {
                if keep[d][k] {
                    *slot = Some(emb.len());
                    emb.push(k);
                }
            }
            new_index.push(idx);
            embedding.push(emb);
        }
        for c in self.cells().filter(|c| keep[c.dim][c.index]) {
            for i in 1..=c.dim {
                for eps in 0..2 {
                    let f = self.face(c, i, eps);
                    if !keep[f.dim][f.index] {
                        return Err(Error::consistency(format!(
                            "cell set not closed under faces: {} kept but its face {} is not",
                            self.label(c),
                            self.label(f)
                        )));
                    }
                }
            }
        }
        let counts: Vec<usize> = embedding.iter().map(Vec::len).collect();
        let base = self.base.and_then(|b| {
            Some(Base {
                init: new_index[0][b.init]?,
                fin: new_index[0][b.fin]?,
            })
        });
        let complex = PrecubicalComplex::from_face_fn(counts, base, |c, i, eps| {
            let orig = self.face(CellId::new(c.dim, embedding[c.dim][c.index]), i, eps);
            new_index[orig.dim][orig.index].expect("face-closed")
        })?;
        let complex = match &self.labels {
            Some(labels) => {
                let sub_labels = embedding
                    .iter()
                    .enumerate()
                    .map(|(d, emb)| emb.iter().map(|&k| labels[d][k].clone()).collect())
                    .collect();
                complex.with_labels(sub_labels)
            }
            None => complex,
        };
        embedding.truncate(complex.dims().len());
        let embedding = PrecubicalMap::new(embedding, base.is_some());
        Ok(SubComplex { complex, embedding })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{standard_cube, z_tilde};

    #[test]
    fn standard_square_is_valid() {
        assert!(standard_cube(2).validate().is_empty());
    }

    #[test]
    fn broken_square_reports_one_violation() {
        let sq = standard_cube(2);
        let top = CellId::new(2, 0);
        let edge = sq.face(top, 2, 0);
        let wrong = sq.face(edge, 1, 1);
        let mut entries = sq.to_json().faces;
        for e in &mut entries {
            if e.dim == 1 && e.cell == edge.index && e.i == 1 && e.eps == 0 {
                e.to = wrong.index;
            }
        }
        let broken =
            PrecubicalComplex::from_face_entries(sq.dims().to_vec(), &entries, sq.base()).unwrap();
        let report = broken.validate();
        assert_eq!(report.len(), 1, "{report:?}");
        assert_eq!(
            (report[0].i, report[0].j, report[0].eps, report[0].eta),
            (1, 2, 0, 0)
        );
    }

    #[test]
    fn missing_face_entry_is_structural_error() {
        let sq = standard_cube(1);
        let mut entries = sq.to_json().faces;
        entries.pop();
        let err = PrecubicalComplex::from_face_entries(sq.dims().to_vec(), &entries, None)
            .unwrap_err();
        assert!(matches!(err, Error::Structural(msg) if msg.contains("(1, 0)")));
    }

    #[test]
    fn z_tilde_three_is_valid() {
        assert!(z_tilde(3).complex.validate().is_empty());
    }

    #[test]
    fn iterated_face_of_square_is_initial_vertex() {
        let sq = standard_cube(2);
        let v = sq.iterated_face(CellId::new(2, 0), &[1, 2], 0).unwrap();
        assert_eq!(Some(v), sq.initial());
        assert_eq!(sq.label(v), "00");
        let w = sq.iterated_face(CellId::new(2, 0), &[1, 2], 1).unwrap();
        assert_eq!(Some(w), sq.terminal());
        assert!(sq.iterated_face(CellId::new(2, 0), &[3], 0).is_err());
    }

    #[test]
    fn iterated_face_in_z_tilde() {
        let zt = z_tilde(3);
        let top = zt.cell(2, 0);
        let v = zt.complex.iterated_face(top, &[1, 2], 1).unwrap();
        assert_eq!(v, zt.cell(0, 2));
    }

    #[test]
    fn pattern_face_moves_the_ith_star() {
        use Tri::*;
        assert_eq!(
            pattern_face(&[Star, One, Star], 2, 0),
            Some(vec![Star, One, Zero])
        );
        assert_eq!(pattern_face(&[Zero], 1, 0), None);
    }
}
