use super::{CellId, PrecubicalComplex};
use crate::error::{Error, Result};

/// A dimensionwise assignment of cells; `assignment[d][k]` is the index of
/// the image of cell `(d, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrecubicalMap {
    pub assignment: Vec<Vec<usize>>,
    pub bipointed: bool,
}

impl PrecubicalMap {
    pub fn new(assignment: Vec<Vec<usize>>, bipointed: bool) -> Self {
        PrecubicalMap {
            assignment,
            bipointed,
        }
    }

    pub fn identity(k: &PrecubicalComplex) -> Self {
        PrecubicalMap::new(
            k.dims().iter().map(|&n| (0..n).collect()).collect(),
            k.base().is_some(),
        )
    }

    pub fn apply(&self, c: CellId) -> CellId {
        CellId::new(c.dim, self.assignment[c.dim][c.index])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PrecubicalMap) -> PrecubicalMap {
        PrecubicalMap::new(
            other
                .assignment
                .iter()
                .enumerate()
                .map(|(d, row)| row.iter().map(|&k| self.assignment[d][k]).collect())
                .collect(),
            self.bipointed && other.bipointed,
        )
    }

    /// Checks that `self` is a precubical map `source → target` (and a
    /// bi-pointed one when the flag is set).
    pub fn validate(&self, source: &PrecubicalComplex, target: &PrecubicalComplex) -> Result<()> {
        if self.assignment.len() != source.dims().len()
            || self
                .assignment
                .iter()
                .zip(source.dims())
                .any(|(row, &n)| row.len() != n)
        {
            return Err(Error::structural("map shape does not match its source"));
        }
        for c in source.cells() {
            let image = self.apply(c);
            if !target.contains(image) {
                return Err(Error::structural(format!(
                    "{} is sent to a missing cell {image}",
                    source.label(c)
                )));
            }
            for i in 1..=c.dim {
                for eps in 0..2 {
                    if self.apply(source.face(c, i, eps)) != target.face(image, i, eps) {
                        return Err(Error::contract(format!(
                            "map does not commute with d^{eps}_{i} at {}",
                            source.label(c)
                        )));
                    }
                }
            }
        }
        if self.bipointed {
            let (Some(sb), Some(tb)) = (source.base(), target.base()) else {
                return Err(Error::contract("bi-pointed map between unbased complexes"));
            };
            if self.assignment[0][sb.init] != tb.init || self.assignment[0][sb.fin] != tb.fin {
                return Err(Error::contract("map does not preserve base vertices"));
            }
        }
        Ok(())
    }

    pub fn is_bijective(&self, target: &PrecubicalComplex) -> bool {
        if self.assignment.len() != target.dims().len() {
            return false;
        }
        self.assignment.iter().enumerate().all(|(d, row)| {
            let mut seen = vec![false; target.count(d)];
            row.len() == seen.len()
                && row
                    .iter()
                    .all(|&k| k < seen.len() && !std::mem::replace(&mut seen[k], true))
        })
    }

    pub fn is_injective(&self) -> bool {
        self.assignment.iter().all(|row| {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        })
    }
}

/// Searches for an isomorphism `k → l` (bi-pointed when both carry a base)
/// by backtracking from the top cells down, propagating every assignment to
/// all faces.
pub fn find_isomorphism(k: &PrecubicalComplex, l: &PrecubicalComplex) -> Option<PrecubicalMap> {
    if k.dims() != l.dims() || k.base().is_some() != l.base().is_some() {
        return None;
    }
    let mut state = IsoState {
        assign: k.dims().iter().map(|&n| vec![None; n]).collect(),
        used: l.dims().iter().map(|&n| vec![false; n]).collect(),
    };
    if let (Some(kb), Some(lb)) = (k.base(), l.base()) {
        if !state.bind(k, l, CellId::vertex(kb.init), CellId::vertex(lb.init))
            || !state.bind(k, l, CellId::vertex(kb.fin), CellId::vertex(lb.fin))
        {
            return None;
        }
    }
    let order: Vec<CellId> = {
        let mut cells: Vec<CellId> = k.cells().collect();
        cells.sort_by(|a, b| b.dim.cmp(&a.dim).then(a.index.cmp(&b.index)));
        cells
    };
    if !search(k, l, &order, 0, &mut state) {
        return None;
    }
    let assignment = state
        .assign
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.expect("complete")).collect())
        .collect();
    let map = PrecubicalMap::new(assignment, k.base().is_some());
    debug_assert!(map.validate(k, l).is_ok());
    Some(map)
}

#[derive(Clone)]
struct IsoState {
    assign: Vec<Vec<Option<usize>>>,
    used: Vec<Vec<bool>>,
}

impl IsoState {
    fn bind(&mut self, k: &PrecubicalComplex, l: &PrecubicalComplex, c: CellId, t: CellId) -> bool {
        match self.assign[c.dim][c.index] {
            Some(prev) => return prev == t.index,
            None if self.used[t.dim][t.index] => return false,
            None => {
                self.assign[c.dim][c.index] = Some(t.index);
                self.used[t.dim][t.index] = true;
            }
        }
        for i in 1..=c.dim {
            for eps in 0..2 {
                if !self.bind(k, l, k.face(c, i, eps), l.face(t, i, eps)) {
                    return false;
                }
            }
        }
        true
    }
}

fn search(
    k: &PrecubicalComplex,
    l: &PrecubicalComplex,
    order: &[CellId],
    pos: usize,
    state: &mut IsoState,
) -> bool {
    let Some(&c) = order[pos..]
        .iter()
        .find(|c| state.assign[c.dim][c.index].is_none())
    else {
        return true;
    };
    let next = pos + order[pos..].iter().position(|x| *x == c).unwrap() + 1;
    for t in l.cells_of_dim(c.dim) {
        if state.used[t.dim][t.index] {
            continue;
        }
        let snapshot = state.clone();
        if state.bind(k, l, c, t) && search(k, l, order, next, state) {
            return true;
        }
        *state = snapshot;
    }
    false
}
