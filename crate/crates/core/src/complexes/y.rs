use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::z_tilde;
use crate::caps::Caps;
use crate::cubical::{
    quotient_by_automorphisms, AltitudeLabeling, Base, CellId, PrecubicalComplex, PrecubicalMap, Quotient,
};
use crate::error::{Error, Result};
use crate::perm::{element_name, Permutation};

/// A cell `(A₁ ‖ a₁<⋯<a_k ‖ A₀)` of `Yᴬ`, `A = {0, …, n−1}`; `ones` and
/// `zeros` are bitsets, `mid` lists the free coordinates in increasing
/// order of `<`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YCell {
    pub ones: u32,
    pub mid: Vec<u8>,
    pub zeros: u32,
}

impl YCell {
    pub fn dim(&self) -> usize {
        self.mid.len()
    }

    /// `|A₁|`, the altitude of the cell.
    pub fn altitude(&self) -> usize {
        self.ones.count_ones() as usize
    }

    pub fn mid_mask(&self) -> u32 {
        self.mid.iter().fold(0, |m, &a| m | 1 << a)
    }

    /// `d^ε_i`: the `i`-th element of the order moves to `A_ε`.
    pub fn face(&self, i: usize, eps: u8) -> YCell {
        let mut out = self.clone();
        let a = out.mid.remove(i - 1);
        if eps == 0 {
            out.zeros |= 1 << a;
        } else {
            out.ones |= 1 << a;
        }
        out
    }

    /// Right action `(c, <)σ = (c∘σ, <σ)`: every part is replaced by its
    /// preimage under `σ`.
    pub fn act(&self, sigma: &Permutation) -> YCell {
        let inv = sigma.inverse();
        let map_set = |s: u32| {
            (0..sigma.len())
                .filter(|&a| s & (1 << a) != 0)
                .fold(0u32, |m, a| m | 1 << inv.apply(a))
        };
        YCell {
            ones: map_set(self.ones),
            mid: self.mid.iter().map(|&a| inv.apply(a as usize) as u8).collect(),
            zeros: map_set(self.zeros),
        }
    }
}

fn set_names(s: u32) -> String {
    (0..32)
        .filter(|a| s & (1 << a) != 0)
        .map(element_name)
        .collect()
}

impl fmt::Display for YCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mid: Vec<String> = self.mid.iter().map(|&a| element_name(a as usize)).collect();
        write!(
            f,
            "({}|{}|{})",
            set_names(self.ones),
            mid.join("<"),
            set_names(self.zeros)
        )
    }
}

fn parse_name(s: &str) -> Result<u8> {
    match s.as_bytes() {
        [c @ b'a'..=b'z'] => Ok(c - b'a'),
        _ => Err(Error::Parse(format!("unknown element name {s:?}"))),
    }
}

impl FromStr for YCell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("cell {s:?} must be written (ones|mid|zeros)")))?;
        let parts: Vec<&str> = inner.split('|').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("cell {s:?} must have three parts")));
        }
        let set = |p: &str| -> Result<u32> {
            p.chars()
                .try_fold(0u32, |m, c| Ok(m | 1 << parse_name(&c.to_string())?))
        };
        let mid = if parts[1].is_empty() {
            Vec::new()
        } else {
            parts[1].split('<').map(parse_name).collect::<Result<Vec<_>>>()?
        };
        let cell = YCell {
            ones: set(parts[0])?,
            mid,
            zeros: set(parts[2])?,
        };
        let mm = cell.mid_mask();
        if cell.ones & cell.zeros != 0
            || cell.ones & mm != 0
            || cell.zeros & mm != 0
            || mm.count_ones() as usize != cell.mid.len()
        {
            return Err(Error::Parse(format!("parts of {s:?} overlap")));
        }
        Ok(cell)
    }
}

/// The face criterion: `c₁` is a face of `c₂` iff the free coordinates of
/// `c₁` are free in `c₂` with the restricted order and the fixed
/// coordinates of `c₂` keep their values in `c₁`.
pub fn y_face_test(c1: &YCell, c2: &YCell) -> bool {
    let m1 = c1.mid_mask();
    let m2 = c2.mid_mask();
    if m1 & !m2 != 0 || c2.zeros & !c1.zeros != 0 || c2.ones & !c1.ones != 0 {
        return false;
    }
    let restricted: Vec<u8> = c2.mid.iter().copied().filter(|a| m1 & (1 << a) != 0).collect();
    restricted == c1.mid
}

fn k_permutations(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, k: usize, used: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in 0..n as u8 {
            if used & (1 << a) == 0 {
                cur.push(a);
                go(n, k, used | 1 << a, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The complex `Yᴬ` for `A = {a, b, …}` of size `n`, with its cells
/// decoded. Within a dimension cells are sorted by `(mid, ones)`.
#[derive(Debug, Clone)]
pub struct YComplex {
    pub n: usize,
    pub complex: PrecubicalComplex,
    pub cells: Vec<Vec<YCell>>,
    index: HashMap<YCell, CellId>,
}

impl YComplex {
    pub fn new(n: usize, caps: &Caps) -> Result<Self> {
        caps.check("size of A for Y^A", n, caps.y_size)?;
        let full: u32 = (1u32 << n) - 1;
        let mut cells: Vec<Vec<YCell>> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut row = Vec::new();
            for mid in k_permutations(n, k) {
                let mm = mid.iter().fold(0u32, |m, &a| m | 1 << a);
                let rest = full & !mm;
                // all subsets of `rest`, ascending
                let mut sub = 0u32;
                loop {
                    row.push(YCell {
                        ones: sub,
                        mid: mid.clone(),
                        zeros: rest & !sub,
                    });
                    if sub == rest {
                        break;
                    }
                    sub = (sub.wrapping_sub(rest)) & rest;
                }
            }
            row.sort_by(|x, y| (&x.mid, x.ones).cmp(&(&y.mid, y.ones)));
            cells.push(row);
        }
        let total: usize = cells.iter().map(Vec::len).sum();
        caps.check_cells("cells of Y^A", total)?;
        let index: HashMap<YCell, CellId> = cells
            .iter()
            .enumerate()
            .flat_map(|(d, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(k, c)| (c.clone(), CellId::new(d, k)))
            })
            .collect();
        let base = Base {
            init: index[&YCell { ones: 0, mid: vec![], zeros: full }].index,
            fin: index[&YCell { ones: full, mid: vec![], zeros: 0 }].index,
        };
        let counts = cells.iter().map(Vec::len).collect();
        let complex = PrecubicalComplex::from_face_fn(counts, Some(base), |c, i, eps| {
            index[&cells[c.dim][c.index].face(i, eps)].index
        })?;
        let labels = cells
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect();
        Ok(YComplex {
            n,
            complex: complex.with_labels(labels),
            cells,
            index,
        })
    }

    pub fn id(&self, cell: &YCell) -> Option<CellId> {
        self.index.get(cell).copied()
    }

    pub fn cell(&self, c: CellId) -> &YCell {
        &self.cells[c.dim][c.index]
    }

    /// The automorphism `c ↦ cσ`.
    pub fn act(&self, sigma: &Permutation) -> PrecubicalMap {
        PrecubicalMap::new(
            self.cells
                .iter()
                .map(|row| row.iter().map(|c| self.index[&c.act(sigma)].index).collect())
                .collect(),
            true,
        )
    }

    /// The whole group `Σ_A` as automorphisms, in lexicographic order of
    /// the permutations.
    pub fn sigma_action(&self) -> Vec<PrecubicalMap> {
        Permutation::all(self.n).iter().map(|s| self.act(s)).collect()
    }

    /// `p_A : Yᴬ → Z̃ₙ`, `(c, <) ↦ z^k_{|A₁|}`.
    pub fn projection(&self) -> PrecubicalMap {
        PrecubicalMap::new(
            self.cells
                .iter()
                .map(|row| row.iter().map(YCell::altitude).collect())
                .collect(),
            true,
        )
    }

    pub fn altitude(&self) -> AltitudeLabeling {
        AltitudeLabeling {
            values: self
                .cells
                .iter()
                .map(|row| row.iter().map(|c| c.altitude() as i64).collect())
                .collect(),
        }
    }

    /// The orbit complex `Yᴬ/Σ_A` and the map to `Z̃ₙ` induced by the
    /// projection, checked to be a well-defined bi-pointed map.
    pub fn orbit_map(&self) -> Result<(Quotient, PrecubicalMap)> {
        let q = quotient_by_automorphisms(&self.complex, &self.sigma_action())?;
        let p = self.projection();
        let mut assignment = Vec::with_capacity(q.orbits.len());
        for (d, orbits) in q.orbits.iter().enumerate() {
            let mut row = Vec::with_capacity(orbits.len());
            for orbit in orbits {
                let image = p.assignment[d][orbit[0]];
                if orbit.iter().any(|&m| p.assignment[d][m] != image) {
                    return Err(Error::consistency("projection is not constant on an orbit"));
                }
                row.push(image);
            }
            assignment.push(row);
        }
        let map = PrecubicalMap::new(assignment, true);
        map.validate(&q.complex, &self.z_tilde().complex)?;
        Ok((q, map))
    }

    /// `Z̃ₙ`, the target of [`Self::projection`].
    pub fn z_tilde(&self) -> super::ZTilde {
        z_tilde(self.n)
    }
}
