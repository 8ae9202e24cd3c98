use std::collections::VecDeque;

use super::{AltitudeLabeling, Base, CellId, PrecubicalComplex, PrecubicalMap};
use crate::error::{Error, Result};

/// A sub-complex together with its inclusion into the ambient complex.
#[derive(Debug, Clone)]
pub struct SubComplex {
    pub complex: PrecubicalComplex,
    pub embedding: PrecubicalMap,
}

/// The length-`n` covering `K̃ₙ` with its projection to `K` and the altitude
/// `(c, h) ↦ h`.
#[derive(Debug, Clone)]
pub struct LengthCovering {
    pub complex: PrecubicalComplex,
    pub projection: PrecubicalMap,
    pub altitude: AltitudeLabeling,
    /// `(cell of K, h)` for every cell of the covering.
    pub cells: Vec<Vec<(usize, usize)>>,
}

/// Reachability over the directed graph `d⁰_i(c) → c → d¹_i(c)`: returns
/// the cells `c` with `source ⪯ c` and `c ⪯ sink`.
fn between<N>(
    nodes: &[usize],
    source: (usize, usize),
    sink: (usize, usize),
    mut edges: N,
) -> Vec<Vec<bool>>
where
    N: FnMut(&mut dyn FnMut((usize, usize), (usize, usize))),
{
    let mut fwd: Vec<Vec<Vec<(usize, usize)>>> = nodes.iter().map(|&n| vec![Vec::new(); n]).collect();
    let mut bwd = fwd.clone();
    edges(&mut |from, to| {
        fwd[from.0][from.1].push(to);
        bwd[to.0][to.1].push(from);
    });
    let reach = |graph: &Vec<Vec<Vec<(usize, usize)>>>, start: (usize, usize)| {
        let mut seen: Vec<Vec<bool>> = nodes.iter().map(|&n| vec![false; n]).collect();
        seen[start.0][start.1] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for &n in &graph[c.0][c.1] {
                if !seen[n.0][n.1] {
                    seen[n.0][n.1] = true;
                    queue.push_back(n);
                }
            }
        }
        seen
    };
    let from_source = reach(&fwd, source);
    let to_sink = reach(&bwd, sink);
    from_source
        .into_iter()
        .zip(to_sink)
        .map(|(a, b)| a.into_iter().zip(b).map(|(x, y)| x && y).collect())
        .collect()
}

/// The sub-complex of accessible cells `0 ⪯ c ⪯ 1`, where `⪯` is generated
/// by `d⁰_i(c) ⪯ c ⪯ d¹_i(c)`. Empty when `0 ⋠ 1`.
pub fn accessible_part(k: &PrecubicalComplex) -> Result<SubComplex> {
    let base = k
        .base()
        .ok_or_else(|| Error::contract("accessible part needs a bi-pointed complex"))?;
    let keep = between(
        k.dims(),
        (0, base.init),
        (0, base.fin),
        |add| {
            for c in k.cells().filter(|c| c.dim > 0) {
                for i in 1..=c.dim {
                    let lo = k.face(c, i, 0);
                    let hi = k.face(c, i, 1);
                    add(lo.to_pair(), c.to_pair());
                    add(c.to_pair(), hi.to_pair());
                }
            }
        },
    );
    let sub = k.restrict(&keep)?;
    if sub.complex.base().is_none() {
        return Ok(SubComplex {
            complex: PrecubicalComplex::empty(),
            embedding: PrecubicalMap::new(Vec::new(), false),
        });
    }
    Ok(sub)
}

/// Builds `K̃ₙ = (K̃, (0,0), (1,n))_acc`. Heights are restricted to `0..=n`
/// beforehand: along `⪯` the height never decreases, so no accessible cell
/// lies outside that range.
pub fn length_covering(k: &PrecubicalComplex, n: usize) -> Result<LengthCovering> {
    let base = k
        .base()
        .ok_or_else(|| Error::contract("length covering needs a bi-pointed complex"))?;
    let heights = n + 1;
    let nodes: Vec<usize> = k.dims().iter().map(|&c| c * heights).collect();
    let node = |c: CellId, h: usize| (c.dim, c.index * heights + h);
    let keep = between(
        &nodes,
        node(CellId::vertex(base.init), 0),
        node(CellId::vertex(base.fin), n),
        |add| {
            for c in k.cells().filter(|c| c.dim > 0) {
                for i in 1..=c.dim {
                    let lo = k.face(c, i, 0);
                    let hi = k.face(c, i, 1);
                    for h in 0..=n {
                        add(node(lo, h), node(c, h));
                        if h < n {
                            add(node(c, h), node(hi, h + 1));
                        }
                    }
                }
            }
        },
    );
    let mut cells: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut index: Vec<Vec<Option<usize>>> = Vec::new();
    for (d, &count) in k.dims().iter().enumerate() {
        let mut row = Vec::new();
        let mut idx = vec![None; count * heights];
        for kk in 0..count {
            for h in 0..=n {
                if keep[d][kk * heights + h] {
                    idx[kk * heights + h] = Some(row.len());
                    row.push((kk, h));
                }
            }
        }
        cells.push(row);
        index.push(idx);
    }
    // every kept cell must have all faces kept (and inside the height window)
    for (d, row) in cells.iter().enumerate() {
        for &(kk, h) in row {
            let c = CellId::new(d, kk);
            for i in 1..=d {
                for eps in 0..2u8 {
                    let f = k.face(c, i, eps);
                    let fh = h + eps as usize;
                    if fh > n || index[d - 1][f.index * heights + fh].is_none() {
                        return Err(Error::consistency(format!(
                            "accessible cells of the length covering are not face-closed at ({}, {h})",
                            k.label(c)
                        )));
                    }
                }
            }
        }
    }
    let counts: Vec<usize> = cells.iter().map(Vec::len).collect();
    let base_cov = match (
        index[0][base.init * heights],
        index.first().and_then(|r| r[base.fin * heights + n]),
    ) {
        (Some(init), Some(fin)) => Some(Base { init, fin }),
        _ => None,
    };
    if base_cov.is_none() {
        return Ok(LengthCovering {
            complex: PrecubicalComplex::empty(),
            projection: PrecubicalMap::new(Vec::new(), false),
            altitude: AltitudeLabeling { values: Vec::new() },
            cells: Vec::new(),
        });
    }
    let complex = PrecubicalComplex::from_face_fn(counts, base_cov, |c, i, eps| {
        let (kk, h) = cells[c.dim][c.index];
        let f = k.face(CellId::new(c.dim, kk), i, eps);
        index[c.dim - 1][f.index * heights + h + eps as usize].unwrap()
    })?;
    let labels = cells
        .iter()
        .enumerate()
        .map(|(d, row)| {
            row.iter()
                .map(|&(kk, h)| format!("({},{h})", k.label(CellId::new(d, kk))))
                .collect()
        })
        .collect();
    let complex = complex.with_labels(labels);
    cells.truncate(complex.dims().len());
    let projection = PrecubicalMap::new(
        cells
            .iter()
            .map(|row| row.iter().map(|&(kk, _)| kk).collect())
            .collect(),
        false,
    );
    let altitude = AltitudeLabeling {
        values: cells
            .iter()
            .map(|row| row.iter().map(|&(_, h)| h as i64).collect())
            .collect(),
    };
    Ok(LengthCovering {
        complex,
        projection,
        altitude,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{disjoint_union, standard_cube, z_complex, z_tilde};
    use crate::cubical::find_isomorphism;

    #[test]
    fn square_is_accessible() {
        let sq = standard_cube(2);
        let acc = accessible_part(&sq).unwrap();
        assert_eq!(acc.complex.dims(), sq.dims());
    }

    #[test]
    fn disconnected_base_gives_empty_part() {
        let e = standard_cube(1);
        let two = disjoint_union(&e, &e);
        // initial vertex in the first copy, final vertex in the second
        let k = two.with_base(Some(Base { init: 0, fin: 3 })).unwrap();
        let acc = accessible_part(&k).unwrap();
        assert!(acc.complex.is_empty());
    }

    #[test]
    fn accessible_part_is_idempotent() {
        let cov = length_covering(&z_complex(4), 3).unwrap();
        let once = accessible_part(&cov.complex).unwrap();
        let twice = accessible_part(&once.complex).unwrap();
        assert_eq!(once.complex.dims(), twice.complex.dims());
        assert_eq!(once.complex.dims(), cov.complex.dims());
    }

    #[test]
    fn covering_of_z_is_z_tilde() {
        let cov = length_covering(&z_complex(3), 3).unwrap();
        assert_eq!(cov.complex.dims(), &[4, 3, 2, 1]);
        cov.altitude.validate(&cov.complex).unwrap();
        cov.projection.validate(&cov.complex, &z_complex(3)).unwrap();
        assert!(find_isomorphism(&cov.complex, &z_tilde(3).complex).is_some());
    }

    #[test]
    fn covering_of_interval() {
        let e = standard_cube(1);
        let one = length_covering(&e, 1).unwrap();
        assert!(find_isomorphism(&one.complex, &e).is_some());
        assert!(length_covering(&e, 2).unwrap().complex.is_empty());
        assert!(length_covering(&e, 0).unwrap().complex.is_empty());
    }

    #[test]
    fn bounded_z_covering_window() {
        // Z̃ with base (z⁰,0),(z⁰,3): the accessible cells are z^k_j, 0 ≤ j, j + k ≤ 3
        let cov = length_covering(&z_complex(5), 3).unwrap();
        for (d, row) in cov.cells.iter().enumerate() {
            let hs: Vec<usize> = row.iter().map(|&(_, h)| h).collect();
            assert_eq!(hs, (0..=3 - d).collect::<Vec<_>>());
        }
    }
}
