use super::{Base, CellId, PrecubicalComplex, PrecubicalMap};
use crate::error::{Error, Result};

/// Orbit complex `K/G` with the projection `K → K/G`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub complex: PrecubicalComplex,
    pub projection: PrecubicalMap,
    /// Members of every orbit, ascending.
    pub orbits: Vec<Vec<Vec<usize>>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

/// Quotient of `K` by the group generated by `group`. Orbits are numbered by
/// their least member; the induced faces are checked on every
/// representative, so a non-automorphism is reported instead of silently
/// producing garbage.
pub fn quotient_by_automorphisms(
    k: &PrecubicalComplex,
    group: &[PrecubicalMap],
) -> Result<Quotient> {
    for g in group {
        g.validate(k, k)?;
        if !g.is_bijective(k) {
            return Err(Error::contract("group element is not a bijection"));
        }
    }
    let mut orbit_of: Vec<Vec<usize>> = Vec::with_capacity(k.dims().len());
    let mut orbits: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k.dims().len());
    for (d, &n) in k.dims().iter().enumerate() {
        let mut parent: Vec<usize> = (0..n).collect();
        for g in group {
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.assignment[d][x]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut number = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut ids = Vec::with_capacity(n);
        for x in 0..n {
            let r = find(&mut parent, x);
            if number[r] == usize::MAX {
                number[r] = members.len();
                members.push(Vec::new());
            }
            ids.push(number[r]);
            members[number[r]].push(x);
        }
        orbit_of.push(ids);
        orbits.push(members);
    }
    for (d, members) in orbits.iter().enumerate().skip(1) {
        for orbit in members {
            let rep = CellId::new(d, orbit[0]);
            for &x in &orbit[1..] {
                for i in 1..=d {
                    for eps in 0..2u8 {
                        let a = orbit_of[d - 1][k.face(rep, i, eps).index];
                        let b = orbit_of[d - 1][k.face(CellId::new(d, x), i, eps).index];
                        if a != b {
                            return Err(Error::consistency(format!(
                                "face d^{eps}_{i} is not constant on the orbit of {}",
                                k.label(rep)
                            )));
                        }
                    }
                }
            }
        }
    }
    let base = k.base().map(|b| Base {
        init: orbit_of[0][b.init],
        fin: orbit_of[0][b.fin],
    });
    let counts = orbits.iter().map(Vec::len).collect();
    let complex = PrecubicalComplex::from_face_fn(counts, base, |c, i, eps| {
        let rep = CellId::new(c.dim, orbits[c.dim][c.index][0]);
        orbit_of[c.dim - 1][k.face(rep, i, eps).index]
    })?;
    let complex = match k.labels() {
        Some(labels) => {
            let l = orbits
                .iter()
                .enumerate()
                .map(|(d, row)| row.iter().map(|o| format!("[{}]", labels[d][o[0]])).collect())
                .collect();
            complex.with_labels(l)
        }
        None => complex,
    };
    let violations = complex.validate();
    if let Some(v) = violations.first() {
        return Err(Error::consistency(format!(
            "quotient violates the precubical relation at {} (i={}, j={})",
            v.cell, v.i, v.j
        )));
    }
    let projection = PrecubicalMap::new(orbit_of, base.is_some());
    projection.validate(k, &complex)?;
    Ok(Quotient {
        complex,
        projection,
        orbits,
    })
}
