use std::collections::VecDeque;

use super::{CellId, PrecubicalComplex};
use crate::error::{Error, Result};

/// Integer labelling with `alt(d^ε_i c) = alt(c) + ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltitudeLabeling {
    pub values: Vec<Vec<i64>>,
}

impl AltitudeLabeling {
    pub fn get(&self, c: CellId) -> i64 {
        self.values[c.dim][c.index]
    }

    /// Checks the defining identity on every face (and `alt(0) = 0` when
    /// the complex is bi-pointed).
    pub fn validate(&self, k: &PrecubicalComplex) -> Result<()> {
        for c in k.cells() {
            for i in 1..=c.dim {
                for eps in 0..2u8 {
                    if self.get(k.face(c, i, eps)) != self.get(c) + eps as i64 {
                        return Err(Error::contract(format!(
                            "altitude identity fails at d^{eps}_{i} of {}",
                            k.label(c)
                        )));
                    }
                }
            }
        }
        if let Some(init) = k.initial() {
            if self.get(init) != 0 {
                return Err(Error::contract("initial vertex must have altitude 0"));
            }
        }
        Ok(())
    }
}

/// Infers the altitude function by propagating `alt(d^ε_i c) = alt(c) + ε`
/// over the undirected incidence graph; `None` when the constraints clash.
///
/// The component of the initial vertex (if any) is anchored at `alt(0) = 0`;
/// every other component is shifted so that its least value is 0.
pub fn compute_altitude(k: &PrecubicalComplex) -> Option<AltitudeLabeling> {
    // adjacency: (neighbour, offset) with alt(neighbour) = alt(cell) + offset
    let mut adj: Vec<Vec<Vec<(CellId, i64)>>> =
        k.dims().iter().map(|&n| vec![Vec::new(); n]).collect();
    for c in k.cells() {
        for i in 1..=c.dim {
            for eps in 0..2u8 {
                let f = k.face(c, i, eps);
                adj[c.dim][c.index].push((f, eps as i64));
                adj[f.dim][f.index].push((c, -(eps as i64)));
            }
        }
    }
    let mut values: Vec<Vec<Option<i64>>> = k.dims().iter().map(|&n| vec![None; n]).collect();
    let starts = k.initial().into_iter().chain(k.cells());
    for start in starts {
        if values[start.dim][start.index].is_some() {
            continue;
        }
        values[start.dim][start.index] = Some(0);
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let v = values[c.dim][c.index].unwrap();
            for &(n, off) in &adj[c.dim][c.index] {
                match values[n.dim][n.index] {
                    Some(w) if w != v + off => return None,
                    Some(_) => {}
                    None => {
                        values[n.dim][n.index] = Some(v + off);
                        component.push(n);
                        queue.push_back(n);
                    }
                }
            }
        }
        if Some(start) != k.initial() {
            let min = component
                .iter()
                .map(|c| values[c.dim][c.index].unwrap())
                .min()
                .unwrap();
            for c in component {
                *values[c.dim][c.index].as_mut().unwrap() -= min;
            }
        }
    }
    Some(AltitudeLabeling {
        values: values
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap).collect())
            .collect(),
    })
}
