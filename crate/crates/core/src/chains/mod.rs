//! Cube chains of bi-pointed complexes, the chain poset of a
//! non-self-linked complex with altitude, and the face-swap identity.

mod face_swap;
mod y_orders;

use std::collections::HashSet;

use serde::Serialize;

use crate::caps::Caps;
use crate::category::Poset;
use crate::cubical::{
    canonical_map_images, compute_altitude, is_non_self_linked, AltitudeLabeling, CellId,
    PrecubicalComplex, SelfLinkage,
};
use crate::error::{Error, Result};
use crate::par::Execution;

pub use face_swap::{face_swap, face_swap_search, verify_face_identity};
pub use y_orders::{chain_order_isomorphism, chain_to_order, order_to_chain, ChainOrderReport};

/// A sequence of cubes of positive dimension with `d⁰(c₁)` the initial
/// vertex, `d¹(c_l)` the final vertex and `d¹(c_i) = d⁰(c_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CubeChain {
    pub cells: Vec<CellId>,
}

impl CubeChain {
    pub fn new(cells: Vec<CellId>) -> Self {
        CubeChain { cells }
    }

    /// `(n₁, …, n_l)`
    pub fn dims(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.dim).collect()
    }

    /// `n₁ + ⋯ + n_l`
    pub fn length(&self) -> usize {
        self.cells.iter().map(|c| c.dim).sum()
    }

    pub fn labels(&self, k: &PrecubicalComplex) -> Vec<String> {
        self.cells.iter().map(|&c| k.label(c)).collect()
    }

    pub fn display(&self, k: &PrecubicalComplex) -> String {
        format!("({})", self.labels(k).join(","))
    }

    /// Checks the chain conditions against `k`.
    pub fn validate(&self, k: &PrecubicalComplex) -> Result<()> {
        let base = k
            .base()
            .ok_or_else(|| Error::contract("cube chains need a bi-pointed complex"))?;
        let mut v = CellId::vertex(base.init);
        for &c in &self.cells {
            if !k.contains(c) || c.dim == 0 {
                return Err(Error::structural(format!("{c} is not a cube of positive dimension")));
            }
            if k.initial_vertex(c) != v {
                return Err(Error::structural(format!("{c} does not start where the chain is")));
            }
            v = k.final_vertex(c);
        }
        if v != CellId::vertex(base.fin) {
            return Err(Error::structural("chain does not end at the final vertex"));
        }
        Ok(())
    }
}

/// All cube chains of `k`, sorted. Only cells from which the final vertex
/// is still reachable are explored; the search aborts with a resource error
/// after `caps.max_cells` search nodes.
pub fn enumerate_chains(k: &PrecubicalComplex, caps: &Caps, exec: Execution) -> Result<Vec<CubeChain>> {
    let base = k
        .base()
        .ok_or_else(|| Error::contract("cube chains need a bi-pointed complex"))?;
    let vertices = k.count(0);
    let mut starting: Vec<Vec<CellId>> = vec![Vec::new(); vertices];
    let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for c in k.cells().filter(|c| c.dim > 0) {
        let (s, t) = (k.initial_vertex(c).index, k.final_vertex(c).index);
        starting[s].push(c);
        reverse[t].push(s);
    }
    let mut live = vec![false; vertices];
    live[base.fin] = true;
    let mut stack = vec![base.fin];
    while let Some(v) = stack.pop() {
        for &u in &reverse[v] {
            if !std::mem::replace(&mut live[u], true) {
                stack.push(u);
            }
        }
    }
    for list in &mut starting {
        list.retain(|&c| live[k.final_vertex(c).index]);
    }
    let cap = caps.max_cells;
    let search = |first: &CellId| -> Result<(Vec<CubeChain>, usize)> {
        let mut out = Vec::new();
        let mut nodes = 0;
        let mut cur = vec![*first];
        extend(k, &starting, base.fin, &mut cur, &mut out, &mut nodes, cap)?;
        Ok((out, nodes))
    };
    let firsts = starting[base.init].clone();
    let mut chains = Vec::new();
    if base.init == base.fin {
        chains.push(CubeChain::new(Vec::new()));
    }
    let mut total = 0;
    for batch in exec.map(&firsts, search) {
        let (found, nodes) = batch?;
        total += nodes;
        if total > cap {
            return Err(Error::resource("cube chain search nodes", total, cap));
        }
        chains.extend(found);
    }
    chains.sort();
    Ok(chains)
}

fn extend(
    k: &PrecubicalComplex,
    starting: &[Vec<CellId>],
    fin: usize,
    cur: &mut Vec<CellId>,
    out: &mut Vec<CubeChain>,
    nodes: &mut usize,
    cap: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > cap {
        return Err(Error::resource("cube chain search nodes", *nodes, cap));
    }
    let v = k.final_vertex(*cur.last().expect("nonempty")).index;
    if v == fin {
        out.push(CubeChain::new(cur.clone()));
    }
    for &c in &starting[v] {
        cur.push(c);
        extend(k, starting, fin, cur, out, nodes, cap)?;
        cur.pop();
    }
    Ok(())
}

/// A complex known to be non-self-linked and to carry an altitude labeling;
/// on such complexes the face criterion decides the order of chains.
#[derive(Debug, Clone)]
pub struct ChainContext<'a> {
    pub complex: &'a PrecubicalComplex,
    pub altitude: AltitudeLabeling,
}

impl<'a> ChainContext<'a> {
    pub fn new(k: &'a PrecubicalComplex, caps: &Caps, exec: Execution) -> Result<Self> {
        if let SelfLinkage::SelfLinked { cell } = is_non_self_linked(k, caps, exec)? {
            return Err(Error::contract(format!(
                "chain order needs a non-self-linked complex; {cell} is self-linked"
            )));
        }
        let altitude = compute_altitude(k)
            .ok_or_else(|| Error::contract("chain order needs a complex with an altitude labeling"))?;
        Ok(ChainContext { complex: k, altitude })
    }

    /// Every cube of `a` is an iterated face of some cube of `b`.
    pub fn leq(&self, a: &CubeChain, b: &CubeChain) -> bool {
        let faces: HashSet<CellId> = b
            .cells
            .iter()
            .flat_map(|&c| canonical_map_images(self.complex, c))
            .collect();
        a.cells.iter().all(|c| faces.contains(c))
    }

    /// Cube altitudes increase strictly along the chain.
    pub fn increasing_altitudes(&self, chain: &CubeChain) -> bool {
        chain
            .cells
            .windows(2)
            .all(|w| self.altitude.get(w[0]) < self.altitude.get(w[1]))
    }
}

/// `a ≤ b` in `Ch(k)`; checks the hypotheses on `k` first.
pub fn chain_leq(k: &PrecubicalComplex, a: &CubeChain, b: &CubeChain, caps: &Caps) -> Result<bool> {
    let ctx = ChainContext::new(k, caps, Execution::Sequential)?;
    a.validate(k)?;
    b.validate(k)?;
    Ok(ctx.leq(a, b))
}

#[derive(Debug, Clone)]
pub struct ChainPoset {
    pub chains: Vec<CubeChain>,
    pub poset: Poset,
}

/// The poset `Ch(k)` on all chains, with the poset axioms checked.
pub fn chain_poset(k: &PrecubicalComplex, caps: &Caps, exec: Execution) -> Result<ChainPoset> {
    let ctx = ChainContext::new(k, caps, exec)?;
    let chains = enumerate_chains(k, caps, exec)?;
    caps.check_cells("chain order table", chains.len() * chains.len())?;
    let faces: Vec<HashSet<CellId>> = exec.map(&chains, |b| {
        b.cells
            .iter()
            .flat_map(|&c| canonical_map_images(k, c))
            .collect()
    });
    let rows: Vec<Vec<bool>> = exec.map(&chains, |a| {
        faces
            .iter()
            .map(|f| a.cells.iter().all(|c| f.contains(c)))
            .collect()
    });
    if let Some(bad) = chains.iter().find(|c| !ctx.increasing_altitudes(c)) {
        return Err(Error::consistency(format!(
            "altitudes do not increase along {}",
            bad.display(k)
        )));
    }
    let labels = chains.iter().map(|c| c.display(k)).collect();
    let poset = Poset::from_leq_matrix(labels, rows)?;
    Ok(ChainPoset { chains, poset })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{standard_cube, z_complex, z_tilde, YComplex};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn chains_of_small_models() {
        let seq = Execution::Sequential;
        assert_eq!(enumerate_chains(&standard_cube(1), &caps(), seq).unwrap().len(), 1);
        assert_eq!(enumerate_chains(&standard_cube(2), &caps(), seq).unwrap().len(), 3);
        let zt = z_tilde(2);
        let chains = enumerate_chains(&zt.complex, &caps(), seq).unwrap();
        let mut shapes: Vec<Vec<CellId>> = chains.iter().map(|c| c.cells.clone()).collect();
        shapes.sort();
        assert_eq!(
            shapes,
            vec![vec![zt.cell(1, 0), zt.cell(1, 1)], vec![zt.cell(2, 0)]]
        );
        let y = YComplex::new(2, &caps()).unwrap();
        assert_eq!(enumerate_chains(&y.complex, &caps(), seq).unwrap().len(), 4);
    }

    #[test]
    fn parallel_matches_sequential() {
        let y = YComplex::new(3, &caps()).unwrap();
        let a = enumerate_chains(&y.complex, &caps(), Execution::Sequential).unwrap();
        let b = enumerate_chains(&y.complex, &caps(), Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 6 * 4);
    }

    #[test]
    fn chain_poset_of_y_ab() {
        let y = YComplex::new(2, &caps()).unwrap();
        let p = chain_poset(&y.complex, &caps(), Execution::Sequential).unwrap();
        assert_eq!(p.poset.len(), 4);
        assert_eq!(p.poset.minimal().len(), 2);
        assert_eq!(p.poset.maximal().len(), 2);
        // both squares share the whole boundary, so the Hasse diagram is a 4-cycle
        for m in p.poset.minimal() {
            let above = p.poset.maximal().into_iter().filter(|&t| p.poset.leq(m, t)).count();
            assert_eq!(above, 2);
        }
    }

    #[test]
    fn edge_chain_below_square() {
        let y = YComplex::new(2, &caps()).unwrap();
        let cell = |s: &str| y.id(&s.parse().unwrap()).unwrap();
        let low = CubeChain::new(vec![cell("(|a|b)"), cell("(a|b|)")]);
        let high = CubeChain::new(vec![cell("(|a<b|)")]);
        assert!(chain_leq(&y.complex, &low, &high, &caps()).unwrap());
        assert!(!chain_leq(&y.complex, &high, &low, &caps()).unwrap());
        assert!(chain_leq(&y.complex, &high, &high, &caps()).unwrap());
        let other = CubeChain::new(vec![cell("(|b<a|)")]);
        assert!(!chain_leq(&y.complex, &high, &other, &caps()).unwrap());
        assert!(!chain_leq(&y.complex, &other, &high, &caps()).unwrap());
    }

    #[test]
    fn cube_poset_has_square_on_top() {
        let p = chain_poset(&standard_cube(2), &caps(), Execution::Sequential).unwrap();
        assert_eq!(p.poset.len(), 3);
        assert_eq!(p.poset.maximal().len(), 1);
        assert_eq!(p.chains[p.poset.maximal()[0]].dims(), vec![2]);
    }

    #[test]
    fn self_linked_complex_is_rejected() {
        let z = z_complex(2);
        assert!(matches!(
            chain_poset(&z, &caps(), Execution::Sequential),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn search_cap_is_enforced() {
        let y = YComplex::new(3, &caps()).unwrap();
        let tight = Caps {
            max_cells: 5,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_chains(&y.complex, &tight, Execution::Sequential),
            Err(Error::Resource { .. })
        ));
    }
}
