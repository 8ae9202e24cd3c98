use serde::Serialize;

use super::{enumerate_chains, ChainContext, CubeChain};
use crate::caps::Caps;
use crate::complexes::{YCell, YComplex};
use crate::error::{Error, Result};
use crate::orders::{DoubleOrder, OrderClass, OrderUniverse, Relation};
use crate::par::Execution;
use crate::perm::Permutation;

/// `⋖_𝐜`: `x` compares the chain positions `h_𝐜`, `y` is the union of the
/// cube orders.
pub fn chain_to_order(y: &YComplex, chain: &CubeChain) -> Result<DoubleOrder> {
    chain.validate(&y.complex)?;
    let n = y.n;
    let mut h = vec![0; n];
    let mut yrel = Relation::empty(n);
    for (j, &c) in chain.cells.iter().enumerate() {
        let cell = y.cell(c);
        for &a in &cell.mid {
            if h[a as usize] != 0 {
                return Err(Error::consistency(format!("element {a} is free in two cubes")));
            }
            h[a as usize] = j + 1;
        }
        let seq: Vec<usize> = cell.mid.iter().map(|&a| a as usize).collect();
        yrel = yrel.union(&Relation::chain(n, &seq));
    }
    if h.contains(&0) {
        return Err(Error::consistency("an element is free in no cube of the chain"));
    }
    Ok(DoubleOrder::new(Relation::from_levels(&h), yrel))
}

/// The chain `c^⋖_1, …, c^⋖_r` of a regular order: the `j`-th cube frees
/// the `j`-th block in `y`-order, with earlier blocks at 1 and later ones
/// at 0.
pub fn order_to_chain(y: &YComplex, o: &DoubleOrder) -> Result<CubeChain> {
    if o.len() != y.n {
        return Err(Error::argument("order and complex have different ground sets"));
    }
    let blocks = o
        .blocks()
        .ok_or_else(|| Error::argument(format!("{o} is not regular")))?;
    let full: u32 = (1u32 << y.n) - 1;
    let mut ones = 0u32;
    let mut cells = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let mid: Vec<u8> = block.iter().map(|&a| a as u8).collect();
        let mask = block.iter().fold(0u32, |m, &a| m | 1 << a);
        let cell = YCell {
            ones,
            mid,
            zeros: full & !ones & !mask,
        };
        cells.push(y.id(&cell).ok_or_else(|| Error::consistency(format!("cell {cell} missing")))?);
        ones |= mask;
    }
    Ok(CubeChain::new(cells))
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainOrderReport {
    pub n: usize,
    pub chains: usize,
    pub regular_orders: usize,
    pub round_trips: bool,
    /// `c ≤ e ⇔ ⋖_𝐜 ⊒ ⋖_𝐞` on every pair.
    pub order_reversing: bool,
    pub altitudes_increase: bool,
    /// `⋖_{𝐜σ} = ⋖_𝐜 σ` for every chain and every `σ`.
    pub equivariant: bool,
}

impl ChainOrderReport {
    pub fn holds(&self) -> bool {
        self.chains == self.regular_orders && self.round_trips && self.order_reversing && self.altitudes_increase && self.equivariant
    }
}

/// Compares `Ch(Yᴬ)` with `(R(A),⊒)` table by table.
pub fn chain_order_isomorphism(n: usize, caps: &Caps, exec: Execution) -> Result<ChainOrderReport> {
    let y = YComplex::new(n, caps)?;
    let ctx = ChainContext::new(&y.complex, caps, exec)?;
    let chains = enumerate_chains(&y.complex, caps, exec)?;
    let universe = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
    let orders = chains
        .iter()
        .map(|c| chain_to_order(&y, c))
        .collect::<Result<Vec<_>>>()?;
    let mut round_trips = orders.iter().all(|o| universe.contains(o));
    for (c, o) in chains.iter().zip(&orders) {
        round_trips &= order_to_chain(&y, o)? == *c;
    }
    for o in &universe.orders {
        round_trips &= chain_to_order(&y, &order_to_chain(&y, o)?)? == *o;
    }
    let order_reversing = exec
        .map_range(chains.len(), |i| {
            (0..chains.len()).all(|j| ctx.leq(&chains[i], &chains[j]) == orders[j].is_sqsubset(&orders[i]))
        })
        .into_iter()
        .all(|b| b);
    let sigmas = Permutation::all(n);
    let equivariant = exec
        .map_range(chains.len(), |i| {
            sigmas.iter().all(|sigma| {
                let moved = CubeChain::new(
                    chains[i]
                        .cells
                        .iter()
                        .map(|&c| y.id(&y.cell(c).act(sigma)).expect("Y is closed under the action"))
                        .collect(),
                );
                chain_to_order(&y, &moved).is_ok_and(|o| o == orders[i].act(sigma))
            })
        })
        .into_iter()
        .all(|b| b);
    Ok(ChainOrderReport {
        n,
        chains: chains.len(),
        regular_orders: universe.len(),
        round_trips,
        order_reversing,
        altitudes_increase: chains.iter().all(|c| ctx.increasing_altitudes(c)),
        equivariant,
    })
}
