use std::collections::{HashMap, HashSet, VecDeque};

use super::{DoubleOrder, Relation};
use crate::caps::Caps;
use crate::category::Poset;
use crate::error::Result;
use crate::par::Execution;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderClass {
    /// `D(A)`: all double orders.
    Double,
    /// `R(A)`: regular double orders.
    Regular,
    /// `R⁺(A)`: semi-regular double orders.
    SemiRegular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosetVariant {
    /// `o₁ ≤ o₂ ⇔ o₁ ⊆ o₂`
    Subset,
    /// `o₁ ≤ o₂ ⇔ o₁ ⊑ o₂`
    SqSubset,
    /// `o₁ ≤ o₂ ⇔ o₁ ⊒ o₂`
    SqSupset,
}

pub fn poset_leq(o1: &DoubleOrder, o2: &DoubleOrder, variant: PosetVariant) -> bool {
    match variant {
        PosetVariant::Subset => o1.is_subset(o2),
        PosetVariant::SqSubset => o1.is_sqsubset(o2),
        PosetVariant::SqSupset => o2.is_sqsubset(o1),
    }
}

/// `R(A)` by the block construction: a listing of `A` cut into consecutive
/// blocks; `x` orders the blocks, `y` orders each block.
pub fn regular_by_blocks(n: usize) -> Vec<DoubleOrder> {
    let mut out = Vec::new();
    for perm in Permutation::all(n) {
        let seq = perm.images();
        let cuts = if n == 0 { 1 } else { 1usize << (n - 1) };
        for mask in 0..cuts {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new()];
            for (i, &a) in seq.iter().enumerate() {
                if i > 0 && mask & (1 << (i - 1)) != 0 {
                    blocks.push(Vec::new());
                }
                blocks.last_mut().unwrap().push(a);
            }
            out.push(DoubleOrder::from_blocks(n, &blocks));
        }
    }
    out
}

/// `D(A)` by filtering all pairs of strict orders.
pub fn double_by_filter(n: usize, exec: Execution) -> Vec<DoubleOrder> {
    let strict = Relation::all_strict_orders(n);
    exec.flat_map_range(strict.len(), |i| {
        strict
            .iter()
            .map(|&y| DoubleOrder::new(strict[i], y))
            .filter(DoubleOrder::is_double)
            .collect()
    })
}

/// `R⁺(A)` as the closure of `R(A)` under `∪̄`. Breadth-first: each new
/// order is joined with every regular generator. This reaches every
/// semi-regular order, since a partial union of regular orders that are
/// contained in an irreflexive union is itself contained in it, hence
/// irreflexive, and pairwise comparability is inherited from any one
/// regular constituent.
fn semi_regular_closure(regular: &[DoubleOrder], caps: &Caps) -> Result<Vec<DoubleOrder>> {
    let mut seen: HashSet<DoubleOrder> = regular.iter().copied().collect();
    let mut queue: VecDeque<DoubleOrder> = regular.iter().copied().collect();
    while let Some(o) = queue.pop_front() {
        for r in regular {
            if let Some(u) = o.union_bar(r) {
                if seen.insert(u) {
                    caps.check_cells("semi-regular double orders", seen.len())?;
                    queue.push_back(u);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// One of `D(A)`, `R(A)`, `R⁺(A)`, sorted canonically.
#[derive(Debug, Clone)]
pub struct OrderUniverse {
    pub n: usize,
    pub class: OrderClass,
    pub orders: Vec<DoubleOrder>,
    index: HashMap<DoubleOrder, usize>,
}

impl OrderUniverse {
    pub fn new(n: usize, class: OrderClass, caps: &Caps, exec: Execution) -> Result<Self> {
        let mut orders = match class {
            OrderClass::Double => {
                caps.check("size of A for D(A)", n, caps.double_order_size)?;
                double_by_filter(n, exec)
            }
            OrderClass::Regular => {
                caps.check("size of A for R(A)", n, caps.regular_size)?;
                regular_by_blocks(n)
            }
            OrderClass::SemiRegular => {
                caps.check("size of A for R+(A)", n, caps.double_order_size)?;
                semi_regular_closure(&regular_by_blocks(n), caps)?
            }
        };
        orders.sort();
        Ok(Self::from_sorted(n, class, orders))
    }

    fn from_sorted(n: usize, class: OrderClass, orders: Vec<DoubleOrder>) -> Self {
        let index = orders.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        OrderUniverse {
            n,
            class,
            orders,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn index_of(&self, o: &DoubleOrder) -> Option<usize> {
        self.index.get(o).copied()
    }

    pub fn contains(&self, o: &DoubleOrder) -> bool {
        self.index.contains_key(o)
    }

    pub fn labels(&self) -> Vec<String> {
        self.orders.iter().map(|o| o.to_string()).collect()
    }

    /// The poset on the universe under the chosen order.
    pub fn poset(&self, variant: PosetVariant, exec: Execution) -> Result<Poset> {
        let rows: Vec<Vec<bool>> = exec.map(&self.orders, |a| {
            self.orders.iter().map(|b| poset_leq(a, b, variant)).collect()
        });
        Poset::from_leq_matrix(self.labels(), rows)
    }

    /// The action of `Σ_A` as index permutations, one per element of
    /// `Permutation::all(n)`.
    pub fn sigma_action(&self) -> Vec<Vec<usize>> {
        Permutation::all(self.n)
            .iter()
            .map(|s| {
                self.orders
                    .iter()
                    .map(|o| self.index[&o.act(s)])
                    .collect()
            })
            .collect()
    }
}
