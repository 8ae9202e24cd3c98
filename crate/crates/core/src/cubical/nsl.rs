use std::collections::HashMap;

use super::{CellId, PrecubicalComplex, Tri};
use crate::caps::Caps;
use crate::error::Result;
use crate::par::Execution;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfLinkage {
    NonSelfLinked,
    /// A cell whose canonical map `□ⁿ → K` is not injective.
    SelfLinked { cell: CellId },
}

impl SelfLinkage {
    pub fn holds(self) -> bool {
        self == SelfLinkage::NonSelfLinked
    }
}

/// Every `{0,1,*}` word of length `n`, in base-3 order.
pub fn all_patterns(n: usize) -> Vec<Vec<Tri>> {
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let t = [Tri::Zero, Tri::One, Tri::Star][code % 3];
                    code /= 3;
                    t
                })
                .collect()
        })
        .collect()
}

/// Images of all `3ⁿ` cubes of `□ⁿ` under the canonical map of `c`, in the
/// order of [`all_patterns`].
pub fn canonical_map_images(k: &PrecubicalComplex, c: CellId) -> Vec<CellId> {
    all_patterns(c.dim)
        .iter()
        .map(|p| k.pattern_image(c, p))
        .collect()
}

fn canonical_map_injective(k: &PrecubicalComplex, c: CellId) -> bool {
    let mut seen = HashMap::new();
    for p in all_patterns(c.dim) {
        if seen.insert(k.pattern_image(c, &p), ()).is_some() {
            return false;
        }
    }
    true
}

/// Checks that every canonical map `ι_c : □^{dim c} → K` is injective.
/// Reports the first offending cell (by dimension, then index).
pub fn is_non_self_linked(
    k: &PrecubicalComplex,
    caps: &Caps,
    exec: Execution,
) -> Result<SelfLinkage> {
    if let Some(top) = k.max_dim() {
        caps.check(
            "cube dimension for canonical-map enumeration",
            top,
            caps.non_self_linked_dim,
        )?;
    }
    let cells: Vec<CellId> = k.cells().collect();
    let bad = exec.find_map_first(&cells, |&c| (!canonical_map_injective(k, c)).then_some(c));
    Ok(match bad {
        Some(cell) => SelfLinkage::SelfLinked { cell },
        None => SelfLinkage::NonSelfLinked,
    })
}
