//! Size caps for the exhaustive enumerations.

use serde::Serialize;

use crate::error::{Error, Result};

/// Environment variable overriding [`Caps::max_cells`].
pub const MAX_CELLS_ENV: &str = "DICUBE_MAX_CELLS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest cube dimension whose canonical map is enumerated (3ⁿ cells).
    pub non_self_linked_dim: usize,
    /// Largest ground set for `Yᴬ` and `Σ_A`.
    pub y_size: usize,
    /// Largest ground set for `D(A)` and `R⁺(A)`.
    pub double_order_size: usize,
    /// Largest ground set for `R(A)`.
    pub regular_size: usize,
    /// Largest `n` for `𝓔ₙ`.
    pub en_size: usize,
    /// Bound on generated cells, chains, simplices or search nodes.
    pub max_cells: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            non_self_linked_dim: 12,
            y_size: 6,
            double_order_size: 4,
            regular_size: 6,
            en_size: 7,
            max_cells: 5_000_000,
        }
    }
}

impl Caps {
    /// Defaults, with `max_cells` taken from `DICUBE_MAX_CELLS` when set.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(raw) = std::env::var(MAX_CELLS_ENV) {
            caps.max_cells = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_CELLS_ENV}={raw:?} is not a count")))?;
        }
        Ok(caps)
    }

    pub(crate) fn check(&self, what: &str, needed: usize, cap: usize) -> Result<()> {
        if needed > cap {
            Err(Error::resource(what, needed, cap))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_cells(&self, what: &str, needed: usize) -> Result<()> {
        self.check(what, needed, self.max_cells)
    }
}
