//! Finite combinatorial models of directed path spaces on precubical sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`cubical`] – precubical sets, maps, altitude functions, accessibility,
//!   length coverings, pullbacks and orbit quotients.
//! * [`complexes`] – constructors for the named complexes: standard cubes,
//!   wedge cubes, the final object `Z`, its length coverings `Z̃ₙ` and the
//!   symmetric covering complex `Yᴬ`.
//! * [`chains`] – cube chains, the cube-chain poset and the face-swap identity.
//! * [`orders`] – double orders, their classification, the functors between
//!   `(R(A),⊑)` and `(R⁺(A),⊆)`, and the chain/order correspondence.
//! * [`category`] – finite categories and posets, nerves, barycentric
//!   subdivision, quotients by free actions and the category `𝓔ₙ`.
//! * [`homology`] – exact integral homology through Smith normal form.
//! * [`cover`] – the configuration-space cover checked with exact rationals.
//! * [`verify`] – the named check registry behind `dicube verify`.
//!
//! All values are immutable once built. Heavy enumerations take an
//! [`Execution`] argument; with the `parallel` feature (on by default) the
//! parallel mode fans out over rayon, otherwise it falls back to sequential
//! iteration. Both modes produce identical, canonically ordered output.

pub mod caps;
pub mod category;
pub mod chains;
pub mod complexes;
pub mod cover;
pub mod cubical;
pub mod error;
pub mod export;
pub mod homology;
pub mod orders;
pub mod par;
pub mod perm;
pub mod verify;

pub use caps::Caps;
pub use error::{Error, Result};
pub use par::Execution;
pub use perm::Permutation;
