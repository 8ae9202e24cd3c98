//! The named models and their deterministic JSON and DOT renderings.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::caps::Caps;
use crate::category::{build_en, nerve_complex, quotient_category, FiniteCategory, GroupAction, Poset};
use crate::chains::chain_poset;
use crate::complexes::{z_complex, z_tilde, YComplex};
use crate::cubical::PrecubicalComplex;
use crate::error::{Error, Result};
use crate::homology::{cubical_chain_complex, homology, HomologyGroup};
use crate::orders::{OrderClass, OrderUniverse, PosetVariant};
use crate::par::Execution;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// `Z` truncated at dimension `n`.
    Z,
    ZTilde,
    YA,
    /// `Ch(Yᴬ)`
    ChainPoset,
    /// `(R(A),⊑)`
    RPoset,
    /// `(R⁺(A),⊆)`
    RPlusPoset,
    En,
    /// `(R(A),⊒)/Σ_A`
    Quotient,
}

pub const MODEL_NAMES: &[&str] = &["z", "z-tilde", "yA", "chain-poset", "r-poset", "rplus-poset", "en", "quotient"];

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "z" => Model::Z,
            "z-tilde" => Model::ZTilde,
            "yA" => Model::YA,
            "chain-poset" => Model::ChainPoset,
            "r-poset" => Model::RPoset,
            "rplus-poset" => Model::RPlusPoset,
            "en" => Model::En,
            "quotient" => Model::Quotient,
            _ => {
                return Err(Error::argument(format!(
                    "unknown model {s:?}; expected one of {}",
                    MODEL_NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Model::Z,
            Model::ZTilde,
            Model::YA,
            Model::ChainPoset,
            Model::RPoset,
            Model::RPlusPoset,
            Model::En,
            Model::Quotient,
        ]
        .iter()
        .position(|m| m == self)
        .expect("listed");
        f.write_str(MODEL_NAMES[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::argument(format!("unknown format {s:?}; expected json or dot"))),
        }
    }
}

/// A built model: a complex, a poset, or a category.
#[derive(Debug, Clone)]
pub enum Built {
    Complex(PrecubicalComplex),
    Poset {
        poset: Poset,
        /// Cell labels of each chain, for `Ch(Yᴬ)`.
        chains: Option<Vec<Vec<String>>>,
    },
    Category(FiniteCategory),
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    /// Covering pairs `[a, b]`, `a ⋖ b`.
    pub covers: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chains: Option<Vec<Vec<String>>>,
}

fn universe_poset(class: OrderClass, variant: PosetVariant, n: usize, caps: &Caps, exec: Execution) -> Result<Poset> {
    OrderUniverse::new(n, class, caps, exec)?.poset(variant, exec)
}

pub fn build(model: Model, n: usize, caps: &Caps, exec: Execution) -> Result<Built> {
    Ok(match model {
        Model::Z => Built::Complex(z_complex(n)),
        Model::ZTilde => Built::Complex(z_tilde(n).complex),
        Model::YA => Built::Complex(YComplex::new(n, caps)?.complex),
        Model::ChainPoset => {
            let y = YComplex::new(n, caps)?;
            let cp = chain_poset(&y.complex, caps, exec)?;
            let chains = cp.chains.iter().map(|c| c.labels(&y.complex)).collect();
            Built::Poset {
                poset: cp.poset,
                chains: Some(chains),
            }
        }
        Model::RPoset => Built::Poset {
            poset: universe_poset(OrderClass::Regular, PosetVariant::SqSubset, n, caps, exec)?,
            chains: None,
        },
        Model::RPlusPoset => Built::Poset {
            poset: universe_poset(OrderClass::SemiRegular, PosetVariant::Subset, n, caps, exec)?,
            chains: None,
        },
        Model::En => Built::Category(build_en(n, caps, exec)?.category),
        Model::Quotient => {
            let u = OrderUniverse::new(n, OrderClass::Regular, caps, exec)?;
            let c = u.poset(PosetVariant::SqSupset, exec)?.to_category();
            let act = GroupAction::on_poset_category(&c, u.sigma_action())?;
            Built::Category(quotient_category(&c, &act)?.category)
        }
    })
}

/// Renders a model; byte-identical for identical inputs.
pub fn export(model: Model, n: usize, format: Format, caps: &Caps, exec: Execution) -> Result<String> {
    let name = format!("{model}-{n}");
    let built = build(model, n, caps, exec)?;
    let json = |v: serde_json::Result<String>| v.map(|s| s + "\n").map_err(|e| Error::consistency(e.to_string()));
    match (built, format) {
        (Built::Complex(k), Format::Json) => json(serde_json::to_string(&k.to_json())),
        (Built::Complex(_), Format::Dot) => Err(Error::argument(format!(
            "model {model} is a precubical set; only json export is supported"
        ))),
        (Built::Poset { poset, chains }, Format::Json) => {
            let p = PosetJson {
                elements: poset.labels().to_vec(),
                covers: poset.covers().into_iter().map(|(a, b)| [a, b]).collect(),
                chains,
            };
            json(serde_json::to_string(&p))
        }
        (Built::Poset { poset, .. }, Format::Dot) => Ok(poset.to_dot(&name)),
        (Built::Category(c), Format::Json) => json(serde_json::to_string(&c.to_json())),
        (Built::Category(c), Format::Dot) => Ok(c.to_dot(&name)),
    }
}

/// Integral homology of a model: cubical chains for complexes, nerves for
/// posets and categories.
pub fn model_homology(model: Model, n: usize, caps: &Caps, exec: Execution) -> Result<Vec<HomologyGroup>> {
    let chains = match build(model, n, caps, exec)? {
        Built::Complex(k) => cubical_chain_complex(&k),
        Built::Poset { poset, .. } => nerve_complex(&poset.to_category(), caps, exec)?,
        Built::Category(c) => nerve_complex(&c, caps, exec)?,
    };
    homology(&chains, exec)
}
