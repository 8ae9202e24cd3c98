//! The JSON exchange format for complexes:
//! `{"dims": [...], "faces": [{"dim","cell","i","eps","to"}, ...], "base": {"init","final"} | null}`.

use serde::{Deserialize, Serialize};

use super::{Base, CellId, PrecubicalComplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub dim: usize,
    pub cell: usize,
    pub i: usize,
    pub eps: u8,
    pub to: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseJson {
    pub init: usize,
    #[serde(rename = "final")]
    pub fin: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dims: Vec<usize>,
    pub faces: Vec<FaceEntry>,
    pub base: Option<BaseJson>,
}

impl PrecubicalComplex {
    /// Faces are listed by dimension, cell, `i`, then `ε`.
    pub fn to_json(&self) -> ComplexJson {
        let mut faces = Vec::new();
        for c in self.cells().filter(|c| c.dim > 0) {
            for i in 1..=c.dim {
                for eps in 0..2u8 {
                    faces.push(FaceEntry {
                        dim: c.dim,
                        cell: c.index,
                        i,
                        eps,
                        to: self.face(c, i, eps).index,
                    });
                }
            }
        }
        ComplexJson {
            dims: self.dims().to_vec(),
            faces,
            base: self.base().map(|b| BaseJson {
                init: b.init,
                fin: b.fin,
            }),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("complex serialises")
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        PrecubicalComplex::from_face_entries(
            json.dims.clone(),
            &json.faces,
            json.base.map(|b| Base {
                init: b.init,
                fin: b.fin,
            }),
        )
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: ComplexJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&json)
    }
}

impl CellId {
    pub fn to_pair(self) -> (usize, usize) {
        (self.dim, self.index)
    }
}
