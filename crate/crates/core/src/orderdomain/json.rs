use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GPReport, Presentation};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldSpec};
use crate::limits::Limits;
use crate::mpoly::json::{terms_from_json, terms_to_json, TermJson};
use crate::mpoly::{MonomialOrder, PolyRing, WeightMatrix};

/// Serialized presentation: ring, ideal, weights, tie order and (optionally)
/// the verification report. Decoding recomputes the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub ideal: Vec<Vec<TermJson>>,
    pub weights: WeightMatrix,
    pub tie: MonomialOrder,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<GPReport>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

impl Presentation {
    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            name: self.name.clone(),
            field: self.ring.field().spec().clone(),
            vars: self.ring.vars().to_vec(),
            ideal: self.ideal.iter().map(terms_to_json).collect(),
            weights: self.weights.clone(),
            tie: self.tie.clone(),
            report: self.report.clone(),
            notes: self.notes.clone(),
        }
    }

    /// Rebuilds a presentation. Any stored report is discarded; callers run
    /// the verification again.
    pub fn from_json(j: &PresentationJson, limits: &Limits) -> Result<Presentation> {
        if j.weights.ncols() != j.vars.len() {
            return Err(Error::Dimension("weight matrix columns must match variables".into()));
        }
        let field = Field::from_spec(&j.field)?;
        let ring = PolyRing::new(field, j.vars.iter().cloned());
        let ideal = j.ideal.iter().map(|t| terms_from_json(&ring, t)).collect::<Result<Vec<_>>>()?;
        Presentation::from_parts(j.name.clone(), ring, ideal, j.weights.clone(), j.tie.clone(), limits, j.notes.clone())
    }
}
