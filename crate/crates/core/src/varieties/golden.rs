//! Reference data for `G(3, 5)` shipped with the crate: the diagonal-term
//! matrix `B_(3,5)` and the grevlex bases of the toric and Pluecker ideals.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::mpoly::json::IntPolynomialJson;
use crate::mpoly::{PolyRing, Polynomial};

const B35: &str = include_str!("../../data/b35.json");
const G_T: &str = include_str!("../../data/g_t.json");
const G_G: &str = include_str!("../../data/g_g.json");

#[derive(Deserialize)]
struct MatrixFile {
    rows: Vec<Vec<u64>>,
}

/// An ideal with integer coefficients, each polynomial listed leading term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenIdeal {
    pub vars: Vec<String>,
    pub order: String,
    pub polynomials: Vec<IntPolynomialJson>,
}

impl GoldenIdeal {
    pub fn polynomials(&self, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
        self.polynomials.iter().map(|p| p.to_polynomial(ring)).collect()
    }
}

pub fn b35() -> Vec<Vec<u64>> {
    serde_json::from_str::<MatrixFile>(B35).expect("bundled matrix parses").rows
}

pub fn toric_basis_g35() -> GoldenIdeal {
    serde_json::from_str(G_T).expect("bundled ideal parses")
}

pub fn plucker_basis_g35() -> GoldenIdeal {
    serde_json::from_str(G_G).expect("bundled ideal parses")
}
