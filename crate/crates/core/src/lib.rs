//! Order domains over finite fields and the evaluation codes they define.
//!
//! The crate provides exact arithmetic in small fields `GF(p^m)`, sparse
//! polynomials with weight-matrix monomial orders and Groebner bases, the
//! two-condition Groebner criterion for order-domain presentations, toric
//! degenerations, constructors for Hermitian hypersurfaces, Grassmannians and
//! a family of flag varieties, and evaluation codes with exact distances.

pub mod codes;
pub mod error;
pub mod gf;
pub mod limits;
pub mod matrix;
pub mod mpoly;
pub mod orderdomain;
pub mod varieties;

pub use codes::{
    c_a_code, dual_code, evaluation_code, griesmer_bound, hermitian_predicted_params, min_distance,
    orbit_decomposition, EvaluationCode, OrbitDecomposition,
};
pub use error::{Error, Result};
pub use gf::{build_field, hermitian_constants, primitive_element, Field, FieldElement, FieldSpec};
pub use limits::Limits;
pub use matrix::Matrix;
pub use mpoly::{Monomial, MonomialOrder, PolyRing, Polynomial, WeightMatrix};
pub use orderdomain::{
    axiom_probe, deform_to_toric, m_weight, rho, semigroup_membership, standard_monomials, toric_ideal, verify_gp,
    GPReport, OrderValue, Presentation, SemigroupData, StandardQuery,
};
pub use varieties::{rational_points, PointSet, VarietyInstance};
