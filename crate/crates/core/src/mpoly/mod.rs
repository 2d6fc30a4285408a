//! Sparse multivariate polynomials, monomial orders and Groebner bases.

mod groebner;
pub mod json;
pub mod monomial;
mod order;
mod poly;

pub use groebner::{
    buchberger_reduced, buchberger_reduced_with, eliminate, eliminate_with, is_groebner_basis, normal_form, spoly,
    Elimination,
};
pub use monomial::Monomial;
#[allow(unused_imports)]
pub(crate) use order::dot;
pub use order::{compare, elimination_order, MonomialOrder, WeightMatrix};
pub use poly::{PolyRing, Polynomial};
