//! Binary and plane cubic forms: classification, invariants, and the model
//! algebras of Gorenstein rings with Hilbert functions `{1,2,2,1}`,
//! `{1,3,3,1}` and `{1,2,2,2,1}`.

mod binary;
mod models;
mod tables;
mod ternary;
mod unipoly;

pub use binary::{binary_discriminant, classify_binary_cubic, BinaryCubicClass};
pub use models::{legendre_model, model_table, ModelRow};
pub use ternary::{
    aronhold_invariants, classify_ternary_cubic, classify_ternary_cubic_seeded, jacobian_colength,
    jacobian_quotient_dimensions, jacobian_scheme_profile, j_invariant, legendre_cubic, legendre_j,
    singular_point_count, AronholdInvariants, TernaryCubicClass, DEFAULT_SEED,
};
pub use unipoly::UniPoly;
