//! Gorenstein algebras of socle degree three: non-degeneracy, canonical
//! grading, the `{1, m, n, 1}` normal form and isomorphism certificates.

mod aut;
mod grading;
mod iso;
mod normal;

pub use aut::{
    aut_matrix, solve_unit, unit_matrix, witness_image, witness_product, AutMap, IsoWitness,
    Substitution, WitnessDocument,
};
pub use grading::{delta_matrix, grading_system, is_nondegenerate, reduce_to_f2f3, DeltaMatrix, GradingSystem};
pub use iso::{iso_socle3, verify_iso, verify_matrix_identity, IsoDecision};
pub use normal::{canonical_grading_witness, normalize_socle3, NormalForm};
