//! Laplace invariants, their recurrence and the Kœnigs conditions.

mod field;
mod koenigs;
mod recurrence;
mod shift;
mod symmetry;

pub use field::{apply_projective_map, h_field, k_field, laplace_invariants, InvariantField, Layer};
pub use koenigs::{
    bs_koenigs_violations, conic_sites, conic_violations, d_koenigs_violations,
    diagonal_is_d_koenigs, is_bs_koenigs, is_d_koenigs, six_point_conic_check,
};
pub use recurrence::{backward_recurrence, forward_recurrence, recurrence_layer, recurrence_step};
pub use shift::{hk_shift_check, hk_shift_mismatch, ShiftMismatch};
pub use symmetry::{invariant_symmetry_check, SymmetryCheck, SymmetryIdentity};
