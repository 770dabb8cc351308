//! Extensive lifts and the hyperplane pair of BS-Kœnigs nets.

#[allow(clippy::module_inception)]
mod lift;
mod partial;
mod quadric;

pub use lift::{embed_and_lift, lift, lift_partial, LiftResult, PartialLift};
pub use partial::PartialNet;
pub use quadric::{
    koenigs_hyperplanes, parity_containment, quadric_conjugacy_check, singular_point_checks,
    ConjugacyVerdict, HyperplanePair, SingularityReport,
};
