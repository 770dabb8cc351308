//! Generators of Q-nets: random nets, BS-Kœnigs completion of boundary
//! strips, and nets whose Laplace sequence terminates after a prescribed
//! number of steps.

mod complete;
mod koenigs;
mod random;
mod terminating;

pub use complete::{validate_boundary, Choices};
pub use koenigs::{extend_bs_koenigs, koenigs_boundary, koenigs_free_sites, random_bs_koenigs};
pub use random::{random_first_laplace_degenerate, random_goursat, random_qnet};
pub use terminating::{
    construct_double_degenerate, construct_double_degenerate_first, double_boundary,
    extend_laplace_degenerate, extend_laplace_degenerate_first, goursat_koenigs, laplace_boundary,
    random_double_boundary, random_double_degenerate_first, random_laplace_boundary,
};
