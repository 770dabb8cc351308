//! Q-nets on finite lattice windows and their Laplace transforms.

mod degeneracy;
mod domain;
mod laplace;
mod qnet;

pub use degeneracy::{classify_degeneracy, DegeneracyKind, DegeneracyReport};
pub use domain::{GridDomain, Site};
pub use laplace::{
    diagonal_intersection_net, explicit_laplace, explicit_laplace_at, laplace_backward,
    laplace_forward, laplace_iterate, Direction, ExplicitLaplace, LaplaceOutcome,
};
pub use qnet::{Axis, QNet, Violation};
