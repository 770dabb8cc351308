//! Exact projective geometry of quadrilateral nets: Laplace transforms,
//! Laplace invariants, Kœnigs nets, lifts and constructions of nets whose
//! Laplace sequence terminates.

pub mod construction;
pub mod error;
pub mod invariants;
pub mod lift;
pub mod net;
pub mod projective;
pub mod sample;

pub use error::{Error, Result};
