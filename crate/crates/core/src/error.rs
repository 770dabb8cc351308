use crate::net::{DegeneracyReport, Site, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected ambient dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero vector does not represent a projective point")]
    ZeroVector,

    #[error("points are not collinear")]
    NotCollinear,

    #[error("points are not coplanar")]
    NotCoplanar,

    #[error("ratio is undefined (0/0)")]
    UndefinedRatio,

    #[error("projection undefined: point lies in the center")]
    ProjectionUndefined,

    #[error("center and screen are not supplementary")]
    NotSupplementary,

    #[error("{context}: expected a single point, got a subspace of projective dimension {dim}")]
    NotAPoint { context: String, dim: isize },

    #[error("net is not a non-degenerate Q-net ({} violation(s), first: {:?})", violations.len(), violations.first())]
    Degenerate { violations: Vec<Violation> },

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("site {0:?} is outside the domain")]
    OutOfRange(Site),

    #[error("Laplace sequence terminated at step {step}: {report:?}")]
    Terminated { step: i64, report: DegeneracyReport },

    #[error("recurrence is singular at site {0:?}")]
    RecurrenceSingular(Site),

    #[error("missing invariant value at site {0:?}")]
    MissingValue(Site),

    #[error("infinite Laplace invariant on the {edge} edge at {site:?}")]
    InfiniteInvariant { edge: char, site: Site },

    #[error("not a BS-Koenigs net: {0}")]
    NotKoenigs(String),

    #[error("general position not reached after {attempts} attempts: {context}")]
    GeneralPosition { attempts: usize, context: String },

    #[error("construction failed at {step} (site {site:?}): {reason}")]
    Construction {
        step: String,
        site: Site,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
