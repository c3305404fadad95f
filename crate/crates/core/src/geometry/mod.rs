//! Quartic families with three-divisible cusp sets: construction, configuration
//! type, cusp candidates, fiber change and the Barth example.

mod barth;
pub mod catalog;
mod config;
pub mod cusps;
mod family;
mod fiber;
pub mod manifest;
mod point;
pub mod solve;
pub mod univariate;

use thiserror::Error;

use crate::poly::PolyError;

pub use barth::{barth_local_determinant, barth_points, barth_quartic, barth_symmetries};
pub use config::{classify_configuration, Configuration};
pub use cusps::{cusp_candidates, cusp_candidates_with, CuspCandidates, Line};
pub use family::{determinantal_quartic, ideal_quadrics, sextic_identity_residual, DivisibleFamily};
pub use fiber::{fiber_change, induced_map, FiberChange};
pub use manifest::{format_manifest, Manifest};
pub use point::ProjectivePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("system is not zero-dimensional")]
    PositiveDimensional,
    #[error("{0} is not a linear form")]
    NotLinear(&'static str),
    #[error("L' and L'' are linearly dependent")]
    DependentForms,
    #[error("the forms L', L'', F', F'' have coefficient rank {0}; they meet along a line")]
    DegenerateConfiguration(usize),
    #[error("R must be a nonzero quadric")]
    BadResidual,
    #[error("S' S'' - S^3 is not divisible by R")]
    InexactDivision,
    #[error("S contains a component of the curve C3")]
    CurveOnSurface,
    #[error("slicing hyperplane passes through the vertex")]
    HyperplaneThroughVertex,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("operation requires a type I configuration")]
    NotTypeI,
    #[error("k must be nonzero")]
    ZeroParameter,
    #[error("manifest line {line}: {msg}")]
    Manifest { line: usize, msg: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}
