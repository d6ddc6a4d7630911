//! Exact simplicial-complex kernel: construction, orientation, boundaries,
//! barycentric subdivision, point location and certified sub-balls.

mod ball;
mod complex;
pub mod convex;
mod locate;
pub mod polytope;
mod subdivide;

use thiserror::Error;

pub use ball::{BallCertificate, SubBall};
pub use complex::{boundary_subcomplex, build_complex, orient, permutation_parity, FacetMap, SimplicialComplex};
pub use locate::{locate_point, LocationKind, PointLocation};
pub use subdivide::{barycentric_subdivide, orient_like, permutations, subdivide_once, subdivide_tracked, Subdivision};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("complex has no simplices")]
    Empty,
    #[error("vertex index {index} out of range (have {len} vertices)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected arity {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("simplex {simplex} repeats a vertex")]
    RepeatedVertex { simplex: usize },
    #[error("simplex {simplex} is degenerate")]
    DegenerateSimplex { simplex: usize },
    #[error("face {face:?} lies in three or more top simplices")]
    NonManifoldFace { face: Vec<usize> },
    #[error("simplices {first} and {second} intersect outside a shared face")]
    ImproperIntersection { first: usize, second: usize },
    #[error("simplex dimension {dim} exceeds ambient dimension {ambient}")]
    DimensionTooLarge { dim: usize, ambient: usize },
    #[error("complex is not connected through codimension-one faces")]
    NotConnected,
    #[error("complex admits no coherent orientation")]
    NotOrientableInput,
    #[error("orientation is not coherent across face {face:?}")]
    IncoherentOrientation { face: Vec<usize> },
    #[error("simplex {0:?} is not a simplex of the parent complex")]
    NotSubcomplex(Vec<usize>),
    #[error("sub-complex is not a PL ball: {0}")]
    NotABall(String),
    #[error("operation needs dimension at least one")]
    DimensionTooSmall,
}
