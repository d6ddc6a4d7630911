//! Degrees of sphere maps, relative ball maps, injective ball maps and
//! injections into spheres, with suspension and reflection generators.

mod injective;
mod sphere;
mod suspension;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use injective::{degree_injective_ball_map, degree_injective_on, degree_sphere_injection};
pub use sphere::{
    cross_checks_performed, degree_relative_ball_map, degree_sphere_map, degree_zero_sphere_map, regular_value_degree,
    BOUNDARY_REFINE_DEPTH,
};
pub use suspension::{make_reflection, suspend, Suspension};

use crate::geom::GeomError;
use crate::plmap::{NonBijectiveWitness, PlMapError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegreeMethod {
    SphereCyclePushforward,
    RegularValueCount,
    BoundaryRestriction,
    OrientationSign,
    SphereInjection,
    ZeroSphere,
}

impl DegreeMethod {
    pub fn name(self) -> &'static str {
        match self {
            DegreeMethod::SphereCyclePushforward => "SphereCyclePushforward",
            DegreeMethod::RegularValueCount => "RegularValueCount",
            DegreeMethod::BoundaryRestriction => "BoundaryRestriction",
            DegreeMethod::OrientationSign => "OrientationSign",
            DegreeMethod::SphereInjection => "SphereInjection",
            DegreeMethod::ZeroSphere => "ZeroSphere",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeValue {
    pub value: i64,
    pub method: DegreeMethod,
    pub provenance: String,
}

impl DegreeValue {
    fn new(value: i64, method: DegreeMethod, provenance: impl Into<String>) -> Self {
        DegreeValue { value, method, provenance: provenance.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DegreeError {
    #[error("target complex carries no orientation")]
    OrientationMissing,
    #[error("map is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("map on the two-point space is not a bijection")]
    NotBijection,
    #[error("map does not preserve the boundary")]
    BoundaryNotPreserved,
    #[error("map is not injective")]
    NotInjective(NonBijectiveWitness),
    #[error("orientation signs disagree between simplices")]
    InconsistentSigns,
    #[error("no sub-ball leaves room on the sphere")]
    NoRoomOnSphere,
    #[error("degree depends on the choice of sub-ball: {first} vs {second}")]
    ChoiceDisagreement { first: i64, second: i64 },
    #[error("complex is not symmetric under negating the last axis")]
    NotSymmetric,
    #[error("domain must be full-dimensional in the target space")]
    NotFullDimensional,
    #[error("scenario has no {0}")]
    MissingInput(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Map(#[from] PlMapError),
}
