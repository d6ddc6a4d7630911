//! The degree a scenario's [`DegreeTarget`] names, computed from its parts.

use super::{DegreeTarget, HalfspaceFrame, Scenario};
use crate::degree::{degree_injective_ball_map, degree_relative_ball_map, degree_sphere_map, DegreeError, DegreeValue};
use crate::geom::{SimplicialComplex, SubBall};
use crate::hypotheses::{boundary_degree, BoundaryFrame};
use crate::plmap::PLMap;
use crate::rational::Point;

pub fn scenario_degree(s: &Scenario, target: DegreeTarget) -> Result<DegreeValue, DegreeError> {
    let missing = |what: &str| DegreeError::MissingInput(what.to_string());
    match target {
        DegreeTarget::Injective => match &s.d {
            Some(d) => degree_injective_ball_map(&s.map, d),
            None => degree_injective_ball_map(&s.map, &SubBall::whole(&s.x)?),
        },
        DegreeTarget::Boundary => {
            let y = s.y.as_ref().ok_or_else(|| missing("Y"))?;
            let frame = BoundaryFrame::new(&s.x, y)?;
            boundary_degree(&s.map, &frame)
        }
        DegreeTarget::Sphere => degree_sphere_map(&s.map, s.target.as_ref().ok_or_else(|| missing("target sphere"))?),
        DegreeTarget::Relative => degree_relative_ball_map(&s.map, &s.x),
        DegreeTarget::Face => {
            let e = s.e.as_ref().ok_or_else(|| missing("face ball E"))?;
            degree_injective_ball_map(&face_map(&s.map, e.complex())?, &SubBall::whole(&face_domain(e.complex())?)?)
        }
    }
}

/// `E` with its last coordinate dropped.
fn face_domain(e: &SimplicialComplex) -> Result<SimplicialComplex, DegreeError> {
    let pts: Vec<Point> = e.vertices().iter().map(|p| HalfspaceFrame::p(p)).collect();
    Ok(SimplicialComplex::new(e.ambient_dim() - 1, pts, e.simplices().to_vec())?)
}

/// `p ∘ f|E` as a map of the projected face.
fn face_map(f: &PLMap, e: &SimplicialComplex) -> Result<PLMap, DegreeError> {
    let dom = face_domain(e)?;
    let images = (0..e.vertices().len()).map(|v| HalfspaceFrame::p(f.image(v))).collect();
    Ok(PLMap::new(dom, e.ambient_dim() - 1, images)?)
}

/// Targets with an expected value, or the natural one when none is recorded.
pub fn degree_targets(s: &Scenario) -> Vec<DegreeTarget> {
    let listed: Vec<DegreeTarget> = DegreeTarget::ALL.into_iter().filter(|&t| s.expected_degree(t).is_some()).collect();
    if !listed.is_empty() {
        listed
    } else if s.target.is_some() {
        vec![DegreeTarget::Sphere]
    } else {
        vec![DegreeTarget::Injective]
    }
}
