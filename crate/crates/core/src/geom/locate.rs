use num_traits::{Signed, Zero};

use super::convex::{barycentric, BBox};
use super::SimplicialComplex;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocationKind {
    InteriorOfTopSimplex,
    OnFace,
    Outside,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointLocation {
    pub kind: LocationKind,
    pub carrier: Option<usize>,
    pub barycentric: Option<Vec<Rational>>,
}

impl PointLocation {
    pub fn outside() -> Self {
        PointLocation { kind: LocationKind::Outside, carrier: None, barycentric: None }
    }

    pub fn is_inside(&self) -> bool {
        self.kind != LocationKind::Outside
    }
}

/// Exact point location; reports the first top simplex (by index) containing `x`.
pub fn locate_point(k: &SimplicialComplex, x: &[Rational]) -> PointLocation {
    let probe = BBox::of(&[x]);
    for si in 0..k.len() {
        let pts = k.points_of(si);
        if !BBox::of(&pts).overlaps(&probe) {
            continue;
        }
        let Some(b) = barycentric(&pts, x) else {
            continue;
        };
        if b.iter().any(|v| v.is_negative()) {
            continue;
        }
        let kind = if b.iter().any(|v| v.is_zero()) {
            LocationKind::OnFace
        } else {
            LocationKind::InteriorOfTopSimplex
        };
        return PointLocation { kind, carrier: Some(si), barycentric: Some(b) };
    }
    PointLocation::outside()
}
