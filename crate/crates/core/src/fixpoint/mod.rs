//! Fixed points: exact per-simplex solving, the radial retraction used to
//! turn a map into a self-map, certificates and a float sampling mode.

mod certify;
mod exact;
mod retraction;
mod sampled;

use thiserror::Error;

use crate::geom::convex::meet;
use crate::geom::GeomError;
use crate::plmap::PlMapError;
use crate::rational::{centroid, Point, Rational};

pub use certify::{applicable_theorems, certify, Certificate, CertificateStatus};
pub use exact::exact_pl_fixed_points;
pub use retraction::{build_star_retraction, conjugate_h, find_star_center, retraction_for_map};
pub use sampled::{pl_evaluator, sampled_residual_search, SampledPoint};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FixpointError {
    #[error("not star-shaped from the center: boundary face {face:?} is not seen from inside")]
    NotStarShaped { face: Vec<usize> },
    #[error("star center lies on the boundary")]
    CenterOnBoundary,
    #[error("no sample reached the residual tolerance; best residual {best:e}")]
    ToleranceNotReached { best: f64 },
    #[error(transparent)]
    Map(#[from] PlMapError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Shape of one connected piece of the fixed-point set inside a top simplex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FixedShape {
    Point(Point),
    Segment(Point, Point),
    /// Convex hull of these vertices, sorted.
    Polytope(Vec<Point>),
}

impl FixedShape {
    fn from_vertices(mut vs: Vec<Point>) -> Option<FixedShape> {
        vs.sort();
        vs.dedup();
        match vs.len() {
            0 => None,
            1 => Some(FixedShape::Point(vs.pop().expect("one vertex"))),
            2 => {
                let b = vs.pop().expect("two vertices");
                Some(FixedShape::Segment(vs.pop().expect("two vertices"), b))
            }
            _ => Some(FixedShape::Polytope(vs)),
        }
    }

    pub fn vertices(&self) -> Vec<&[Rational]> {
        match self {
            FixedShape::Point(p) => vec![p],
            FixedShape::Segment(a, b) => vec![a, b],
            FixedShape::Polytope(vs) => vs.iter().map(Vec::as_slice).collect(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FixedShape::Point(_) => "point",
            FixedShape::Segment(..) => "segment",
            FixedShape::Polytope(_) => "polytope",
        }
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        meet(&[p], &self.vertices(), None, None).is_some()
    }

    /// Vertices, pairwise midpoints and the centroid.
    fn samples(&self) -> Vec<Point> {
        let vs = self.vertices();
        let mut out: Vec<Point> = vs.iter().map(|v| v.to_vec()).collect();
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                out.push(centroid(&[vs[i], vs[j]]));
            }
        }
        if vs.len() > 2 {
            out.push(centroid(&vs));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedComponent {
    /// Top simplex of the map's domain the component was found in.
    pub carrier: usize,
    pub shape: FixedShape,
}

/// A fixed-point set as convex pieces; `exact` is false only for sampled output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointSet {
    pub components: Vec<FixedComponent>,
    pub exact: bool,
}

impl FixedPointSet {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        self.components.iter().any(|c| c.shape.contains(p))
    }

    /// The isolated points, in canonical order.
    pub fn points(&self) -> Vec<&Point> {
        self.components
            .iter()
            .filter_map(|c| match &c.shape {
                FixedShape::Point(p) => Some(p),
                _ => None,
            })
            .collect()
    }

    /// Every component of `other` lies in this set, tested at its vertices,
    /// edge midpoints and centroid.
    pub fn covers(&self, other: &FixedPointSet) -> bool {
        other.components.iter().all(|c| c.shape.samples().iter().all(|p| self.contains(p)))
    }

    /// Mutual [`covers`](Self::covers); exact for sets of isolated points.
    pub fn same_set(&self, other: &FixedPointSet) -> bool {
        self.covers(other) && other.covers(self)
    }
}
