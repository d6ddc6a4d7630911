//! Piecewise-linear maps given by vertex images, affine on every simplex.

mod bijective;
mod classify;
mod overlay;

use std::collections::BTreeMap;

use thiserror::Error;

pub use bijective::{is_bijective_on, Bijectivity, NonBijectiveWitness};
pub(crate) use bijective::injectivity_witness;
pub(crate) use classify::split_cell;
pub use overlay::compose_exact;
pub use classify::{
    classify_against, preimage_subcomplex, classify_with, ClassifiedCell, Preimage, Region, RegionClassification, RegionLabel,
};

use crate::geom::convex::{hull_in_simplex, BBox};
use crate::geom::{locate_point, subdivide_tracked, SimplicialComplex, SubBall, Subdivision};
use crate::rational::{combine, Point, Rational};

pub const DEFAULT_COMPOSE_DEPTH: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlMapError {
    #[error("vertex {0} has no image")]
    MissingVertexImage(usize),
    #[error("image of vertex {vertex} has arity {found}, expected {expected}")]
    ArityMismatch { vertex: usize, expected: usize, found: usize },
    #[error("point lies outside the domain")]
    PointOutsideDomain,
    #[error("simplex {0:?} is not a simplex of the domain")]
    NotSubcomplex(Vec<usize>),
    #[error("image leaves the domain of the outer map")]
    ImageEscapesDomain,
    #[error("images still straddle simplices after {0} refinements")]
    RefinementExhausted(usize),
}

/// A map affine on each simplex of `domain`, determined by vertex images.
///
/// `images` is indexed by vertex id. Vertices unused by the domain's
/// simplices carry placeholder images that are never evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct PLMap {
    domain: SimplicialComplex,
    target_dim: usize,
    images: Vec<Point>,
}

/// Builds a map from a vertex-id table covering every vertex used by `domain`.
pub fn make_pl_map(domain: SimplicialComplex, target_dim: usize, table: &BTreeMap<usize, Point>) -> Result<PLMap, PlMapError> {
    let used = domain.used_vertices();
    if let Some(&v) = used.iter().find(|v| !table.contains_key(v)) {
        return Err(PlMapError::MissingVertexImage(v));
    }
    let filler = vec![Rational::from_integer(0.into()); target_dim];
    let images = (0..domain.vertices().len()).map(|v| table.get(&v).cloned().unwrap_or_else(|| filler.clone())).collect();
    PLMap::new(domain, target_dim, images)
}

impl PLMap {
    pub fn new(domain: SimplicialComplex, target_dim: usize, images: Vec<Point>) -> Result<Self, PlMapError> {
        if images.len() < domain.vertices().len() {
            return Err(PlMapError::MissingVertexImage(images.len()));
        }
        for (vertex, p) in images.iter().enumerate() {
            if p.len() != target_dim {
                return Err(PlMapError::ArityMismatch { vertex, expected: target_dim, found: p.len() });
            }
        }
        Ok(PLMap { domain, target_dim, images })
    }

    pub fn identity(domain: &SimplicialComplex) -> Self {
        PLMap { domain: domain.clone(), target_dim: domain.ambient_dim(), images: domain.vertices().to_vec() }
    }

    /// The map interpolating `g` at the vertices of `domain`.
    pub fn from_vertex_fn(domain: &SimplicialComplex, target_dim: usize, g: impl Fn(&[Rational]) -> Point) -> Self {
        let images = domain.vertices().iter().map(|p| g(p)).collect();
        PLMap { domain: domain.clone(), target_dim, images }
    }

    pub fn domain(&self) -> &SimplicialComplex {
        &self.domain
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn image(&self, vertex: usize) -> &[Rational] {
        &self.images[vertex]
    }

    /// Image vertices of top simplex `i`, in the simplex's vertex order.
    pub fn image_points(&self, i: usize) -> Vec<&[Rational]> {
        self.domain.simplex(i).iter().map(|&v| self.images[v].as_slice()).collect()
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Point, PlMapError> {
        let loc = locate_point(&self.domain, x);
        match (loc.carrier, loc.barycentric) {
            (Some(c), Some(b)) => Ok(combine(&b, &self.image_points(c))),
            _ => Err(PlMapError::PointOutsideDomain),
        }
    }

    /// Evaluates inside a known top simplex from barycentric coordinates.
    pub fn evaluate_in(&self, simplex: usize, lambda: &[Rational]) -> Point {
        combine(lambda, &self.image_points(simplex))
    }

    /// The same map on a replacement domain, leaving the images untouched.
    pub(crate) fn with_domain(&self, domain: SimplicialComplex) -> Self {
        PLMap { domain, target_dim: self.target_dim, images: self.images.clone() }
    }

    /// The same map on the `depth`-fold barycentric subdivision of its domain.
    pub fn subdivide(&self, depth: usize) -> PLMap {
        self.subdivide_tracked(depth).0
    }

    pub fn subdivide_tracked(&self, depth: usize) -> (PLMap, Subdivision) {
        let sub = subdivide_tracked(&self.domain, depth);
        let images = sub
            .complex
            .vertices()
            .iter()
            .enumerate()
            .map(|(v, p)| {
                if v < self.images.len() {
                    self.images[v].clone()
                } else {
                    let carrier = &sub.carrier[v];
                    let face: Vec<&[Rational]> = carrier.iter().map(|&w| self.domain.vertex(w)).collect();
                    let lambda = crate::geom::convex::barycentric(&face, p).expect("vertex lies in its carrier");
                    let imgs: Vec<&[Rational]> = carrier.iter().map(|&w| self.images[w].as_slice()).collect();
                    combine(&lambda, &imgs)
                }
            })
            .collect();
        let map = PLMap { domain: sub.complex.clone(), target_dim: self.target_dim, images };
        (map, sub)
    }

    /// Restriction to a sub-complex on the same vertex ids.
    pub fn restrict_to(&self, sub: &SimplicialComplex) -> Result<PLMap, PlMapError> {
        for s in sub.simplices() {
            let same_coords = s.iter().all(|&v| {
                v < self.domain.vertices().len() && v < sub.vertices().len() && sub.vertex(v) == self.domain.vertex(v)
            });
            if !same_coords || !self.domain.has_face(s) {
                return Err(PlMapError::NotSubcomplex(s.clone()));
            }
        }
        Ok(self.with_domain(sub.clone()))
    }

    pub fn restrict(&self, v: &SubBall) -> Result<PLMap, PlMapError> {
        self.restrict_to(v.complex())
    }
}

/// `g ∘ f`, refining the domain of `f` until every simplex maps into a single
/// simplex of `g`'s domain.
pub fn compose(g: &PLMap, f: &PLMap, refinement_depth: usize) -> Result<PLMap, PlMapError> {
    let gd = g.domain();
    let boxes: Vec<BBox> = (0..gd.len()).map(|i| BBox::of(&gd.points_of(i))).collect();
    for depth in 0..=refinement_depth {
        let fr = f.subdivide(depth);
        if fr.images.iter().enumerate().any(|(v, p)| is_used(&fr, v) && !locate_point(gd, p).is_inside()) {
            return Err(PlMapError::ImageEscapesDomain);
        }
        let mut carriers = Vec::with_capacity(fr.domain.len());
        for si in 0..fr.domain.len() {
            let img = fr.image_points(si);
            let bb = BBox::of(&img);
            let found = (0..gd.len()).find(|&t| boxes[t].overlaps(&bb) && hull_in_simplex(&img, &gd.points_of(t)));
            match found {
                Some(t) => carriers.push(t),
                None => break,
            }
        }
        if carriers.len() < fr.domain.len() {
            continue;
        }
        let mut images = fr.images.clone();
        for (si, &t) in carriers.iter().enumerate() {
            let tp = gd.points_of(t);
            for &v in fr.domain.simplex(si) {
                let lambda = crate::geom::convex::barycentric(&tp, &fr.images[v]).expect("inside carrier");
                images[v] = combine(&lambda, &g.image_points(t));
            }
        }
        return Ok(PLMap { domain: fr.domain, target_dim: g.target_dim, images });
    }
    Err(PlMapError::RefinementExhausted(refinement_depth))
}

fn is_used(f: &PLMap, v: usize) -> bool {
    // Vertices appended by subdivision are always used; original ones may not be.
    v >= f.domain.vertices().len() || f.domain.simplices().iter().any(|s| s.contains(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{build_complex, orient};
    use crate::rational::{int, ipoint, point};

    pub(crate) fn square() -> SimplicialComplex {
        build_complex(
            2,
            vec![ipoint(&[-1, -1]), ipoint(&[1, -1]), ipoint(&[1, 1]), ipoint(&[-1, 1])],
            vec![vec![0, 1, 2], vec![0, 2, 3]],
        )
        .unwrap()
    }

    fn reflect(p: &[Rational]) -> Point {
        vec![p[0].clone(), -p[1].clone()]
    }

    #[test]
    fn identity_and_reflection_evaluate() {
        let k = square();
        let id = PLMap::identity(&k);
        let x = point(&[(1, 2), (1, 3)]);
        assert_eq!(id.evaluate(&x).unwrap(), x);
        let g = PLMap::from_vertex_fn(&k, 2, reflect);
        assert_eq!(g.evaluate(&point(&[(1, 4), (3, 5)])).unwrap(), point(&[(1, 4), (-3, 5)]));
        assert_eq!(id.evaluate(&ipoint(&[2, 0])), Err(PlMapError::PointOutsideDomain));
    }

    #[test]
    fn missing_image_is_reported() {
        let mut table = BTreeMap::new();
        table.insert(0, ipoint(&[0, 0]));
        assert_eq!(make_pl_map(square(), 2, &table), Err(PlMapError::MissingVertexImage(1)));
    }

    #[test]
    fn restriction_rules() {
        let k = square();
        let id = PLMap::identity(&k);
        let tri = k.select(&[0]);
        assert_eq!(id.restrict_to(&tri).unwrap().domain().len(), 1);
        let other = build_complex(2, vec![ipoint(&[0, 0]), ipoint(&[5, 0]), ipoint(&[0, 5])], vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(id.restrict_to(&other), Err(PlMapError::NotSubcomplex(_))));
    }

    #[test]
    fn reflection_composed_with_itself_is_identity() {
        let k = orient(&square()).unwrap();
        let g = PLMap::from_vertex_fn(&k, 2, reflect);
        let gg = compose(&g, &g, 3).unwrap();
        for p in [point(&[(1, 3), (-2, 7)]), point(&[(-9, 10), (1, 10)]), ipoint(&[0, 0])] {
            assert_eq!(gg.evaluate(&p).unwrap(), p);
        }
        let rot = PLMap::from_vertex_fn(&k, 2, |p| vec![-p[0].clone(), -p[1].clone()]);
        let rr = compose(&rot, &rot, 3).unwrap();
        assert_eq!(rr.evaluate(&point(&[(1, 5), (2, 5)])).unwrap(), point(&[(1, 5), (2, 5)]));
    }

    #[test]
    fn escaping_image() {
        let k = square();
        let shift = PLMap::from_vertex_fn(&k, 2, |p| vec![&p[0] + int(10), p[1].clone()]);
        assert_eq!(compose(&PLMap::identity(&k), &shift, 2), Err(PlMapError::ImageEscapesDomain));
    }

    #[test]
    fn subdivided_map_agrees() {
        let k = square();
        let f = PLMap::from_vertex_fn(&k, 2, |p| vec![&p[0] * int(2) + &p[1], p[1].clone()]);
        let fr = f.subdivide(2);
        for p in [point(&[(1, 3), (-2, 7)]), point(&[(-9, 10), (1, 10)])] {
            assert_eq!(fr.evaluate(&p).unwrap(), f.evaluate(&p).unwrap());
        }
    }
}
