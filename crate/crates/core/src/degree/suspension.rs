use std::collections::BTreeSet;

use num_traits::Zero;

use super::DegreeError;
use crate::geom::{orient, orient_like, SimplicialComplex};
use crate::plmap::PLMap;
use crate::rational::{Point, Rational};

/// Suspensions of a map's domain and target, and the suspended map.
#[derive(Debug, Clone)]
pub struct Suspension {
    pub domain: SimplicialComplex,
    pub target: SimplicialComplex,
    pub map: PLMap,
}

fn cone_points(m: usize) -> (Point, Point) {
    let mut top = vec![Rational::zero(); m + 1];
    let mut bottom = top.clone();
    top[m] = Rational::from_integer(1.into());
    bottom[m] = Rational::from_integer((-1).into());
    (top, bottom)
}

/// Join of an oriented sphere with two cone points `(0, ..., 0, ±1)` one
/// dimension up. Vertex `k` keeps its id; the cone points come last.
fn suspend_complex(k: &SimplicialComplex) -> SimplicialComplex {
    let m = k.ambient_dim();
    let (top, bottom) = cone_points(m);
    let mut vertices: Vec<Point> = k
        .vertices()
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(Rational::zero());
            q
        })
        .collect();
    let (ct, cb) = (vertices.len(), vertices.len() + 1);
    vertices.push(top);
    vertices.push(bottom);
    let mut simplices = Vec::with_capacity(2 * k.len());
    let mut signs = Vec::with_capacity(2 * k.len());
    let eps = k.orientation().expect("oriented before suspension");
    for (s, &e) in k.simplices().iter().zip(eps) {
        let mut up = s.clone();
        up.push(ct);
        let mut down = s.clone();
        down.push(cb);
        simplices.push(up);
        signs.push(e);
        simplices.push(down);
        signs.push(-e);
    }
    let mut out = SimplicialComplex::from_parts(m + 1, k.dim() + 1, vertices, simplices, None);
    out.set_orientation_unchecked(Some(signs));
    out
}

/// `Σf(x, t) = (f(x), t)` on the suspensions of the domain and of `target`.
///
/// Both spheres must surround the origin of their ambient space so that the
/// joins are embedded. An unoriented target is oriented first; an unoriented
/// domain is oriented like the target.
pub fn suspend(f: &PLMap, target: &SimplicialComplex) -> Result<Suspension, DegreeError> {
    let t = match target.orientation() {
        Some(_) => target.clone(),
        None => orient(target)?,
    };
    let s = match f.domain().orientation() {
        Some(_) => f.domain().clone(),
        None => orient_like(f.domain(), &t)?,
    };
    let domain = suspend_complex(&s);
    let target = suspend_complex(&t);
    let m = s.ambient_dim();
    let (top, bottom) = cone_points(m);
    let mut images: Vec<Point> = (0..s.vertices().len())
        .map(|v| {
            let mut q = f.image(v).to_vec();
            q.push(Rational::zero());
            q
        })
        .collect();
    images.push(top);
    images.push(bottom);
    let map = PLMap::new(domain.clone(), m + 1, images)?;
    Ok(Suspension { domain, target, map })
}

/// The reflection negating the last coordinate, on a complex symmetric under it.
pub fn make_reflection(k: &SimplicialComplex) -> Result<PLMap, DegreeError> {
    let flip = |p: &[Rational]| -> Point {
        let mut q = p.to_vec();
        if let Some(last) = q.last_mut() {
            *last = -last.clone();
        }
        q
    };
    let coords: BTreeSet<&[Rational]> = k.used_vertices().into_iter().map(|v| k.vertex(v)).collect();
    if k.used_vertices().into_iter().any(|v| !coords.contains(flip(k.vertex(v)).as_slice())) {
        return Err(DegreeError::NotSymmetric);
    }
    Ok(PLMap::from_vertex_fn(k, k.ambient_dim(), flip))
}
