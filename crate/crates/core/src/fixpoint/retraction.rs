use num_traits::One;

use super::FixpointError;
use crate::geom::convex::in_simplex;
use crate::geom::{locate_point, SimplicialComplex};
use crate::linalg::{self, Matrix, Solution};
use crate::plmap::{compose_exact, PLMap, PlMapError};
use crate::rational::{add, centroid, int, scale, sub, Point, Rational};

/// A boundary face of `X` together with the functional `ℓ` that equals one on
/// it after translating the center to the origin.
struct SeenFace {
    face: Vec<usize>,
    ell: Point,
}

/// Checks that every boundary face of `x` is seen strictly from inside by
/// `center`; equivalently every ray from `center` leaves `X` exactly once.
fn seen_faces(x: &SimplicialComplex, center: &[Rational]) -> Result<Vec<SeenFace>, FixpointError> {
    let n = x.ambient_dim();
    if x.dim() != n || n == 0 {
        return Err(FixpointError::Geom(crate::geom::GeomError::DimensionTooSmall));
    }
    if !locate_point(x, center).is_inside() {
        return Err(FixpointError::NotStarShaped { face: Vec::new() });
    }
    let mut out = Vec::new();
    for (face, cofaces) in x.facet_map() {
        let [(si, pos)] = cofaces[..] else { continue };
        let pts: Vec<&[Rational]> = face.iter().map(|&v| x.vertex(v)).collect();
        if in_simplex(&pts, center) {
            return Err(FixpointError::CenterOnBoundary);
        }
        let rows: Matrix = pts.iter().map(|p| sub(p, center)).collect();
        let ell = match linalg::solve(&rows, &vec![Rational::one(); n]) {
            Solution::Unique(l) => l,
            _ => return Err(FixpointError::NotStarShaped { face }),
        };
        // the opposite vertex must lie on the center's side: ℓ(w - c) < 1
        let w = x.vertex(x.simplex(si)[pos]);
        let side: Rational = ell.iter().zip(sub(w, center)).map(|(a, b)| a * b).sum();
        if side >= Rational::one() {
            return Err(FixpointError::NotStarShaped { face });
        }
        out.push(SeenFace { face, ell });
    }
    Ok(out)
}

/// Radial retraction onto `X` from `center`, defined on `X` plus a shell out to
/// the cone copy `center + R (∂X - center)` that contains `reach`.
///
/// The shell over each boundary face is a prism cut into simplices by the
/// staircase rule on sorted vertex ids; an outer vertex maps to the boundary
/// vertex it was scaled from. So `β` is the identity on `X`, every point of
/// the prism over a face `F` lands in `F` (the face the ray from the center
/// crosses), and rays through boundary vertices are retracted exactly.
fn star_retraction(x: &SimplicialComplex, center: &[Rational], reach: &[&[Rational]]) -> Result<PLMap, FixpointError> {
    let faces = seen_faces(x, center)?;
    let mut radius = int(2);
    for p in reach {
        for f in &faces {
            let r: Rational = f.ell.iter().zip(sub(p, center)).map(|(a, b)| a * b).sum();
            let need = r.ceil() + int(1);
            if need > radius {
                radius = need;
            }
        }
    }
    let mut vertices: Vec<Point> = x.vertices().to_vec();
    let mut images: Vec<Point> = x.vertices().to_vec();
    let mut outer = vec![None; vertices.len()];
    let mut simplices: Vec<Vec<usize>> = x.simplices().to_vec();
    for f in &faces {
        let mut w = f.face.clone();
        w.sort();
        for &v in &w {
            if outer[v].is_none() {
                vertices.push(add(center, &scale(&sub(x.vertex(v), center), &radius)));
                images.push(x.vertex(v).to_vec());
                outer[v] = Some(vertices.len() - 1);
            }
        }
        for j in 0..w.len() {
            let mut s: Vec<usize> = w[..=j].to_vec();
            s.extend(w[j..].iter().map(|&v| outer[v].expect("outer copy made")));
            simplices.push(s);
        }
    }
    let domain = SimplicialComplex::new(x.ambient_dim(), vertices, simplices)?;
    Ok(PLMap::new(domain, x.ambient_dim(), images)?)
}

/// Radial retraction of a box-like complex `bound ⊇ X` onto the star-shaped `x`.
pub fn build_star_retraction(
    x: &SimplicialComplex,
    center: &[Rational],
    bound: &SimplicialComplex,
) -> Result<PLMap, FixpointError> {
    let reach: Vec<&[Rational]> = bound.used_vertices().into_iter().map(|v| bound.vertex(v)).collect();
    star_retraction(x, center, &reach)
}

/// A retraction whose domain holds the whole image of `f`.
pub fn retraction_for_map(f: &PLMap, center: &[Rational]) -> Result<PLMap, FixpointError> {
    let reach: Vec<&[Rational]> = f.domain().used_vertices().into_iter().map(|v| f.image(v)).collect();
    star_retraction(f.domain(), center, &reach)
}

/// A rational point `x` is star-shaped from: the vertex centroid, else a top simplex barycenter.
pub fn find_star_center(x: &SimplicialComplex) -> Option<Point> {
    let used: Vec<&[Rational]> = x.used_vertices().into_iter().map(|v| x.vertex(v)).collect();
    std::iter::once(centroid(&used))
        .chain((0..x.len()).map(|si| centroid(&x.points_of(si))))
        .find(|c| seen_faces(x, c).is_ok())
}

/// `h = β ∘ f`, a self-map of `X` on an exact common refinement of `X`.
pub fn conjugate_h(f: &PLMap, beta: &PLMap) -> Result<PLMap, PlMapError> {
    compose_exact(beta, f)
}
