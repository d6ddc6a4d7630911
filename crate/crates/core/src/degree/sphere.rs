use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{Signed, Zero};

use super::{DegreeError, DegreeMethod, DegreeValue};
use crate::geom::convex::{affine_rank, barycentric, hull_in_simplex};
use crate::geom::{boundary_subcomplex, locate_point, orient, orient_like, permutation_parity, SimplicialComplex};
use crate::linalg;
use crate::plmap::{classify_against, PLMap};
use crate::rational::{combine, sign, Point, Rational};

/// Refinement allowed when a boundary restriction is not simplicial.
pub const BOUNDARY_REFINE_DEPTH: usize = 4;

static CROSS_CHECKS: AtomicUsize = AtomicUsize::new(0);

/// Number of sphere-map degrees confirmed by the regular-value count so far.
pub fn cross_checks_performed() -> usize {
    CROSS_CHECKS.load(Ordering::Relaxed)
}

fn oriented_domain(f: &PLMap, t: &SimplicialComplex) -> Result<SimplicialComplex, DegreeError> {
    match f.domain().orientation() {
        Some(_) => Ok(f.domain().clone()),
        None => orient_like(f.domain(), t).map_err(|_| DegreeError::OrientationMissing),
    }
}

/// Lexicographically first top simplex of `t` by sorted vertex ids.
fn first_simplex(t: &SimplicialComplex) -> usize {
    let key = |i: usize| {
        let mut s = t.simplex(i).to_vec();
        s.sort_unstable();
        s
    };
    (0..t.len()).min_by_key(|&i| key(i)).expect("nonempty target")
}

/// Degree of a simplicial map between oriented spheres.
///
/// The fundamental cycle of the domain is pushed forward simplex by simplex;
/// the coefficient it produces is confirmed by a signed count of preimages of
/// the barycenter of the first target simplex. The domain, when unoriented,
/// is oriented compatibly with `t` (it must then refine `t`).
pub fn degree_sphere_map(f: &PLMap, t: &SimplicialComplex) -> Result<DegreeValue, DegreeError> {
    let t_signs = t.orientation().ok_or(DegreeError::OrientationMissing)?;
    if t.is_empty() {
        return Err(DegreeError::Internal("empty target sphere".into()));
    }
    let s = oriented_domain(f, t)?;
    let s_signs = s.orientation().expect("oriented above");
    let by_coords: BTreeMap<&[Rational], usize> = t.used_vertices().into_iter().map(|v| (t.vertex(v), v)).collect();

    let mut coeff = vec![0i64; t.len()];
    for (si, simplex) in s.simplices().iter().enumerate() {
        let ids: Vec<usize> = simplex
            .iter()
            .map(|&v| by_coords.get(f.image(v)).copied().ok_or_else(|| DegreeError::NotSimplicial(format!("vertex {v} does not map to a vertex"))))
            .collect::<Result<_, _>>()?;
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() < ids.len() {
            continue;
        }
        let ti = t
            .find_simplex(&ids)
            .ok_or_else(|| DegreeError::NotSimplicial(format!("simplex {simplex:?} maps onto a non-simplex {ids:?}")))?;
        let target = t.simplex(ti);
        let perm: Vec<usize> = ids.iter().map(|v| target.iter().position(|w| w == v).expect("same vertex set")).collect();
        coeff[ti] += i64::from(s_signs[si] * permutation_parity(&perm) * t_signs[ti]);
    }
    let lambda = coeff[0];
    if coeff.iter().any(|&c| c != lambda) {
        return Err(DegreeError::Internal(format!("pushforward {coeff:?} is not a multiple of the fundamental cycle")));
    }
    let tri = first_simplex(t);
    let y = crate::rational::centroid(&t.points_of(tri));
    let counted = signed_count(f, &s, t, tri, &y)?;
    if counted != lambda {
        return Err(DegreeError::Internal(format!("pushforward gives {lambda}, regular-value count gives {counted}")));
    }
    CROSS_CHECKS.fetch_add(1, Ordering::Relaxed);
    Ok(DegreeValue::new(lambda, DegreeMethod::SphereCyclePushforward, "fundamental cycle pushforward, confirmed by regular-value count"))
}

/// Signed number of preimages of the regular value `y` in target simplex `tri`,
/// or `None` when `y` lies on the image of a lower-dimensional face.
fn try_count(f: &PLMap, s: &SimplicialComplex, t: &SimplicialComplex, tri: usize, y: &[Rational]) -> Option<Result<i64, DegreeError>> {
    let s_signs = s.orientation().expect("oriented");
    let t_signs = t.orientation().expect("oriented");
    let tp = t.points_of(tri);
    let mut total = 0i64;
    for si in 0..s.len() {
        let img: Vec<&[Rational]> = s.simplex(si).iter().map(|&v| f.image(v)).collect();
        if affine_rank(&img) < s.dim() {
            if crate::geom::convex::meet(&img, &[y], None, None).is_some() {
                return None;
            }
            continue;
        }
        let Some(b) = barycentric(&img, y) else {
            continue;
        };
        if b.iter().any(|v| v.is_negative()) {
            continue;
        }
        if b.iter().any(|v| v.is_zero()) {
            return None;
        }
        let rows: Option<linalg::Matrix> = img.iter().map(|p| barycentric(&tp, p)).collect();
        let Some(m) = rows else {
            return Some(Err(DegreeError::Internal("image simplex leaves the target simplex span".into())));
        };
        total += i64::from(sign(&linalg::det(&m))) * i64::from(s_signs[si] * t_signs[tri]);
    }
    Some(Ok(total))
}

fn signed_count(f: &PLMap, s: &SimplicialComplex, t: &SimplicialComplex, tri: usize, y: &[Rational]) -> Result<i64, DegreeError> {
    try_count(f, s, t, tri, y).unwrap_or_else(|| Err(DegreeError::Internal("barycenter is not a regular value".into())))
}

/// Degree by a signed preimage count for maps that are affine into single
/// target simplices but not necessarily simplicial.
pub fn regular_value_degree(f: &PLMap, t: &SimplicialComplex) -> Result<DegreeValue, DegreeError> {
    t.orientation().ok_or(DegreeError::OrientationMissing)?;
    let s = oriented_domain(f, t)?;
    let tri = first_simplex(t);
    let tp = t.points_of(tri);
    let k = tp.len();
    for attempt in 0..12i64 {
        let weights: Vec<Rational> = (0..k as i64).map(|j| Rational::from_integer((1 + (j + 1) * (attempt + 1) % 7).into())).collect();
        let total = weights.iter().fold(Rational::zero(), |a, w| a + w);
        let weights: Vec<Rational> = weights.iter().map(|w| w / &total).collect();
        let y: Point = combine(&weights, &tp);
        if let Some(result) = try_count(f, &s, t, tri, &y) {
            return result.map(|v| DegreeValue::new(v, DegreeMethod::RegularValueCount, "signed preimage count at a regular value"));
        }
    }
    Err(DegreeError::Internal("no regular value found".into()))
}

/// Degree of a bijection of a two-point space: `+1` fixing, `-1` swapping.
pub fn degree_zero_sphere_map(f: &PLMap) -> Result<DegreeValue, DegreeError> {
    let d = f.domain();
    if d.dim() != 0 || d.len() != 2 {
        return Err(DegreeError::NotBijection);
    }
    let (u, v) = (d.simplex(0)[0], d.simplex(1)[0]);
    let (pu, pv) = (d.vertex(u), d.vertex(v));
    let (fu, fv) = (f.image(u), f.image(v));
    if fu == pu && fv == pv {
        Ok(DegreeValue::new(1, DegreeMethod::ZeroSphere, "map fixes both points of the zero-sphere"))
    } else if fu == pv && fv == pu {
        Ok(DegreeValue::new(-1, DegreeMethod::ZeroSphere, "map swaps the two points of the zero-sphere"))
    } else {
        Err(DegreeError::NotBijection)
    }
}

/// Degree of `f: (Y, ∂Y) -> (Y, ∂Y)` read off its boundary restriction.
pub fn degree_relative_ball_map(f: &PLMap, y: &SimplicialComplex) -> Result<DegreeValue, DegreeError> {
    let fy = f.restrict_to(y)?;
    if !classify_against(&fy, y, BOUNDARY_REFINE_DEPTH).all_contained() {
        return Err(DegreeError::BoundaryNotPreserved);
    }
    let by = boundary_subcomplex(&orient(y)?)?;
    let g = fy.restrict_to(&by)?;
    for v in by.used_vertices() {
        if !locate_point(&by, g.image(v)).is_inside() {
            return Err(DegreeError::BoundaryNotPreserved);
        }
    }
    let mut out = if by.dim() == 0 {
        degree_zero_sphere_map(&g).map_err(|_| DegreeError::BoundaryNotPreserved)?
    } else {
        match degree_sphere_map(&g, &by) {
            Ok(d) => d,
            Err(DegreeError::NotSimplicial(_)) => {
                let refined = (0..=BOUNDARY_REFINE_DEPTH)
                    .map(|depth| g.subdivide(depth))
                    .find(|r| (0..r.domain().len()).all(|i| (0..by.len()).any(|b| hull_in_simplex(&r.image_points(i), &by.points_of(b)))))
                    .ok_or(DegreeError::BoundaryNotPreserved)?;
                regular_value_degree(&refined, &by)?
            }
            Err(e) => return Err(e),
        }
    };
    out.method = DegreeMethod::BoundaryRestriction;
    out.provenance = format!("degree of the boundary restriction ({})", out.provenance);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::build_complex;
    use crate::rational::{int, ipoint, rat};

    fn diamond() -> SimplicialComplex {
        let k = build_complex(
            2,
            vec![ipoint(&[1, 0]), ipoint(&[0, 1]), ipoint(&[-1, 0]), ipoint(&[0, -1])],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        orient(&k).unwrap()
    }

    fn disk() -> SimplicialComplex {
        build_complex(
            2,
            vec![ipoint(&[1, 0]), ipoint(&[0, 1]), ipoint(&[-1, 0]), ipoint(&[0, -1]), ipoint(&[0, 0])],
            vec![vec![0, 1, 4], vec![1, 2, 4], vec![2, 3, 4], vec![3, 0, 4]],
        )
        .unwrap()
    }

    #[test]
    fn circle_degrees() {
        let c = diamond();
        assert_eq!(degree_sphere_map(&PLMap::identity(&c), &c).unwrap().value, 1);
        let refl = PLMap::from_vertex_fn(&c, 2, |p| vec![p[0].clone(), -p[1].clone()]);
        assert_eq!(degree_sphere_map(&refl, &c).unwrap().value, -1);
        let constant = PLMap::from_vertex_fn(&c, 2, |_| ipoint(&[1, 0]));
        assert_eq!(degree_sphere_map(&constant, &c).unwrap().value, 0);
        let antipodal = PLMap::from_vertex_fn(&c, 2, |p| vec![-p[0].clone(), -p[1].clone()]);
        assert_eq!(degree_sphere_map(&antipodal, &c).unwrap().value, 1);
    }

    #[test]
    fn non_simplicial_and_unoriented() {
        let c = diamond();
        let half = PLMap::from_vertex_fn(&c, 2, |p| vec![&p[0] * rat(1, 2), &p[1] * rat(1, 2)]);
        assert!(matches!(degree_sphere_map(&half, &c), Err(DegreeError::NotSimplicial(_))));
        let bare = c.without_orientation();
        assert_eq!(degree_sphere_map(&PLMap::identity(&bare), &bare), Err(DegreeError::OrientationMissing));
    }

    #[test]
    fn regular_value_count_matches_on_rotation() {
        let c = diamond();
        let rot = PLMap::from_vertex_fn(&c, 2, |p| vec![-p[1].clone(), p[0].clone()]);
        assert_eq!(regular_value_degree(&rot, &c).unwrap().value, 1);
    }

    #[test]
    fn zero_sphere() {
        let k = build_complex(1, vec![ipoint(&[-1]), ipoint(&[1])], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(degree_zero_sphere_map(&PLMap::identity(&k)).unwrap().value, 1);
        let swap = PLMap::from_vertex_fn(&k, 1, |p| vec![-p[0].clone()]);
        assert_eq!(degree_zero_sphere_map(&swap).unwrap().value, -1);
        let constant = PLMap::from_vertex_fn(&k, 1, |_| vec![int(1)]);
        assert_eq!(degree_zero_sphere_map(&constant), Err(DegreeError::NotBijection));
    }

    #[test]
    fn relative_disk_maps() {
        let y = disk();
        assert_eq!(degree_relative_ball_map(&PLMap::identity(&y), &y).unwrap().value, 1);
        let refl = PLMap::from_vertex_fn(&y, 2, |p| vec![p[0].clone(), -p[1].clone()]);
        let d = degree_relative_ball_map(&refl, &y).unwrap();
        assert_eq!((d.value, d.method), (-1, DegreeMethod::BoundaryRestriction));
        let squeeze = PLMap::from_vertex_fn(&y, 2, |p| vec![&p[0] * rat(1, 2), &p[1] * rat(1, 2)]);
        assert_eq!(degree_relative_ball_map(&squeeze, &y), Err(DegreeError::BoundaryNotPreserved));
    }
}
