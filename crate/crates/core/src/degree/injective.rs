use num_traits::{Signed, Zero};

use super::{DegreeError, DegreeMethod, DegreeValue};
use crate::geom::convex::{barycentric, hull_in_simplex, orientation_det};
use crate::geom::{locate_point, SimplicialComplex, SubBall};
use crate::plmap::{injectivity_witness, split_cell, PLMap};
use crate::rational::{centroid, combine, dot, sign, sub, Point, Rational};

/// Degree of an injective map on a full-dimensional ball in `R^n`.
///
/// Every simplex contributes the sign of the determinant of the map on it
/// relative to its own orientation; the signs must all agree.
pub fn degree_injective_ball_map(h: &PLMap, v: &SubBall) -> Result<DegreeValue, DegreeError> {
    degree_injective_on(h, v.complex().simplices())
}

/// [`degree_injective_ball_map`] on an explicit list of domain simplices.
pub fn degree_injective_on(h: &PLMap, simplices: &[Vec<usize>]) -> Result<DegreeValue, DegreeError> {
    let dom = h.domain();
    let n = h.target_dim();
    if dom.ambient_dim() != n || simplices.iter().any(|s| s.len() != n + 1) || simplices.is_empty() {
        return Err(DegreeError::NotFullDimensional);
    }
    if let Some(w) = injectivity_witness(h, simplices) {
        return Err(DegreeError::NotInjective(w));
    }
    let mut common = 0;
    for s in simplices {
        let pts: Vec<&[Rational]> = s.iter().map(|&v| dom.vertex(v)).collect();
        let img: Vec<&[Rational]> = s.iter().map(|&v| h.image(v)).collect();
        let e = sign(&orientation_det(&img)) * sign(&orientation_det(&pts));
        if common == 0 {
            common = e;
        } else if e != common {
            return Err(DegreeError::InconsistentSigns);
        }
    }
    Ok(DegreeValue::new(i64::from(common), DegreeMethod::OrientationSign, "orientation sign of the injective map"))
}

/// Degree of an injection `h: V -> S` of a ball into a sphere.
///
/// A small ball `D` (a refined piece of `V`) is chosen together with a
/// hemisphere `Y` containing `D ∪ h(D)` that projects injectively to a
/// coordinate hyperplane; the degree is the orientation sign in that chart.
/// Two different choices are computed and must agree.
pub fn degree_sphere_injection(h: &PLMap, v: &SubBall, s: &SimplicialComplex) -> Result<DegreeValue, DegreeError> {
    let dom = h.domain();
    let n = v.dim();
    if s.dim() != n || s.ambient_dim() != n + 1 || h.target_dim() != n + 1 {
        return Err(DegreeError::NotFullDimensional);
    }
    if let Some(w) = injectivity_witness(h, v.complex().simplices()) {
        return Err(DegreeError::NotInjective(w));
    }
    if v.vertex_set().iter().any(|&x| !locate_point(s, h.image(x)).is_inside()) {
        return Err(DegreeError::Internal("image leaves the sphere".into()));
    }
    let used = s.used_vertices();
    let pts: Vec<&[Rational]> = used.iter().map(|&x| s.vertex(x)).collect();
    let center = centroid(&pts);
    let normals: Vec<Point> = (0..s.len())
        .map(|i| {
            let face = s.points_of(i);
            let nrm = crate::geom::convex::hyperplane_normal(&face).expect("facet is nondegenerate");
            if dot(&nrm, &sub(face[0], &center)).is_negative() {
                nrm.iter().map(|x| -x).collect()
            } else {
                nrm
            }
        })
        .collect();
    let mut charts: Vec<Option<bool>> = vec![None; 2 * (n + 1)];
    let mut choices: Vec<i64> = Vec::new();
    'depth: for depth in 0..=3usize {
        for simplex in v.complex().simplices() {
            let dpts: Vec<&[Rational]> = simplex.iter().map(|&x| dom.vertex(x)).collect();
            let ipts: Vec<&[Rational]> = simplex.iter().map(|&x| h.image(x)).collect();
            for cell in refine_cells(n + 1, depth) {
                let cd: Vec<Point> = cell.iter().map(|l| combine(l, &dpts)).collect();
                let ci: Vec<Point> = cell.iter().map(|l| combine(l, &ipts)).collect();
                let (Some(a), Some(b)) = (facet_holding(s, &cd), facet_holding(s, &ci)) else {
                    continue;
                };
                for axis in 0..=n {
                    for (slot, up) in [(2 * axis, true), (2 * axis + 1, false)] {
                        let side = |i: usize| if up { normals[i][axis].is_positive() } else { normals[i][axis].is_negative() };
                        if !side(a) || !side(b) {
                            continue;
                        }
                        let ok = *charts[slot].get_or_insert_with(|| chart_is_injective(s, &normals, axis, up));
                        if !ok {
                            continue;
                        }
                        let d = chart_sign(&cd, axis) * chart_sign(&ci, axis);
                        if d != 0 {
                            choices.push(i64::from(d));
                        }
                        if choices.len() >= 2 {
                            break 'depth;
                        }
                    }
                }
            }
        }
    }
    if choices.len() < 2 {
        schlegel_choices(h, v, s, &normals, &mut choices);
    }
    match choices[..] {
        [] => Err(DegreeError::NoRoomOnSphere),
        [only] => Ok(DegreeValue::new(only, DegreeMethod::SphereInjection, "orientation sign in a hemisphere chart")),
        [first, second, ..] if first != second => Err(DegreeError::ChoiceDisagreement { first, second }),
        [first, ..] => Ok(DegreeValue::new(first, DegreeMethod::SphereInjection, "orientation sign in a hemisphere chart, two choices agree")),
    }
}

/// Charts of a convex sphere minus one open face `F` (the facets spanning one
/// hyperplane): every vertex is projected onto that hyperplane from a point
/// just beyond it. The vertex-defined map is the Schlegel diagram, injective
/// off `int F`, so any cell pair missing `F` gives an orientation sign. Used when no hemisphere
/// holds both a piece of `V` and its image, as for antipodal maps.
fn schlegel_choices(h: &PLMap, v: &SubBall, s: &SimplicialComplex, normals: &[Point], choices: &mut Vec<i64>) {
    let used = s.used_vertices();
    let level = |i: usize| dot(&normals[i], s.points_of(i)[0]);
    let convex = (0..s.len()).all(|i| used.iter().all(|&x| dot(&normals[i], s.vertex(x)) <= level(i)));
    if !convex {
        return;
    }
    let center = centroid(&used.iter().map(|&x| s.vertex(x)).collect::<Vec<_>>());
    let dom = h.domain();
    let n = v.dim();
    let unit = Rational::from_integer(1.into());
    for f in 0..s.len() {
        let face: Vec<usize> = (0..s.len()).filter(|&i| s.points_of(i).iter().all(|p| dot(&normals[f], p) == level(f))).collect();
        if face.iter().any(|&i| i < f) {
            continue;
        }
        let fc = centroid(&face.iter().flat_map(|&i| s.points_of(i)).collect::<Vec<_>>());
        let out = sub(&fc, &center);
        let mut delta = unit.clone();
        let eye = loop {
            let z: Point = fc.iter().zip(&out).map(|(a, b)| a + b * &delta).collect();
            if (0..s.len()).all(|i| face.contains(&i) || dot(&normals[i], &z) < level(i)) {
                break Some(z);
            }
            delta /= Rational::from_integer(2.into());
            if delta < Rational::new(1.into(), 1024.into()) {
                break None;
            }
        };
        let Some(z) = eye else { continue };
        let (lf, nz) = (level(f), dot(&normals[f], &z));
        let projected: Vec<Point> = s
            .vertices()
            .iter()
            .map(|p| {
                let t = (&lf - &nz) / (dot(&normals[f], p) - &nz);
                z.iter().zip(p).map(|(a, b)| a + (b - a) * &t).collect()
            })
            .collect();
        let axis = (0..=n).find(|&a| !normals[f][a].is_zero()).expect("nonzero normal");
        let chart = |pts: &[Point], facet: usize| -> Option<i32> {
            let tp = s.points_of(facet);
            let corners: Vec<&[Rational]> = s.simplex(facet).iter().map(|&x| projected[x].as_slice()).collect();
            let mapped: Option<Vec<Point>> = pts.iter().map(|p| barycentric(&tp, p).map(|b| drop_axis(&combine(&b, &corners), axis))).collect();
            let mapped = mapped?;
            let refs: Vec<&[Rational]> = mapped.iter().map(Vec::as_slice).collect();
            Some(sign(&orientation_det(&refs)))
        };
        for depth in 0..=2usize {
            for simplex in v.complex().simplices() {
                let dpts: Vec<&[Rational]> = simplex.iter().map(|&x| dom.vertex(x)).collect();
                let ipts: Vec<&[Rational]> = simplex.iter().map(|&x| h.image(x)).collect();
                for cell in refine_cells(n + 1, depth) {
                    let cd: Vec<Point> = cell.iter().map(|l| combine(l, &dpts)).collect();
                    let ci: Vec<Point> = cell.iter().map(|l| combine(l, &ipts)).collect();
                    let (Some(a), Some(b)) = (facet_holding(s, &cd), facet_holding(s, &ci)) else {
                        continue;
                    };
                    if face.contains(&a) || face.contains(&b) {
                        continue;
                    }
                    if let (Some(x), Some(y)) = (chart(&cd, a), chart(&ci, b)) {
                        if x * y != 0 {
                            choices.push(i64::from(x * y));
                            if choices.len() >= 2 {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Barycentric rows of the cells of the `depth`-fold split of a simplex with `k` vertices.
fn refine_cells(k: usize, depth: usize) -> Vec<Vec<Point>> {
    let unit: Vec<Point> = (0..k)
        .map(|i| (0..k).map(|j| Rational::from_integer(i64::from(i == j).into())).collect())
        .collect();
    let mut cells = vec![unit];
    for _ in 0..depth {
        cells = cells.iter().flat_map(|c| split_cell(c)).collect();
    }
    cells
}

fn facet_holding(s: &SimplicialComplex, pts: &[Point]) -> Option<usize> {
    let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
    (0..s.len()).find(|&i| hull_in_simplex(&refs, &s.points_of(i)))
}

fn drop_axis(p: &[Rational], axis: usize) -> Point {
    p.iter().enumerate().filter(|&(j, _)| j != axis).map(|(_, x)| x.clone()).collect()
}

fn chart_sign(pts: &[Point], axis: usize) -> i32 {
    let projected: Vec<Point> = pts.iter().map(|p| drop_axis(p, axis)).collect();
    let refs: Vec<&[Rational]> = projected.iter().map(Vec::as_slice).collect();
    sign(&orientation_det(&refs))
}

/// The facets facing one way along `axis` project injectively once that axis is dropped.
fn chart_is_injective(s: &SimplicialComplex, normals: &[Point], axis: usize, up: bool) -> bool {
    let hemisphere: Vec<Vec<usize>> = (0..s.len())
        .filter(|&i| if up { normals[i][axis].is_positive() } else { normals[i][axis].is_negative() })
        .map(|i| s.simplex(i).to_vec())
        .collect();
    if hemisphere.is_empty() || hemisphere.len() == s.len() {
        return false;
    }
    let chart = PLMap::from_vertex_fn(s, s.ambient_dim() - 1, |p| drop_axis(p, axis));
    injectivity_witness(&chart, &hemisphere).is_none()
}
