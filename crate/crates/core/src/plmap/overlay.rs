//! Exact composition by overlaying `f`'s domain with the pullback of `g`'s.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{PLMap, PlMapError};
use crate::geom::convex::{affine_rank, barycentric, BBox};
use crate::geom::polytope::{pulling_triangulation, slice_vertices};
use crate::geom::SimplicialComplex;
use crate::linalg::{self, Matrix};
use crate::rational::{combine, Point, Rational};

/// `g ∘ f` on the common refinement of `f`'s domain by the cells
/// `σ ∩ f⁻¹(τ)`, each triangulated by pulling.
///
/// No search over refinement depths is involved: the cells are computed
/// exactly, so images crossing `g`'s simplex walls at arbitrary rational
/// points are handled. Fails with `ImageEscapesDomain` when some part of
/// `f`'s image misses `g`'s domain.
pub fn compose_exact(g: &PLMap, f: &PLMap) -> Result<PLMap, PlMapError> {
    let fd = f.domain();
    let gd = g.domain();
    let k = fd.dim();
    let gboxes: Vec<BBox> = (0..gd.len()).map(|t| BBox::of(&gd.points_of(t))).collect();
    let mut registry: BTreeMap<Point, usize> = BTreeMap::new();
    let mut points: Vec<Point> = Vec::new();
    let mut images: Vec<Point> = Vec::new();
    let mut simplices: Vec<Vec<usize>> = Vec::new();

    for si in 0..fd.len() {
        let spts = fd.points_of(si);
        let imgs = f.image_points(si);
        let ibox = BBox::of(&imgs);
        let mut seen: Vec<Vec<Point>> = Vec::new();
        let mut covered = Rational::zero();
        for t in 0..gd.len() {
            if !gboxes[t].overlaps(&ibox) {
                continue;
            }
            let tpts = gd.points_of(t);
            // column i holds the barycentric coordinates of f(v_i) in τ
            let cols: Vec<Vec<Rational>> =
                imgs.iter().map(|p| barycentric(&tpts, p).expect("target simplex is full-dimensional")).collect();
            let rows: Matrix = (0..tpts.len()).map(|j| cols.iter().map(|c| c[j].clone()).collect()).collect();
            let verts = slice_vertices(k + 1, &vec![], &rows);
            if verts.len() < k + 1 {
                continue;
            }
            let emb: Vec<Point> = verts.iter().map(|v| combine(&v.lambda, &spts)).collect();
            let refs: Vec<&[Rational]> = emb.iter().map(Vec::as_slice).collect();
            if affine_rank(&refs) != k {
                continue;
            }
            let mut key = emb.clone();
            key.sort();
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            let tight: Vec<Vec<usize>> = verts.iter().map(|v| v.tight.clone()).collect();
            let gimgs = g.image_points(t);
            for cell in pulling_triangulation(&emb, &tight, k) {
                covered += lambda_volume(cell.iter().map(|&c| &verts[c].lambda));
                let ids = cell
                    .iter()
                    .map(|&c| {
                        *registry.entry(emb[c].clone()).or_insert_with(|| {
                            let mu: Vec<Rational> = rows.iter().map(|r| dot(r, &verts[c].lambda)).collect();
                            points.push(emb[c].clone());
                            images.push(combine(&mu, &gimgs));
                            points.len() - 1
                        })
                    })
                    .collect();
                simplices.push(ids);
            }
        }
        if covered != Rational::one() {
            return Err(PlMapError::ImageEscapesDomain);
        }
    }
    let domain = SimplicialComplex::from_parts(fd.ambient_dim(), k, points, simplices, None);
    Ok(PLMap { domain, target_dim: g.target_dim(), images })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Volume of a simplex in barycentric coordinates, normalized so the whole simplex has volume one.
fn lambda_volume<'a>(vs: impl Iterator<Item = &'a Vec<Rational>>) -> Rational {
    let pts: Vec<&Vec<Rational>> = vs.collect();
    let m: Matrix = pts[1..].iter().map(|p| p[1..].iter().zip(&pts[0][1..]).map(|(x, y)| x - y).collect()).collect();
    let d = linalg::det(&m);
    if d < Rational::zero() {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::build_complex;
    use crate::rational::{int, ipoint, point, rat};

    fn square() -> SimplicialComplex {
        build_complex(2, vec![ipoint(&[0, 0]), ipoint(&[1, 0]), ipoint(&[1, 1]), ipoint(&[0, 1])], vec![vec![0, 1, 2], vec![0, 2, 3]])
            .unwrap()
    }

    #[test]
    fn crossing_the_diagonal_is_exact() {
        let x = square();
        let f = PLMap::from_vertex_fn(&x, 2, |p: &[Rational]| vec![(&p[0] + rat(1, 3)) / int(2), (&p[1] + rat(1, 4)) / int(2)]);
        let g = PLMap::from_vertex_fn(&x, 2, |p: &[Rational]| vec![p[1].clone(), p[0].clone() * int(2)]);
        let h = compose_exact(&g, &f).unwrap();
        h.domain().validate().unwrap();
        for probe in [point(&[(1, 3), (1, 7)]), point(&[(1, 2), (1, 2)]), point(&[(9, 10), (1, 5)]), point(&[(0, 1), (1, 1)])] {
            let want = g.evaluate(&f.evaluate(&probe).unwrap()).unwrap();
            assert_eq!(h.evaluate(&probe).unwrap(), want);
        }
    }

    #[test]
    fn escape_is_reported() {
        let x = square();
        let f = PLMap::from_vertex_fn(&x, 2, |p: &[Rational]| vec![&p[0] * int(2), p[1].clone()]);
        assert_eq!(compose_exact(&PLMap::identity(&x), &f), Err(PlMapError::ImageEscapesDomain));
    }

    #[test]
    fn collapsing_map_is_not_duplicated() {
        let x = square();
        let f = PLMap::from_vertex_fn(&x, 2, |_| ipoint(&[0, 0]));
        let h = compose_exact(&PLMap::identity(&x), &f).unwrap();
        assert_eq!(h.domain().len(), 2);
    }
}
