//! Small exact polytopes cut out of a simplex by affine constraints.
//!
//! A slice is `{λ : λ_i ≥ 0, Σλ = 1, E λ = 0, G λ ≥ 0}` in barycentric
//! coordinates of a fixed simplex. Every constraint row is homogeneous, which
//! is enough because `Σλ = 1` lets affine conditions be written linearly.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix, Solution};
use crate::rational::{cmp_points, combine, Point, Rational};

/// A vertex of a slice with the inequality rows tight at it.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceVertex {
    pub lambda: Vec<Rational>,
    pub tight: Vec<usize>,
}

/// Vertices of the slice, in the order first found.
///
/// Inequality rows are numbered `0..m` for `λ_i ≥ 0` followed by the rows of `g`.
pub fn slice_vertices(m: usize, eq: &Matrix, g: &Matrix) -> Vec<SliceVertex> {
    let mut base: Matrix = vec![vec![Rational::one(); m]];
    base.extend(eq.iter().cloned());
    let mut rhs = vec![Rational::zero(); base.len()];
    rhs[0] = Rational::one();
    let ineq: Matrix = (0..m).map(|i| unit(m, i)).chain(g.iter().cloned()).collect();
    let free = m.saturating_sub(linalg::rank(&base));
    let mut out: Vec<SliceVertex> = Vec::new();
    for subset in subsets(ineq.len(), free) {
        let mut a = base.clone();
        a.extend(subset.iter().map(|&r| ineq[r].clone()));
        let mut b = rhs.clone();
        b.extend(std::iter::repeat(Rational::zero()).take(subset.len()));
        let Solution::Unique(lambda) = linalg::solve(&a, &b) else { continue };
        let values: Vec<Rational> = ineq.iter().map(|row| dot(row, &lambda)).collect();
        if values.iter().any(Signed::is_negative) {
            continue;
        }
        if out.iter().any(|v| v.lambda == lambda) {
            continue;
        }
        let tight = (0..ineq.len()).filter(|&r| values[r].is_zero()).collect();
        out.push(SliceVertex { lambda, tight });
    }
    out
}

fn unit(m: usize, i: usize) -> Vec<Rational> {
    (0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Embeds slice vertices in space using the simplex vertex coordinates.
pub fn embed(vertices: &[SliceVertex], simplex: &[&[Rational]]) -> Vec<Point> {
    vertices.iter().map(|v| combine(&v.lambda, simplex)).collect()
}

/// Triangulates a polytope by pulling its smallest vertex, recursively.
///
/// `points` are the polytope's vertices, `tight[v]` lists the constraint rows
/// active at vertex `v`, and `dim` is the polytope's dimension. Vertices are
/// ordered by coordinates, so polytopes sharing a face triangulate it the same
/// way and the union of several such triangulations is a simplicial complex.
pub fn pulling_triangulation(points: &[Point], tight: &[Vec<usize>], dim: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..points.len()).collect();
    let mut memo = BTreeMap::new();
    pull(points, tight, &all, dim, &mut memo)
}

fn pull(
    points: &[Point],
    tight: &[Vec<usize>],
    face: &[usize],
    dim: usize,
    memo: &mut BTreeMap<Vec<usize>, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(done) = memo.get(face) {
        return done.clone();
    }
    let apex = *face.iter().min_by(|&&a, &&b| cmp_points(&points[a], &points[b])).expect("nonempty face");
    let result = if dim == 0 {
        vec![vec![apex]]
    } else {
        let mut facets: Vec<Vec<usize>> = Vec::new();
        let rows: std::collections::BTreeSet<usize> = face.iter().flat_map(|&v| tight[v].iter().copied()).collect();
        for r in rows {
            let sub: Vec<usize> = face.iter().copied().filter(|&v| tight[v].contains(&r)).collect();
            if sub.len() == face.len() || sub.contains(&apex) || facets.contains(&sub) {
                continue;
            }
            let pts: Vec<&[Rational]> = sub.iter().map(|&v| points[v].as_slice()).collect();
            if crate::geom::convex::affine_rank(&pts) == dim - 1 {
                facets.push(sub);
            }
        }
        let mut out = Vec::new();
        for f in facets {
            for mut s in pull(points, tight, &f, dim - 1, memo) {
                s.push(apex);
                out.push(s);
            }
        }
        out
    };
    memo.insert(face.to_vec(), result.clone());
    result
}

/// Unsigned volume of a full-dimensional simplex times `dim!`.
pub fn scaled_volume(simplex: &[&[Rational]]) -> Rational {
    crate::geom::convex::orientation_det(simplex).abs()
}
