//! Exact convex predicates between small point sets.
//!
//! The central primitive is [`meet`]: given two finite point sets it decides
//! whether their convex hulls intersect and, if requested, how much
//! barycentric mass an intersection point can carry on a chosen vertex subset.
//! Embeddedness, injectivity, preimage avoidance and blockading checks are all
//! phrased through it.

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix, Solution};
use crate::lp::{self, LpOutcome};
use crate::rational::{combine, sub, Point, Rational};

/// An intersection witness for `conv(a) ∩ conv(b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Meet {
    /// Optimal value of the mass objective; zero when no objective was given.
    pub margin: Rational,
    pub lambda: Vec<Rational>,
    pub mu: Vec<Rational>,
}

impl Meet {
    pub fn point_a(&self, a: &[&[Rational]]) -> Point {
        combine(&self.lambda, a)
    }

    pub fn is_proper(&self) -> bool {
        self.margin.is_positive()
    }
}

/// Decides whether `conv(a)` and `conv(b)` meet.
///
/// When `za` (resp. `zb`) is given, the returned witness maximizes the
/// smaller of the barycentric masses `sum_{i in za} lambda_i` and
/// `sum_{j in zb} mu_j` over all intersection points. Returns `None` when the
/// hulls are disjoint.
pub fn meet(
    a: &[&[Rational]],
    b: &[&[Rational]],
    za: Option<&[usize]>,
    zb: Option<&[usize]>,
) -> Option<Meet> {
    let ga: Vec<Vec<usize>> = za.into_iter().map(<[usize]>::to_vec).collect();
    let gb: Vec<Vec<usize>> = zb.into_iter().map(<[usize]>::to_vec).collect();
    meet_groups(a, b, &ga, &gb)
}

/// Like [`meet`], maximizing the smallest mass over several index groups.
///
/// One singleton group per vertex of `a` asks for a common point in the
/// relative interior of `conv(a)`.
pub fn meet_groups(a: &[&[Rational]], b: &[&[Rational]], groups_a: &[Vec<usize>], groups_b: &[Vec<usize>]) -> Option<Meet> {
    let p = a.len();
    let q = b.len();
    let dim = a.first().or(b.first()).map_or(0, |x| x.len());
    let ngroups = groups_a.len() + groups_b.len();
    let has_t = ngroups > 0;
    let t_col = p + q;
    let nvars = p + q + usize::from(has_t) + ngroups;
    let zero = Rational::zero;
    let one = Rational::one;

    let mut rows: Matrix = Vec::new();
    let mut rhs = Vec::new();
    for k in 0..dim {
        let mut row = vec![zero(); nvars];
        for i in 0..p {
            row[i] = a[i][k].clone();
        }
        for j in 0..q {
            row[p + j] = -b[j][k].clone();
        }
        rows.push(row);
        rhs.push(zero());
    }
    let mut sum_a = vec![zero(); nvars];
    sum_a[..p].iter_mut().for_each(|x| *x = one());
    rows.push(sum_a);
    rhs.push(one());
    let mut sum_b = vec![zero(); nvars];
    sum_b[p..p + q].iter_mut().for_each(|x| *x = one());
    rows.push(sum_b);
    rhs.push(one());
    let tagged = groups_a.iter().map(|g| (0, g)).chain(groups_b.iter().map(|g| (p, g)));
    for (slack, (offset, group)) in (p + q + 1..).zip(tagged) {
        let mut row = vec![zero(); nvars];
        for &i in group {
            row[offset + i] = one();
        }
        row[t_col] = -one();
        row[slack] = -one();
        rows.push(row);
        rhs.push(zero());
    }
    let mut cost = vec![zero(); nvars];
    if has_t {
        cost[t_col] = one();
    }
    match lp::maximize(&rows, &rhs, &cost) {
        LpOutcome::Optimal { value, x } => Some(Meet {
            margin: value,
            lambda: x[..p].to_vec(),
            mu: x[p..p + q].to_vec(),
        }),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("mass objective is bounded by one"),
    }
}

/// Barycentric coordinates of `x` with respect to affinely independent
/// `simplex` vertices, or `None` when `x` is off their affine span.
pub fn barycentric(simplex: &[&[Rational]], x: &[Rational]) -> Option<Vec<Rational>> {
    let k = simplex.len() - 1;
    let origin = simplex[0];
    let m = x.len();
    let a: Matrix = (0..m)
        .map(|axis| (1..=k).map(|j| &simplex[j][axis] - &origin[axis]).collect())
        .collect();
    let b: Vec<Rational> = (0..m).map(|axis| &x[axis] - &origin[axis]).collect();
    let mu = match linalg::solve(&a, &b) {
        Solution::Unique(v) => v,
        Solution::Many(v) => v,
        Solution::Inconsistent => return None,
    };
    let rest = mu.iter().fold(Rational::one(), |acc, v| acc - v);
    let mut out = Vec::with_capacity(k + 1);
    out.push(rest);
    out.extend(mu);
    Some(out)
}

pub fn in_simplex(simplex: &[&[Rational]], x: &[Rational]) -> bool {
    barycentric(simplex, x).is_some_and(|b| b.iter().all(|v| !v.is_negative()))
}

/// `conv(points) ⊆ simplex`, tested vertex by vertex.
pub fn hull_in_simplex(points: &[&[Rational]], simplex: &[&[Rational]]) -> bool {
    points.iter().all(|p| in_simplex(simplex, p))
}

/// Rank of the affine span of `points` (0 for a single point).
pub fn affine_rank(points: &[&[Rational]]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let m: Matrix = points[1..]
        .iter()
        .map(|p| p.iter().zip(points[0]).map(|(x, y)| x - y).collect())
        .collect();
    linalg::rank(&m)
}

/// Signed volume form of a full-dimensional simplex: `det[v1-v0, ..., vn-v0]`.
pub fn orientation_det(simplex: &[&[Rational]]) -> Rational {
    let m: Matrix = simplex[1..]
        .iter()
        .map(|p| p.iter().zip(simplex[0]).map(|(x, y)| x - y).collect())
        .collect();
    linalg::det(&m)
}

/// A normal vector of the hyperplane through `n` affinely independent points of `R^n`.
pub fn hyperplane_normal(face: &[&[Rational]]) -> Option<Point> {
    let n = face[0].len();
    let rows: Vec<Point> = face[1..].iter().map(|p| sub(p, face[0])).collect();
    // Cofactor expansion: normal_k = (-1)^k det(rows without column k).
    let mut normal = Vec::with_capacity(n);
    for k in 0..n {
        let minor: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, v)| v.clone()).collect()).collect();
        let d = if minor.is_empty() { Rational::from_integer(1.into()) } else { linalg::det(&minor) };
        normal.push(if k % 2 == 0 { d } else { -d });
    }
    if normal.iter().all(Zero::is_zero) {
        None
    } else {
        Some(normal)
    }
}

/// Axis-aligned bounding box used to skip hopeless LP calls.
#[derive(Debug, Clone)]
pub struct BBox {
    pub lo: Point,
    pub hi: Point,
}

impl BBox {
    pub fn of(points: &[&[Rational]]) -> BBox {
        let mut lo = points[0].to_vec();
        let mut hi = points[0].to_vec();
        for p in &points[1..] {
            for (k, x) in p.iter().enumerate() {
                if *x < lo[k] {
                    lo[k] = x.clone();
                }
                if *x > hi[k] {
                    hi[k] = x.clone();
                }
            }
        }
        BBox { lo, hi }
    }

    pub fn overlaps(&self, other: &BBox) -> bool {
        self.lo.iter().zip(&other.hi).all(|(l, h)| l <= h) && other.lo.iter().zip(&self.hi).all(|(l, h)| l <= h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ipoint, point, rat};

    fn refs(v: &[Point]) -> Vec<&[Rational]> {
        v.iter().map(|p| p.as_slice()).collect()
    }

    #[test]
    fn triangles_sharing_an_edge_meet_only_there() {
        let a = vec![ipoint(&[0, 0]), ipoint(&[1, 0]), ipoint(&[0, 1])];
        let b = vec![ipoint(&[1, 0]), ipoint(&[0, 1]), ipoint(&[1, 1])];
        let m = meet(&refs(&a), &refs(&b), Some(&[0]), None).unwrap();
        assert!(!m.is_proper());
    }

    #[test]
    fn overlapping_triangles_are_proper() {
        let a = vec![ipoint(&[0, 0]), ipoint(&[2, 0]), ipoint(&[0, 2])];
        let b = vec![ipoint(&[1, 0]), ipoint(&[3, 0]), ipoint(&[1, 2])];
        let m = meet(&refs(&a), &refs(&b), Some(&[0, 1, 2]), None).unwrap();
        assert!(m.is_proper());
        let x = m.point_a(&refs(&a));
        let y = combine(&m.mu, &refs(&b));
        assert_eq!(x, y);
    }

    #[test]
    fn relative_interior_groups() {
        let seg = vec![ipoint(&[0, 0]), ipoint(&[2, 0])];
        let tri = vec![ipoint(&[2, 0]), ipoint(&[3, 0]), ipoint(&[2, 1])];
        let singles = vec![vec![0], vec![1]];
        // the segment touches the triangle only at its endpoint
        assert!(!meet_groups(&refs(&seg), &refs(&tri), &singles, &[]).unwrap().is_proper());
        let tri2 = vec![ipoint(&[1, -1]), ipoint(&[3, 0]), ipoint(&[1, 1])];
        let m = meet_groups(&refs(&seg), &refs(&tri2), &singles, &[]).unwrap();
        assert_eq!(m.margin, rat(1, 2));
    }

    #[test]
    fn disjoint_segments() {
        let a = vec![ipoint(&[0, 0]), ipoint(&[1, 0])];
        let b = vec![ipoint(&[0, 1]), ipoint(&[1, 1])];
        assert!(meet(&refs(&a), &refs(&b), None, None).is_none());
    }

    #[test]
    fn barycentric_of_centroid() {
        let t = vec![ipoint(&[0, 0]), ipoint(&[1, 0]), ipoint(&[0, 1])];
        let c = point(&[(1, 3), (1, 3)]);
        assert_eq!(barycentric(&refs(&t), &c).unwrap(), vec![rat(1, 3); 3]);
    }

    #[test]
    fn barycentric_off_span_is_none() {
        let seg = vec![ipoint(&[0, 0]), ipoint(&[1, 0])];
        assert!(barycentric(&refs(&seg), &ipoint(&[0, 1])).is_none());
    }
}
