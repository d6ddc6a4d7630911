//! Instance builders shared by the property and acceptance suites.
#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pldegree::fixpoint::FixedPointSet;
use pldegree::geom::{build_complex, SimplicialComplex};
use pldegree::plmap::PLMap;
use pldegree::linalg::det as matrix_det;
use pldegree::rational::{dot, int, rat, sub, Point, Rational};
use pldegree::scenarios::random::random_interval_self_map;
use pldegree::scenarios::shapes::{octagon_points, octagon_ring};

/// The eight symmetries of the square, as integer matrices `[a, b, c, d]`.
pub const DIHEDRAL: [[i64; 4]; 8] =
    [[1, 0, 0, 1], [0, -1, 1, 0], [-1, 0, 0, -1], [0, 1, -1, 0], [1, 0, 0, -1], [0, 1, 1, 0], [-1, 0, 0, 1], [0, -1, -1, 0]];

pub fn apply(m: &[i64; 4], p: &[Rational]) -> Point {
    vec![int(m[0]) * &p[0] + int(m[1]) * &p[1], int(m[2]) * &p[0] + int(m[3]) * &p[1]]
}

pub fn det(m: &[i64; 4]) -> i64 {
    m[0] * m[3] - m[1] * m[2]
}

/// A PL homeomorphism of the ringed octagon fixing its boundary: the inner
/// ring is rescaled per vertex and the center nudged.
pub fn ring_homeomorphism(seed: u64) -> PLMap {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let x = octagon_ring();
    let outer = octagon_points();
    let mut images: Vec<Point> = outer.clone();
    for p in &outer {
        let t = rat(r.gen_range(4..=6), 10);
        images.push(p.iter().map(|c| c * &t).collect());
    }
    images.push(vec![rat(r.gen_range(-1..=1), 10), rat(r.gen_range(-1..=1), 10)]);
    PLMap::new(x, 2, images).unwrap()
}

/// `x -> s · M · η(x)` for a square symmetry `M` and a rescaling `s`; an
/// injection of the ringed octagon into itself when `s <= 1`. Returns the
/// map and `det M`.
pub fn ring_injection(seed: u64, s: Rational) -> (PLMap, i64) {
    let eta = ring_homeomorphism(seed);
    let m = DIHEDRAL[(seed % 8) as usize];
    let images = eta.images().iter().map(|p| apply(&m, p).iter().map(|c| c * &s).collect()).collect();
    (PLMap::new(eta.domain().clone(), 2, images).unwrap(), det(&m))
}

/// The inverse of a PL homeomorphism onto its image, on the image triangulation.
pub fn inverse(h: &PLMap) -> PLMap {
    let dom = h.domain();
    let image = build_complex(h.target_dim(), h.images().to_vec(), dom.simplices().to_vec()).unwrap();
    PLMap::new(image, dom.ambient_dim(), dom.vertices().to_vec()).unwrap()
}

/// Simplices of `k` sharing no vertex with simplex `a`.
pub fn disjoint_from(k: &SimplicialComplex, a: usize) -> Vec<usize> {
    (0..k.len()).filter(|&b| k.simplex(b).iter().all(|v| !k.simplex(a).contains(v))).collect()
}

/// Balls symmetric under negating the last coordinate in dimensions 1 to 3,
/// with boundary spheres `[-1, 1]`, the diamond and the octahedron.
pub fn symmetric_ball(n: usize) -> SimplicialComplex {
    match n {
        1 => build_complex(1, vec![vec![int(-1)], vec![int(0)], vec![int(1)]], vec![vec![0, 1], vec![1, 2]]).unwrap(),
        2 => pldegree::scenarios::shapes::octagon_fan(),
        _ => {
            let mut pts = Vec::new();
            for i in 0..3 {
                for s in [1, -1] {
                    let mut p = vec![int(0); 3];
                    p[i] = int(s);
                    pts.push(p);
                }
            }
            pts.push(vec![int(0); 3]);
            let mut simplices = Vec::new();
            for a in [0, 1] {
                for b in [2, 3] {
                    for c in [4, 5] {
                        simplices.push(vec![6, a, b, c]);
                    }
                }
            }
            build_complex(3, pts, simplices).unwrap()
        }
    }
}

/// Independent membership test for a closed simplex of any dimension up to the ambient one.
pub fn in_simplex(pts: &[&[Rational]], p: &[Rational]) -> bool {
    let n = p.len();
    let k = pts.len() - 1;
    let homogeneous = |rows: &[&[Rational]]| -> Rational {
        let m: Vec<Point> = rows.iter().map(|r| std::iter::once(int(1)).chain(r.iter().cloned()).collect()).collect();
        matrix_det(&m)
    };
    match k {
        0 => pts[0] == p,
        _ if k == n => {
            let whole = homogeneous(pts);
            (0..=k).all(|i| {
                let mut rows = pts.to_vec();
                rows[i] = p;
                let part = homogeneous(&rows);
                part.is_zero() || part.is_positive() == whole.is_positive()
            })
        }
        1 => {
            let (d, q) = (sub(pts[1], pts[0]), sub(p, pts[0]));
            let parallel = (0..n).all(|i| (0..n).all(|j| &d[i] * &q[j] == &d[j] * &q[i]));
            let t = dot(&q, &d);
            parallel && !t.is_negative() && t <= dot(&d, &d)
        }
        _ => {
            // a triangle in space: coplanar, then a 2-d test on the best projection
            let (u, v, q) = (sub(pts[1], pts[0]), sub(pts[2], pts[0]), sub(p, pts[0]));
            if !matrix_det(&vec![u.clone(), v.clone(), q]).is_zero() {
                return false;
            }
            let normal = [
                &u[1] * &v[2] - &u[2] * &v[1],
                &u[2] * &v[0] - &u[0] * &v[2],
                &u[0] * &v[1] - &u[1] * &v[0],
            ];
            let drop = (0..3).max_by_key(|&i| normal[i].abs()).unwrap();
            let project = |x: &[Rational]| -> Point { (0..3).filter(|&i| i != drop).map(|i| x[i].clone()).collect() };
            let flat: Vec<Point> = pts.iter().map(|x| project(x)).collect();
            let refs: Vec<&[Rational]> = flat.iter().map(Vec::as_slice).collect();
            in_simplex(&refs, &project(p))
        }
    }
}

pub fn in_complex(k: &SimplicialComplex, p: &[Rational]) -> bool {
    (0..k.len()).any(|i| in_simplex(&k.points_of(i), p))
}

/// Closed intervals `[a, b]` (points when `a == b`), sorted and merged.
pub fn merge(mut v: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    v.sort();
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    for (a, b) in v {
        match out.last_mut() {
            Some(last) if a <= last.1 => {
                if b > last.1 {
                    last.1 = b;
                }
            }
            _ => out.push((a, b)),
        }
    }
    out
}

/// Scans `g(x) = f(x) - x` piece by piece on a map of an interval whose
/// vertices are listed left to right.
pub fn scan_diagonal(f: &PLMap) -> Vec<(Rational, Rational)> {
    let xs: Vec<Rational> = f.domain().vertices().iter().map(|p| p[0].clone()).collect();
    let g: Vec<Rational> = f.images().iter().zip(&xs).map(|(y, x)| &y[0] - x).collect();
    let mut hits = Vec::new();
    for i in 0..xs.len() {
        if g[i].is_zero() {
            hits.push((xs[i].clone(), xs[i].clone()));
        }
    }
    for i in 0..xs.len() - 1 {
        let (g0, g1) = (&g[i], &g[i + 1]);
        if g0.is_zero() && g1.is_zero() {
            hits.push((xs[i].clone(), xs[i + 1].clone()));
        } else if (g0.is_positive() && g1.is_negative()) || (g0.is_negative() && g1.is_positive()) {
            let t = g0 / (g0 - g1);
            let x = &xs[i] + t * (&xs[i + 1] - &xs[i]);
            hits.push((x.clone(), x));
        }
    }
    merge(hits)
}

pub fn as_intervals(fix: &FixedPointSet) -> Vec<(Rational, Rational)> {
    merge(
        fix.components
            .iter()
            .map(|c| {
                let xs: Vec<&Rational> = c.shape.vertices().iter().map(|p| &p[0]).collect();
                let lo = xs.iter().min().unwrap();
                let hi = xs.iter().max().unwrap();
                ((*lo).clone(), (*hi).clone())
            })
            .collect(),
    )
}

/// A random interval self-map; every fifth one has two neighboring vertices
/// pinned to the diagonal so that fixed segments occur.
pub fn interval_map(seed: u64) -> PLMap {
    let f = random_interval_self_map(seed);
    if seed % 5 != 0 {
        return f;
    }
    let j = (seed as usize / 5) % f.domain().len();
    let mut images = f.images().to_vec();
    for v in [j, j + 1] {
        images[v] = f.domain().vertex(v).to_vec();
    }
    PLMap::new(f.domain().clone(), 1, images).unwrap()
}
