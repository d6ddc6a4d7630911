//! Fixed rational geometry shared by the generators.

use crate::geom::{build_complex, SimplicialComplex};
use crate::rational::{int, rat, Point, Rational};

/// Coordinate of the diagonal vertices of the rational octagon.
pub fn octagon_a() -> Rational {
    rat(7, 10)
}

/// Boundary vertices `p0..p7` counterclockwise from `(1, 0)`.
pub fn octagon_points() -> Vec<Point> {
    let a = octagon_a();
    let (o, z) = (int(1), int(0));
    vec![
        vec![o.clone(), z.clone()],
        vec![a.clone(), a.clone()],
        vec![z.clone(), o.clone()],
        vec![-a.clone(), a.clone()],
        vec![-o.clone(), z.clone()],
        vec![-a.clone(), -a.clone()],
        vec![z.clone(), -o],
        vec![a.clone(), -a],
    ]
}

/// The octagon coned from the origin (vertex 8).
pub fn octagon_fan() -> SimplicialComplex {
    let mut pts = octagon_points();
    pts.push(vec![int(0), int(0)]);
    let simplices = (0..8).map(|k| vec![8, k, (k + 1) % 8]).collect();
    build_complex(2, pts, simplices).expect("octagon fan is a valid disk")
}

/// The octagon with an inner ring `q_k = p_k / 2` (vertices 8..15) and center 16.
pub fn octagon_ring() -> SimplicialComplex {
    let outer = octagon_points();
    let mut pts = outer.clone();
    pts.extend(outer.iter().map(|p| p.iter().map(|x| x * rat(1, 2)).collect::<Point>()));
    pts.push(vec![int(0), int(0)]);
    let mut simplices = Vec::new();
    for k in 0..8 {
        let k1 = (k + 1) % 8;
        simplices.push(vec![k, k1, 8 + k1]);
        simplices.push(vec![k, 8 + k1, 8 + k]);
    }
    for k in 0..8 {
        simplices.push(vec![16, 8 + k, 8 + (k + 1) % 8]);
    }
    build_complex(2, pts, simplices).expect("ringed octagon is a valid disk")
}

/// The octagon cut into vertical strips at the vertex abscissae.
pub fn octagon_strips() -> SimplicialComplex {
    let simplices = vec![vec![0, 1, 7], vec![1, 2, 6], vec![1, 6, 7], vec![2, 3, 5], vec![2, 5, 6], vec![3, 4, 5]];
    build_complex(2, octagon_points(), simplices).expect("strip octagon is a valid disk")
}

/// Height of the upper octagon arc over `x ∈ [-1, 1]`.
pub fn octagon_height(x: &Rational) -> Rational {
    let a = octagon_a();
    let t = if x < &int(0) { -x.clone() } else { x.clone() };
    if t >= a {
        &a * (int(1) - &t) / (int(1) - &a)
    } else {
        int(1) + (&a - int(1)) * &t / &a
    }
}

/// Upper boundary arc edges of the octagon, from `(1, 0)` to `(-1, 0)`.
pub fn upper_arc() -> Vec<Vec<usize>> {
    (0..4).map(|k| vec![k, k + 1]).collect()
}

/// The diamond `|x| + |y| = 1` with `k` vertices per side, counterclockwise from `(1, 0)`.
pub fn diamond_circle(k: usize) -> SimplicialComplex {
    let corners = [[1i64, 0], [0, 1], [-1, 0], [0, -1]];
    let m = 4 * k;
    let mut pts = Vec::with_capacity(m);
    for j in 0..m {
        let (s, t) = (j / k, rat((j % k) as i64, k as i64));
        let (c0, c1) = (corners[s], corners[(s + 1) % 4]);
        pts.push((0..2).map(|i| int(c0[i]) + &t * int(c1[i] - c0[i])).collect::<Point>());
    }
    let simplices = (0..m).map(|j| vec![j, (j + 1) % m]).collect();
    build_complex(2, pts, simplices).expect("diamond polygon is a valid circle")
}

/// The diamond disk with an inner ring at half scale (vertices 4..7) and center 8.
pub fn diamond_ring_disk() -> SimplicialComplex {
    let corners = [[1i64, 0], [0, 1], [-1, 0], [0, -1]];
    let mut pts: Vec<Point> = corners.iter().map(|c| vec![int(c[0]), int(c[1])]).collect();
    pts.extend(corners.iter().map(|c| vec![rat(c[0], 2), rat(c[1], 2)]));
    pts.push(vec![int(0), int(0)]);
    let mut simplices = Vec::new();
    for k in 0..4 {
        let k1 = (k + 1) % 4;
        simplices.push(vec![k, k1, 4 + k1]);
        simplices.push(vec![k, 4 + k1, 4 + k]);
        simplices.push(vec![8, 4 + k, 4 + k1]);
    }
    build_complex(2, pts, simplices).expect("ringed diamond is a valid disk")
}

/// `[0, 1]^2` split along the diagonal.
pub fn unit_square() -> SimplicialComplex {
    let pts = vec![vec![int(0), int(0)], vec![int(1), int(0)], vec![int(1), int(1)], vec![int(0), int(1)]];
    build_complex(2, pts, vec![vec![0, 1, 2], vec![0, 2, 3]]).expect("unit square")
}

/// `[0, 1]` cut into `pieces` equal segments.
pub fn unit_interval(pieces: usize) -> SimplicialComplex {
    let pts = (0..=pieces).map(|i| vec![rat(i as i64, pieces as i64)]).collect();
    build_complex(1, pts, (0..pieces).map(|i| vec![i, i + 1]).collect()).expect("unit interval")
}

/// The standard 3-simplex.
pub fn tetrahedron() -> SimplicialComplex {
    let pts = vec![
        vec![int(0), int(0), int(0)],
        vec![int(1), int(0), int(0)],
        vec![int(0), int(1), int(0)],
        vec![int(0), int(0), int(1)],
    ];
    build_complex(3, pts, vec![vec![0, 1, 2, 3]]).expect("tetrahedron")
}
