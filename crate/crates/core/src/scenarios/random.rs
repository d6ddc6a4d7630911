//! Seeded random PL maps for property tests; identical seeds give identical maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::shapes::{octagon_fan, tetrahedron, unit_interval, unit_square};
use crate::geom::{subdivide_once, SimplicialComplex};
use crate::linalg;
use crate::plmap::PLMap;
use crate::rational::{int, rat, Point, Rational};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit_rational(r: &mut ChaCha8Rng, den: i64) -> Rational {
    rat(r.gen_range(0..=den), den)
}

/// A PL self-map of the once-subdivided unit square with vertex images in the square.
pub fn random_square_self_map(seed: u64) -> PLMap {
    let mut r = rng(seed);
    let x = subdivide_once(&unit_square()).complex;
    let images = (0..x.vertices().len()).map(|_| vec![unit_rational(&mut r, 12), unit_rational(&mut r, 12)]).collect();
    PLMap::new(x, 2, images).expect("one image per vertex")
}

/// A PL self-map of `[0, 1]` on 2 to 6 equal pieces.
pub fn random_interval_self_map(seed: u64) -> PLMap {
    let mut r = rng(seed);
    let pieces = r.gen_range(2..=6);
    let x = unit_interval(pieces);
    let images = (0..x.vertices().len()).map(|_| vec![unit_rational(&mut r, 10)]).collect();
    PLMap::new(x, 1, images).expect("one image per vertex")
}

fn random_invertible(r: &mut ChaCha8Rng, n: usize) -> Vec<Point> {
    loop {
        let m: Vec<Point> = (0..n).map(|_| (0..n).map(|_| int(r.gen_range(-3..=3))).collect()).collect();
        if linalg::det(&m) != int(0) {
            return m;
        }
    }
}

/// The ball on which [`random_injection`] builds its maps in dimension `n`.
pub fn injection_domain(n: usize) -> SimplicialComplex {
    match n {
        1 => unit_interval(4),
        2 => octagon_fan(),
        _ => tetrahedron(),
    }
}

/// A PL injection of [`injection_domain`]`(n)` into `R^n`.
///
/// In dimension 1 the vertex images are strictly monotone; in dimension 2 the
/// fan center is moved to a random interior point before a random invertible
/// linear map is applied; in dimension 3 the map is affine.
pub fn random_injection(seed: u64, n: usize) -> PLMap {
    let mut r = rng(seed);
    let x = injection_domain(n);
    match n {
        1 => {
            let up = r.gen_bool(0.5);
            let mut acc = int(r.gen_range(-3..=3));
            let mut images = Vec::new();
            for _ in 0..x.vertices().len() {
                images.push(vec![acc.clone()]);
                let step = rat(r.gen_range(1..=5), 4);
                acc = if up { acc + step } else { acc - step };
            }
            PLMap::new(x, 1, images).expect("one image per vertex")
        }
        _ => {
            let m = random_invertible(&mut r, n);
            let shift: Point = (0..n).map(|_| rat(r.gen_range(-4..=4), 2)).collect();
            let center: Point = (0..n).map(|_| rat(r.gen_range(-3..=3), 10)).collect();
            let lin = |p: &[Rational]| -> Point { (0..n).map(|i| (0..n).map(|j| &m[i][j] * &p[j]).sum::<Rational>() + &shift[i]).collect() };
            let images = (0..x.vertices().len())
                .map(|v| if n == 2 && v == 8 { lin(&center) } else { lin(x.vertex(v)) })
                .collect();
            PLMap::new(x, n, images).expect("one image per vertex")
        }
    }
}
