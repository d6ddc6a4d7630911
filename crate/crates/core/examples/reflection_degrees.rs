//! Degrees of the reflections negating the last coordinate, on symmetric
//! balls and on their boundary spheres in dimensions 1 to 3.

use pldegree::degree::{degree_injective_ball_map, degree_sphere_map, degree_zero_sphere_map, make_reflection};
use pldegree::geom::{boundary_subcomplex, build_complex, orient, SimplicialComplex, SubBall};
use pldegree::rational::int;
use pldegree::scenarios::shapes::octagon_fan;

fn octahedron_ball() -> SimplicialComplex {
    let mut pts = Vec::new();
    for i in 0..3 {
        for s in [1, -1] {
            let mut p = vec![int(0); 3];
            p[i] = int(s);
            pts.push(p);
        }
    }
    pts.push(vec![int(0); 3]);
    let simplices = [0, 1].iter().flat_map(|&a| [2, 3].iter().flat_map(move |&b| [4, 5].iter().map(move |&c| vec![6, a, b, c]))).collect();
    build_complex(3, pts, simplices).unwrap()
}

fn main() {
    let interval = build_complex(1, vec![vec![int(-1)], vec![int(0)], vec![int(1)]], vec![vec![0, 1], vec![1, 2]]).unwrap();
    for (n, ball) in [(1, interval), (2, octagon_fan()), (3, octahedron_ball())] {
        let g = make_reflection(&ball).unwrap();
        let d = degree_injective_ball_map(&g, &SubBall::whole(&ball).unwrap()).unwrap();
        let sphere = orient(&boundary_subcomplex(&ball).unwrap()).unwrap();
        let r = make_reflection(&sphere).unwrap();
        let ds = if n == 1 { degree_zero_sphere_map(&r) } else { degree_sphere_map(&r, &sphere) }.unwrap();
        println!("n = {n}: ball {:>2} ({}), sphere {:>2} ({})", d.value, d.method.name(), ds.value, ds.method.name());
    }
}
