//! Suspending circle maps onto the 2-sphere keeps their degree.

use pldegree::degree::{degree_sphere_map, suspend};
use pldegree::scenarios::gen_degree_d_circle_map;

fn main() {
    for d in -2..=2 {
        let s = gen_degree_d_circle_map(d).unwrap();
        let sus = suspend(&s.map, s.target.as_ref().unwrap()).unwrap();
        let deg = degree_sphere_map(&sus.map, &sus.target).unwrap();
        println!(
            "degree {d:>2}: suspension has {} triangles over a {}-triangle sphere, degree {:>2}",
            sus.domain.len(),
            sus.target.len(),
            deg.value
        );
    }
}
