//! Exact fixed points of random PL self-maps of [0, 1].

use pldegree::fixpoint::exact_pl_fixed_points;
use pldegree::scenarios::random::random_interval_self_map;

fn main() {
    for seed in 0..8 {
        let f = random_interval_self_map(seed);
        let images: Vec<String> = f.images().iter().map(|p| p[0].to_string()).collect();
        let fix = exact_pl_fixed_points(&f);
        let parts: Vec<String> = fix
            .components
            .iter()
            .map(|c| c.shape.vertices().iter().map(|p| p[0].to_string()).collect::<Vec<_>>().join(".."))
            .collect();
        println!("seed {seed}: vertex images [{}] fix {{{}}}", images.join(", "), parts.join(", "));
    }
}
