//! The star retraction onto X and the conjugated map h = β∘f: h stays in X
//! and has exactly the fixed points of f, even when f leaves X.

use pldegree::fixpoint::{conjugate_h, exact_pl_fixed_points, find_star_center, retraction_for_map};
use pldegree::geom::locate_point;
use pldegree::scenarios::gen_t33_instances;

fn main() {
    for s in gen_t33_instances() {
        let c = find_star_center(&s.x).unwrap();
        let beta = retraction_for_map(&s.map, &c).unwrap();
        let h = conjugate_h(&s.map, &beta).unwrap();
        let leaves = s.map.domain().used_vertices().iter().any(|&v| !locate_point(&s.x, s.map.image(v)).is_inside());
        let (a, b) = (exact_pl_fixed_points(&s.map), exact_pl_fixed_points(&h));
        println!(
            "{:<18} f leaves X: {:<5}  |Fix f| = {}, |Fix h| = {}, same set: {}",
            s.name,
            leaves,
            a.len(),
            b.len(),
            a.same_set(&b)
        );
    }
}
