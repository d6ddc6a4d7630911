//! Degrees of PL injections: orientation signs of random injections, and the
//! half-space rule relating an injection to its restriction to a face ball.

use pldegree::degree::degree_injective_ball_map;
use pldegree::geom::SubBall;
use pldegree::scenarios::random::random_injection;
use pldegree::scenarios::{gen_halfspace, scenario_degree, DegreeTarget, Side};

fn main() {
    for seed in 0..6 {
        let n = 1 + seed as usize % 3;
        let h = random_injection(seed, n);
        let d = degree_injective_ball_map(&h, &SubBall::whole(h.domain()).unwrap()).unwrap();
        println!("random injection {seed} in R^{n}: degree {:>2}", d.value);
    }
    for side in [Side::Plus, Side::Minus] {
        let s = gen_halfspace(side);
        let f = scenario_degree(&s, DegreeTarget::Injective).unwrap().value;
        let fe = scenario_degree(&s, DegreeTarget::Face).unwrap().value;
        println!("{}: deg f = {f:>2}, deg f_E = {fe:>2}", s.name);
    }
}
