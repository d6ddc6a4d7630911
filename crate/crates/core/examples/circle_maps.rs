//! Circle maps of degree -2..2: both degree oracles, then the
//! multiplication table of compositions.

use pldegree::degree::{degree_sphere_map, regular_value_degree};
use pldegree::plmap::compose;
use pldegree::scenarios::gen_degree_d_circle_map;

fn main() {
    let maps: Vec<_> = (-2..=2).map(|d| gen_degree_d_circle_map(d).unwrap()).collect();
    let target = maps[0].target.clone().unwrap();
    for s in &maps {
        let push = degree_sphere_map(&s.map, &target).unwrap();
        let count = regular_value_degree(&s.map, &target).unwrap();
        println!("{:<14} pushforward {:>2}, regular-value count {:>2}", s.name, push.value, count.value);
    }
    println!("\ndeg(f_a o f_b):");
    print!("      ");
    for b in -2..=2 {
        print!("{b:>4}");
    }
    println!();
    for (a, f) in (-2..=2).zip(&maps) {
        print!("a={a:>2}  ");
        for g in &maps {
            let fg = compose(&f.map, &g.map, 2).unwrap();
            print!("{:>4}", degree_sphere_map(&fg, &target).unwrap().value);
        }
        println!();
    }
}
