//! The half turn of the octagon: hypothesis checks for every
//! main theorem and the exact fixed-point set.

use pldegree::fixpoint::certify;
use pldegree::rational::Rational;
use pldegree::scenarios::gen_rotation_disk;

fn main() {
    let s = gen_rotation_disk();
    let c = certify(&s, None, 4);
    for r in &c.reports {
        print!("{r}");
    }
    println!("status: {}", c.status.name());
    for comp in &c.fixed_points.as_ref().unwrap().components {
        let pts: Vec<String> = comp.shape.vertices().iter().map(|p| show(p)).collect();
        println!("fixed {}: {}", comp.shape.kind(), pts.join(" "));
    }
    println!("residual: {}", c.residual);
}

fn show(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
