//! The half-turn of the ringed octagon with a lifted center: injective on a
//! sub-ball under an edge of Y, and certified through that sub-ball.

use pldegree::fixpoint::certify;
use pldegree::hypotheses::Theorem;
use pldegree::rational::Rational;
use pldegree::scenarios::gen_theorem47;

fn main() {
    let s = gen_theorem47();
    let c = certify(&s, Some(Theorem::T47), 4);
    print!("{}", c.reports[0]);
    let fix = c.fixed_points.unwrap();
    println!("{} fixed component(s), first at {}", fix.len(), show(fix.components[0].shape.vertices()[0]));
}

fn show(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
