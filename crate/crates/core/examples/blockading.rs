//! Blockading sets: a contraction keeps everything near the preimage of the
//! rest of the boundary inside X, an expansion does not.

use pldegree::geom::{boundary_subcomplex, SubBall};
use pldegree::hypotheses::{check_blockading, BoundaryFrame};
use pldegree::plmap::PLMap;
use pldegree::rational::{rat, Rational};
use pldegree::scenarios::shapes::octagon_fan;

fn main() {
    let x = octagon_fan();
    let arc = (0..3).map(|k| vec![k, k + 1]).collect();
    let y = SubBall::from_simplices(&boundary_subcomplex(&x).unwrap(), arc).unwrap();
    let frame = BoundaryFrame::new(&x, &y).unwrap();
    for (label, s) in [("shrink by 1/2", rat(1, 2)), ("identity", rat(1, 1)), ("stretch by 6/5", rat(6, 5))] {
        let f = PLMap::from_vertex_fn(&x, 2, |p: &[Rational]| p.iter().map(|c| c * &s).collect());
        let w = check_blockading(&f, &x, &frame.complement, 3);
        print!("{label:<16} {:?} at depth {}", w.result, w.depth_used);
        if let Some(u) = &w.witness_u {
            print!(", neighborhood of {} simplices", u.len());
        }
        if let Some(r) = &w.refutation {
            print!(", {} maps into V while {} leaves X", show(&r.point), show(&r.probe));
        }
        println!();
    }
}

fn show(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
