use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::geom::convex::{barycentric, in_simplex, meet, BBox};
use crate::geom::{locate_point, SimplicialComplex};
use crate::plmap::{classify_with, preimage_subcomplex, PLMap, Region};
use crate::rational::{add, centroid, combine, scale, sub, Point, Rational};

/// Extra splitting allowed when classifying the image of a candidate neighborhood.
const STAR_CLASSIFY_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockadingResult {
    Blockading,
    NotBlockading,
    Undecided,
}

/// A point `x` with `f(x) ∈ V` and a direction along which `f` leaves `X`
/// immediately, so every neighborhood of `x` has points mapped outside `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct Refutation {
    pub point: Point,
    pub image: Point,
    /// A point of the bad segment starting at `point`, with its image outside `X`.
    pub probe: Point,
    pub probe_image: Point,
}

#[derive(Debug, Clone)]
pub struct BlockadingWitness {
    pub result: BlockadingResult,
    /// Closure of the open neighborhood `U`, as simplices of a refinement of `X`.
    pub witness_u: Option<SimplicialComplex>,
    pub refutation: Option<Refutation>,
    pub depth_used: usize,
}

impl BlockadingWitness {
    fn new(result: BlockadingResult, depth_used: usize) -> Self {
        BlockadingWitness { result, witness_u: None, refutation: None, depth_used }
    }
}

/// Decides whether the union `V` of the listed faces of `∂X` is blockading for `f`:
/// some open neighborhood `U` of `f^{-1}(V)` has `f(U) ⊂ X`.
///
/// `U` is sought as the open star of the preimage hull in successive
/// barycentric refinements of `X`.
pub fn check_blockading(f: &PLMap, x: &SimplicialComplex, v: &[Vec<usize>], max_depth: usize) -> BlockadingWitness {
    let region = Region::new(x);
    if v.is_empty() || misses(f, x, v) {
        return BlockadingWitness::new(BlockadingResult::Blockading, 0);
    }
    let vdim = v[0].len() - 1;
    let vc = SimplicialComplex::from_parts(x.ambient_dim(), vdim, x.vertices().to_vec(), v.to_vec(), None);
    for depth in 0..=max_depth {
        let pre = preimage_subcomplex(f, &vc, depth);
        let fine = pre.map.domain();
        let touched: BTreeSet<usize> = pre.hull.iter().flat_map(|&s| fine.simplex(s).iter().copied()).collect();
        let star: Vec<usize> = (0..fine.len()).filter(|&s| fine.simplex(s).iter().any(|w| touched.contains(w))).collect();
        let star_complex = fine.select(&star);
        let star_map = pre.map.restrict_to(&star_complex).expect("star simplices belong to the refined domain");
        if classify_with(&star_map, &region, STAR_CLASSIFY_DEPTH).all_contained() {
            let mut w = BlockadingWitness::new(BlockadingResult::Blockading, depth);
            w.witness_u = Some(star_complex);
            return w;
        }
        if let Some(r) = refute(&pre.map, &pre.hull, &vc, x) {
            let mut w = BlockadingWitness::new(BlockadingResult::NotBlockading, depth);
            w.refutation = Some(r);
            return w;
        }
    }
    BlockadingWitness::new(BlockadingResult::Undecided, max_depth)
}

fn misses(f: &PLMap, x: &SimplicialComplex, v: &[Vec<usize>]) -> bool {
    let vp: Vec<Vec<&[Rational]>> = v.iter().map(|s| s.iter().map(|&w| x.vertex(w)).collect()).collect();
    (0..f.domain().len()).all(|i| {
        let img = f.image_points(i);
        let bb = BBox::of(&img);
        vp.iter().all(|r| !bb.overlaps(&BBox::of(r)) || meet(&img, r, None, None).is_none())
    })
}

/// Searches the preimage hull for a point of `f^{-1}(V)` with an escaping direction.
fn refute(f: &PLMap, hull: &[usize], v: &SimplicialComplex, x: &SimplicialComplex) -> Option<Refutation> {
    let dom = f.domain();
    for &s in hull {
        let img = f.image_points(s);
        let pts = dom.points_of(s);
        for r in 0..v.len() {
            let rp = v.points_of(r);
            let mut candidates = Vec::new();
            for i in 0..img.len() {
                if let Some(m) = meet(&img, &rp, Some(&[i]), None) {
                    candidates.push(m.lambda);
                }
            }
            let all: Vec<usize> = (0..img.len()).collect();
            if let Some(m) = meet(&img, &rp, Some(&all), None) {
                candidates.push(m.lambda);
            }
            for lambda in candidates {
                let p = combine(&lambda, &pts);
                if let Some(r) = escape_from(f, &p, x) {
                    return Some(r);
                }
            }
        }
    }
    None
}

fn escape_from(f: &PLMap, p: &[Rational], x: &SimplicialComplex) -> Option<Refutation> {
    let dom = f.domain();
    let fp = f.evaluate(p).ok()?;
    for s in 0..dom.len() {
        let pts = dom.points_of(s);
        if !in_simplex(&pts, p) {
            continue;
        }
        let mut targets: Vec<Point> = pts.iter().map(|q| q.to_vec()).collect();
        targets.push(centroid(&pts));
        for q in targets {
            let dir = sub(&q, p);
            if dir.iter().all(Zero::is_zero) {
                continue;
            }
            let lam = barycentric(&pts, &q).expect("full simplex");
            let fq = f.evaluate_in(s, &lam);
            let w = sub(&fq, &fp);
            if w.iter().all(Zero::is_zero) || !leaves_immediately(x, &fp, &w) {
                continue;
            }
            let mut t = Rational::one();
            for _ in 0..64 {
                let probe_image = add(&fp, &scale(&w, &t));
                if !locate_point(x, &probe_image).is_inside() {
                    let probe = add(p, &scale(&dir, &t));
                    return Some(Refutation { point: p.to_vec(), image: fp, probe, probe_image });
                }
                t /= Rational::from_integer(2.into());
            }
        }
    }
    None
}

/// `y + εw ∉ X` for every small `ε > 0`: `w` leaves the tangent cone of every
/// simplex of `X` containing `y`.
fn leaves_immediately(x: &SimplicialComplex, y: &[Rational], w: &[Rational]) -> bool {
    let yw = add(y, w);
    for t in 0..x.len() {
        let tp = x.points_of(t);
        let Some(l0) = barycentric(&tp, y) else { continue };
        if l0.iter().any(|c| c < &Rational::zero()) {
            continue;
        }
        let l1 = barycentric(&tp, &yw).expect("full-dimensional simplex");
        let enters = l0.iter().zip(&l1).all(|(a, b)| !a.is_zero() || b >= a);
        if enters {
            return false;
        }
    }
    true
}
