use std::collections::BTreeSet;

use super::blockading::{check_blockading, BlockadingResult};
use super::frame::{first_hit, maps_into, BoundaryFrame, Containment};
use super::{Check, HypothesisReport, Theorem};
use crate::degree::{degree_injective_ball_map, degree_injective_on, degree_sphere_map, degree_zero_sphere_map, DegreeError, DegreeValue};
use crate::geom::{boundary_subcomplex, orient, SimplicialComplex, SubBall};
use crate::plmap::{classify_with, injectivity_witness, is_bijective_on, Bijectivity, NonBijectiveWitness, PLMap};
use crate::rational::{format_rational, Rational};

const STAR_CLASSIFY_DEPTH: usize = 2;

/// Everything a theorem check may need.
#[derive(Debug, Clone, Copy)]
pub struct CheckInput<'a> {
    pub f: &'a PLMap,
    pub x: &'a SimplicialComplex,
    pub y: &'a SubBall,
    pub d: Option<&'a SubBall>,
}

pub(crate) fn fmt_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn fmt_witness(w: &NonBijectiveWitness) -> String {
    match w {
        NonBijectiveWitness::Collision { x, y, image } => {
            format!("{} and {} both map to {}", fmt_point(x), fmt_point(y), fmt_point(image))
        }
        NonBijectiveWitness::ForeignPreimage { x, image } => {
            format!("{} lies outside the ball but maps to {} in its image", fmt_point(x), fmt_point(image))
        }
    }
}

const BALL: &str = "Y is a certified ball in the boundary";
const Y_INTO_X: &str = "f(Y) lies in X";
const BLOCKADING: &str = "closure of the boundary minus Y is blockading";
const PREIMAGE: &str = "preimage of the boundary minus Y is int Y";
const INWARD: &str = "some point of int Y has a neighborhood mapped into X";
const E_BALL: &str = "D meets the boundary in a ball inside int Y";
const BIJECTIVE: &str = "f is bijective on D";
const DEGREE_D: &str = "deg(f_D) = -deg(f on the boundary of Y)";
const INJECTIVE: &str = "f is injective on X";
const Y_ONTO: &str = "f(Y) is the closure of the boundary minus Y";
const DEGREE_X: &str = "deg(f) = -deg(f on the boundary of Y)";
const MISSES: &str = "f(X) misses the boundary minus Y";
const SWAP: &str = "f swaps the endpoints of Y";
const PRESERVING: &str = "f preserves orientation";

fn frame_or_report(theorem: Theorem, x: &SimplicialComplex, y: &SubBall) -> Result<BoundaryFrame, HypothesisReport> {
    BoundaryFrame::new(x, y).map_err(|e| HypothesisReport::new(theorem, vec![Check::fail(BALL, e.to_string())]))
}

fn ball_check(frame: &BoundaryFrame) -> Check {
    Check::pass(BALL, format!("{:?} of dimension {}", frame.y.certificate(), frame.y.dim()))
}

fn dimension_check(theorem: Theorem, x: &SimplicialComplex, least: usize) -> Option<HypothesisReport> {
    (x.dim() < least || x.dim() != x.ambient_dim()).then(|| {
        HypothesisReport::new(theorem, vec![Check::fail(BALL, format!("needs a full-dimensional ball of dimension at least {least}"))])
    })
}

fn y_into_x(f: &PLMap, frame: &BoundaryFrame, depth: usize) -> Check {
    let fy = match f.restrict_to(frame.y.complex()) {
        Ok(m) => m,
        Err(e) => return Check::fail(Y_INTO_X, e.to_string()),
    };
    let cls = classify_with(&fy, &frame.region, depth);
    if cls.all_contained() {
        return Check::pass(Y_INTO_X, format!("{} classified pieces all map into X", cls.cells.len()));
    }
    for cell in &cls.cells {
        if let Some(p) = cell.image.iter().find(|p| !frame.region.contains_point(p)) {
            return Check::fail(Y_INTO_X, format!("a point of Y maps to {} outside X", fmt_point(p)));
        }
    }
    Check::undecided(Y_INTO_X, format!("pieces still straddle the boundary at depth {depth}"))
}

fn blockading_check(f: &PLMap, frame: &BoundaryFrame, depth: usize) -> Check {
    let w = check_blockading(f, frame.x(), &frame.complement, depth);
    match w.result {
        BlockadingResult::Blockading => match &w.witness_u {
            Some(u) => Check::pass(BLOCKADING, format!("open star of {} simplices at depth {} maps into X", u.len(), w.depth_used)),
            None => Check::pass(BLOCKADING, "f(X) does not meet it"),
        },
        BlockadingResult::NotBlockading => {
            let r = w.refutation.expect("refuted results carry a refutation");
            Check::fail(
                BLOCKADING,
                format!("{} maps into it and nearby {} maps to {} outside X", fmt_point(&r.point), fmt_point(&r.probe), fmt_point(&r.probe_image)),
            )
        }
        BlockadingResult::Undecided => Check::undecided(BLOCKADING, format!("no neighborhood certified up to depth {depth}")),
    }
}

/// `f^{-1}(∂X - Y) = int Y`, decided as `f(int Y) ⊂ ∂X - Y` together with
/// `f(X - int Y) ∩ (∂X - Y) = ∅`.
pub(crate) fn preimage_check(f: &PLMap, frame: &BoundaryFrame, depth: usize) -> Check {
    let outer: Vec<Vec<usize>> = frame.outer_faces().cloned().collect();
    if let Some((phi, _, p)) = first_hit(f, &frame.off_int_y_faces(), &outer, true) {
        let kind = if frame.y.has_face(&phi) { "a point of the boundary of Y" } else { "a point off Y" };
        return Check::fail(PREIMAGE, format!("{kind} {} maps into the boundary minus Y", fmt_point(&p)));
    }
    let dy: Vec<Vec<usize>> = frame.dy_faces().cloned().collect();
    let int_y: Vec<Vec<usize>> = frame.int_y_faces().cloned().collect();
    if let Some((_, _, p)) = first_hit(f, &int_y, &dy, false) {
        return Check::fail(PREIMAGE, format!("the point {} of int Y maps onto the boundary of Y", fmt_point(&p)));
    }
    match maps_into(f, frame.y.complex().simplices(), &frame.complement, depth) {
        Containment::Yes => Check::pass(PREIMAGE, "int Y maps into the boundary minus Y and nothing else does"),
        Containment::No(p) => Check::fail(PREIMAGE, format!("int Y has a point mapping to {}, off the boundary minus Y", fmt_point(&p))),
        Containment::Unknown => Check::undecided(PREIMAGE, format!("image of Y not resolved within depth {depth}")),
    }
}

/// Searches stars of interior vertices of refinements of `Y` for one mapped into `X`.
fn inward_check(f: &PLMap, frame: &BoundaryFrame, max_depth: usize) -> Check {
    for depth in 0..=max_depth {
        let (fine, sub) = f.subdivide_tracked(depth);
        let yr = sub.refine_subcomplex(frame.y.complex());
        let mut candidates: BTreeSet<usize> = yr.used_vertices().into_iter().collect();
        if yr.dim() > 0 {
            if let Ok(b) = boundary_subcomplex(&yr) {
                for v in b.used_vertices() {
                    candidates.remove(&v);
                }
            }
        }
        let dom = fine.domain();
        for v in candidates {
            let star: Vec<usize> = (0..dom.len()).filter(|&s| dom.simplex(s).contains(&v)).collect();
            let piece = fine.restrict_to(&dom.select(&star)).expect("star of a refined vertex");
            if classify_with(&piece, &frame.region, STAR_CLASSIFY_DEPTH).all_contained() {
                return Check::pass(INWARD, format!("star of {} at depth {depth} maps into X", fmt_point(dom.vertex(v))));
            }
        }
    }
    Check::undecided(INWARD, format!("no interior vertex star of Y maps into X up to depth {max_depth}"))
}

fn e_ball_check(frame: &BoundaryFrame, d: &SubBall) -> Check {
    let x = frame.x();
    if d.dim() != x.dim() {
        return Check::fail(E_BALL, "D is not full-dimensional");
    }
    if let Some(s) = d.complex().simplices().iter().find(|s| x.find_simplex(s).is_none()) {
        return Check::fail(E_BALL, format!("simplex {s:?} of D is not a simplex of X"));
    }
    let dd = match boundary_subcomplex(d.complex()) {
        Ok(b) => b,
        Err(e) => return Check::fail(E_BALL, e.to_string()),
    };
    let dx_faces = frame.region.boundary().all_faces();
    let shared: Vec<Vec<usize>> = dd.all_faces().into_iter().filter(|f| dx_faces.contains(f)).collect();
    let e_top: Vec<Vec<usize>> = shared.iter().filter(|f| f.len() == x.dim()).cloned().collect();
    if e_top.is_empty() {
        return Check::fail(E_BALL, "D does not meet the boundary of X in a codimension-one face");
    }
    let e = match SubBall::from_simplices(frame.region.boundary(), e_top.clone()) {
        Ok(e) => e,
        Err(err) => return Check::fail(E_BALL, format!("the intersection is not a ball: {err}")),
    };
    let e_faces = e.complex().all_faces();
    if let Some(f) = shared.iter().find(|f| !e_faces.contains(*f)) {
        return Check::fail(E_BALL, format!("D also touches the boundary at the face {f:?}"));
    }
    if let Some(f) = e_top.iter().find(|f| !frame.y.has_face(f)) {
        return Check::fail(E_BALL, format!("the face {f:?} of E is not in Y"));
    }
    let dy = frame.dy_vertices();
    if let Some(v) = e.vertex_set().into_iter().find(|v| dy.contains(v)) {
        return Check::fail(E_BALL, format!("E reaches the boundary of Y at vertex {v}"));
    }
    Check::pass(E_BALL, format!("E has {} faces, all in int Y", e_top.len()))
}

/// Degree of `f` restricted to the sphere `∂Y`.
pub(crate) fn boundary_degree(f: &PLMap, frame: &BoundaryFrame) -> Result<DegreeValue, DegreeError> {
    let dy = frame.dy_complex().ok_or(DegreeError::NotFullDimensional)?;
    if dy.dim() == 0 {
        degree_zero_sphere_map(&f.restrict_to(&dy)?)
    } else {
        let t = orient(&dy)?;
        degree_sphere_map(&f.restrict_to(&t)?, &t)
    }
}

fn relation_check(name: &str, lhs: Result<DegreeValue, DegreeError>, rhs: Result<DegreeValue, DegreeError>) -> Check {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a.value == -b.value => Check::pass(name, format!("{} = -({})", a.value, b.value)),
        (Ok(a), Ok(b)) => Check::fail(name, format!("{} != -({})", a.value, b.value)),
        (Err(e), _) | (_, Err(e)) => Check::undecided(name, format!("degree unavailable: {e}")),
    }
}

fn injective_check(f: &PLMap, x: &SimplicialComplex) -> Check {
    match injectivity_witness(f, x.simplices()) {
        None => Check::pass(INJECTIVE, format!("{} simplices pairwise checked", x.len())),
        Some(w) => Check::fail(INJECTIVE, fmt_witness(&w)),
    }
}

/// `f(Y) = closure(∂X - Y)`: `f` is injective on `Y`, maps it into the
/// complement, and maps `∂Y` into `∂Y`. An injective map of a ball into a ball
/// sending boundary sphere into boundary sphere is onto.
fn onto_check(f: &PLMap, frame: &BoundaryFrame, depth: usize) -> Check {
    let ys = frame.y.complex().simplices();
    if let Some(w) = injectivity_witness(f, ys) {
        return Check::fail(Y_ONTO, format!("f is not injective on Y: {}", fmt_witness(&w)));
    }
    match maps_into(f, ys, &frame.complement, depth) {
        Containment::Yes => {}
        Containment::No(p) => return Check::fail(Y_ONTO, format!("a point of Y maps to {}, off the complement", fmt_point(&p))),
        Containment::Unknown => return Check::undecided(Y_ONTO, format!("image of Y not resolved within depth {depth}")),
    }
    let Some(dy) = frame.dy_complex() else {
        return Check::fail(Y_ONTO, "Y has no boundary sphere");
    };
    match maps_into(f, dy.simplices(), dy.simplices(), depth) {
        Containment::Yes => Check::pass(Y_ONTO, "Y maps injectively into the complement with its boundary sphere onto itself"),
        Containment::No(p) => Check::fail(Y_ONTO, format!("the boundary of Y has a point mapping to {}, off it", fmt_point(&p))),
        Containment::Unknown => Check::undecided(Y_ONTO, format!("image of the boundary of Y not resolved within depth {depth}")),
    }
}

/// Degree of an injective `f` read on one top simplex of `X`.
fn interior_degree(f: &PLMap, x: &SimplicialComplex) -> Result<DegreeValue, DegreeError> {
    let first = x.simplices().first().cloned().ok_or(DegreeError::NotFullDimensional)?;
    degree_injective_on(f, &[first])
}

pub fn check_t33(f: &PLMap, x: &SimplicialComplex, y: &SubBall, max_depth: usize) -> HypothesisReport {
    if let Some(r) = dimension_check(Theorem::T33, x, 1) {
        return r;
    }
    let frame = match frame_or_report(Theorem::T33, x, y) {
        Ok(fr) => fr,
        Err(r) => return r,
    };
    let checks = vec![ball_check(&frame), y_into_x(f, &frame, max_depth), blockading_check(f, &frame, max_depth)];
    HypothesisReport::new(Theorem::T33, checks)
}

pub fn check_t35(f: &PLMap, x: &SimplicialComplex, y: &SubBall, max_depth: usize) -> HypothesisReport {
    if let Some(r) = dimension_check(Theorem::T35, x, 1) {
        return r;
    }
    let frame = match frame_or_report(Theorem::T35, x, y) {
        Ok(fr) => fr,
        Err(r) => return r,
    };
    let checks = vec![preimage_check(f, &frame, max_depth), inward_check(f, &frame, max_depth)];
    HypothesisReport::new(Theorem::T35, checks)
}

pub fn check_t47(f: &PLMap, x: &SimplicialComplex, y: &SubBall, d: &SubBall, max_depth: usize) -> HypothesisReport {
    if let Some(r) = dimension_check(Theorem::T47, x, 2) {
        return r;
    }
    let frame = match frame_or_report(Theorem::T47, x, y) {
        Ok(fr) => fr,
        Err(r) => return r,
    };
    let bij = match is_bijective_on(f, d) {
        Bijectivity::Yes => Check::pass(BIJECTIVE, "injective on D and nothing else maps into f(D)"),
        Bijectivity::No(w) => Check::fail(BIJECTIVE, fmt_witness(&w)),
    };
    let checks = vec![
        e_ball_check(&frame, d),
        bij,
        preimage_check(f, &frame, max_depth),
        relation_check(DEGREE_D, degree_injective_ball_map(f, d), boundary_degree(f, &frame)),
    ];
    HypothesisReport::new(Theorem::T47, checks)
}

pub fn check_t48(f: &PLMap, x: &SimplicialComplex, y: &SubBall, max_depth: usize) -> HypothesisReport {
    if let Some(r) = dimension_check(Theorem::T48, x, 2) {
        return r;
    }
    let frame = match frame_or_report(Theorem::T48, x, y) {
        Ok(fr) => fr,
        Err(r) => return r,
    };
    let checks = vec![
        injective_check(f, x),
        onto_check(f, &frame, max_depth),
        relation_check(DEGREE_X, interior_degree(f, x), boundary_degree(f, &frame)),
    ];
    HypothesisReport::new(Theorem::T48, checks)
}

/// The special case of [`check_t33`] where `f(X)` avoids `∂X - Y` altogether.
pub fn check_cor34(f: &PLMap, x: &SimplicialComplex, y: &SubBall, max_depth: usize) -> HypothesisReport {
    if let Some(r) = dimension_check(Theorem::Cor34, x, 1) {
        return r;
    }
    let frame = match frame_or_report(Theorem::Cor34, x, y) {
        Ok(fr) => fr,
        Err(r) => return r,
    };
    let outer: Vec<Vec<usize>> = frame.outer_faces().cloned().collect();
    let faces = x.all_faces();
    let misses = match first_hit(f, &faces, &outer, true) {
        None => Check::pass(MISSES, "no face of X maps into it"),
        Some((_, _, p)) => Check::fail(MISSES, format!("{} maps into it", fmt_point(&p))),
    };
    HypothesisReport::new(Theorem::Cor34, vec![ball_check(&frame), y_into_x(f, &frame, max_depth), misses])
}

/// Injective maps with `f(Y) = closure(∂X - Y)` and an inward neighborhood.
pub fn check_cor36(f: &PLMap, x: &SimplicialComplex, y: &SubBall, max_depth: usize) -> HypothesisReport {
    if let Some(r) = dimension_check(Theorem::Cor36, x, 2) {
        return r;
    }
    let frame = match frame_or_report(Theorem::Cor36, x, y) {
        Ok(fr) => fr,
        Err(r) => return r,
    };
    let checks = vec![injective_check(f, x), onto_check(f, &frame, max_depth), inward_check(f, &frame, max_depth)];
    HypothesisReport::new(Theorem::Cor36, checks)
}

/// An orientation-preserving injection of a disk swapping the ends of an arc
/// `Y` whose image closes `Y` up to the boundary circle.
pub fn check_cor49(f: &PLMap, x: &SimplicialComplex, y: &SubBall, max_depth: usize) -> HypothesisReport {
    if x.dim() != 2 || x.ambient_dim() != 2 || y.dim() != 1 {
        return HypothesisReport::new(Theorem::Cor49, vec![Check::fail(BALL, "needs an arc in the boundary of a disk in the plane")]);
    }
    let frame = match frame_or_report(Theorem::Cor49, x, y) {
        Ok(fr) => fr,
        Err(r) => return r,
    };
    let preserving = match injectivity_witness(f, x.simplices()) {
        Some(w) => Check::fail(PRESERVING, format!("not injective: {}", fmt_witness(&w))),
        None => match degree_injective_on(f, x.simplices()) {
            Ok(d) if d.value == 1 => Check::pass(PRESERVING, "injective with degree 1"),
            Ok(d) => Check::fail(PRESERVING, format!("degree {}", d.value)),
            Err(e) => Check::undecided(PRESERVING, e.to_string()),
        },
    };
    let swap = match boundary_degree(f, &frame) {
        Ok(d) if d.value == -1 => Check::pass(SWAP, "the endpoints are exchanged"),
        Ok(_) => Check::fail(SWAP, "the endpoints are fixed"),
        Err(e) => Check::fail(SWAP, e.to_string()),
    };
    HypothesisReport::new(Theorem::Cor49, vec![preserving, swap, onto_check(f, &frame, max_depth)])
}
