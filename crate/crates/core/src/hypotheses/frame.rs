use std::collections::BTreeSet;

use crate::geom::convex::{hull_in_simplex, meet_groups, BBox};
use crate::geom::{GeomError, SimplicialComplex, SubBall};
use crate::plmap::{split_cell, PLMap, Region};
use crate::rational::{combine, Point, Rational};

/// A ball `X`, a sub-ball `Y` of its boundary and the faces that describe
/// `int Y`, `∂Y` and `∂X - Y` as unions of open faces.
#[derive(Debug, Clone)]
pub struct BoundaryFrame {
    pub region: Region,
    pub y: SubBall,
    /// Top simplices of `∂X` outside `Y`; their union is the closure of `∂X - Y`.
    pub complement: Vec<Vec<usize>>,
    y_faces: BTreeSet<Vec<usize>>,
    dy_faces: BTreeSet<Vec<usize>>,
    dx_faces: BTreeSet<Vec<usize>>,
}

impl BoundaryFrame {
    pub fn new(x: &SimplicialComplex, y: &SubBall) -> Result<Self, GeomError> {
        let region = Region::new(x);
        let dx = region.boundary().clone();
        if y.dim() + 1 != x.dim() {
            return Err(GeomError::NotABall("Y must have codimension one".into()));
        }
        let dx_faces = dx.all_faces();
        let y_faces = y.complex().all_faces();
        if let Some(bad) = y_faces.iter().find(|f| !dx_faces.contains(*f)) {
            return Err(GeomError::NotSubcomplex(bad.clone()));
        }
        let dy_faces = if y.dim() == 0 { BTreeSet::new() } else { y.boundary()?.all_faces() };
        let complement = dx
            .simplices()
            .iter()
            .filter(|s| {
                let mut k = s.to_vec();
                k.sort_unstable();
                !y_faces.contains(&k)
            })
            .cloned()
            .collect();
        Ok(BoundaryFrame { region, y: y.clone(), complement, y_faces, dy_faces, dx_faces })
    }

    pub fn x(&self) -> &SimplicialComplex {
        self.region.complex()
    }

    /// The closure of `∂X - Y` as a complex on the vertex ids of `X`.
    pub fn complement_complex(&self) -> SimplicialComplex {
        let x = self.x();
        SimplicialComplex::from_parts(x.ambient_dim(), x.dim() - 1, x.vertices().to_vec(), self.complement.clone(), None)
    }

    pub fn dy_vertices(&self) -> BTreeSet<usize> {
        self.dy_faces.iter().filter(|f| f.len() == 1).map(|f| f[0]).collect()
    }

    /// The sphere `∂Y` as a complex, or `None` for a 0-ball `Y`.
    pub fn dy_complex(&self) -> Option<SimplicialComplex> {
        (self.y.dim() > 0).then(|| self.y.boundary().expect("checked in new"))
    }

    /// Faces whose open cells make up `int Y`.
    pub fn int_y_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.y_faces.iter().filter(|f| !self.dy_faces.contains(*f))
    }

    pub fn dy_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.dy_faces.iter()
    }

    /// Faces whose open cells make up `∂X - Y`.
    pub fn outer_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.dx_faces.iter().filter(|f| !self.y_faces.contains(*f))
    }

    /// Faces of `X` whose open cells make up `X - int Y`.
    pub fn off_int_y_faces(&self) -> Vec<Vec<usize>> {
        self.x().all_faces().into_iter().filter(|f| !self.y_faces.contains(f) || self.dy_faces.contains(f)).collect()
    }

    pub fn is_int_y_face(&self, f: &[usize]) -> bool {
        let mut k = f.to_vec();
        k.sort_unstable();
        self.y_faces.contains(&k) && !self.dy_faces.contains(&k)
    }
}

fn singletons(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![i]).collect()
}

/// Whether `f` maps some point of the open face `phi` into `rho`, taken open
/// or closed as asked.
pub(crate) fn image_meets(f: &PLMap, phi: &[usize], rho: &[&[Rational]], rho_open: bool) -> Option<Point> {
    let img: Vec<&[Rational]> = phi.iter().map(|&v| f.image(v)).collect();
    if !BBox::of(&img).overlaps(&BBox::of(rho)) {
        return None;
    }
    let gb = if rho_open { singletons(rho.len()) } else { Vec::new() };
    let m = meet_groups(&img, rho, &singletons(img.len()), &gb)?;
    if !m.is_proper() {
        return None;
    }
    let dom: Vec<&[Rational]> = phi.iter().map(|&v| f.domain().vertex(v)).collect();
    Some(combine(&m.lambda, &dom))
}

/// First point of an open face from `from` whose image lies in an open (or closed) face from `into`.
pub(crate) fn first_hit<'a>(
    f: &PLMap,
    from: impl IntoIterator<Item = &'a Vec<usize>>,
    into: &[Vec<usize>],
    into_open: bool,
) -> Option<(Vec<usize>, Vec<usize>, Point)> {
    let k = f.domain();
    let targets: Vec<Vec<&[Rational]>> = into.iter().map(|r| r.iter().map(|&v| k.vertex(v)).collect()).collect();
    for phi in from {
        for (rho, pts) in into.iter().zip(&targets) {
            if let Some(x) = image_meets(f, phi, pts, into_open) {
                return Some((phi.clone(), rho.clone(), x));
            }
        }
    }
    None
}

/// Outcome of checking that the image of a list of simplices lies in a
/// lower-dimensional complex.
pub(crate) enum Containment {
    Yes,
    /// An image point outside the complex.
    No(Point),
    Unknown,
}

/// Whether `f` maps every listed domain simplex into `|target|`, splitting
/// pieces that straddle target simplices up to `depth` times.
pub(crate) fn maps_into(f: &PLMap, simplices: &[Vec<usize>], target: &[Vec<usize>], depth: usize) -> Containment {
    let k = f.domain();
    let tpts: Vec<Vec<&[Rational]>> = target.iter().map(|r| r.iter().map(|&v| k.vertex(v)).collect()).collect();
    let boxes: Vec<BBox> = tpts.iter().map(|t| BBox::of(t)).collect();
    let inside = |pts: &[&[Rational]]| {
        let bb = BBox::of(pts);
        (0..tpts.len()).any(|t| boxes[t].overlaps(&bb) && hull_in_simplex(pts, &tpts[t]))
    };
    let mut unknown = false;
    for s in simplices {
        let img: Vec<&[Rational]> = s.iter().map(|&v| f.image(v)).collect();
        let unit: Vec<Point> = (0..s.len())
            .map(|i| (0..s.len()).map(|j| Rational::from_integer(i64::from(i == j).into())).collect())
            .collect();
        let mut stack = vec![(unit, 0usize)];
        while let Some((cell, level)) = stack.pop() {
            let pts: Vec<Point> = cell.iter().map(|l| combine(l, &img)).collect();
            let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
            if inside(&refs) {
                continue;
            }
            if let Some(p) = refs.iter().find(|p| !inside(&[**p])) {
                return Containment::No(p.to_vec());
            }
            if level < depth {
                stack.extend(split_cell(&cell).into_iter().map(|c| (c, level + 1)));
            } else {
                unknown = true;
            }
        }
    }
    if unknown {
        Containment::Unknown
    } else {
        Containment::Yes
    }
}
