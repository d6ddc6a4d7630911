use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::PLMap;
use crate::geom::convex::{self, hull_in_simplex, hyperplane_normal, meet, BBox};
use crate::geom::{boundary_subcomplex, locate_point, SimplicialComplex};
use crate::rational::{combine, dot, Point, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionLabel {
    ImageInside,
    ImageOutside,
    ImageOnBoundary,
    Straddles,
}

/// A full-dimensional reference complex prepared for exact convex queries.
#[derive(Debug, Clone)]
pub struct Region {
    complex: SimplicialComplex,
    boundary: SimplicialComplex,
    boundary_faces: BTreeSet<Vec<usize>>,
    boxes: Vec<BBox>,
    boundary_boxes: Vec<BBox>,
    convex: bool,
}

impl Region {
    pub fn new(x: &SimplicialComplex) -> Self {
        let boundary = boundary_subcomplex(x).expect("reference complex has positive dimension");
        let boundary_faces = boundary.all_faces();
        let boxes = (0..x.len()).map(|i| BBox::of(&x.points_of(i))).collect();
        let boundary_boxes = (0..boundary.len()).map(|i| BBox::of(&boundary.points_of(i))).collect();
        let convex = is_convex(x);
        Region { complex: x.clone(), boundary, boundary_faces, boxes, boundary_boxes, convex }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn boundary(&self) -> &SimplicialComplex {
        &self.boundary
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        locate_point(&self.complex, x).is_inside()
    }

    /// `true` when `conv(pts)` is certified to lie in `|X|`.
    pub fn contains_hull(&self, pts: &[&[Rational]]) -> bool {
        let bb = BBox::of(pts);
        let single = (0..self.complex.len())
            .any(|t| self.boxes[t].overlaps(&bb) && hull_in_simplex(pts, &self.complex.points_of(t)));
        single || (self.convex && pts.iter().all(|p| self.contains_point(p)))
    }

    pub fn meets_boundary(&self, pts: &[&[Rational]]) -> bool {
        let bb = BBox::of(pts);
        (0..self.boundary.len())
            .any(|r| self.boundary_boxes[r].overlaps(&bb) && meet(pts, &self.boundary.points_of(r), None, None).is_some())
    }

    /// `true` when `conv(pts)` avoids the interior of `|X|`.
    ///
    /// For each simplex `τ` met by the hull, the intersection lies in the face of
    /// `τ` spanned by the vertices carrying positive mass somewhere on it, and
    /// that face must belong to the boundary.
    pub fn misses_interior(&self, pts: &[&[Rational]]) -> bool {
        let bb = BBox::of(pts);
        for t in 0..self.complex.len() {
            if !self.boxes[t].overlaps(&bb) {
                continue;
            }
            let tp = self.complex.points_of(t);
            if meet(pts, &tp, None, None).is_none() {
                continue;
            }
            let mut face: Vec<usize> = (0..tp.len())
                .filter(|&i| meet(pts, &tp, None, Some(&[i])).is_some_and(|m| m.is_proper()))
                .map(|i| self.complex.simplex(t)[i])
                .collect();
            face.sort_unstable();
            if !self.boundary_faces.contains(&face) {
                return false;
            }
        }
        true
    }

    /// Exact label of `conv(pts)`, or `None` when it must be split further.
    pub fn label(&self, pts: &[&[Rational]]) -> Option<RegionLabel> {
        if self.contains_hull(pts) {
            Some(if self.meets_boundary(pts) { RegionLabel::ImageOnBoundary } else { RegionLabel::ImageInside })
        } else if self.misses_interior(pts) {
            Some(RegionLabel::ImageOutside)
        } else {
            None
        }
    }
}

/// Convexity of a full-dimensional complex: every vertex lies on the inner
/// side of every boundary facet hyperplane.
fn is_convex(x: &SimplicialComplex) -> bool {
    if x.dim() != x.ambient_dim() {
        return false;
    }
    let facets = x.facet_map();
    let used = x.used_vertices();
    for cofaces in facets.values() {
        let [(si, pos)] = cofaces[..] else {
            continue;
        };
        let s = x.simplex(si);
        let opposite = x.vertex(s[pos]);
        let face: Vec<&[Rational]> = s.iter().enumerate().filter(|&(j, _)| j != pos).map(|(_, &v)| x.vertex(v)).collect();
        let Some(normal) = hyperplane_normal(&face) else {
            return false;
        };
        let level = dot(&normal, face[0]);
        let inner = (dot(&normal, opposite) - &level).signum();
        if used.iter().any(|&v| ((dot(&normal, x.vertex(v)) - &level) * &inner).is_negative()) {
            return false;
        }
    }
    true
}

/// One refined piece of a domain simplex with the label of its image.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedCell {
    pub origin: usize,
    pub level: usize,
    /// Barycentric coordinates of the cell vertices in the origin simplex.
    pub lambdas: Vec<Point>,
    pub points: Vec<Point>,
    pub image: Vec<Point>,
    pub label: RegionLabel,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RegionClassification {
    pub cells: Vec<ClassifiedCell>,
}

impl RegionClassification {
    pub fn count(&self, label: RegionLabel) -> usize {
        self.cells.iter().filter(|c| c.label == label).count()
    }

    /// Every cell maps into `|X|`.
    pub fn all_contained(&self) -> bool {
        self.cells.iter().all(|c| matches!(c.label, RegionLabel::ImageInside | RegionLabel::ImageOnBoundary))
    }

    pub fn all_inside(&self) -> bool {
        self.cells.iter().all(|c| c.label == RegionLabel::ImageInside)
    }

    pub fn all_outside(&self) -> bool {
        self.cells.iter().all(|c| c.label == RegionLabel::ImageOutside)
    }

    pub fn labels_of(&self, origin: usize) -> Vec<RegionLabel> {
        self.cells.iter().filter(|c| c.origin == origin).map(|c| c.label).collect()
    }
}

/// Splits a cell given by barycentric vertex rows into its barycentric children.
pub(crate) fn split_cell(cell: &[Point]) -> Vec<Vec<Point>> {
    let n = cell.len();
    let perms = crate::geom::permutations(n);
    let mut out = Vec::with_capacity(perms.len());
    for (perm, _) in perms {
        let mut child = Vec::with_capacity(n);
        let mut acc = vec![Rational::zero(); cell[0].len()];
        for (k, &pos) in perm.iter().enumerate() {
            acc = crate::rational::add(&acc, &cell[pos]);
            let w = Rational::new(1.into(), ((k + 1) as i64).into());
            child.push(crate::rational::scale(&acc, &w));
        }
        out.push(child);
    }
    out
}

fn unit_rows(n: usize) -> Vec<Point> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect())
        .collect()
}

/// Labels pieces of every domain simplex by where their images sit relative to `x`.
///
/// Unresolved pieces are split barycentrically until `depth`; whatever is
/// still unresolved there is labeled `Straddles`.
pub fn classify_against(f: &PLMap, x: &SimplicialComplex, depth: usize) -> RegionClassification {
    classify_with(f, &Region::new(x), depth)
}

pub fn classify_with(f: &PLMap, region: &Region, depth: usize) -> RegionClassification {
    let mut cells = Vec::new();
    for si in 0..f.domain().len() {
        let dom = f.domain().points_of(si);
        let img = f.image_points(si);
        let mut stack = vec![(unit_rows(dom.len()), 0usize)];
        let mut todo = Vec::new();
        while let Some((lambdas, level)) = stack.pop() {
            let image: Vec<Point> = lambdas.iter().map(|l| combine(l, &img)).collect();
            let refs: Vec<&[Rational]> = image.iter().map(Vec::as_slice).collect();
            let label = match region.label(&refs) {
                Some(l) => l,
                None if level < depth => {
                    for child in split_cell(&lambdas).into_iter().rev() {
                        stack.push((child, level + 1));
                    }
                    continue;
                }
                None => RegionLabel::Straddles,
            };
            let points = lambdas.iter().map(|l| combine(l, &dom)).collect();
            todo.push(ClassifiedCell { origin: si, level, lambdas, points, image, label });
        }
        cells.extend(todo);
    }
    RegionClassification { cells }
}

/// Sandwich of the preimage of a region on a refinement of the domain.
#[derive(Debug, Clone)]
pub struct Preimage {
    /// The map on the refined domain; `inner` and `hull` index its simplices.
    pub map: PLMap,
    pub inner: Vec<usize>,
    pub hull: Vec<usize>,
}

/// Simplices of the `depth`-refined domain whose images lie in (`inner`) or
/// meet (`hull`) the realization of `region`.
pub fn preimage_subcomplex(f: &PLMap, region: &SimplicialComplex, depth: usize) -> Preimage {
    let map = f.subdivide(depth);
    let full = (region.dim() == region.ambient_dim() && !region.is_empty()).then(|| Region::new(region));
    let boxes: Vec<BBox> = (0..region.len()).map(|i| BBox::of(&region.points_of(i))).collect();
    let mut inner = Vec::new();
    let mut hull = Vec::new();
    for si in 0..map.domain().len() {
        let img = map.image_points(si);
        let bb = BBox::of(&img);
        let candidates: Vec<usize> = (0..region.len()).filter(|&r| boxes[r].overlaps(&bb)).collect();
        let inside = match &full {
            Some(r) => r.contains_hull(&img),
            None => candidates.iter().any(|&r| hull_in_simplex(&img, &region.points_of(r))),
        };
        if inside {
            inner.push(si);
            hull.push(si);
        } else if candidates.iter().any(|&r| convex::meet(&img, &region.points_of(r), None, None).is_some()) {
            hull.push(si);
        }
    }
    Preimage { map, inner, hull }
}
