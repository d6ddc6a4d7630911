use std::collections::{BTreeMap, BTreeSet};

use super::convex::{self, barycentric, BBox};
use super::{GeomError, SimplicialComplex};
use crate::linalg;
use crate::rational::{centroid, sign, Point};

/// A refined complex together with its relation to the complex it refines.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// For every vertex, the sorted vertex ids of the smallest original face
    /// containing it.
    pub carrier: Vec<Vec<usize>>,
    /// For every top simplex, the original top simplex containing it.
    pub parent_of: Vec<usize>,
}

impl Subdivision {
    fn identity(k: &SimplicialComplex) -> Self {
        Subdivision {
            complex: k.clone(),
            carrier: (0..k.vertices().len()).map(|v| vec![v]).collect(),
            parent_of: (0..k.len()).collect(),
        }
    }

    /// Smallest original face containing the given refined simplex.
    pub fn carrier_of(&self, simplex: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = simplex.iter().flat_map(|&v| self.carrier[v].iter().copied()).collect();
        set.into_iter().collect()
    }

    /// The refinement of `sub`, a complex on the original vertex ids whose
    /// simplices are faces of the original complex. Orientation is carried over.
    pub fn refine_subcomplex(&self, sub: &SimplicialComplex) -> SimplicialComplex {
        let targets: Vec<BTreeSet<usize>> = sub.simplices().iter().map(|s| s.iter().copied().collect()).collect();
        let want = sub.dim() + 1;
        let simplices: Vec<Vec<usize>> = self
            .complex
            .all_faces()
            .into_iter()
            .filter(|f| f.len() == want)
            .filter(|f| {
                let c = self.carrier_of(f);
                targets.iter().any(|t| c.iter().all(|v| t.contains(v)))
            })
            .collect();
        let refined = SimplicialComplex::from_parts(
            self.complex.ambient_dim(),
            sub.dim(),
            self.complex.vertices().to_vec(),
            simplices,
            None,
        );
        if sub.orientation().is_some() {
            orient_like(&refined, sub).expect("refined simplices lie in their carriers")
        } else {
            refined
        }
    }
}

/// Index `depth` barycentric subdivision; orientation is transported.
pub fn barycentric_subdivide(k: &SimplicialComplex, depth: usize) -> SimplicialComplex {
    subdivide_tracked(k, depth).complex
}

pub fn subdivide_once(k: &SimplicialComplex) -> Subdivision {
    subdivide_tracked(k, 1)
}

/// Repeated barycentric subdivision keeping carriers and parents relative to `k`.
pub fn subdivide_tracked(k: &SimplicialComplex, depth: usize) -> Subdivision {
    let mut acc = Subdivision::identity(k);
    for _ in 0..depth {
        let step = one_level(&acc.complex);
        acc = Subdivision {
            carrier: step.carrier.iter().map(|face| acc.carrier_of(face)).collect(),
            parent_of: step.parent_of.iter().map(|&p| acc.parent_of[p]).collect(),
            complex: step.complex,
        };
    }
    acc
}

fn one_level(k: &SimplicialComplex) -> Subdivision {
    let mut vertices: Vec<Point> = k.vertices().to_vec();
    let mut carrier: Vec<Vec<usize>> = (0..vertices.len()).map(|v| vec![v]).collect();
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for face in k.all_faces() {
        let id = if face.len() == 1 {
            face[0]
        } else {
            let pts: Vec<&[_]> = face.iter().map(|&v| k.vertex(v)).collect();
            vertices.push(centroid(&pts));
            carrier.push(face.clone());
            vertices.len() - 1
        };
        ids.insert(face, id);
    }
    let n = k.dim() + 1;
    let perms = permutations(n);
    let mut simplices = Vec::with_capacity(k.len() * perms.len());
    let mut parent_of = Vec::with_capacity(simplices.capacity());
    let mut signs = Vec::new();
    for (si, s) in k.simplices().iter().enumerate() {
        for (perm, parity) in &perms {
            let mut chain = Vec::with_capacity(n);
            let mut prefix: Vec<usize> = Vec::with_capacity(n);
            for &pos in perm {
                prefix.push(s[pos]);
                let mut key = prefix.clone();
                key.sort_unstable();
                chain.push(ids[&key]);
            }
            simplices.push(chain);
            parent_of.push(si);
            if let Some(o) = k.orientation() {
                signs.push(o[si] * parity);
            }
        }
    }
    let orientation = k.orientation().map(|_| signs);
    Subdivision {
        complex: SimplicialComplex::from_parts(k.ambient_dim(), k.dim(), vertices, simplices, orientation),
        carrier,
        parent_of,
    }
}

/// All permutations of `0..n` in lexicographic order, with parities.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let parity = super::permutation_parity(&p);
            (p, parity)
        })
        .collect()
}

/// Orients `s` (whose simplices each lie inside a simplex of the oriented
/// complex `t`) compatibly with `t`.
pub fn orient_like(s: &SimplicialComplex, t: &SimplicialComplex) -> Result<SimplicialComplex, GeomError> {
    let t_signs = t.orientation().ok_or(GeomError::NotOrientableInput)?;
    let boxes: Vec<BBox> = (0..t.len()).map(|i| BBox::of(&t.points_of(i))).collect();
    let mut signs = Vec::with_capacity(s.len());
    for si in 0..s.len() {
        let pts = s.points_of(si);
        let c = centroid(&pts);
        let probe = BBox::of(&[c.as_slice()]);
        let found = (0..t.len()).find(|&ti| boxes[ti].overlaps(&probe) && convex::hull_in_simplex(&pts, &t.points_of(ti)));
        let Some(ti) = found else {
            return Err(GeomError::NotSubcomplex(s.simplex(si).to_vec()));
        };
        let tp = t.points_of(ti);
        let m: linalg::Matrix = pts.iter().map(|p| barycentric(&tp, p).expect("inside carrier")).collect();
        let d = sign(&linalg::det(&m)) as i8;
        if d == 0 {
            return Err(GeomError::DegenerateSimplex { simplex: si });
        }
        signs.push(d * t_signs[ti]);
    }
    let mut out = s.clone();
    out.set_orientation_unchecked(Some(signs));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{boundary_subcomplex, build_complex, orient};
    use crate::rational::ipoint;

    fn triangle() -> SimplicialComplex {
        build_complex(2, vec![ipoint(&[0, 0]), ipoint(&[1, 0]), ipoint(&[0, 1])], vec![vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn simplex_counts() {
        assert_eq!(barycentric_subdivide(&triangle(), 1).len(), 6);
        let seg = build_complex(1, vec![ipoint(&[0]), ipoint(&[1])], vec![vec![0, 1]]).unwrap();
        assert_eq!(barycentric_subdivide(&seg, 2).len(), 4);
        assert_eq!(barycentric_subdivide(&triangle(), 0), triangle());
    }

    #[test]
    fn subdivision_is_valid_and_oriented() {
        let k = orient(&triangle()).unwrap();
        let sub = barycentric_subdivide(&k, 2);
        sub.validate().unwrap();
        let fresh = orient(&sub.without_orientation()).unwrap();
        assert_eq!(fresh.orientation(), sub.orientation());
    }

    #[test]
    fn boundary_commutes_with_subdivision() {
        let k = orient(&triangle()).unwrap();
        let tracked = subdivide_tracked(&k, 2);
        let via_sub = boundary_subcomplex(&tracked.complex).unwrap();
        let via_refine = tracked.refine_subcomplex(&boundary_subcomplex(&k).unwrap());
        let key = |c: &SimplicialComplex| {
            let mut v: Vec<(Vec<usize>, i8)> = c
                .simplices()
                .iter()
                .zip(c.orientation().unwrap())
                .map(|(s, &e)| {
                    let mut t = s.clone();
                    t.sort_unstable();
                    (t, e * crate::geom::permutation_parity(s))
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(key(&via_sub), key(&via_refine));
    }

    #[test]
    fn carriers_track_original_faces() {
        let t = subdivide_tracked(&triangle(), 2);
        assert_eq!(t.carrier[0], vec![0]);
        let interior = t.carrier.iter().filter(|c| c.len() == 3).count();
        // 1 centroid of level one plus the interior vertices of level two
        assert!(interior > 1);
        assert!(t.parent_of.iter().all(|&p| p == 0));
    }
}
