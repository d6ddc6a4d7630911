use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Signed;

use super::convex::{self, affine_rank, orientation_det, BBox};
use super::GeomError;
use crate::rational::{sign, Point, Rational};

/// A finite pure simplicial complex embedded in `R^ambient_dim` with exact
/// rational vertex coordinates.
///
/// Vertex ids index `vertices`; sub-complexes derived from a complex (its
/// boundary, sub-balls, restrictions) keep the full vertex list so ids stay
/// meaningful across them. Vertices not used by any simplex are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Point>,
    simplices: Vec<Vec<usize>>,
    orientation: Option<Vec<i8>>,
}

/// For each sorted `(n-1)`-face, the `(simplex, removed position)` pairs containing it.
pub type FacetMap = BTreeMap<Vec<usize>, Vec<(usize, usize)>>;

impl SimplicialComplex {
    /// Validates and builds a complex. See [`build_complex`].
    pub fn new(ambient_dim: usize, vertices: Vec<Point>, simplices: Vec<Vec<usize>>) -> Result<Self, GeomError> {
        let dim = match simplices.first() {
            Some(s) if !s.is_empty() => s.len() - 1,
            Some(_) => return Err(GeomError::ArityMismatch { expected: 1, found: 0 }),
            None => return Err(GeomError::Empty),
        };
        let k = Self::from_parts(ambient_dim, dim, vertices, simplices, None);
        k.validate()?;
        Ok(k)
    }

    /// Builds with an explicit dimension, allowing an empty simplex list.
    pub fn with_dim(
        ambient_dim: usize,
        dim: usize,
        vertices: Vec<Point>,
        simplices: Vec<Vec<usize>>,
    ) -> Result<Self, GeomError> {
        let k = Self::from_parts(ambient_dim, dim, vertices, simplices, None);
        k.validate()?;
        Ok(k)
    }

    /// Trusted constructor for complexes that are valid by construction.
    pub(crate) fn from_parts(
        ambient_dim: usize,
        dim: usize,
        vertices: Vec<Point>,
        simplices: Vec<Vec<usize>>,
        orientation: Option<Vec<i8>>,
    ) -> Self {
        SimplicialComplex { ambient_dim, dim, vertices, simplices, orientation }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &[Rational] {
        &self.vertices[id]
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn simplex(&self, i: usize) -> &[usize] {
        &self.simplices[i]
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn orientation(&self) -> Option<&[i8]> {
        self.orientation.as_deref()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn points_of(&self, i: usize) -> Vec<&[Rational]> {
        self.simplices[i].iter().map(|&v| self.vertices[v].as_slice()).collect()
    }

    /// Vertex ids used by at least one simplex, ascending.
    pub fn used_vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.simplices.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// Returns a copy with the given orientation signs, checking coherence.
    pub fn with_orientation(&self, signs: Vec<i8>) -> Result<Self, GeomError> {
        let mut k = self.clone();
        k.orientation = Some(signs);
        k.check_coherence()?;
        Ok(k)
    }

    pub fn without_orientation(&self) -> Self {
        let mut k = self.clone();
        k.orientation = None;
        k
    }

    pub(crate) fn set_orientation_unchecked(&mut self, signs: Option<Vec<i8>>) {
        self.orientation = signs;
    }

    /// Sub-complex formed by the listed top simplices (same vertex list).
    pub fn select(&self, indices: &[usize]) -> Self {
        let simplices = indices.iter().map(|&i| self.simplices[i].clone()).collect();
        let orientation = self.orientation.as_ref().map(|o| indices.iter().map(|&i| o[i]).collect());
        Self::from_parts(self.ambient_dim, self.dim, self.vertices.clone(), simplices, orientation)
    }

    /// Index of the top simplex with exactly this vertex set.
    pub fn find_simplex(&self, vertices: &[usize]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.simplices.iter().position(|s| {
            let mut t = s.clone();
            t.sort_unstable();
            t == key
        })
    }

    pub fn facet_map(&self) -> FacetMap {
        let mut map: FacetMap = BTreeMap::new();
        if self.dim == 0 {
            return map;
        }
        for (si, s) in self.simplices.iter().enumerate() {
            for pos in 0..s.len() {
                let mut face: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != pos).map(|(_, &v)| v).collect();
                face.sort_unstable();
                map.entry(face).or_default().push((si, pos));
            }
        }
        map
    }

    /// Every face of every dimension, as sorted vertex tuples.
    pub fn all_faces(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for s in &self.simplices {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            let n = sorted.len();
            for mask in 1u32..(1 << n) {
                let face: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| sorted[i]).collect();
                out.insert(face);
            }
        }
        out
    }

    /// `true` when `face` (any order) is a face of some top simplex.
    pub fn has_face(&self, face: &[usize]) -> bool {
        self.simplices.iter().any(|s| face.iter().all(|v| s.contains(v)))
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        if self.dim > self.ambient_dim {
            return Err(GeomError::DimensionTooLarge { dim: self.dim, ambient: self.ambient_dim });
        }
        for p in &self.vertices {
            if p.len() != self.ambient_dim {
                return Err(GeomError::ArityMismatch { expected: self.ambient_dim, found: p.len() });
            }
        }
        for (si, s) in self.simplices.iter().enumerate() {
            if s.len() != self.dim + 1 {
                return Err(GeomError::ArityMismatch { expected: self.dim + 1, found: s.len() });
            }
            for &v in s {
                if v >= self.vertices.len() {
                    return Err(GeomError::IndexOutOfRange { index: v, len: self.vertices.len() });
                }
            }
            let distinct: BTreeSet<usize> = s.iter().copied().collect();
            if distinct.len() != s.len() {
                return Err(GeomError::RepeatedVertex { simplex: si });
            }
            if affine_rank(&self.points_of(si)) != self.dim {
                return Err(GeomError::DegenerateSimplex { simplex: si });
            }
        }
        for (face, cofaces) in self.facet_map() {
            if cofaces.len() > 2 {
                return Err(GeomError::NonManifoldFace { face });
            }
        }
        self.check_embedded()?;
        if let Some(o) = &self.orientation {
            if o.len() != self.simplices.len() {
                return Err(GeomError::ArityMismatch { expected: self.simplices.len(), found: o.len() });
            }
            self.check_coherence()?;
        }
        Ok(())
    }

    /// Pairwise test that closed simplices meet exactly in their shared face.
    fn check_embedded(&self) -> Result<(), GeomError> {
        let boxes: Vec<BBox> = (0..self.len()).map(|i| BBox::of(&self.points_of(i))).collect();
        for i in 0..self.len() {
            let a = self.points_of(i);
            for j in (i + 1)..self.len() {
                if !boxes[i].overlaps(&boxes[j]) {
                    continue;
                }
                let outside: Vec<usize> = (0..a.len()).filter(|&k| !self.simplices[j].contains(&self.simplices[i][k])).collect();
                let b = self.points_of(j);
                if let Some(m) = convex::meet(&a, &b, Some(&outside), None) {
                    if m.is_proper() || outside.len() == a.len() {
                        return Err(GeomError::ImproperIntersection { first: i, second: j });
                    }
                }
            }
        }
        Ok(())
    }

    /// Sign induced on the sorted face obtained by dropping position `pos` of simplex `si`.
    pub(crate) fn induced_sign(&self, si: usize, pos: usize, eps: i8) -> i8 {
        let face: Vec<usize> = self.simplices[si].iter().enumerate().filter(|&(j, _)| j != pos).map(|(_, &v)| v).collect();
        let base = if pos % 2 == 0 { 1 } else { -1 };
        eps * base * permutation_parity(&face)
    }

    fn check_coherence(&self) -> Result<(), GeomError> {
        let Some(o) = &self.orientation else {
            return Ok(());
        };
        if o.iter().any(|&e| e != 1 && e != -1) {
            return Err(GeomError::IncoherentOrientation { face: vec![] });
        }
        for (face, cofaces) in self.facet_map() {
            if let [(a, pa), (b, pb)] = cofaces[..] {
                if self.induced_sign(a, pa, o[a]) == self.induced_sign(b, pb, o[b]) {
                    return Err(GeomError::IncoherentOrientation { face });
                }
            }
        }
        Ok(())
    }

    /// Top simplices grouped into classes connected through shared `(n-1)`-faces.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for cofaces in self.facet_map().values() {
            if let [(a, _), (b, _)] = cofaces[..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut seen = vec![false; self.len()];
        let mut comps = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(s) = queue.pop_front() {
                for &t in &adj[s] {
                    if !seen[t] {
                        seen[t] = true;
                        comp.push(t);
                        queue.push_back(t);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Parity (+1 / -1) of the permutation sorting `seq`.
pub fn permutation_parity(seq: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Builds and fully validates a complex from raw vertex and simplex lists.
pub fn build_complex(
    ambient_dim: usize,
    vertices: Vec<Point>,
    top_simplices: Vec<Vec<usize>>,
) -> Result<SimplicialComplex, GeomError> {
    SimplicialComplex::new(ambient_dim, vertices, top_simplices)
}

/// The `(n-1)`-faces lying in exactly one top simplex.
///
/// Face tuples keep the order they have inside their coface, and an oriented
/// input yields the induced boundary orientation.
pub fn boundary_subcomplex(k: &SimplicialComplex) -> Result<SimplicialComplex, GeomError> {
    if k.dim() == 0 {
        return Err(GeomError::DimensionTooSmall);
    }
    let mut faces = Vec::new();
    let mut signs = Vec::new();
    for cofaces in k.facet_map().values() {
        if let [(si, pos)] = cofaces[..] {
            let face: Vec<usize> = k.simplex(si).iter().enumerate().filter(|&(j, _)| j != pos).map(|(_, &v)| v).collect();
            faces.push(face);
            if let Some(o) = k.orientation() {
                signs.push(if pos % 2 == 0 { o[si] } else { -o[si] });
            }
        }
    }
    let orientation = k.orientation().map(|_| signs);
    Ok(SimplicialComplex::from_parts(k.ambient_dim(), k.dim() - 1, k.vertices().to_vec(), faces, orientation))
}

/// Assigns coherent signs to the top simplices.
///
/// Full-dimensional complexes are normalized so that every sign matches the
/// sign of the ordered vertex determinant (positively oriented); otherwise the
/// first simplex receives `+1`.
pub fn orient(k: &SimplicialComplex) -> Result<SimplicialComplex, GeomError> {
    if k.is_empty() {
        return Ok(k.with_orientation(Vec::new())?);
    }
    if k.dim() == 0 {
        let mut out = k.clone();
        out.set_orientation_unchecked(Some(vec![1; k.len()]));
        return Ok(out);
    }
    if k.strong_components().len() != 1 {
        return Err(GeomError::NotConnected);
    }
    let facets = k.facet_map();
    let mut per_simplex: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); k.len()];
    for cofaces in facets.values() {
        if let [(a, pa), (b, pb)] = cofaces[..] {
            per_simplex[a].push((pa, b, pb));
            per_simplex[b].push((pb, a, pa));
        }
    }
    let first = if k.is_full_dimensional() {
        sign(&orientation_det(&k.points_of(0))) as i8
    } else {
        1
    };
    let mut signs = vec![0i8; k.len()];
    signs[0] = first;
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        for &(ps, t, pt) in &per_simplex[s] {
            let want = -k.induced_sign(s, ps, signs[s]);
            let eps_t = if k.induced_sign(t, pt, 1) == want { 1 } else { -1 };
            if signs[t] == 0 {
                signs[t] = eps_t;
                queue.push_back(t);
            } else if signs[t] != eps_t {
                return Err(GeomError::NotOrientableInput);
            }
        }
    }
    if k.is_full_dimensional() {
        debug_assert!((0..k.len()).all(|i| orientation_det(&k.points_of(i)).signum() == Rational::from_integer(signs[i].into())));
    }
    let mut out = k.clone();
    out.set_orientation_unchecked(Some(signs));
    Ok(out)
}
