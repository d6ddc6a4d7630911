use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::subdivide::Subdivision;
use super::{boundary_subcomplex, GeomError, SimplicialComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BallCertificate {
    /// A single vertex, the 0-ball.
    Point,
    VerifiedArc,
    VerifiedDisk,
    /// Asserted by the generator that built it; used for 3-balls.
    ByConstruction,
}

/// A sub-complex of a parent complex certified to be a PL ball.
///
/// The inner complex shares the parent's vertex list, so vertex ids agree.
#[derive(Debug, Clone, PartialEq)]
pub struct SubBall {
    complex: SimplicialComplex,
    certificate: BallCertificate,
}

impl SubBall {
    /// Certifies the given faces of `parent` as a ball (dimensions 0 to 2).
    pub fn from_simplices(parent: &SimplicialComplex, tuples: Vec<Vec<usize>>) -> Result<Self, GeomError> {
        let complex = collect_faces(parent, tuples)?;
        let certificate = certify(&complex)?;
        Ok(SubBall { complex, certificate })
    }

    /// Wraps faces of `parent` as a ball without running recognition.
    pub fn by_construction(parent: &SimplicialComplex, tuples: Vec<Vec<usize>>) -> Result<Self, GeomError> {
        let complex = collect_faces(parent, tuples)?;
        Ok(SubBall { complex, certificate: BallCertificate::ByConstruction })
    }

    /// Certifies a whole complex as a ball.
    pub fn whole(k: &SimplicialComplex) -> Result<Self, GeomError> {
        let certificate = if k.dim() == 3 { BallCertificate::ByConstruction } else { certify(k)? };
        if k.dim() == 3 {
            let b = boundary_subcomplex(k)?;
            let chi = euler_characteristic(&b);
            if chi != 2 || k.strong_components().len() != 1 {
                return Err(GeomError::NotABall("boundary is not a sphere".into()));
            }
        }
        Ok(SubBall { complex: k.clone(), certificate })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    pub fn certificate(&self) -> BallCertificate {
        self.certificate
    }

    /// The boundary sphere; a 0-ball has none.
    pub fn boundary(&self) -> Result<SimplicialComplex, GeomError> {
        boundary_subcomplex(&self.complex)
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.complex.used_vertices().into_iter().collect()
    }

    pub fn boundary_vertex_set(&self) -> BTreeSet<usize> {
        match self.boundary() {
            Ok(b) => b.used_vertices().into_iter().collect(),
            Err(_) => BTreeSet::new(),
        }
    }

    pub fn interior_vertices(&self) -> Vec<usize> {
        let b = self.boundary_vertex_set();
        self.vertex_set().into_iter().filter(|v| !b.contains(v)).collect()
    }

    pub fn has_face(&self, face: &[usize]) -> bool {
        self.complex.has_face(face)
    }

    /// The same ball in a refinement of its parent.
    pub fn refine(&self, sub: &Subdivision) -> SubBall {
        SubBall { complex: sub.refine_subcomplex(&self.complex), certificate: self.certificate }
    }

    pub fn with_orientation(&self, complex: SimplicialComplex) -> SubBall {
        SubBall { complex, certificate: self.certificate }
    }
}

fn collect_faces(parent: &SimplicialComplex, tuples: Vec<Vec<usize>>) -> Result<SimplicialComplex, GeomError> {
    let arity = tuples.first().map(Vec::len).ok_or(GeomError::Empty)?;
    for t in &tuples {
        if t.len() != arity {
            return Err(GeomError::ArityMismatch { expected: arity, found: t.len() });
        }
        if !parent.has_face(t) {
            return Err(GeomError::NotSubcomplex(t.clone()));
        }
    }
    let mut seen = BTreeSet::new();
    for t in &tuples {
        let mut key = t.clone();
        key.sort_unstable();
        if !seen.insert(key) {
            return Err(GeomError::NotABall("repeated simplex".into()));
        }
    }
    Ok(SimplicialComplex::from_parts(parent.ambient_dim(), arity - 1, parent.vertices().to_vec(), tuples, None))
}

fn certify(k: &SimplicialComplex) -> Result<BallCertificate, GeomError> {
    match k.dim() {
        0 if k.len() == 1 => Ok(BallCertificate::Point),
        0 => Err(GeomError::NotABall("a 0-ball is a single vertex".into())),
        1 => check_arc(k).map(|_| BallCertificate::VerifiedArc),
        2 => check_disk(k).map(|_| BallCertificate::VerifiedDisk),
        _ => Err(GeomError::NotABall("3-balls must be certified by construction".into())),
    }
}

fn vertex_connected(edges: &[(usize, usize)]) -> bool {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let Some(&start) = adj.keys().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == adj.len()
}

fn degrees(edges: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    let mut deg = BTreeMap::new();
    for &(a, b) in edges {
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
    }
    deg
}

fn check_arc(k: &SimplicialComplex) -> Result<(), GeomError> {
    let edges: Vec<(usize, usize)> = k.simplices().iter().map(|s| (s[0], s[1])).collect();
    if !vertex_connected(&edges) {
        return Err(GeomError::NotABall("arc is not connected".into()));
    }
    let deg = degrees(&edges);
    let ends = deg.values().filter(|&&d| d == 1).count();
    if ends != 2 || deg.values().any(|&d| d > 2) {
        return Err(GeomError::NotABall("not a path".into()));
    }
    Ok(())
}

/// `true` when the edge set is a single path or a single cycle.
fn is_path_or_cycle(edges: &[(usize, usize)]) -> bool {
    if !vertex_connected(edges) {
        return false;
    }
    let deg = degrees(edges);
    let ends = deg.values().filter(|&&d| d == 1).count();
    deg.values().all(|&d| d <= 2) && (ends == 0 || ends == 2)
}

fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    let mut chi = 0i64;
    for f in k.all_faces() {
        chi += if f.len() % 2 == 1 { 1 } else { -1 };
    }
    chi
}

fn check_disk(k: &SimplicialComplex) -> Result<(), GeomError> {
    let facets = k.facet_map();
    if facets.values().any(|c| c.len() > 2) {
        return Err(GeomError::NotABall("edge in three triangles".into()));
    }
    if k.strong_components().len() != 1 {
        return Err(GeomError::NotABall("not strongly connected".into()));
    }
    for v in k.used_vertices() {
        let link: Vec<(usize, usize)> = k
            .simplices()
            .iter()
            .filter(|s| s.contains(&v))
            .map(|s| {
                let o: Vec<usize> = s.iter().copied().filter(|&w| w != v).collect();
                (o[0], o[1])
            })
            .collect();
        if !is_path_or_cycle(&link) {
            return Err(GeomError::NotABall(format!("link of vertex {v} is not a path or cycle")));
        }
    }
    if euler_characteristic(k) != 1 {
        return Err(GeomError::NotABall("Euler characteristic is not 1".into()));
    }
    let boundary: Vec<(usize, usize)> =
        facets.iter().filter(|(_, c)| c.len() == 1).map(|(f, _)| (f[0], f[1])).collect();
    let deg = degrees(&boundary);
    if boundary.is_empty() || !vertex_connected(&boundary) || deg.values().any(|&d| d != 2) {
        return Err(GeomError::NotABall("boundary is not a single circle".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{barycentric_subdivide, build_complex};
    use crate::rational::ipoint;

    fn square() -> SimplicialComplex {
        build_complex(
            2,
            vec![ipoint(&[0, 0]), ipoint(&[1, 0]), ipoint(&[1, 1]), ipoint(&[0, 1]), ipoint(&[2, 0]), ipoint(&[2, 1])],
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![1, 4, 5], vec![1, 5, 2]],
        )
        .unwrap()
    }

    #[test]
    fn disks_and_arcs() {
        let k = square();
        assert_eq!(SubBall::whole(&k).unwrap().certificate(), BallCertificate::VerifiedDisk);
        let one = SubBall::from_simplices(&k, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(one.interior_vertices(), Vec::<usize>::new());
        let arc = SubBall::from_simplices(&k, vec![vec![0, 1], vec![1, 4]]).unwrap();
        assert_eq!(arc.certificate(), BallCertificate::VerifiedArc);
        assert_eq!(arc.interior_vertices(), vec![1]);
        let pt = SubBall::from_simplices(&k, vec![vec![3]]).unwrap();
        assert_eq!(pt.certificate(), BallCertificate::Point);
    }

    #[test]
    fn rejects_non_balls() {
        let k = square();
        // two triangles meeting at a single vertex
        assert!(SubBall::from_simplices(&k, vec![vec![0, 2, 3], vec![1, 4, 5]]).is_err());
        // disconnected arc
        assert!(SubBall::from_simplices(&k, vec![vec![0, 3], vec![4, 5]]).is_err());
        // a closed loop is not an arc
        assert!(SubBall::from_simplices(&k, vec![vec![0, 1], vec![1, 2], vec![2, 0]]).is_err());
        // not a face of the parent
        assert!(matches!(SubBall::from_simplices(&k, vec![vec![0, 4]]), Err(GeomError::NotSubcomplex(_))));
    }

    #[test]
    fn annulus_is_not_a_disk() {
        let v = vec![
            ipoint(&[0, 0]),
            ipoint(&[3, 0]),
            ipoint(&[3, 3]),
            ipoint(&[0, 3]),
            ipoint(&[1, 1]),
            ipoint(&[2, 1]),
            ipoint(&[2, 2]),
            ipoint(&[1, 2]),
        ];
        let mut s = Vec::new();
        for i in 0..4 {
            let j = (i + 1) % 4;
            s.push(vec![i, j, 4 + i]);
            s.push(vec![j, 4 + j, 4 + i]);
        }
        let k = build_complex(2, v, s).unwrap();
        assert!(SubBall::whole(&k).is_err());
    }

    #[test]
    fn subdivided_disk_is_still_a_disk() {
        let k = barycentric_subdivide(&square(), 1);
        assert!(SubBall::whole(&k).is_ok());
    }
}
