use super::{FixedComponent, FixedPointSet, FixedShape};
use crate::geom::polytope::slice_vertices;
use crate::linalg::Matrix;
use crate::plmap::PLMap;
use crate::rational::combine;

/// All fixed points of a PL map `f: X → R^n` with `X ⊂ R^n`, exactly.
///
/// On each top simplex the fixed points are `{λ ≥ 0, Σλ = 1 : Σ λ_i (f(v_i) - v_i) = 0}`,
/// a polytope whose vertices are enumerated directly; singular systems give
/// segments or larger polytopes. Pieces repeated on shared faces, or
/// contained in a larger piece, are dropped. Components are sorted.
///
/// Panics when the target dimension differs from the domain's ambient dimension.
pub fn exact_pl_fixed_points(f: &PLMap) -> FixedPointSet {
    let x = f.domain();
    assert_eq!(f.target_dim(), x.ambient_dim(), "fixed points need a map into the domain's ambient space");
    let mut found: Vec<FixedComponent> = Vec::new();
    for si in 0..x.len() {
        let pts = x.points_of(si);
        let imgs = f.image_points(si);
        let eq: Matrix = (0..x.ambient_dim()).map(|a| (0..pts.len()).map(|i| &imgs[i][a] - &pts[i][a]).collect()).collect();
        let verts = slice_vertices(pts.len(), &eq, &vec![]);
        let coords = verts.iter().map(|v| combine(&v.lambda, &pts)).collect();
        if let Some(shape) = FixedShape::from_vertices(coords) {
            found.push(FixedComponent { carrier: si, shape });
        }
    }
    // larger pieces first, so smaller ones inside them can be dropped
    found.sort_by(|a, b| b.shape.vertices().len().cmp(&a.shape.vertices().len()).then(a.shape.cmp(&b.shape)));
    let mut kept: Vec<FixedComponent> = Vec::new();
    for c in found {
        let inside = kept.iter().any(|k| c.shape.vertices().iter().all(|p| k.shape.contains(p)));
        if !inside {
            kept.push(c);
        }
    }
    kept.sort_by(|a, b| a.shape.cmp(&b.shape));
    FixedPointSet { components: kept, exact: true }
}
