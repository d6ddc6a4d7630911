use super::shapes::{
    diamond_circle, diamond_ring_disk, octagon_fan, octagon_height, octagon_ring, octagon_strips, tetrahedron, unit_interval,
    unit_square, upper_arc,
};
use super::{DegreeTarget, Expected, ExpectedValue, GeneratorSpec, HalfspaceFrame, Provenance, Scenario, ScenarioError, Side};
use crate::geom::{boundary_subcomplex, build_complex, orient, subdivide_once, SimplicialComplex, SubBall};
use crate::hypotheses::Theorem;
use crate::plmap::PLMap;
use crate::rational::{int, ipoint, parse_rational, point, rat, Point, Rational};

use ExpectedValue::{Conclusion, Degree, FixedPoints, OnlyFailure, UniqueFixedPoint};
use Provenance::{Forced, FromPaper, OracleDerived};

fn exp(value: ExpectedValue, provenance: Provenance) -> Expected {
    Expected::new(value, provenance)
}

fn in_boundary(x: &SimplicialComplex, tuples: Vec<Vec<usize>>) -> Result<SubBall, ScenarioError> {
    Ok(SubBall::from_simplices(&boundary_subcomplex(x)?, tuples)?)
}

fn spec(name: &str) -> Option<GeneratorSpec> {
    Some(GeneratorSpec { name: name.to_string(), params: serde_json::Map::new() })
}

fn scenario(name: &str, x: SimplicialComplex, map: PLMap) -> Scenario {
    Scenario { name: name.to_string(), x, target: None, y: None, d: None, e: None, map, generator: None, expected: Vec::new() }
}

fn negate(p: &[Rational]) -> Point {
    p.iter().map(|c| -c.clone()).collect()
}

/// Rotation by π of the octagon fan, with `Y` the upper boundary arc.
pub fn gen_rotation_disk() -> Scenario {
    let x = octagon_fan();
    let map = PLMap::from_vertex_fn(&x, 2, negate);
    let mut s = scenario("rotation_disk", x.clone(), map);
    s.y = Some(in_boundary(&x, upper_arc()).expect("upper arc is an arc"));
    s.d = Some(SubBall::from_simplices(&x, vec![vec![8, 1, 2]]).expect("fan triangle"));
    s.generator = spec("rotation_pi");
    s.expected = vec![
        exp(Degree { target: DegreeTarget::Injective, value: 1 }, FromPaper),
        exp(Degree { target: DegreeTarget::Boundary, value: -1 }, FromPaper),
        exp(UniqueFixedPoint { point: vec!["0".into(), "0".into()] }, Forced),
        exp(Conclusion { theorem: Theorem::T48, guaranteed: true }, OracleDerived),
        exp(Conclusion { theorem: Theorem::Cor49, guaranteed: true }, OracleDerived),
        exp(Conclusion { theorem: Theorem::T47, guaranteed: true }, OracleDerived),
        exp(Conclusion { theorem: Theorem::T33, guaranteed: true }, OracleDerived),
    ];
    s
}

/// A square ball `D` resting on the axis with `E` its bottom edge.
pub fn gen_halfspace(side: Side) -> Scenario {
    let x = unit_square();
    let map = match side {
        Side::Plus => PLMap::identity(&x),
        Side::Minus => PLMap::from_vertex_fn(&x, 2, |p| vec![p[0].clone(), -p[1].clone()]),
    };
    let mut s = halfspace_from_map(&format!("halfspace_{side}"), map).expect("generated maps respect the half-space");
    s.generator = spec(if side == Side::Plus { "identity" } else { "reflection" });
    let sign = if side == Side::Plus { 1 } else { -1 };
    s.expected = vec![
        exp(Degree { target: DegreeTarget::Injective, value: sign }, FromPaper),
        exp(Degree { target: DegreeTarget::Face, value: 1 }, FromPaper),
    ];
    s
}

/// Wraps a map on the unit square as a half-space scenario, refusing maps
/// whose image of `D` leaves both closed half-spaces or moves `E` off the axis.
pub fn halfspace_from_map(name: &str, map: PLMap) -> Result<Scenario, ScenarioError> {
    let x = unit_square();
    let used = x.used_vertices();
    if HalfspaceFrame::containing(used.iter().map(|&v| map.image(v))).is_none() {
        return Err(ScenarioError::StraddlesAxis);
    }
    let e = in_boundary(&x, vec![vec![0, 1]])?;
    if e.vertex_set().iter().any(|&v| HalfspaceFrame::q(map.image(v)) != int(0)) {
        return Err(ScenarioError::StraddlesAxis);
    }
    let mut s = scenario(name, x.clone(), map);
    s.d = Some(SubBall::whole(&x)?);
    s.e = Some(e);
    Ok(s)
}

/// Ringed octagon with the π-rotation on both rings and the center lifted to
/// `(0, 3/5)`: bijective on a half-annulus `D` under an edge of `Y` but not
/// injective overall.
pub fn gen_theorem47() -> Scenario {
    let x = octagon_ring();
    let lifted = vec![int(0), rat(3, 5)];
    let images: Vec<Point> = (0..x.vertices().len()).map(|v| if v == 16 { lifted.clone() } else { negate(x.vertex(v)) }).collect();
    let map = PLMap::new(x.clone(), 2, images).expect("one image per vertex");
    let mut s = scenario("theorem47", x.clone(), map);
    s.y = Some(in_boundary(&x, upper_arc()).expect("upper arc is an arc"));
    s.d = Some(SubBall::from_simplices(&x, vec![vec![1, 2, 10], vec![1, 10, 9]]).expect("half-annulus is a disk"));
    s.expected = vec![
        exp(Degree { target: DegreeTarget::Injective, value: 1 }, OracleDerived),
        exp(Degree { target: DegreeTarget::Boundary, value: -1 }, OracleDerived),
        exp(Conclusion { theorem: Theorem::T47, guaranteed: true }, OracleDerived),
        exp(Conclusion { theorem: Theorem::T48, guaranteed: false }, OracleDerived),
        exp(FixedPoints { nonempty: true }, OracleDerived),
    ];
    s
}

/// A simplicial map from a `4·max(|d|, 1)`-gon onto the diamond wrapping `d` times.
pub fn gen_degree_d_circle_map(d: i64) -> Result<Scenario, ScenarioError> {
    if d.abs() > 2 {
        return Err(ScenarioError::DegreeOutOfRange(d));
    }
    let k = d.unsigned_abs().max(1) as usize;
    let domain = diamond_circle(k);
    let target = orient(&diamond_circle(1))?;
    let corner = |j: usize| -> usize {
        match d.signum() {
            0 => 0,
            1 => j % 4,
            _ => (4 - j % 4) % 4,
        }
    };
    let images = (0..4 * k).map(|j| target.vertex(corner(j)).to_vec()).collect();
    let map = PLMap::new(domain.clone(), 2, images)?;
    let mut s = scenario(&format!("circle_deg_{d}"), domain, map);
    s.target = Some(target);
    let provenance = if d.abs() == 2 { OracleDerived } else { Forced };
    s.expected = vec![exp(Degree { target: DegreeTarget::Sphere, value: d }, provenance)];
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeKind {
    Translation,
    DegreeMismatch,
    PreimageViolation,
}

impl NegativeKind {
    pub const ALL: [NegativeKind; 3] = [NegativeKind::Translation, NegativeKind::DegreeMismatch, NegativeKind::PreimageViolation];

    pub fn name(self) -> &'static str {
        match self {
            NegativeKind::Translation => "translation",
            NegativeKind::DegreeMismatch => "degree_mismatch",
            NegativeKind::PreimageViolation => "preimage_violation",
        }
    }
}

/// Instances that break exactly one hypothesis of one theorem.
pub fn gen_negative_control(kind: NegativeKind) -> Scenario {
    let name = format!("negative_{}", kind.name());
    match kind {
        NegativeKind::Translation => {
            let x = octagon_fan();
            let map = PLMap::from_vertex_fn(&x, 2, |p| vec![&p[0] + int(10), p[1].clone()]);
            let mut s = scenario(&name, x.clone(), map);
            s.y = Some(in_boundary(&x, upper_arc()).expect("upper arc"));
            s.expected = vec![
                exp(OnlyFailure { theorem: Theorem::T33, check: 1 }, Forced),
                exp(Conclusion { theorem: Theorem::T33, guaranteed: false }, Forced),
                exp(FixedPoints { nonempty: false }, Forced),
            ];
            s
        }
        NegativeKind::PreimageViolation => {
            let x = octagon_fan();
            // the top vertex stays put, so a point of int Y maps into Y
            let images = (0..x.vertices().len()).map(|v| if v == 2 { x.vertex(v).to_vec() } else { negate(x.vertex(v)) }).collect();
            let map = PLMap::new(x.clone(), 2, images).expect("one image per vertex");
            let mut s = scenario(&name, x.clone(), map);
            s.y = Some(in_boundary(&x, upper_arc()).expect("upper arc"));
            s.expected = vec![
                exp(OnlyFailure { theorem: Theorem::T35, check: 0 }, OracleDerived),
                exp(Conclusion { theorem: Theorem::T35, guaranteed: false }, OracleDerived),
            ];
            s
        }
        NegativeKind::DegreeMismatch => {
            // (x, y) -> (x, y - 2h(x)) folds Y onto the lower arc fixing both ends;
            // the strips make it affine on every simplex.
            let strips = octagon_strips();
            let sub = subdivide_once(&strips);
            let x = sub.complex.clone();
            let map = PLMap::from_vertex_fn(&x, 2, |p| vec![p[0].clone(), &p[1] - int(2) * octagon_height(&p[0])]);
            let arc = in_boundary(&strips, upper_arc()).expect("upper arc");
            let y = in_boundary(&x, arc.refine(&sub).complex().simplices().to_vec()).expect("refined arc");
            let find = |p: Point| x.vertices().iter().position(|q| *q == p).expect("vertex of the subdivision");
            let (p1, p2, p6) = (x.vertex(1).to_vec(), x.vertex(2).to_vec(), x.vertex(6).to_vec());
            let mid = find(p1.iter().zip(&p2).map(|(a, b)| (a + b) * rat(1, 2)).collect());
            let bary = find((0..2).map(|i| (&p1[i] + &p2[i] + &p6[i]) * rat(1, 3)).collect());
            let d = SubBall::from_simplices(&x, vec![vec![1, mid, bary], vec![mid, 2, bary]]).expect("two small triangles");
            let mut s = scenario(&name, x, map);
            s.y = Some(y);
            s.d = Some(d);
            s.expected = vec![
                exp(OnlyFailure { theorem: Theorem::T47, check: 3 }, OracleDerived),
                exp(Degree { target: DegreeTarget::Injective, value: 1 }, OracleDerived),
                exp(Degree { target: DegreeTarget::Boundary, value: 1 }, Forced),
            ];
            s
        }
    }
}

/// Identity and contraction instances of the boundary-retract theorem in dimensions 1 to 3.
pub fn gen_t33_instances() -> Vec<Scenario> {
    let mut out = Vec::new();
    let t33 = |nonempty| vec![exp(Conclusion { theorem: Theorem::T33, guaranteed: true }, OracleDerived), exp(FixedPoints { nonempty }, FromPaper)];

    let x = octagon_fan();
    let mut s = scenario("t33_identity", x.clone(), PLMap::identity(&x));
    s.y = Some(in_boundary(&x, upper_arc()).expect("upper arc"));
    s.generator = spec("identity");
    s.expected = t33(true);
    out.push(s);

    let half = |p: &[Rational]| p.iter().map(|c| c * rat(1, 2)).collect::<Point>();
    let mut s = scenario("t33_half", x.clone(), PLMap::from_vertex_fn(&x, 2, half));
    s.y = Some(in_boundary(&x, vec![vec![0, 1]]).expect("single edge"));
    s.expected = t33(true);
    out.push(s);

    let sq = unit_square();
    let c = [rat(1, 3), rat(1, 4)];
    let map = PLMap::from_vertex_fn(&sq, 2, |p| (0..2).map(|i| (&p[i] + &c[i]) * rat(1, 2)).collect());
    let mut s = scenario("t33_square", sq.clone(), map);
    s.y = Some(in_boundary(&sq, vec![vec![0, 1]]).expect("bottom edge"));
    s.expected = t33(true);
    out.push(s);

    let seg = unit_interval(2);
    let map = PLMap::from_vertex_fn(&seg, 1, |p| vec![int(1) - &p[0]]);
    let mut s = scenario("t33_interval", seg.clone(), map);
    s.y = Some(in_boundary(&seg, vec![vec![0]]).expect("endpoint"));
    s.expected = t33(true);
    out.push(s);

    let tet = tetrahedron();
    let map = PLMap::from_vertex_fn(&tet, 3, |p| p.iter().map(|c| (c + rat(1, 4)) * rat(1, 2)).collect());
    let mut s = scenario("t33_tetrahedron", tet.clone(), map);
    s.y = Some(in_boundary(&tet, vec![vec![1, 2, 3]]).expect("a facet"));
    s.expected = t33(true);
    out.push(s);

    // a fold lifting an interior vertex above the top edge: part of X leaves X
    // through Y while the other three sides are never reached
    let pts = vec![ipoint(&[-1, -1]), ipoint(&[1, -1]), ipoint(&[1, 1]), ipoint(&[-1, 1]), point(&[(0, 1), (1, 2)])];
    let sq = build_complex(2, pts, vec![vec![4, 2, 3], vec![4, 3, 0], vec![4, 0, 1], vec![4, 1, 2]]).expect("fan square");
    let mut images: Vec<Point> = sq.vertices()[..4].iter().map(|p| p.iter().map(|c| c * rat(1, 2)).collect()).collect();
    images.push(point(&[(0, 1), (3, 2)]));
    let mut s = scenario("t33_bump", sq.clone(), PLMap::new(sq.clone(), 2, images).expect("one image per vertex"));
    s.y = Some(in_boundary(&sq, vec![vec![2, 3]]).expect("top edge"));
    s.expected = t33(true);
    out.push(s);
    out
}

/// The eight symmetries of the ringed diamond, then two of them with the
/// center pushed off the origin.
pub fn gen_relative_disk_maps() -> Vec<Scenario> {
    let x = diamond_ring_disk();
    let mats: [[i64; 4]; 8] =
        [[1, 0, 0, 1], [0, -1, 1, 0], [-1, 0, 0, -1], [0, 1, -1, 0], [1, 0, 0, -1], [0, 1, 1, 0], [-1, 0, 0, 1], [0, -1, -1, 0]];
    let apply = |m: &[i64; 4], p: &[Rational]| -> Point {
        vec![int(m[0]) * &p[0] + int(m[1]) * &p[1], int(m[2]) * &p[0] + int(m[3]) * &p[1]]
    };
    let mut out = Vec::new();
    let interior = SubBall::from_simplices(&x, vec![vec![8, 4, 5]]).expect("inner triangle");
    let mut push = |name: String, images: Vec<Point>, det: i64| {
        let map = PLMap::new(x.clone(), 2, images).expect("one image per vertex");
        let mut s = scenario(&name, x.clone(), map);
        s.d = Some(interior.clone());
        s.expected = vec![
            exp(Degree { target: DegreeTarget::Relative, value: det }, FromPaper),
            exp(Degree { target: DegreeTarget::Injective, value: det }, OracleDerived),
        ];
        out.push(s);
    };
    for (i, m) in mats.iter().enumerate() {
        let det = m[0] * m[3] - m[1] * m[2];
        push(format!("relative_disk_{i}"), x.vertices().iter().map(|p| apply(m, p)).collect(), det);
    }
    for (i, m) in [mats[0], mats[1]].iter().enumerate() {
        let shifted = vec![rat(1, 10), rat(-1, 20)];
        let images = (0..x.vertices().len()).map(|v| apply(m, if v == 8 { &shifted } else { x.vertex(v) })).collect();
        push(format!("relative_disk_{}", 8 + i), images, 1);
    }
    out
}

/// Every name accepted by [`gen_by_name`].
pub fn scenario_names() -> Vec<String> {
    let mut names: Vec<String> = ["rotation_disk", "halfspace_plus", "halfspace_minus", "theorem47"].iter().map(|s| s.to_string()).collect();
    names.extend((-2..=2).map(|d| format!("circle_deg_{d}")));
    names.extend(NegativeKind::ALL.iter().map(|k| format!("negative_{}", k.name())));
    names.extend(gen_t33_instances().into_iter().map(|s| s.name));
    names.extend((0..10).map(|i| format!("relative_disk_{i}")));
    names
}

pub fn gen_by_name(name: &str) -> Result<Scenario, ScenarioError> {
    let unknown = || ScenarioError::UnknownScenario(name.to_string());
    match name {
        "rotation_disk" => Ok(gen_rotation_disk()),
        "halfspace_plus" => Ok(gen_halfspace(Side::Plus)),
        "halfspace_minus" => Ok(gen_halfspace(Side::Minus)),
        "theorem47" => Ok(gen_theorem47()),
        _ => {
            if let Some(d) = name.strip_prefix("circle_deg_") {
                return gen_degree_d_circle_map(d.parse().map_err(|_| unknown())?);
            }
            if let Some(k) = name.strip_prefix("negative_") {
                let kind = NegativeKind::ALL.into_iter().find(|n| n.name() == k).ok_or_else(unknown)?;
                return Ok(gen_negative_control(kind));
            }
            if name.starts_with("relative_disk_") {
                return gen_relative_disk_maps().into_iter().find(|s| s.name == name).ok_or_else(unknown);
            }
            gen_t33_instances().into_iter().find(|s| s.name == name).ok_or_else(unknown)
        }
    }
}

fn param_rational(v: &serde_json::Value) -> Result<Rational, ScenarioError> {
    let text = v.as_str().ok_or_else(|| ScenarioError::BadParameter(format!("expected a \"p/q\" string, got {v}")))?;
    parse_rational(text).map_err(|e| ScenarioError::BadParameter(e.to_string()))
}

fn param_point(v: &serde_json::Value, dim: usize) -> Result<Point, ScenarioError> {
    let items = v.as_array().ok_or_else(|| ScenarioError::BadParameter(format!("expected a point, got {v}")))?;
    if items.len() != dim {
        return Err(ScenarioError::BadParameter(format!("point has {} coordinates, expected {dim}", items.len())));
    }
    items.iter().map(param_rational).collect()
}

/// Builds the map a named generator describes on `domain`.
///
/// Known names: `identity`, `rotation_pi` (negate every coordinate),
/// `reflection` (negate the last coordinate), `scale` (`factor`, optional
/// `center`), `translate` (`by`) and `linear` (`matrix`, row-major rows).
pub fn resolve_generator(spec: &GeneratorSpec, domain: &SimplicialComplex) -> Result<PLMap, ScenarioError> {
    let n = domain.ambient_dim();
    let get = |key: &str| spec.params.get(key).ok_or_else(|| ScenarioError::BadParameter(format!("missing parameter {key:?}")));
    match spec.name.as_str() {
        "identity" => Ok(PLMap::identity(domain)),
        "rotation_pi" => Ok(PLMap::from_vertex_fn(domain, n, negate)),
        "reflection" => Ok(PLMap::from_vertex_fn(domain, n, |p| {
            let mut q = p.to_vec();
            q[n - 1] = -q[n - 1].clone();
            q
        })),
        "scale" => {
            let factor = param_rational(get("factor")?)?;
            let center = match spec.params.get("center") {
                Some(c) => param_point(c, n)?,
                None => vec![int(0); n],
            };
            Ok(PLMap::from_vertex_fn(domain, n, |p| (0..n).map(|i| &center[i] + (&p[i] - &center[i]) * &factor).collect()))
        }
        "translate" => {
            let by = param_point(get("by")?, n)?;
            Ok(PLMap::from_vertex_fn(domain, n, |p| (0..n).map(|i| &p[i] + &by[i]).collect()))
        }
        "linear" => {
            let rows = get("matrix")?.as_array().ok_or_else(|| ScenarioError::BadParameter("matrix must be a list of rows".into()))?;
            let m: Vec<Point> = rows.iter().map(|r| param_point(r, n)).collect::<Result<_, _>>()?;
            Ok(PLMap::from_vertex_fn(domain, m.len(), |p| m.iter().map(|row| (0..n).map(|i| &row[i] * &p[i]).sum()).collect()))
        }
        other => Err(ScenarioError::UnknownGenerator(other.to_string())),
    }
}
