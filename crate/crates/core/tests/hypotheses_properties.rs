mod common;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{apply, in_complex, DIHEDRAL};
use pldegree::fixpoint::exact_pl_fixed_points;
use pldegree::geom::{boundary_subcomplex, SimplicialComplex, SubBall};
use pldegree::hypotheses::{
    check, check_blockading, check_t35, BlockadingResult, BoundaryFrame, CheckInput, CheckStatus, Theorem, DEFAULT_MAX_DEPTH,
};
use pldegree::plmap::PLMap;
use pldegree::rational::{combine, int, rat, Point, Rational};
use pldegree::scenarios::shapes::octagon_fan;
use pldegree::scenarios::{gen_by_name, scenario_names};

/// A self-map of a ball with a boundary sub-ball.
struct Instance {
    name: String,
    x: SimplicialComplex,
    y: SubBall,
    f: PLMap,
}

/// Every generated scenario with a `Y`, plus the eight square symmetries of
/// the octagon (at unit scale and shrunk by 1/2; the identity and the half
/// turn also pushed out by 6/5) against five boundary arcs.
fn instances() -> &'static [Instance] {
    static CACHE: OnceLock<Vec<Instance>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out: Vec<Instance> = scenario_names()
            .iter()
            .map(|n| gen_by_name(n).unwrap())
            .filter(|s| s.y.is_some())
            .map(|s| Instance { name: s.name, x: s.x, y: s.y.unwrap(), f: s.map })
            .collect();
        let x = octagon_fan();
        let dx = boundary_subcomplex(&x).unwrap();
        let arcs = [(0usize, 4usize), (0, 3), (0, 5), (1, 4), (2, 4)];
        for (mi, m) in DIHEDRAL.iter().enumerate() {
            let scales = if mi == 0 || mi == 2 { vec![int(1), rat(1, 2), rat(6, 5)] } else { vec![int(1), rat(1, 2)] };
            for (si, s) in scales.iter().enumerate() {
                let f = PLMap::from_vertex_fn(&x, 2, |p| apply(m, p).iter().map(|c| c * s).collect());
                for &(start, len) in &arcs {
                    let edges = (0..len).map(|k| vec![(start + k) % 8, (start + k + 1) % 8]).collect();
                    let y = SubBall::from_simplices(&dx, edges).unwrap();
                    out.push(Instance { name: format!("sym{mi}_scale{si}_arc{start}+{len}"), x: x.clone(), y, f: f.clone() });
                }
            }
        }
        out
    })
}

fn weights(r: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let w: Vec<i64> = (0..n).map(|_| r.gen_range(1..40)).collect();
    let total: i64 = w.iter().sum();
    w.iter().map(|&x| rat(x, total)).collect()
}

#[test]
fn blockading_witnesses_hold_under_probing() {
    let mut r = ChaCha8Rng::seed_from_u64(5);
    let (mut certified, mut refuted) = (0, 0);
    for inst in instances() {
        let frame = BoundaryFrame::new(&inst.x, &inst.y).unwrap();
        let w = check_blockading(&inst.f, &inst.x, &frame.complement, 3);
        match w.result {
            BlockadingResult::Blockading => {
                let Some(u) = &w.witness_u else { continue };
                certified += 1;
                for _ in 0..200 {
                    let si = r.gen_range(0..u.len());
                    let pts = u.points_of(si);
                    let p = combine(&weights(&mut r, pts.len()), &pts);
                    let fp = inst.f.evaluate(&p).unwrap();
                    assert!(in_complex(&inst.x, &fp), "{}: {p:?} in U maps to {fp:?} outside X", inst.name);
                }
            }
            BlockadingResult::NotBlockading => {
                refuted += 1;
                let bad = w.refutation.unwrap();
                assert_eq!(inst.f.evaluate(&bad.point).unwrap(), bad.image);
                assert!(in_complex(&frame.complement_complex(), &bad.image), "{}: refutation point misses V", inst.name);
                assert_eq!(inst.f.evaluate(&bad.probe).unwrap(), bad.probe_image);
                assert!(!in_complex(&inst.x, &bad.probe_image), "{}: refutation probe stays in X", inst.name);
            }
            BlockadingResult::Undecided => {}
        }
    }
    assert!(certified >= 10 && refuted >= 5, "{certified} certified, {refuted} refuted");
}

#[test]
fn blockading_persists_under_deeper_refinement() {
    let mut checked = 0;
    for inst in instances().iter().step_by(3) {
        let frame = BoundaryFrame::new(&inst.x, &inst.y).unwrap();
        for d in 0..3 {
            let shallow = check_blockading(&inst.f, &inst.x, &frame.complement, d).result;
            if shallow == BlockadingResult::Blockading {
                let deep = check_blockading(&inst.f, &inst.x, &frame.complement, d + 1).result;
                assert_eq!(deep, BlockadingResult::Blockading, "{} at depth {d}", inst.name);
                checked += 1;
            }
        }
    }
    assert!(checked >= 10);
}

#[test]
fn guaranteed_conclusions_have_fixed_points() {
    let theorems = [Theorem::T33, Theorem::T35, Theorem::T48, Theorem::Cor34, Theorem::Cor36, Theorem::Cor49];
    let mut guaranteed = 0;
    for inst in instances() {
        if inst.f.target_dim() != inst.x.ambient_dim() {
            continue;
        }
        let input = CheckInput { f: &inst.f, x: &inst.x, y: &inst.y, d: None };
        let fixed = exact_pl_fixed_points(&inst.f);
        for t in theorems {
            if check(t, &input, 2).guaranteed() {
                guaranteed += 1;
                assert!(!fixed.is_empty(), "{}: {t:?} guarantees a fixed point but none exists", inst.name);
            }
        }
    }
    // T47 needs D, which only the generated scenarios carry
    for name in scenario_names() {
        let s = gen_by_name(&name).unwrap();
        if let (Some(y), Some(d)) = (&s.y, &s.d) {
            let input = CheckInput { f: &s.map, x: &s.x, y, d: Some(d) };
            if check(Theorem::T47, &input, DEFAULT_MAX_DEPTH).guaranteed() {
                guaranteed += 1;
                assert!(!exact_pl_fixed_points(&s.map).is_empty(), "{name}: T47");
            }
        }
    }
    assert!(guaranteed >= 20);
}

/// Probes of `int Y` and of `X - int Y`.
fn probes(inst: &Instance) -> (Vec<Point>, Vec<Point>) {
    let x = &inst.x;
    let y = inst.y.complex();
    let interior: Vec<usize> = inst.y.interior_vertices();
    let mut in_y: Vec<Point> = interior.iter().map(|&v| x.vertex(v).to_vec()).collect();
    for s in y.simplices() {
        let pts: Vec<&[Rational]> = s.iter().map(|&v| x.vertex(v)).collect();
        for k in 1..7 {
            let mut w = vec![rat(1, 1); pts.len()];
            w[0] = rat(k, 7);
            let rest = (int(1) - &w[0]) / int(pts.len() as i64 - 1);
            w.iter_mut().skip(1).for_each(|c| *c = rest.clone());
            in_y.push(combine(&w, &pts));
        }
    }
    let mut off_y: Vec<Point> = x.used_vertices().into_iter().filter(|v| !interior.contains(v)).map(|v| x.vertex(v).to_vec()).collect();
    for face in x.all_faces() {
        if face.len() > 1 && !inst.y.has_face(&face) {
            let pts: Vec<&[Rational]> = face.iter().map(|&v| x.vertex(v)).collect();
            for w in [[1i64, 1, 1, 1], [3, 1, 2, 1], [1, 5, 1, 2]] {
                let total: i64 = w[..pts.len()].iter().sum();
                let lam: Vec<Rational> = w[..pts.len()].iter().map(|&c| rat(c, total)).collect();
                off_y.push(combine(&lam, &pts));
            }
        }
    }
    (in_y, off_y)
}

#[test]
fn preimage_condition_matches_its_two_halves() {
    let (mut holds, mut fails) = (0, 0);
    for inst in instances() {
        if inst.f.target_dim() != inst.x.ambient_dim() || inst.x.dim() < 2 {
            continue;
        }
        let frame = BoundaryFrame::new(&inst.x, &inst.y).unwrap();
        let rest = frame.complement_complex();
        let in_open_rest = |q: &[Rational]| in_complex(&rest, q) && !in_complex(inst.y.complex(), q);
        let (in_y, off_y) = probes(inst);
        let image = |p: &Point| inst.f.evaluate(p).unwrap();
        let into = in_y.iter().all(|p| in_open_rest(&image(p)));
        let nothing_else = off_y.iter().all(|p| !in_open_rest(&image(p)));
        let report = check_t35(&inst.f, &inst.x, &inst.y, 2);
        let status = report.checks[0].status;
        assert_ne!(status, CheckStatus::Undecided, "{}: {report}", inst.name);
        assert_eq!(status == CheckStatus::Pass, into && nothing_else, "{}: {report}", inst.name);
        if into && nothing_else {
            holds += 1;
        } else {
            fails += 1;
        }
    }
    assert!(holds >= 5 && fails >= 20, "{holds} hold, {fails} fail");
}
