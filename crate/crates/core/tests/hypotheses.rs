use pldegree::hypotheses::{check, check_t33, check_t35, check_t47, check_t48, CheckInput, CheckStatus, Theorem, DEFAULT_MAX_DEPTH};
use pldegree::plmap::PLMap;
use pldegree::rational::{int, Rational};
use pldegree::scenarios::{
    gen_negative_control, gen_rotation_disk, gen_t33_instances, gen_theorem47, ExpectedValue, NegativeKind, Scenario,
};

fn input(s: &Scenario) -> CheckInput<'_> {
    CheckInput { f: &s.map, x: &s.x, y: s.y.as_ref().expect("scenario has Y"), d: s.d.as_ref() }
}

fn statuses(r: &pldegree::hypotheses::HypothesisReport) -> Vec<CheckStatus> {
    r.checks.iter().map(|c| c.status).collect()
}

#[test]
fn rotation_disk_passes_every_theorem() {
    let s = gen_rotation_disk();
    for t in [Theorem::T33, Theorem::T35, Theorem::T47, Theorem::T48, Theorem::Cor34, Theorem::Cor36, Theorem::Cor49] {
        let r = check(t, &input(&s), DEFAULT_MAX_DEPTH);
        let expect_pass = t != Theorem::Cor34;
        assert_eq!(r.guaranteed(), expect_pass, "{r}");
    }
}

#[test]
fn identity_passes_t33_but_not_t48() {
    let s = &gen_t33_instances()[0];
    let r = check_t33(&s.map, &s.x, s.y.as_ref().unwrap(), 2);
    assert!(r.guaranteed(), "{r}");
    let r = check_t48(&s.map, &s.x, s.y.as_ref().unwrap(), 2);
    assert_eq!(statuses(&r), vec![CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Fail], "{r}");
}

#[test]
fn generated_t33_instances_pass() {
    for s in gen_t33_instances() {
        let r = check_t33(&s.map, &s.x, s.y.as_ref().unwrap(), DEFAULT_MAX_DEPTH);
        assert!(r.guaranteed(), "{}: {r}", s.name);
    }
}

#[test]
fn theorem47_instance() {
    let s = gen_theorem47();
    let y = s.y.as_ref().unwrap();
    let r = check_t47(&s.map, &s.x, y, s.d.as_ref().unwrap(), DEFAULT_MAX_DEPTH);
    assert!(r.guaranteed(), "{r}");
    assert!(check_t35(&s.map, &s.x, y, DEFAULT_MAX_DEPTH).guaranteed());
    let r = check_t48(&s.map, &s.x, y, DEFAULT_MAX_DEPTH);
    assert_eq!(r.checks[0].status, CheckStatus::Fail, "{r}");
}

#[test]
fn negative_controls_fail_exactly_one_check() {
    for kind in NegativeKind::ALL {
        let s = gen_negative_control(kind);
        for e in &s.expected {
            if let ExpectedValue::OnlyFailure { theorem, check: idx } = e.value {
                let r = check(theorem, &input(&s), DEFAULT_MAX_DEPTH);
                assert_eq!(r.count(CheckStatus::Fail), 1, "{}: {r}", s.name);
                assert_eq!(r.checks[idx].status, CheckStatus::Fail, "{}: {r}", s.name);
                assert!(!r.guaranteed());
            }
        }
    }
}

#[test]
fn t48_degree_relation_on_reflection_and_fold() {
    // reflection across the horizontal axis: injective, swaps the arcs, fixes both ends
    let s = gen_rotation_disk();
    let f = PLMap::from_vertex_fn(&s.x, 2, |p: &[Rational]| vec![p[0].clone(), -p[1].clone()]);
    let r = check_t48(&f, &s.x, s.y.as_ref().unwrap(), 2);
    assert_eq!(statuses(&r), vec![CheckStatus::Pass, CheckStatus::Pass, CheckStatus::Pass], "{r}");
    // an orientation-preserving map fixing both ends of Y keeps them: degree relation fails
    let neg = gen_negative_control(NegativeKind::DegreeMismatch);
    let r = check_t48(&neg.map, &neg.x, neg.y.as_ref().unwrap(), 2);
    assert_eq!(statuses(&r), vec![CheckStatus::Pass, CheckStatus::Pass, CheckStatus::Fail], "{r}");
}

#[test]
fn t35_equivalence_on_perturbed_instances() {
    // the preimage condition holds for the rotation and fails once a vertex of int Y is pinned
    let s = gen_rotation_disk();
    let y = s.y.as_ref().unwrap();
    assert_eq!(check_t35(&s.map, &s.x, y, 2).checks[0].status, CheckStatus::Pass);
    for pinned in 1..=3 {
        let images = (0..s.x.vertices().len())
            .map(|v| if v == pinned { s.x.vertex(v).to_vec() } else { s.x.vertex(v).iter().map(|c| -c.clone()).collect() })
            .collect();
        let f = PLMap::new(s.x.clone(), 2, images).unwrap();
        assert_eq!(check_t35(&f, &s.x, y, 2).checks[0].status, CheckStatus::Fail);
    }
    // an outward push has no inward star
    let push = PLMap::from_vertex_fn(&s.x, 2, |p: &[Rational]| {
        let neg: Vec<Rational> = p.iter().map(|c| -c.clone() * int(3)).collect();
        neg
    });
    let r = check_t35(&push, &s.x, y, 1);
    assert_ne!(r.checks[1].status, CheckStatus::Pass, "{r}");
}
