use pldegree::fixpoint::{
    build_star_retraction, certify, conjugate_h, exact_pl_fixed_points, find_star_center, pl_evaluator, retraction_for_map,
    sampled_residual_search, CertificateStatus, FixpointError, FixedShape,
};
use pldegree::geom::build_complex;
use pldegree::plmap::{PLMap, PlMapError};
use pldegree::rational::{int, ipoint, point, rat, Rational};
use pldegree::scenarios::shapes::unit_square;
use pldegree::scenarios::{gen_negative_control, gen_rotation_disk, gen_t33_instances, NegativeKind};

#[test]
fn rotation_disk_has_only_the_origin() {
    let s = gen_rotation_disk();
    let fix = exact_pl_fixed_points(&s.map);
    assert_eq!(fix.points(), vec![&ipoint(&[0, 0])]);
    assert_eq!(fix.len(), 1);
}

#[test]
fn square_retraction_examples() {
    let x = unit_square();
    let c = point(&[(1, 2), (1, 2)]);
    let bound = build_complex(2, vec![ipoint(&[-2, -2]), ipoint(&[3, -2]), ipoint(&[3, 3]), ipoint(&[-2, 3])], vec![vec![0, 1, 2], vec![0, 2, 3]])
        .unwrap();
    let beta = build_star_retraction(&x, &c, &bound).unwrap();
    // inside: identity
    for p in [point(&[(1, 3), (1, 5)]), point(&[(1, 1), (1, 2)]), point(&[(0, 1), (0, 1)])] {
        assert_eq!(beta.evaluate(&p).unwrap(), p);
    }
    // rays through boundary vertices are retracted exactly
    assert_eq!(beta.evaluate(&ipoint(&[2, 2])).unwrap(), ipoint(&[1, 1]));
    assert_eq!(beta.evaluate(&point(&[(-1, 2), (3, 2)])).unwrap(), ipoint(&[0, 1]));
    // a probe straight right lands on the right edge, the edge its ray crosses
    let y = beta.evaluate(&point(&[(2, 1), (1, 2)])).unwrap();
    assert_eq!(y[0], int(1));
    assert!(y[1] >= int(0) && y[1] <= int(1));
    // the far corner of the box is still in the domain
    assert!(beta.evaluate(&ipoint(&[3, 3])).is_ok());
}

#[test]
fn star_shape_is_checked() {
    // an L whose notch hides part of the boundary from the chosen center
    let pts = vec![
        ipoint(&[0, 0]),
        ipoint(&[2, 0]),
        ipoint(&[2, 1]),
        ipoint(&[1, 1]),
        ipoint(&[1, 2]),
        ipoint(&[0, 2]),
        ipoint(&[0, 1]),
    ];
    let l = build_complex(2, pts, vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 6], vec![6, 3, 4], vec![6, 4, 5]]).unwrap();
    let bad = point(&[(7, 4), (1, 2)]);
    assert!(matches!(build_star_retraction(&l, &bad, &l), Err(FixpointError::NotStarShaped { .. })));
    let good = point(&[(1, 2), (1, 2)]);
    assert!(build_star_retraction(&l, &good, &l).is_ok());
    let edge = point(&[(1, 1), (0, 1)]);
    assert_eq!(build_star_retraction(&l, &edge, &l), Err(FixpointError::CenterOnBoundary));
    assert!(find_star_center(&l).is_some());
}

#[test]
fn conjugating_the_identity_gives_the_identity() {
    let x = unit_square();
    let f = PLMap::identity(&x);
    let beta = retraction_for_map(&f, &point(&[(1, 2), (1, 2)])).unwrap();
    let h = conjugate_h(&f, &beta).unwrap();
    for p in [point(&[(1, 7), (2, 3)]), point(&[(1, 1), (0, 1)])] {
        assert_eq!(h.evaluate(&p).unwrap(), p);
    }
}

#[test]
fn image_outside_the_retraction_domain_is_rejected() {
    let x = unit_square();
    let beta = build_star_retraction(&x, &point(&[(1, 2), (1, 2)]), &x).unwrap();
    let f = PLMap::from_vertex_fn(&x, 2, |p: &[Rational]| vec![&p[0] + int(50), p[1].clone()]);
    assert_eq!(conjugate_h(&f, &beta).unwrap_err(), PlMapError::ImageEscapesDomain);
}

#[test]
fn retracted_maps_keep_their_fixed_points() {
    for s in gen_t33_instances() {
        let c = find_star_center(&s.x).expect("generated balls are star-shaped");
        let beta = retraction_for_map(&s.map, &c).unwrap();
        let h = conjugate_h(&s.map, &beta).unwrap();
        for v in h.domain().used_vertices() {
            let img = h.image(v);
            assert!(pldegree::geom::locate_point(&s.x, img).is_inside(), "{}: h leaves X", s.name);
        }
        let (a, b) = (exact_pl_fixed_points(&s.map), exact_pl_fixed_points(&h));
        assert!(a.same_set(&b), "{}: {a:?} vs {b:?}", s.name);
    }
}

#[test]
fn bump_instance_actually_leaves_x() {
    let s = gen_t33_instances().into_iter().find(|s| s.name == "t33_bump").unwrap();
    assert!(!pldegree::geom::locate_point(&s.x, &point(&[(0, 1), (3, 2)])).is_inside());
    let fix = exact_pl_fixed_points(&s.map);
    assert_eq!(fix.points(), vec![&point(&[(0, 1), (5, 6)])]);
}

#[test]
fn certificates() {
    let c = certify(&gen_rotation_disk(), None, 2);
    assert_eq!(c.status, CertificateStatus::TheoremConfirmed);
    assert_eq!(c.fixed_points.as_ref().unwrap().points(), vec![&ipoint(&[0, 0])]);

    let c = certify(&gen_negative_control(NegativeKind::Translation), None, 2);
    assert_eq!(c.status, CertificateStatus::TheoremNotApplicableNoFixedPoint);

    let id = &gen_t33_instances()[0];
    let c = certify(id, None, 2);
    assert_eq!(c.status, CertificateStatus::TheoremConfirmed);
    assert!(c.fixed_points.unwrap().components.iter().all(|k| matches!(k.shape, FixedShape::Polytope(_))));
}

#[test]
fn sampled_mode_examples() {
    let x = unit_square();
    let half = PLMap::from_vertex_fn(&x, 2, |p: &[Rational]| p.iter().map(|c| c * rat(1, 2)).collect());
    let pts = sampled_residual_search(&pl_evaluator(&half), &x, 3, 1e-9).unwrap();
    assert!(pts[0].point.iter().all(|v| v.abs() <= 1e-9));

    let s = gen_rotation_disk();
    let pts = sampled_residual_search(&pl_evaluator(&s.map), &s.x, 3, 1e-9).unwrap();
    assert!(pts.iter().all(|p| p.point.iter().all(|v| v.abs() <= 1e-9)), "{pts:?}");

    let t = gen_negative_control(NegativeKind::Translation);
    assert!(matches!(
        sampled_residual_search(&pl_evaluator(&t.map), &t.x, 3, 1e-9),
        Err(FixpointError::ToleranceNotReached { .. })
    ));
}
