mod common;

use std::sync::OnceLock;

use num_traits::Zero;

use common::{in_complex, in_simplex};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pldegree::geom::{build_complex, locate_point, SimplicialComplex};
use pldegree::plmap::{classify_against, compose, compose_exact, preimage_subcomplex, PLMap, RegionLabel};
use pldegree::rational::{combine, int, ipoint, rat, Point, Rational};
use pldegree::scenarios::random::random_square_self_map;
use pldegree::scenarios::{gen_by_name, scenario_names, Scenario};

fn corpus() -> &'static [Scenario] {
    static CORPUS: OnceLock<Vec<Scenario>> = OnceLock::new();
    CORPUS.get_or_init(|| scenario_names().iter().map(|n| gen_by_name(n).unwrap()).collect())
}

/// Self-map scenarios with a full-dimensional X of dimension at most 2.
fn planar_self_maps() -> Vec<&'static Scenario> {
    corpus()
        .iter()
        .filter(|s| s.x.dim() == s.x.ambient_dim() && s.map.target_dim() == s.x.ambient_dim() && s.x.dim() <= 2)
        .collect()
}

fn weights(w: &[u32], n: usize) -> Vec<Rational> {
    let total: u32 = w[..n].iter().sum();
    w[..n].iter().map(|&x| rat(x as i64, total as i64)).collect()
}

#[test]
fn membership_oracle_sanity() {
    let a = [int(0), int(0)];
    let b = [int(2), int(0)];
    let c = [int(0), int(2)];
    let tri: [&[Rational]; 3] = [&a, &b, &c];
    assert!(in_simplex(&tri, &[int(1), int(1)]));
    assert!(!in_simplex(&tri, &[int(1), rat(11, 10)]));
    assert!(in_simplex(&tri[..2], &[int(1), int(0)]));
    assert!(!in_simplex(&tri[..2], &[int(3), int(0)]));
    assert!(!in_simplex(&tri[..2], &[int(1), rat(1, 9)]));
}

/// Random square self-maps f, g with the exact overlay g∘f and, when refinement suffices, the uniform one.
type Composed = (PLMap, PLMap, PLMap, Option<PLMap>);

fn composed() -> &'static [Composed] {
    static CACHE: OnceLock<Vec<Composed>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (0..10u64)
            .map(|seed| {
                let f = random_square_self_map(seed);
                let g = random_square_self_map(seed * 31 + 7);
                let exact = compose_exact(&g, &f).unwrap();
                let refined = compose(&g, &f, 2).ok();
                (f, g, exact, refined)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn evaluation_agrees_across_shared_faces(which in 0usize..64, face in 0usize..256, w in proptest::collection::vec(1u32..30, 3)) {
        let s = corpus()[which % corpus().len()].clone();
        let k = s.map.domain();
        let internal: Vec<(Vec<usize>, Vec<(usize, usize)>)> =
            k.facet_map().into_iter().filter(|(_, c)| c.len() == 2).collect();
        prop_assume!(!internal.is_empty());
        let (vertices, cofaces) = &internal[face % internal.len()];
        let lambda = weights(&w, vertices.len());
        let images: Vec<Point> = cofaces
            .iter()
            .map(|&(si, _)| {
                let full: Vec<Rational> = k
                    .simplex(si)
                    .iter()
                    .map(|v| vertices.iter().position(|u| u == v).map_or_else(Rational::zero, |j| lambda[j].clone()))
                    .collect();
                s.map.evaluate_in(si, &full)
            })
            .collect();
        prop_assert_eq!(&images[0], &images[1]);
    }

    #[test]
    fn composition_matches_pointwise_evaluation(pair in 0usize..10, si in 0usize..64, w in proptest::collection::vec(1u32..30, 3)) {
        let (f, g, exact, refined) = &composed()[pair];
        let k = f.domain();
        let p = combine(&weights(&w, 3), &k.points_of(si % k.len()));
        let want = g.evaluate(&f.evaluate(&p).unwrap()).unwrap();
        prop_assert_eq!(exact.evaluate(&p).unwrap(), want.clone());
        if let Some(refined) = refined {
            prop_assert_eq!(refined.evaluate(&p).unwrap(), want);
        }
    }
}

#[test]
fn uniform_composition_agrees_with_evaluation_when_it_succeeds() {
    // a single-simplex outer map never straddles, so refinement succeeds
    let big = build_complex(2, vec![ipoint(&[0, 0]), ipoint(&[3, 0]), ipoint(&[0, 3])], vec![vec![0, 1, 2]]).unwrap();
    let g = PLMap::from_vertex_fn(&big, 2, |p| vec![(&p[0] + &p[1]) / int(2), p[1].clone() / int(3)]);
    let mut checked = 0;
    for seed in 0..10 {
        let f = random_square_self_map(seed);
        let h = compose(&g, &f, 2).unwrap();
        for si in 0..f.domain().len() {
            let p = combine(&weights(&[1, 2, 4], 3), &f.domain().points_of(si));
            assert_eq!(h.evaluate(&p).unwrap(), g.evaluate(&f.evaluate(&p).unwrap()).unwrap());
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

/// (scenario, region, refined map, inner, hull) for every region worth testing.
type Sandwich = (String, SimplicialComplex, PLMap, Vec<usize>, Vec<usize>);

fn sandwiches() -> &'static [Sandwich] {
    static CACHE: OnceLock<Vec<Sandwich>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::new();
        for s in planar_self_maps() {
            let mut regions = vec![s.x.clone()];
            regions.extend(s.y.iter().map(|y| y.complex().clone()));
            for region in regions {
                let pre = preimage_subcomplex(&s.map, &region, 1);
                out.push((s.name.clone(), region, pre.map, pre.inner, pre.hull));
            }
        }
        out
    })
}

#[test]
fn preimage_sandwich_holds_on_every_scenario() {
    let mut r = ChaCha8Rng::seed_from_u64(17);
    let cases = sandwiches();
    assert!(cases.len() >= 10);
    for (name, region, map, inner, hull) in cases {
        let k = map.domain();
        for _ in 0..100 {
            let si = r.gen_range(0..k.len());
            let w: Vec<u32> = (0..3).map(|_| r.gen_range(1..30)).collect();
            let lambda = weights(&w, k.simplex(si).len());
            let p = combine(&lambda, &k.points_of(si));
            let lands = in_complex(region, &map.evaluate_in(si, &lambda));
            // interior probes lie in exactly one top simplex, so membership is by index
            if inner.contains(&si) {
                assert!(lands, "{name}: inner simplex {si} sends {p:?} outside the region");
            }
            if lands {
                assert!(hull.contains(&si), "{name}: {p:?} maps into the region outside the hull");
            }
        }
    }
}

#[test]
fn boundary_probes_respect_the_sandwich() {
    // images of vertices of the refined domain are the extreme cases for lower-dimensional regions
    for (name, region, map, inner, hull) in sandwiches() {
        let k = map.domain();
        for si in 0..k.len() {
            for (j, _) in k.simplex(si).iter().enumerate() {
                let mut lambda = vec![Rational::zero(); k.simplex(si).len()];
                lambda[j] = int(1);
                let lands = in_complex(region, &map.evaluate_in(si, &lambda));
                if inner.contains(&si) {
                    assert!(lands, "{name}: vertex of inner simplex {si} maps outside");
                }
                if lands {
                    assert!(hull.contains(&si), "{name}: a vertex of simplex {si} maps into the region outside the hull");
                }
            }
        }
    }
}

#[test]
fn region_labels_agree_with_evaluation() {
    let mut labeled = 0;
    for s in planar_self_maps() {
        let c = classify_against(&s.map, &s.x, 2);
        for cell in &c.cells {
            let pts: Vec<&[Rational]> = cell.points.iter().map(Vec::as_slice).collect();
            for w in [[1u32, 1, 1], [5, 1, 1], [1, 7, 2], [2, 3, 11]] {
                let p = combine(&weights(&w, pts.len()), &pts);
                let y = s.map.evaluate(&p).unwrap();
                let img: Vec<&[Rational]> = cell.image.iter().map(Vec::as_slice).collect();
                assert_eq!(combine(&weights(&w, pts.len()), &img), y, "{}: cell image is not f of the cell", s.name);
                let inside = locate_point(&s.x, &y).is_inside();
                match cell.label {
                    RegionLabel::ImageInside | RegionLabel::ImageOnBoundary => {
                        assert!(inside, "{}: a contained cell maps {p:?} outside X", s.name);
                        labeled += 1;
                    }
                    RegionLabel::ImageOutside => {
                        // only boundary contact is allowed
                        assert!(!inside || !in_interior(&s.x, &y), "{}: an outside cell maps into int X", s.name);
                    }
                    RegionLabel::Straddles => {}
                }
            }
        }
    }
    assert!(labeled > 100);
}

/// Strictly inside a full-dimensional complex: a tiny box around the point stays in it.
fn in_interior(x: &SimplicialComplex, y: &[Rational]) -> bool {
    let eps = rat(1, 1_000_000);
    let n = y.len();
    (0..n).all(|i| {
        [eps.clone(), -eps.clone()].iter().all(|e| {
            let mut q = y.to_vec();
            q[i] += e;
            in_complex(x, &q)
        })
    })
}
