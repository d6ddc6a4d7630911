use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::PLMap;
use crate::geom::convex::{affine_rank, meet, meet_groups, BBox};
use crate::geom::SubBall;
use crate::linalg::{self, Matrix};
use crate::rational::{combine, Point, Rational};

/// Why a map fails to be bijective on a sub-ball.
#[derive(Debug, Clone, PartialEq)]
pub enum NonBijectiveWitness {
    /// Two distinct points of the sub-ball with the same image.
    Collision { x: Point, y: Point, image: Point },
    /// A point outside the sub-ball mapping into the image of the sub-ball.
    ForeignPreimage { x: Point, image: Point },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Bijectivity {
    Yes,
    No(NonBijectiveWitness),
}

impl Bijectivity {
    pub fn is_yes(&self) -> bool {
        matches!(self, Bijectivity::Yes)
    }
}

/// Decides whether `f|V` is injective and `f^{-1}(f(V)) = V`, exactly.
pub fn is_bijective_on(f: &PLMap, v: &SubBall) -> Bijectivity {
    if let Some(w) = injectivity_witness(f, v.complex().simplices()) {
        return Bijectivity::No(w);
    }
    match foreign_preimage(f, v) {
        Some(w) => Bijectivity::No(w),
        None => Bijectivity::Yes,
    }
}

/// A collision inside the union of the given simplices of `f`'s domain, if any.
pub(crate) fn injectivity_witness(f: &PLMap, simplices: &[Vec<usize>]) -> Option<NonBijectiveWitness> {
    let dom = f.domain();
    let pts = |s: &[usize]| -> Vec<&[Rational]> { s.iter().map(|&v| dom.vertex(v)).collect() };
    let imgs = |s: &[usize]| -> Vec<&[Rational]> { s.iter().map(|&v| f.image(v)).collect() };
    for s in simplices {
        let img = imgs(s);
        if affine_rank(&img) < s.len() - 1 {
            return Some(degenerate_witness(&pts(s), &img));
        }
    }
    let boxes: Vec<BBox> = simplices.iter().map(|s| BBox::of(&imgs(s))).collect();
    for i in 0..simplices.len() {
        for j in (i + 1)..simplices.len() {
            if !boxes[i].overlaps(&boxes[j]) {
                continue;
            }
            let (s, t) = (&simplices[i], &simplices[j]);
            let outside: Vec<usize> = (0..s.len()).filter(|&k| !t.contains(&s[k])).collect();
            let Some(m) = meet(&imgs(s), &imgs(t), Some(&outside), None) else {
                continue;
            };
            if m.is_proper() {
                let x = combine(&m.lambda, &pts(s));
                let y = combine(&m.mu, &pts(t));
                let image = combine(&m.lambda, &imgs(s));
                return Some(NonBijectiveWitness::Collision { x, y, image });
            }
        }
    }
    None
}

/// Two points of a simplex with a degenerate image that collide.
fn degenerate_witness(dom: &[&[Rational]], img: &[&[Rational]]) -> NonBijectiveWitness {
    // Kernel vector d of the barycentric map: sum d_i = 0, sum d_i f(v_i) = 0.
    let k = dom.len();
    let m = img[0].len();
    let mut a: Matrix = (0..m).map(|axis| (0..k).map(|i| img[i][axis].clone()).collect()).collect();
    a.push(vec![Rational::from_integer(1.into()); k]);
    let mut r = a.clone();
    let pivots = linalg::rref(&mut r);
    let free = (0..k).find(|c| !pivots.contains(c)).expect("degenerate image has a kernel");
    let mut d = vec![Rational::zero(); k];
    d[free] = Rational::from_integer(1.into());
    for (row, &c) in pivots.iter().enumerate() {
        d[c] = -r[row][free].clone();
    }
    let big = d.iter().map(|x| x.abs()).max().expect("nonempty");
    let eps = Rational::from_integer(1.into()) / (big * Rational::from_integer((2 * k as i64).into()));
    let base = Rational::new(1.into(), (k as i64).into());
    let plus: Vec<Rational> = d.iter().map(|x| &base + x * &eps).collect();
    let minus: Vec<Rational> = d.iter().map(|x| &base - x * &eps).collect();
    NonBijectiveWitness::Collision { x: combine(&plus, dom), y: combine(&minus, dom), image: combine(&plus, img) }
}

/// A point outside `V` whose image lands in `f(V)`.
///
/// A point of a simplex lies outside `|V|` exactly when the face spanned by
/// its support is not a face of `V`, so each such face is tested through its
/// relative interior.
fn foreign_preimage(f: &PLMap, v: &SubBall) -> Option<NonBijectiveWitness> {
    let dom = f.domain();
    let v_faces = v.complex().all_faces();
    let v_simplices = v.complex().simplices();
    let v_boxes: Vec<BBox> = v_simplices.iter().map(|s| BBox::of(&image_of(f, s))).collect();
    let mut tested: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in dom.simplices() {
        let mut sorted = s.clone();
        sorted.sort_unstable();
        if v_faces.contains(&sorted) {
            continue;
        }
        let s_img = image_of(f, s);
        let s_box = BBox::of(&s_img);
        let hits: Vec<usize> = (0..v_simplices.len())
            .filter(|&t| v_boxes[t].overlaps(&s_box) && meet(&s_img, &image_of(f, &v_simplices[t]), None, None).is_some())
            .collect();
        if hits.is_empty() {
            continue;
        }
        let n = sorted.len();
        for mask in 1u32..(1 << n) {
            let face: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| sorted[i]).collect();
            if v_faces.contains(&face) || !tested.insert(face.clone()) {
                continue;
            }
            let face_img = image_of(f, &face);
            let singles: Vec<Vec<usize>> = (0..face.len()).map(|i| vec![i]).collect();
            for &t in &hits {
                let Some(m) = meet_groups(&face_img, &image_of(f, &v_simplices[t]), &singles, &[]) else {
                    continue;
                };
                if m.is_proper() {
                    let pts: Vec<&[Rational]> = face.iter().map(|&w| dom.vertex(w)).collect();
                    return Some(NonBijectiveWitness::ForeignPreimage {
                        x: combine(&m.lambda, &pts),
                        image: combine(&m.lambda, &face_img),
                    });
                }
            }
        }
    }
    None
}

fn image_of<'a>(f: &'a PLMap, s: &[usize]) -> Vec<&'a [Rational]> {
    s.iter().map(|&v| f.image(v)).collect()
}
