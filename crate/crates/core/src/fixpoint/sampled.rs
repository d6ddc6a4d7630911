//! Float search for approximate fixed points of an opaque map. Nothing here is
//! certified and nothing here feeds a [`Certificate`](super::Certificate).

use super::FixpointError;
use crate::geom::convex::barycentric;
use crate::geom::SimplicialComplex;
use crate::linalg::{self, Solution};
use crate::plmap::PLMap;
use crate::rational::{from_f64_dyadic, to_f64, Point, Rational};

const DYADIC_BITS: u32 = 52;
const NEWTON_STEPS: usize = 60;
const SEEDS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct SampledPoint {
    pub point: Vec<f64>,
    pub residual: f64,
}

/// Wraps an exact PL map as a float evaluator; `None` off the domain.
pub fn pl_evaluator(f: &PLMap) -> impl Fn(&[f64]) -> Option<Vec<f64>> + '_ {
    move |x: &[f64]| {
        let p: Point = x.iter().map(|&v| from_f64_dyadic(v, DYADIC_BITS)).collect();
        f.evaluate(&p).ok().map(|y| y.iter().map(to_f64).collect())
    }
}

fn residual(eval: &dyn Fn(&[f64]) -> Option<Vec<f64>>, x: &[f64]) -> Option<f64> {
    let y = eval(x)?;
    Some(y.iter().zip(x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
}

/// Barycentric grid of resolution `m` in every top simplex.
fn grid(x: &SimplicialComplex, m: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for si in 0..x.len() {
        let pts: Vec<Vec<f64>> = x.points_of(si).iter().map(|p| p.iter().map(to_f64).collect()).collect();
        let mut weights = vec![0usize; pts.len()];
        compositions(m, 0, &mut weights, &mut |w| {
            let p = (0..x.ambient_dim()).map(|a| w.iter().zip(&pts).map(|(&c, v)| c as f64 * v[a]).sum::<f64>() / m as f64).collect();
            out.push(p);
        });
    }
    out
}

fn compositions(left: usize, i: usize, w: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if i + 1 == w.len() {
        w[i] = left;
        visit(w);
        return;
    }
    for c in 0..=left {
        w[i] = c;
        compositions(left - c, i + 1, w, visit);
    }
}

/// Newton on `g(x) - x` with a forward-difference Jacobian and step halving.
fn polish(eval: &dyn Fn(&[f64]) -> Option<Vec<f64>>, start: &[f64], tol: f64) -> Option<(Vec<f64>, f64)> {
    let n = start.len();
    let mut x = start.to_vec();
    let mut r = residual(eval, &x)?;
    for _ in 0..NEWTON_STEPS {
        if r <= tol * 1e-3 {
            break;
        }
        let gx = eval(&x)?;
        let fx: Vec<f64> = gx.iter().zip(&x).map(|(a, b)| a - b).collect();
        let h = 1e-7;
        let mut jac = vec![vec![Rational::from_integer(0.into()); n]; n];
        for j in 0..n {
            let mut xp = x.clone();
            xp[j] += h;
            let Some(gp) = eval(&xp).or_else(|| {
                xp[j] = x[j] - h;
                eval(&xp)
            }) else {
                return Some((x, r));
            };
            let sgn = if xp[j] > x[j] { 1.0 } else { -1.0 };
            for i in 0..n {
                let d = sgn * ((gp[i] - xp[i]) - fx[i]) / h;
                jac[i][j] = from_f64_dyadic(d, 30);
            }
        }
        let rhs: Vec<Rational> = fx.iter().map(|v| from_f64_dyadic(-v, DYADIC_BITS)).collect();
        let Solution::Unique(step) = linalg::solve(&jac, &rhs) else { return Some((x, r)) };
        let step: Vec<f64> = step.iter().map(to_f64).collect();
        let mut t = 1.0;
        let mut moved = false;
        while t > 1e-6 {
            let cand: Vec<f64> = x.iter().zip(&step).map(|(a, s)| a + t * s).collect();
            if let Some(rc) = residual(eval, &cand) {
                if rc < r {
                    x = cand;
                    r = rc;
                    moved = true;
                    break;
                }
            }
            t /= 2.0;
        }
        if !moved {
            break;
        }
    }
    Some((x, r))
}

fn in_complex(x: &SimplicialComplex, p: &[f64], tol: f64) -> bool {
    let q: Vec<Rational> = p.iter().map(|&v| from_f64_dyadic(v, DYADIC_BITS)).collect();
    (0..x.len()).any(|si| {
        barycentric(&x.points_of(si), &q).is_some_and(|b| b.iter().all(|c| to_f64(c) >= -tol))
    })
}

/// Scans a barycentric grid of resolution `2^grid_depth`, polishes the best
/// samples by Newton iteration and returns the distinct points of `X` whose
/// residual `max_i |g(x)_i - x_i|` is at most `tol`, best first.
pub fn sampled_residual_search(
    eval: &dyn Fn(&[f64]) -> Option<Vec<f64>>,
    x: &SimplicialComplex,
    grid_depth: usize,
    tol: f64,
) -> Result<Vec<SampledPoint>, FixpointError> {
    let mut scored: Vec<(f64, Vec<f64>)> =
        grid(x, 1 << grid_depth.min(12)).into_iter().filter_map(|p| residual(eval, &p).map(|r| (r, p))).collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut best = f64::INFINITY;
    let mut found: Vec<SampledPoint> = Vec::new();
    for (_, seed) in scored.iter().take(SEEDS) {
        let Some((p, r)) = polish(eval, seed, tol) else { continue };
        best = best.min(r);
        if r <= tol && in_complex(x, &p, tol) && !found.iter().any(|q| dist(&q.point, &p) <= tol.max(1e-9) * 10.0) {
            found.push(SampledPoint { point: p, residual: r });
        }
    }
    if found.is_empty() {
        return Err(FixpointError::ToleranceNotReached { best });
    }
    found.sort_by(|a, b| a.residual.total_cmp(&b.residual));
    Ok(found)
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::shapes::unit_square;

    #[test]
    fn contraction_of_the_square() {
        let x = unit_square();
        let half = |p: &[f64]| Some(p.iter().map(|v| v / 2.0).collect());
        let pts = sampled_residual_search(&half, &x, 3, 1e-9).unwrap();
        assert!(pts[0].point.iter().all(|v| v.abs() <= 1e-9), "{pts:?}");
    }

    #[test]
    fn translation_never_converges() {
        let x = unit_square();
        let shift = |p: &[f64]| Some(vec![p[0] + 10.0, p[1]]);
        assert!(matches!(sampled_residual_search(&shift, &x, 3, 1e-3), Err(FixpointError::ToleranceNotReached { .. })));
    }
}
