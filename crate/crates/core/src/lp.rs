//! Exact linear programming: `maximize c.x` subject to `A x = b`, `x >= 0`.
//!
//! Two-phase tableau simplex with Bland's rule, so it terminates on degenerate
//! inputs. Problems in this crate have at most a dozen variables.

use num_traits::{Signed, Zero};

use crate::linalg::Matrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, x: Vec<Rational> },
}

struct Tableau {
    rows: Matrix,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs the simplex on `cost` (length `width`); `allowed` masks entering columns.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(j) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, j);
        }
    }

    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, &b)| acc + &cost[b] * self.rhs(i))
    }
}

pub fn maximize(a: &Matrix, b: &[Rational], c: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r: Vec<Rational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        rows.push(r);
    }
    let mut t = Tableau { rows, basis: (n..width).collect(), width };

    let mut phase1 = vec![Rational::zero(); width];
    for x in phase1.iter_mut().skip(n) {
        *x = Rational::from_integer((-1).into());
    }
    let all = vec![true; width];
    t.optimize(&phase1, &all);
    if t.value(&phase1).is_negative() {
        return LpOutcome::Infeasible;
    }

    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[..n].clone_from_slice(c);
    let mut allowed = vec![false; width];
    allowed[..n].iter_mut().for_each(|x| *x = true);
    if !t.optimize(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rhs(i).clone();
        }
    }
    LpOutcome::Optimal { value: t.value(&cost), x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn simple_optimum() {
        // max x + y, x + 2y + s1 = 4, 3x + y + s2 = 6
        let a = vec![row(&[1, 2, 1, 0]), row(&[3, 1, 0, 1])];
        let out = maximize(&a, &row(&[4, 6]), &row(&[1, 1, 0, 0]));
        match out {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, rat(14, 5));
                assert_eq!(x[0], rat(8, 5));
                assert_eq!(x[1], rat(6, 5));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let a = vec![row(&[1, 1]), row(&[1, 1])];
        assert_eq!(maximize(&a, &row(&[1, 2]), &row(&[0, 0])), LpOutcome::Infeasible);
        let a = vec![row(&[1, -1])];
        assert_eq!(maximize(&a, &row(&[0]), &row(&[1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let a = vec![row(&[1, 1]), row(&[2, 2])];
        match maximize(&a, &row(&[1, 2]), &row(&[1, 0])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(1)),
            other => panic!("{other:?}"),
        }
    }
}
