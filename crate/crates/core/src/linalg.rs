//! Dense exact linear algebra over [`Rational`].
//!
//! Matrices are row-major `Vec<Vec<Rational>>`. Sizes here never exceed a
//! handful of rows, so plain Gaussian elimination is used throughout.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut copy = m.clone();
    rref(&mut copy).len()
}

pub fn det(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut result = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            result = -result;
        }
        result *= &a[c][c];
        for i in (c + 1)..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &a[c][c];
            for j in c..n {
                let delta = &factor * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    result
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Consistent with a nontrivial kernel; carries one particular solution.
    Many(Vec<Rational>),
    Inconsistent,
}

pub fn solve(a: &Matrix, b: &[Rational]) -> Solution {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][cols].clone();
    }
    if pivots.len() == cols {
        Solution::Unique(x)
    } else {
        Solution::Many(x)
    }
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinant_of_small_matrices() {
        assert_eq!(det(&m(&[&[2, 1], &[1, 3]])), int(5));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(det(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), int(0));
    }

    #[test]
    fn solve_classifies_systems() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[int(1), int(0)]), Solution::Unique(vec![rat(1, 2), rat(1, 2)]));
        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(matches!(solve(&singular, &[int(1), int(2)]), Solution::Many(_)));
        assert_eq!(solve(&singular, &[int(1), int(3)]), Solution::Inconsistent);
    }

    #[test]
    fn rank_of_tall_matrix() {
        assert_eq!(rank(&m(&[&[1, 0], &[0, 1], &[1, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
    }
}
