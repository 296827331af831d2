//! Dense exact rational linear algebra: rank, solving, nullspaces and
//! determinants by fraction-exact Gaussian elimination.

use crate::Rat;
use num_traits::{One, Zero};

/// Row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rat>>,
}

impl Mat {
    pub fn new(data: Vec<Vec<Rat>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        debug_assert!(data.iter().all(|r| r.len() == cols));
        Mat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.data[r][col].is_zero()) else {
                continue;
            };
            self.data.swap(row, p);
            let inv = self.data[row][col].recip();
            for c in col..self.cols {
                let v = std::mem::replace(&mut self.data[row][c], Rat::zero());
                self.data[row][c] = v * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self.data[r][col].is_zero() {
                    let factor = self.data[r][col].clone();
                    for c in col..self.cols {
                        let sub = &self.data[row][c] * &factor;
                        let v = std::mem::replace(&mut self.data[r][c], Rat::zero());
                        self.data[r][c] = v - sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }
}

pub fn rank_of(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Mat::new(rows.to_vec()).rank()
}

/// Any solution of `A x = b`, or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug = Mat::new(
        a.iter()
            .zip(b)
            .map(|(r, rhs)| {
                let mut row = r.clone();
                row.push(rhs.clone());
                row
            })
            .collect(),
    );
    if rows == 0 {
        return Some(vec![Rat::zero(); cols]);
    }
    let pivots = aug.rref();
    // Inconsistent iff a pivot lands in the rhs column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = aug.data[i][cols].clone();
    }
    Some(x)
}

/// Basis of the right nullspace of `A`.
pub fn nullspace(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = a.first().map_or(0, Vec::len);
    if a.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut v = vec![Rat::zero(); cols];
                v[i] = Rat::one();
                v
            })
            .collect();
    }
    let mut m = Mat::new(a.to_vec());
    let pivots = m.rref();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m.data[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut m = a.to_vec();
    let mut result = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(col, p);
            result = -result;
        }
        let pivot = m[col][col].clone();
        result *= &pivot;
        let inv = pivot.recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    let sub = &m[col][c] * &factor;
                    let v = std::mem::replace(&mut m[r][c], Rat::zero());
                    m[r][c] = v - sub;
                }
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(rank_of(&m(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank_of(&m(&[&[1, 1], &[2, 2]])), 1);
        assert_eq!(det(&m(&[&[2, 0], &[0, 3]])), rat(6));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), rat(0));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), rat(-1));
    }

    #[test]
    fn solve_consistent_and_not() {
        let x = solve(&m(&[&[1, 1], &[1, -1]]), &[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[rat(0), rat(1)]).is_none());
        // Underdetermined systems return some solution.
        let x = solve(&m(&[&[1, 1]]), &[rat(2)]).unwrap();
        assert_eq!(&x[0] + &x[1], rat(2));
    }

    #[test]
    fn nullspace_dimension() {
        let ns = nullspace(&m(&[&[1, 1, 0]]));
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(&v[0] + &v[1], rat(0));
        }
    }
}
