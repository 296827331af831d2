//! Exact rational linear programming by a dense two-phase simplex with
//! Bland's anti-cycling pivot rule.
//!
//! Only the equality form `max c·x  s.t.  A x = b, x >= 0` is needed here;
//! it backs the convex-combination membership test and the vertex adjacency
//! test used by cutting.

use crate::geometry::Point;
use crate::Rat;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal(Rat),
}

struct Tableau {
    // rows[i] has ncols entries followed by the rhs.
    rows: Vec<Vec<Rat>>,
    obj: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            let x = std::mem::replace(v, Rat::zero());
            *v = x * &inv;
        }
        let pivot_row = self.rows[row].clone();
        for (r, target) in self.rows.iter_mut().enumerate() {
            if r == row || target[col].is_zero() {
                continue;
            }
            let factor = target[col].clone();
            for (v, p) in target.iter_mut().zip(&pivot_row) {
                let sub = p * &factor;
                let x = std::mem::replace(v, Rat::zero());
                *v = x - sub;
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                let sub = p * &factor;
                let x = std::mem::replace(v, Rat::zero());
                *v = x - sub;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering column is the lowest index with positive
    /// reduced profit; leaving row minimizes the ratio, ties by lowest
    /// basic variable index. Returns false when optimal, `None` row when
    /// unbounded.
    fn improve(&mut self, allowed: &dyn Fn(usize) -> bool) -> Result<bool, ()> {
        let Some(col) = (0..self.ncols).find(|&j| allowed(j) && self.obj[j].is_positive()) else {
            return Ok(false);
        };
        let mut leave: Option<usize> = None;
        for r in 0..self.rows.len() {
            if self.rows[r][col].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let ratio_r = &self.rows[r][self.ncols] / &self.rows[r][col];
                        let ratio_l = &self.rows[l][self.ncols] / &self.rows[l][col];
                        match ratio_r.cmp(&ratio_l) {
                            std::cmp::Ordering::Less => true,
                            std::cmp::Ordering::Equal => self.basis[r] < self.basis[l],
                            std::cmp::Ordering::Greater => false,
                        }
                    }
                };
                if better {
                    leave = Some(r);
                }
            }
        }
        match leave {
            Some(row) => {
                self.pivot(row, col);
                Ok(true)
            }
            None => Err(()),
        }
    }
}

/// Solve `max c·x  s.t.  A x = b, x >= 0` exactly.
pub fn solve_eq_form(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    let ncols = n + m; // originals then artificials
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let negate = b[i].is_negative();
        let mut row: Vec<Rat> = Vec::with_capacity(ncols + 1);
        for j in 0..n {
            row.push(if negate { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::from_integer(1.into()) } else { Rat::zero() });
        }
        row.push(if negate { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }

    // Phase 1: maximize -(sum of artificials); reduced profits for the
    // artificial basis are the column sums.
    let mut obj = vec![Rat::zero(); ncols + 1];
    for j in 0..n {
        obj[j] = rows.iter().map(|r| r[j].clone()).sum();
    }
    obj[ncols] = rows.iter().map(|r| r[ncols].clone()).sum();
    let mut t = Tableau {
        rows,
        obj,
        basis: (n..n + m).collect(),
        ncols,
    };
    loop {
        match t.improve(&|_| true) {
            Ok(true) => continue,
            Ok(false) => break,
            Err(()) => unreachable!("phase-1 objective is bounded"),
        }
    }
    let infeasible = t
        .basis
        .iter()
        .enumerate()
        .any(|(r, &v)| v >= n && !t.rows[r][t.ncols].is_zero());
    if infeasible {
        return LpOutcome::Infeasible;
    }

    // Pivot out or drop artificial rows stuck in the basis at level zero.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, col);
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }

    // Phase 2 with the real objective.
    let mut obj = vec![Rat::zero(); t.ncols + 1];
    for j in 0..n {
        obj[j] = c[j].clone();
    }
    for (r, &bv) in t.basis.iter().enumerate() {
        if !c[bv].is_zero() {
            let factor = c[bv].clone();
            for j in 0..=t.ncols {
                let sub = &t.rows[r][j] * &factor;
                obj[j] -= sub;
            }
        }
    }
    t.obj = obj;
    loop {
        match t.improve(&|j| j < n) {
            Ok(true) => continue,
            Ok(false) => break,
            Err(()) => return LpOutcome::Unbounded,
        }
    }
    let value: Rat = t
        .basis
        .iter()
        .enumerate()
        .map(|(r, &bv)| {
            if bv < n {
                &c[bv] * &t.rows[r][t.ncols]
            } else {
                Rat::zero()
            }
        })
        .sum();
    LpOutcome::Optimal(value)
}

/// Whether `target` is a convex combination of `generators`, decided by an
/// exact phase-1 feasibility test. Empty generator lists yield `false`.
pub fn lp_is_convex_combination(target: &Point, generators: &[Point]) -> bool {
    if generators.is_empty() {
        return false;
    }
    let n = target.coords.len();
    debug_assert!(generators.iter().all(|g| g.coords.len() == n));
    let k = generators.len();
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        a.push(generators.iter().map(|g| g.coords[i].clone()).collect());
    }
    a.push(vec![Rat::from_integer(1.into()); k]);
    let mut b: Vec<Rat> = target.coords.clone();
    b.push(Rat::from_integer(1.into()));
    let c = vec![Rat::zero(); k];
    matches!(solve_eq_form(&a, &b, &c), LpOutcome::Optimal(_))
}

/// Maximum total weight that can be placed outside `{u, v}` when writing the
/// midpoint of `u` and `v` as a convex combination of `points`.
///
/// Zero means the segment `[u, v]` is an edge of the hull of `points`.
pub fn midpoint_off_support(points: &[Point], u: usize, v: usize) -> Rat {
    let n = points[u].coords.len();
    let k = points.len();
    let two = Rat::from_integer(2.into());
    let mid: Vec<Rat> = points[u]
        .coords
        .iter()
        .zip(&points[v].coords)
        .map(|(a, b)| (a + b) / &two)
        .collect();
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        a.push(points.iter().map(|p| p.coords[i].clone()).collect());
    }
    a.push(vec![Rat::from_integer(1.into()); k]);
    let mut b = mid;
    b.push(Rat::from_integer(1.into()));
    let c: Vec<Rat> = (0..k)
        .map(|j| {
            if j == u || j == v {
                Rat::zero()
            } else {
                Rat::from_integer(1.into())
            }
        })
        .collect();
    match solve_eq_form(&a, &b, &c) {
        LpOutcome::Optimal(val) => val,
        outcome => panic!("midpoint LP must be feasible and bounded, got {outcome:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn pt(coords: &[i64]) -> Point {
        Point::from_ints(coords)
    }

    #[test]
    fn convex_combination_examples() {
        assert!(lp_is_convex_combination(&pt(&[1, 1]), &[pt(&[0, 0]), pt(&[2, 2])]));
        assert!(!lp_is_convex_combination(&pt(&[3, 0]), &[pt(&[0, 0]), pt(&[1, 0])]));
        // lambda = (1/2, 1/2, 0), checked by substitution:
        // 1/2*(0,0) + 1/2*(2,0) + 0*(0,2) = (1,0).
        let gens = [pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])];
        let lambda = [ratio(1, 2), ratio(1, 2), rat(0)];
        for i in 0..2 {
            let combo: Rat = gens
                .iter()
                .zip(&lambda)
                .map(|(g, l)| &g.coords[i] * l)
                .sum();
            assert_eq!(combo, pt(&[1, 0]).coords[i]);
        }
        assert!(lp_is_convex_combination(&pt(&[1, 0]), &gens));
        assert!(!lp_is_convex_combination(&pt(&[1, 1]), &[]));
    }

    #[test]
    fn degenerate_dimensions() {
        // 0-dimensional ambient space: the only point is a combination of itself.
        assert!(lp_is_convex_combination(&Point::new(vec![]), &[Point::new(vec![])]));
        assert!(lp_is_convex_combination(&pt(&[5]), &[pt(&[5])]));
        assert!(!lp_is_convex_combination(&pt(&[4]), &[pt(&[5])]));
    }

    #[test]
    fn square_adjacency() {
        let square = [pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0]), pt(&[1, 1])];
        // Sides are edges, diagonals are not.
        assert!(midpoint_off_support(&square, 0, 1).is_zero());
        assert!(midpoint_off_support(&square, 0, 2).is_zero());
        assert!(!midpoint_off_support(&square, 0, 3).is_zero());
        assert!(!midpoint_off_support(&square, 1, 2).is_zero());
    }
}
