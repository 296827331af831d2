//! Integer lattice computations: Hermite normal form, integer kernels,
//! saturation of sublattices and Smith normal form divisors.

use crate::Int;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn is_zero_row(r: &[Int]) -> bool {
    r.iter().all(Zero::is_zero)
}

/// Row Hermite normal form of the lattice spanned by `rows`.
///
/// The result is the canonical basis: pivot columns strictly increasing,
/// pivots positive, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn row_hnf(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut m: Vec<Vec<Int>> = rows.iter().filter(|r| !is_zero_row(r)).cloned().collect();
    if m.is_empty() {
        return Vec::new();
    }
    let n = m[0].len();
    let mut top = 0;
    for col in 0..n {
        // Euclidean elimination below `top` in this column.
        loop {
            let mut nonzero: Vec<usize> =
                (top..m.len()).filter(|&i| !m[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&i| m[i][col].abs());
            let (small, big) = (nonzero[0], nonzero[1]);
            let q = m[big][col].div_floor(&m[small][col]);
            for c in 0..n {
                let sub = &m[small][c] * &q;
                m[big][c] -= sub;
            }
        }
        if let Some(i) = (top..m.len()).find(|&i| !m[i][col].is_zero()) {
            m.swap(top, i);
            if m[top][col].is_negative() {
                for c in 0..n {
                    m[top][c] = -std::mem::take(&mut m[top][c]);
                }
            }
            let pivot = m[top][col].clone();
            for r in 0..top {
                if !m[r][col].is_zero() {
                    let q = m[r][col].div_floor(&pivot);
                    for c in 0..n {
                        let sub = &m[top][c] * &q;
                        m[r][c] -= sub;
                    }
                }
            }
            top += 1;
        }
    }
    m.truncate(top);
    m
}

/// Basis of the integer kernel `{x in Z^n | A x = 0}` of an `m x n` matrix.
pub fn kernel_basis(a: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut work: Vec<Vec<Int>> = a.to_vec();
    // Unimodular column-operation tracker.
    let mut u: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut col = vec![Int::zero(); n];
            col[i] = Int::from(1);
            col
        })
        .collect();
    let col_entry = |work: &Vec<Vec<Int>>, row: usize, col: usize| work[row][col].clone();
    let mut frontier = 0usize;
    for row in 0..work.len() {
        loop {
            let mut nonzero: Vec<usize> = (frontier..n)
                .filter(|&j| !work[row][j].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&j| work[row][j].abs());
            let (small, big) = (nonzero[0], nonzero[1]);
            let q = col_entry(&work, row, big).div_floor(&col_entry(&work, row, small));
            for r in work.iter_mut() {
                let sub = &r[small] * &q;
                r[big] -= sub;
            }
            for i in 0..n {
                let sub = &u[small][i] * &q;
                u[big][i] -= sub;
            }
        }
        if let Some(j) = (frontier..n).find(|&j| !work[row][j].is_zero()) {
            for r in work.iter_mut() {
                r.swap(frontier, j);
            }
            u.swap(frontier, j);
            frontier += 1;
        }
    }
    u.drain(frontier..).collect()
}

/// Canonical (HNF) basis of the smallest pure sublattice containing the
/// given vectors: `span_Q(generators) ∩ Z^n`.
pub fn saturate(generators: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    let gens: Vec<Vec<Int>> = generators
        .iter()
        .filter(|g| !is_zero_row(g))
        .cloned()
        .collect();
    if gens.is_empty() {
        return Vec::new();
    }
    let orthogonal = kernel_basis(&gens, n);
    let sat = kernel_basis(&orthogonal, n);
    row_hnf(&sat)
}

/// Diagonal of the Smith normal form, normalized positive, with the
/// divisibility chain `d_1 | d_2 | ...`. Zero entries are dropped.
pub fn snf_divisors(a: &[Vec<Int>]) -> Vec<Int> {
    let mut m: Vec<Vec<Int>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut divisors = Vec::new();
    let mut t = 0;
    loop {
        // Locate the smallest nonzero entry in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !m[r][c].is_zero()
                    && best
                        .map(|(br, bc)| m[r][c].abs() < m[br][bc].abs())
                        .unwrap_or(true)
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        m.swap(t, br);
        for row in m.iter_mut() {
            row.swap(t, bc);
        }
        // Clear row and column t.
        let mut clean = true;
        for r in t + 1..rows {
            if !m[r][t].is_zero() {
                let q = m[r][t].div_floor(&m[t][t]);
                for c in t..cols {
                    let sub = &m[t][c] * &q;
                    m[r][c] -= sub;
                }
                if !m[r][t].is_zero() {
                    clean = false;
                }
            }
        }
        for c in t + 1..cols {
            if !m[t][c].is_zero() {
                let q = m[t][c].div_floor(&m[t][t]);
                for r in t..rows {
                    let sub = &m[r][t] * &q;
                    m[r][c] -= sub;
                }
                if !m[t][c].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // Enforce divisibility of the remaining block by the corner.
        let corner = m[t][t].clone();
        let offender = (t + 1..rows)
            .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !(&m[r][c] % &corner).is_zero());
        if let Some((r, _)) = offender {
            for c in t..cols {
                let add = m[r][c].clone();
                m[t][c] += add;
            }
            continue;
        }
        divisors.push(corner.abs());
        t += 1;
        if t == rows || t == cols {
            break;
        }
    }
    divisors
}
