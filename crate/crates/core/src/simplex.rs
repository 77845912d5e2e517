//! Exact phase-one simplex for feasibility of `{λ ≥ 0 : Aλ = b}`.
//!
//! Artificial variables are added for every row and their sum is minimized.
//! Pivoting follows Bland's rule (lowest-index entering column, lowest-index
//! basic variable among ratio ties), which cannot cycle.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Whether `Aλ = b` has a solution with `λ ≥ 0`. `a` is row-major with
/// every row of the same length.
pub(crate) fn is_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    debug_assert_eq!(m, b.len());
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m + 1;
    let rhs = n + m;

    // tableau rows with b ≥ 0, artificial identity block, rhs last
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![BigRational::zero(); width];
        for j in 0..n {
            row[j] = if flip { -&a[i][j] } else { a[i][j].clone() };
        }
        row[n + i] = BigRational::from_integer(1.into());
        row[rhs] = if flip { -&b[i] } else { b[i].clone() };
        t.push(row);
    }
    // objective: minimize Σ artificials, written in reduced-cost form
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[rhs] -= &row[rhs];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // the phase-one objective is bounded below by zero
        let (row, _) = leave.expect("phase-one problem is bounded");
        pivot(&mut t, row, enter);
        basis[row] = enter;
    }
    t[m][rhs].is_zero()
}

fn pivot(t: &mut [Vec<BigRational>], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, y) in r.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}
