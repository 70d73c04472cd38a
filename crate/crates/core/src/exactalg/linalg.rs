use num_traits::{One, Zero};

use super::rat::Rat;

/// Reduces `rows` in place to row echelon form and returns the rank.
pub fn row_reduce(rows: &mut [Vec<Rat>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    row_reduce(&mut rows)
}

/// Dimension of `{x : Ax = 0}` for `A` with `ncols` columns.
pub fn kernel_dim(rows: Vec<Vec<Rat>>, ncols: usize) -> usize {
    ncols - rank(rows)
}

pub fn determinant(mut rows: Vec<Vec<Rat>>) -> Rat {
    let n = rows.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            rows.swap(col, pivot);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        let pivot_row = rows[col].clone();
        for row in rows.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &p;
            for (x, q) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * q;
            }
        }
    }
    det
}
