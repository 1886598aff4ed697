//! Dense Gaussian elimination over the coefficient field.
//!
//! Used for Hilbert functions and brute-force degree-bounded searches, both
//! of which must not depend on Gröbner bases.

use crate::field::{Field, FieldElem};

/// Row echelon form in place; returns the pivot columns.
fn echelon(rows: &mut [Vec<FieldElem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("non-zero pivot");
        for v in rows[r].iter_mut() {
            *v = v.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.sub(&k.mul(pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the matrix whose rows are given.
pub fn rank(rows: &[Vec<FieldElem>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    echelon(&mut m, ncols).len()
}

/// A basis of `{x : A x = 0}` for `A` with `ncols` columns.
pub fn nullspace(field: Field, rows: &[Vec<FieldElem>], ncols: usize) -> Vec<Vec<FieldElem>> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![field.zero(); ncols];
            x[fc] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = m[r][fc].neg();
            }
            x
        })
        .collect()
}

/// Whether `v` lies in the row space of `rows`.
pub fn in_row_space(rows: &[Vec<FieldElem>], v: &[FieldElem]) -> bool {
    if v.iter().all(FieldElem::is_zero) {
        return true;
    }
    let r = rank(rows);
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == r
}
