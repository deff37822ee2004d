//! Row reduction over a field.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Nonzero echelon rows with their pivot columns.
pub type Echelon<E> = (Vec<Vec<E>>, Vec<usize>);

/// Reduced row echelon form of the given rows. Returns the nonzero rows and
/// their pivot columns.
pub fn rref<R: Ring>(ring: &R, rows: &[Vec<R::Elem>]) -> Result<Echelon<R::Elem>> {
    let mut m: Vec<Vec<R::Elem>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| !ring.is_zero(m[i][col])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = ring
            .inv(m[r][col])
            .ok_or_else(|| Error::Unsupported("row reduction needs a field".into()))?;
        for x in m[r].iter_mut() {
            *x = ring.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || ring.is_zero(row[col]) {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = ring.sub(*x, ring.mul(factor, y));
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Ok((m, pivots))
}

pub fn rank<R: Ring>(ring: &R, rows: &[Vec<R::Elem>]) -> Result<usize> {
    Ok(rref(ring, rows)?.0.len())
}

/// Whether `v` lies in the row space of an RREF basis with the given pivots.
pub fn in_row_space<R: Ring>(ring: &R, basis: &[Vec<R::Elem>], pivots: &[usize], v: &[R::Elem]) -> bool {
    let mut w = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        let c = w[p];
        if ring.is_zero(c) {
            continue;
        }
        for (x, &y) in w.iter_mut().zip(row) {
            *x = ring.sub(*x, ring.mul(c, y));
        }
    }
    w.iter().all(|&x| ring.is_zero(x))
}
