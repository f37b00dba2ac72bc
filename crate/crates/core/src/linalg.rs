//! Dense Gaussian elimination over GF(q).

use crate::gf::{Fe, Field};

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row; zero rows are dropped. Pivots are normalized to 1 and
/// cleared from every other row.
pub fn rref(field: &Field, rows: &mut Vec<Vec<Fe>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).unwrap();
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let c = row[col];
            if i == r || c.is_zero() {
                continue;
            }
            for (v, &p) in row.iter_mut().zip(&pivot) {
                *v = field.sub(*v, field.mul(c, p));
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ v : M v = 0 }` for an `m x n` matrix given by rows.
pub fn null_space(field: &Field, matrix: &[Vec<Fe>], ncols: usize) -> Vec<Vec<Fe>> {
    let mut rows: Vec<Vec<Fe>> = matrix.to_vec();
    let pivots = rref(field, &mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Fe::ZERO; ncols];
            v[fc] = Fe::ONE;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = field.neg(row[fc]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_is_annihilated() {
        let f = Field::prime(7).unwrap();
        let m: Vec<Vec<Fe>> = [[1, 2, 3, 4], [2, 4, 6, 2], [0, 0, 1, 5]]
            .iter()
            .map(|r| r.iter().map(|&v| f.from_i64(v)).collect())
            .collect();
        let ns = null_space(&f, &m, 4);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for row in &m {
                let dot = f.sum(row.iter().zip(v).map(|(&a, &b)| f.mul(a, b)));
                assert!(dot.is_zero());
            }
        }
    }
}
