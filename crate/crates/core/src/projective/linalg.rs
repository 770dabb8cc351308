//! Dense exact linear algebra over `Scalar`.
//!
//! Matrices are plain row vectors. Everything here is small (at most a dozen
//! columns), so clarity wins over cache layout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::Scalar;

pub type Row = Vec<Scalar>;

/// Reduced row echelon form. Zero rows are dropped; leading entries are 1 and
/// every pivot column is cleared above and below. Returns the rows together
/// with the pivot column of each row.
///
/// Elimination runs fraction-free on integer rows scaled to primitive
/// vectors; rationals only reappear in the final normalization.
pub fn rref(rows: Vec<Row>, ncols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| integer_row(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len())
            .filter(|&k| !rows[k][col].is_zero())
            .min_by_key(|&k| rows[k][col].bits())
        else {
            continue;
        };
        rows.swap(r, sel);
        let pivot_row = rows[r].clone();
        let lead = &pivot_row[col];
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[col].is_zero() {
                continue;
            }
            let g = lead.gcd(&row[col]);
            let (scale, factor) = (lead / &g, &row[col] / &g);
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &scale - &factor * p;
            }
            make_primitive(row);
        }
        rows.retain(|row| row.iter().any(|x| !x.is_zero()));
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    let reduced = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter()
                .map(|x| Scalar::new(x, lead.clone()))
                .collect()
        })
        .collect();
    (reduced, pivots)
}

/// A row scaled by the common denominator and divided by its content.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let den = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub fn rank(rows: &[Row], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).0.len()
}

/// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
pub fn nullspace(rows: &[Row], ncols: usize) -> Vec<Row> {
    let (reduced, pivots) = rref(rows.to_vec(), ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant by fraction-carrying Gaussian elimination.
pub fn determinant(matrix: &[Row]) -> Scalar {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(sel) = (col..n).find(|&k| !m[k][col].is_zero()) else {
            return Scalar::zero();
        };
        if sel != col {
            m.swap(sel, col);
            det = -det;
        }
        let lead = m[col][col].clone();
        det *= &lead;
        let inv = lead.recip();
        for k in col + 1..n {
            if m[k][col].is_zero() {
                continue;
            }
            let factor = &m[k][col] * &inv;
            let (top, bottom) = m.split_at_mut(k);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * p;
            }
        }
    }
    det
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn mat_vec(matrix: &[Row], v: &[Scalar]) -> Row {
    matrix.iter().map(|row| dot(row, v)).collect()
}

pub fn det2(a: (&Scalar, &Scalar), b: (&Scalar, &Scalar)) -> Scalar {
    a.0 * b.1 - a.1 * b.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::scalar::int;

    fn m(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = m(&[&[2, 4, 6], &[1, 2, 4]]);
        let b = m(&[&[1, 2, 4], &[3, 6, 10]]);
        assert_eq!(rref(a, 3), rref(b, 3));
        let (rows, pivots) = rref(m(&[&[0, 0, 0], &[0, 3, 3]]), 3);
        assert_eq!(pivots, vec![1]);
        assert_eq!(rows, m(&[&[0, 1, 1]]));
    }

    #[test]
    fn nullspace_annihilates() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ker = nullspace(&a, 4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3·-2 - 4·5) - (-1)(1·-2 - 0) + 0 = -52 - 2
        assert_eq!(determinant(&a), int(-54));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), int(0));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), int(-1));
    }
}
