//! Exact span membership and rank for families of matrices, treated as
//! vectors of their entries.

use super::matrix::RationalMatrix;
use super::rational::Rational;

/// Row-reduces `vectors` (each a row) and returns the rank.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    echelon(vectors.to_vec()).len()
}

/// Rank of a list of same-shape matrices, viewed as vectors.
pub fn matrix_rank(mats: &[RationalMatrix]) -> usize {
    rank(&mats.iter().map(flatten).collect::<Vec<_>>())
}

fn flatten(m: &RationalMatrix) -> Vec<Rational> {
    m.to_rows().into_iter().flatten().collect()
}

fn echelon(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let mut col = 0;
    while col < width && !rows.is_empty() {
        if let Some(p) = rows.iter().position(|r| !r[col].is_zero()) {
            let pivot = rows.swap_remove(p);
            let inv = pivot[col].recip();
            let pivot: Vec<Rational> = pivot.iter().map(|x| x * &inv).collect();
            for r in rows.iter_mut() {
                if !r[col].is_zero() {
                    let f = r[col].clone();
                    for (x, y) in r.iter_mut().zip(&pivot) {
                        *x -= &(&f * y);
                    }
                }
            }
            out.push(pivot);
        }
        col += 1;
    }
    out
}

/// Solves `Σ x_k basis[k] = target` exactly. Returns `None` if `target` is
/// outside the span. When the basis is dependent, one particular solution is
/// returned (free coefficients set to zero).
pub fn express_in_span(basis: &[RationalMatrix], target: &RationalMatrix) -> Option<Vec<Rational>> {
    let k = basis.len();
    let vecs: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
    let t = flatten(target);
    let len = t.len();
    // augmented system: one equation per entry, unknowns x_0..x_{k-1}
    let mut sys: Vec<Vec<Rational>> = (0..len)
        .map(|e| {
            let mut row: Vec<Rational> = vecs.iter().map(|v| v[e].clone()).collect();
            row.push(t[e].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..len).find(|&i| !sys[i][c].is_zero()) else {
            continue;
        };
        sys.swap(r, p);
        let inv = sys[r][c].recip();
        for x in sys[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = sys[r].clone();
        for (i, row) in sys.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == len {
            break;
        }
    }
    if sys[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (row, col) in pivots {
        x[col] = sys[row][k].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_membership() {
        let i = RationalMatrix::identity(2);
        let a = RationalMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        let t = RationalMatrix::from_i64_rows(&[vec![3, -2], vec![-2, 3]]);
        let x = express_in_span(&[i.clone(), a.clone()], &t).unwrap();
        assert_eq!(x, vec![Rational::from_int(3), Rational::from_int(-2)]);
        let off = RationalMatrix::from_i64_rows(&[vec![1, 0], vec![0, 0]]);
        assert!(express_in_span(&[i.clone(), a.clone()], &off).is_none());
        assert_eq!(matrix_rank(&[i.clone(), a.clone(), t]), 2);
        assert_eq!(matrix_rank(&[i, a, off]), 3);
    }

    #[test]
    fn dependent_basis_still_solves() {
        let i = RationalMatrix::identity(2);
        let x = express_in_span(&[i.clone(), i.scale(&Rational::from_int(2))], &i).unwrap();
        assert_eq!(&x[0] + &x[1] * Rational::from_int(2), Rational::one());
    }
}
