//! Exact linear algebra over a field scalar: reduced row echelon form,
//! null spaces of linear matrix equations, and span membership.
//!
//! Pivoting is deterministic (left-to-right columns, first nonzero row),
//! so solution bases are stable across runs and platforms.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// In-place reduced row echelon form; returns pivot column indices.
pub fn rref<K: Scalar>(rows: &mut Vec<Vec<K>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = rows[row][col].inv().expect("field scalar");
        for c in col..ncols {
            rows[row][c] = rows[row][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r == row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let v = rows[r][c].sub(&factor.mul(&rows[row][c]));
                rows[r][c] = v;
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.truncate(row);
    pivots
}

/// Basis of the null space of the row system, free variables in
/// ascending column order with the free coordinate set to one.
pub fn null_space<K: Scalar>(mut rows: Vec<Vec<K>>, ncols: usize) -> Vec<Vec<K>> {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    if rows.is_empty() {
        return (0..ncols)
            .map(|j| {
                let mut v = vec![K::zero(); ncols];
                v[j] = K::one();
                v
            })
            .collect();
    }
    let pivots = rref(&mut rows);
    let mut basis = Vec::new();
    let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();
    for free in 0..ncols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![K::zero(); ncols];
        v[free] = K::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[ri][free].neg();
        }
        basis.push(v);
    }
    basis
}

pub fn rank<K: Scalar>(mut rows: Vec<Vec<K>>) -> usize {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    rref(&mut rows).len()
}

/// True iff `target` lies in the linear span of `basis` (as coordinate
/// vectors over the scalar field).
pub fn in_span<K: Scalar>(basis: &[Vec<K>], target: &[K]) -> bool {
    let mut rows: Vec<Vec<K>> = basis.to_vec();
    let r0 = rank(rows.clone());
    rows.push(target.to_vec());
    rank(rows) == r0
}

/// One homogeneous linear matrix equation `sum_k L_k X R_k = 0` in an
/// unknown matrix `X`.
pub struct MatrixEquation<K: Scalar> {
    pub terms: Vec<(Matrix<K>, Matrix<K>)>,
}

impl<K: Scalar> MatrixEquation<K> {
    /// `L X - X L = 0`.
    pub fn commutes_with(l: &Matrix<K>) -> Self {
        let n = l.nrows();
        MatrixEquation {
            terms: vec![
                (l.clone(), Matrix::identity(n)),
                (Matrix::identity(n).neg(), l.clone()),
            ],
        }
    }

    /// `X A - B X = 0` (intertwiner from the `A`-side to the `B`-side).
    pub fn intertwines(a: &Matrix<K>, b: &Matrix<K>) -> Self {
        MatrixEquation {
            terms: vec![
                (Matrix::identity(b.nrows()), a.clone()),
                (b.neg(), Matrix::identity(a.ncols())),
            ],
        }
    }
}

/// Deterministic basis of the space of `p x q` matrices satisfying all
/// equations. Vectorization is row major, so base ordering is by entry
/// position.
pub fn solve_matrix_linear_space<K: Scalar>(
    equations: &[MatrixEquation<K>],
    p: usize,
    q: usize,
) -> Vec<Matrix<K>> {
    let unknowns = p * q;
    let mut rows: Vec<Vec<K>> = Vec::new();
    for eq in equations {
        let out_rows = eq
            .terms
            .first()
            .map(|(l, _)| l.nrows())
            .unwrap_or(0);
        let out_cols = eq
            .terms
            .first()
            .map(|(_, r)| r.ncols())
            .unwrap_or(0);
        for i in 0..out_rows {
            for j in 0..out_cols {
                let mut row = vec![K::zero(); unknowns];
                let mut nonzero = false;
                for (l, r) in &eq.terms {
                    for k in 0..p {
                        let lik = l.get(i, k);
                        if lik.is_zero() {
                            continue;
                        }
                        for m in 0..q {
                            let rmj = r.get(m, j);
                            if rmj.is_zero() {
                                continue;
                            }
                            let idx = k * q + m;
                            row[idx] = row[idx].add(&lik.mul(rmj));
                            nonzero = true;
                        }
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    null_space(rows, unknowns)
        .into_iter()
        .map(|v| Matrix::from_vec(p, q, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Gr;

    #[test]
    fn unconstrained_space_is_full() {
        // {X I - I X = 0} in 2x2 has the full 4-dimensional solution space.
        let eq = MatrixEquation::commutes_with(&Matrix::<Gr>::identity(2));
        let basis = solve_matrix_linear_space(&[eq], 2, 2);
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn span_membership() {
        let b1 = vec![Gr::from_int(1), Gr::from_int(0), Gr::from_int(1)];
        let b2 = vec![Gr::from_int(0), Gr::from_int(1), Gr::from_int(1)];
        let t = vec![Gr::from_int(2), Gr::from_int(3), Gr::from_int(5)];
        assert!(in_span(&[b1.clone(), b2.clone()], &t));
        let t2 = vec![Gr::from_int(2), Gr::from_int(3), Gr::from_int(4)];
        assert!(!in_span(&[b1, b2], &t2));
    }
}
