//! Dense matrices over an exact scalar ring.
//!
//! Everything in this crate is at most 16x16, so the representation is a
//! plain row-major `Vec` and all algorithms are the classical cubic ones.
//! Shape mismatches in the arithmetic methods are programming errors and
//! panic; the fallible kernel entry points in `ops` validate shapes first.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, K::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Matrix {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds an `n x n` matrix from integer entries, row major.
    pub fn from_ints(n: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n);
        Matrix::from_fn(n, n, |r, c| K::from_int(entries[r * n + c]))
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &K)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / cols, k % cols, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    pub fn scale(&self, k: &K) -> Self {
        self.map(|v| v.mul(k))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "mul shape");
        let mut out: Matrix<K> = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> K {
        assert!(self.is_square());
        let mut t = K::zero();
        for k in 0..self.rows {
            t = t.add(self.get(k, k));
        }
        t
    }

    pub fn pow(&self, mut e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (r1, c1, a) in self.entries() {
            if a.is_zero() {
                continue;
            }
            for (r2, c2, b) in rhs.entries() {
                out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a.mul(b));
            }
        }
        out
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        for (r, c, v) in block.entries() {
            self.set(r0 + r, c0 + c, v.clone());
        }
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[Matrix<K>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Row-major vectorization.
    pub fn vectorize(&self) -> Vec<K> {
        self.data.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<K>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Determinant by fraction-producing Gaussian elimination; requires a
    /// field (returns `None` if some needed inverse does not exist, which
    /// cannot happen over Q(i) or Q(i, sqrt2)).
    pub fn det(&self) -> Option<K> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = K::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return Some(K::zero());
            };
            if p != col {
                for c in 0..n {
                    let a = m.get(p, c).clone();
                    let b = m.get(col, c).clone();
                    m.set(p, c, b);
                    m.set(col, c, a);
                }
                det = det.neg();
            }
            let pv = m.get(col, col).clone();
            det = det.mul(&pv);
            let pv_inv = pv.inv()?;
            for r in col + 1..n {
                let factor = m.get(r, col).mul(&pv_inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c).sub(&factor.mul(m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        Some(det)
    }

    /// Exact inverse over a field.
    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut inv: Matrix<K> = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for c in 0..n {
                    let a = m.get(pivot, c).clone();
                    let b = m.get(col, c).clone();
                    m.set(pivot, c, b);
                    m.set(col, c, a);
                    let a = inv.get(pivot, c).clone();
                    let b = inv.get(col, c).clone();
                    inv.set(pivot, c, b);
                    inv.set(col, c, a);
                }
            }
            let pv_inv = m.get(col, col).inv().ok_or(Error::Singular)?;
            for c in 0..n {
                let v = m.get(col, c).mul(&pv_inv);
                m.set(col, c, v);
                let v = inv.get(col, c).mul(&pv_inv);
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..n {
                    let v = m.get(r, c).sub(&factor.mul(m.get(col, c)));
                    m.set(r, c, v);
                    let v = inv.get(r, c).sub(&factor.mul(inv.get(col, c)));
                    inv.set(r, c, v);
                }
            }
        }
        Ok(inv)
    }

    /// Least power `k <= dim` with `self^k = 0`, if one exists.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert!(self.is_square());
        if self.is_zero() {
            return Some(1);
        }
        let mut p = self.clone();
        for k in 2..=self.rows {
            p = p.mul(self);
            if p.is_zero() {
                return Some(k);
            }
        }
        None
    }
}

impl<K: Scalar> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<K: Scalar> serde::Serialize for Matrix<K>
where
    K: serde::Serialize,
{
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<&K> = (0..self.cols).map(|c| self.get(r, c)).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Gr;

    #[test]
    fn inverse_roundtrip() {
        let m: Matrix<Gr> = Matrix::from_ints(3, &[2, 1, 0, 0, 1, -1, 1, 0, 3]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(m.det().unwrap(), Gr::from_int(5));
    }

    #[test]
    fn kron_mixed_product() {
        let a: Matrix<Gr> = Matrix::from_ints(2, &[1, 2, 3, 4]);
        let b: Matrix<Gr> = Matrix::from_ints(2, &[0, 1, -1, 2]);
        let lhs = a.kron(&b).mul(&a.kron(&b));
        let rhs = a.mul(&a).kron(&b.mul(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nilpotency() {
        let j: Matrix<Gr> = Matrix::from_ints(3, &[0, 0, 0, 1, 0, 0, 0, 1, 0]);
        assert_eq!(j.nilpotency_index(), Some(3));
        let m: Matrix<Gr> = Matrix::identity(2);
        assert_eq!(m.nilpotency_index(), None);
    }
}
