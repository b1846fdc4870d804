//! Dense row-major matrices over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: &F, n: usize, c: F::Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(field: &F, cols: usize, rows: &[Vec<F::Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_i64(field: &F, rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        let data = vals.iter().map(|&v| field.from_i64(v)).collect();
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F::Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shapes");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let orow = &mut out.data[i * oc..(i + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * oc..(k + 1) * oc];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        f.add_mul_assign(o, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shapes");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.add_mul_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shapes");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shapes");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &F::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if self.field.is_zero(c) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !self.field.is_zero(b) {
                self.field.add_mul_assign(a, c, b);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let a = self.get(i, j);
                    if i == j {
                        self.field.is_one(a)
                    } else {
                        self.field.is_zero(a)
                    }
                })
            })
    }

    pub fn trace(&self) -> F::Elem {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = self.field.add(&t, self.get(i, i));
        }
        t
    }

    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.spec().to_string(),
                other.field.spec().to_string(),
            ));
        }
        Ok(self.kron(other))
    }

    pub(crate) fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(f, self.rows * r2, self.cols * c2, |i, j| {
            f.mul(self.get(i / r2, j / c2), other.get(i % r2, j % c2))
        })
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack rows");
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: &F, blocks: &[Self]) -> Self {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Entries as canonical strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| self.field.format(x)).collect())
            .collect()
    }

    pub fn from_strings(field: &F, rows: &[Vec<String>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row of length {} (expected {cols})", r.len())));
            }
            for s in r {
                data.push(field.parse_elem(s)?);
            }
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gfp, Rationals};

    #[test]
    fn product_and_transpose() {
        let f = Gfp::new(7).unwrap();
        let a = Matrix::from_i64(&f, 2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = Matrix::from_i64(&f, 3, 2, &[1, 0, 0, 1, 1, 1]);
        let c = a.mul(&b);
        assert_eq!(c, Matrix::from_i64(&f, 2, 2, &[4, 5, 10, 11]));
        assert_eq!(c.transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn kronecker_identity_blocks() {
        let q = Rationals;
        let i2 = Matrix::identity(&q, 2);
        let i3 = Matrix::identity(&q, 3);
        assert!(i2.kronecker(&i3).unwrap().is_identity());
        let a = Matrix::from_i64(&q, 2, 2, &[1, 2, 3, 4]);
        let c = Matrix::from_i64(&q, 1, 1, &[5]);
        assert_eq!(a.kronecker(&c).unwrap(), a.scale(&q.from_i64(5)));
    }

    #[test]
    fn kronecker_field_mismatch() {
        let a = Matrix::identity(&Gfp::new(5).unwrap(), 1);
        let b = Matrix::identity(&Gfp::new(7).unwrap(), 1);
        assert!(matches!(a.kronecker(&b), Err(Error::FieldMismatch(..))));
    }
}
