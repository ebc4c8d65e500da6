//! Dense square and rectangular matrices over `Q(zeta_n)`.

use std::sync::Arc;

use crate::cyclotomic::{CycField, CycNumber};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
    field: Arc<CycField>,
}

impl Matrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![CycNumber::zero(field); rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Arc<CycField>, dim: usize) -> Matrix {
        Matrix::scalar(&CycNumber::one(field), dim)
    }

    pub fn scalar(s: &CycNumber, dim: usize) -> Matrix {
        let mut m = Matrix::zeros(s.field(), dim, dim);
        for i in 0..dim {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn diagonal(field: &Arc<CycField>, entries: Vec<CycNumber>) -> Matrix {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Row-major construction; all rows must have the same length.
    pub fn from_rows(field: &Arc<CycField>, rows: Vec<Vec<CycNumber>>) -> Option<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            field: field.clone(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNumber] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<CycNumber>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNumber::is_zero)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &CycNumber) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * s).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> CycNumber {
        let mut t = CycNumber::zero(&self.field);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// The common diagonal value when the matrix is exactly a multiple of
    /// the identity.
    pub fn as_scalar(&self) -> Option<CycNumber> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let d = self.get(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                let ok = if i == j { e == d } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(d.clone())
    }

    /// Rank by fraction-free-ish Gaussian elimination (exact field arithmetic).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot != rank {
                for j in 0..m.cols {
                    m.data.swap(pivot * m.cols + j, rank * m.cols + j);
                }
            }
            let inv = m.get(rank, col).inverse().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.get(rank, j) * &inv;
                m.set(rank, j, v);
            }
            for r in rank + 1..m.rows {
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let delta = &factor * m.get(rank, j);
                    if !delta.is_zero() {
                        m.data[r * m.cols + j] -= &delta;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }
}
